#include "fmw/diagrams.hpp"

#include <algorithm>
#include <set>

#include "fmw/error.hpp"

namespace fmw {

VariablePartition::VariablePartition(std::vector<std::string> vars, std::vector<int> block_of)
    : vars_(std::move(vars)), block_of_(std::move(block_of)) {
    if (vars_.size() != block_of_.size()) throw ContractError("partition size mismatch");
    for (int b : block_of_) {
        if (b < 0 || b > blocks_) throw ContractError("block numbering must be a restricted growth string");
        if (b == blocks_) ++blocks_;
    }
}

int VariablePartition::block(const std::string& v) const {
    auto it = std::find(vars_.begin(), vars_.end(), v);
    if (it == vars_.end()) throw ContractError("variable '" + v + "' is not covered by the diagram");
    return block_of_[static_cast<std::size_t>(it - vars_.begin())];
}

std::vector<std::vector<std::string>> VariablePartition::blocks() const {
    std::vector<std::vector<std::string>> out(static_cast<std::size_t>(blocks_));
    for (std::size_t i = 0; i < vars_.size(); ++i) out[static_cast<std::size_t>(block_of_[i])].push_back(vars_[i]);
    return out;
}

const std::string& VariablePartition::representative(const std::string& v) const {
    const int b = block(v);
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (block_of_[i] == b) return vars_[i];
    return v;
}

VariablePartition VariablePartition::restrict_to(const std::vector<std::string>& sub) const {
    std::vector<int> raw, renum;
    for (const auto& v : sub) raw.push_back(block(v));
    std::vector<int> map(static_cast<std::size_t>(blocks_), -1);
    int next = 0;
    for (int b : raw) {
        if (map[static_cast<std::size_t>(b)] < 0) map[static_cast<std::size_t>(b)] = next++;
        renum.push_back(map[static_cast<std::size_t>(b)]);
    }
    return VariablePartition(sub, renum);
}

Formula VariablePartition::render_with(const std::string& relation) const {
    std::vector<Formula> parts;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        for (std::size_t j = i + 1; j < vars_.size(); ++j) {
            Formula a = relation == "=" ? equal(vars_[i], vars_[j]) : atom(relation, {vars_[i], vars_[j]});
            parts.push_back(block_of_[i] == block_of_[j] ? a : negation(a));
        }
    }
    return conj(std::move(parts));
}

std::string VariablePartition::to_string() const {
    std::string out;
    for (const auto& b : blocks()) {
        out += '{';
        for (std::size_t i = 0; i < b.size(); ++i) out += (i ? " " : "") + b[i];
        out += '}';
    }
    return out;
}

std::vector<VariablePartition> set_partitions(const std::vector<std::string>& vars) {
    std::vector<VariablePartition> out;
    const std::size_t n = vars.size();
    std::vector<int> rgs(n, 0);
    // Restricted growth strings in lexicographic order: all-zero (one block) first.
    while (true) {
        out.emplace_back(vars, rgs);
        std::size_t i = n;
        bool advanced = false;
        while (i-- > 1) {
            const int max_prefix = *std::max_element(rgs.begin(), rgs.begin() + static_cast<std::ptrdiff_t>(i));
            if (rgs[i] <= max_prefix) {
                ++rgs[i];
                std::fill(rgs.begin() + static_cast<std::ptrdiff_t>(i) + 1, rgs.end(), 0);
                advanced = true;
                break;
            }
        }
        if (!advanced) break;
    }
    return out;
}

namespace {

void require_distinct(const std::vector<std::string>& vars) {
    if (vars.empty()) throw InputError("diagram needs at least one variable");
    std::set<std::string> seen;
    for (const auto& v : vars)
        if (!seen.insert(v).second) throw InputError("duplicate variable '" + v + "'");
}

}  // namespace

std::vector<EqualityDiagram> enumerate_equality_diagrams(const std::vector<std::string>& vars) {
    require_distinct(vars);
    std::vector<EqualityDiagram> out;
    for (auto& p : set_partitions(vars)) out.emplace_back(std::move(p));
    return out;
}

std::vector<SDiagram> enumerate_s_diagrams(const std::vector<std::string>& vars) {
    require_distinct(vars);
    std::vector<SDiagram> out;
    for (auto& p : set_partitions(vars)) out.emplace_back(std::move(p));
    return out;
}

}  // namespace fmw
