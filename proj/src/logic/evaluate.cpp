#include "fmw/evaluate.hpp"

#include <optional>
#include <vector>

#include "fmw/error.hpp"

namespace fmw {

CompiledFormula::CompiledFormula(const Structure& m, const Formula& f, std::vector<std::string> vars)
    : m_(m), vars_(std::move(vars)) {
    std::map<std::string, int> scope;
    for (const auto& v : vars_) {
        if (!scope.emplace(v, slots_).second) throw ContractError("variable '" + v + "' listed twice");
        ++slots_;
    }
    for (const auto& v : f.free_variables())
        if (!scope.count(v)) throw ContractError("free variable '" + v + "' is not bound by the assignment");
    root_ = compile(f, scope);
}

int CompiledFormula::compile(const Formula& f, std::map<std::string, int>& scope) {
    Op op{f.kind(), nullptr, {}, {}};
    switch (f.kind()) {
        case NodeKind::atom: {
            if (!m_.signature().contains(f.symbol()))
                throw InputError("relation symbol '" + f.symbol() + "' is not in the structure's signature");
            op.rel = &m_.relation(f.symbol());
            if (op.rel->arity() != static_cast<int>(f.args().size()))
                throw InputError("symbol '" + f.symbol() + "' used with wrong arity");
            [[fallthrough]];
        }
        case NodeKind::equal:
            for (const auto& a : f.args()) op.slots.push_back(scope.at(a));
            break;
        case NodeKind::exists:
        case NodeKind::forall: {
            const int slot = slots_++;
            auto saved = scope.find(f.var()) != scope.end() ? std::optional<int>(scope[f.var()]) : std::nullopt;
            scope[f.var()] = slot;
            op.slots.push_back(slot);
            op.children.push_back(compile(f.child(), scope));
            if (saved)
                scope[f.var()] = *saved;
            else
                scope.erase(f.var());
            break;
        }
        default:
            for (const auto& c : f.children()) op.children.push_back(compile(c, scope));
    }
    ops_.push_back(std::move(op));
    return static_cast<int>(ops_.size()) - 1;
}

bool CompiledFormula::run(int index, std::span<int> slots) const {
    const Op& op = ops_[static_cast<std::size_t>(index)];
    switch (op.kind) {
        case NodeKind::atom: {
            std::size_t idx = 0;
            const auto n = static_cast<std::size_t>(op.rel->universe_size());
            for (int s : op.slots) idx = idx * n + static_cast<std::size_t>(slots[static_cast<std::size_t>(s)]);
            return op.rel->at(idx);
        }
        case NodeKind::equal:
            return slots[static_cast<std::size_t>(op.slots[0])] == slots[static_cast<std::size_t>(op.slots[1])];
        case NodeKind::negation:
            return !run(op.children[0], slots);
        case NodeKind::conjunction:
            for (int c : op.children)
                if (!run(c, slots)) return false;
            return true;
        case NodeKind::disjunction:
            for (int c : op.children)
                if (run(c, slots)) return true;
            return false;
        case NodeKind::implication:
            return !run(op.children[0], slots) || run(op.children[1], slots);
        case NodeKind::exists:
        case NodeKind::forall: {
            const bool want = op.kind == NodeKind::exists;
            const auto s = static_cast<std::size_t>(op.slots[0]);
            for (int e = 0; e < m_.size(); ++e) {
                slots[s] = e;
                if (run(op.children[0], slots) == want) return want;
            }
            return !want;
        }
    }
    return false;
}

bool CompiledFormula::eval(std::span<const int> values, std::span<int> scratch) const {
    if (values.size() != vars_.size()) throw ContractError("wrong number of values for compiled formula");
    std::copy(values.begin(), values.end(), scratch.begin());
    return run(root_, scratch);
}

bool CompiledFormula::operator()(std::span<const int> values) const {
    std::vector<int> scratch(static_cast<std::size_t>(slots_), 0);
    return eval(values, scratch);
}

bool evaluate(const Structure& m, const Formula& f, const IndexAssignment& a) {
    std::vector<std::string> vars;
    std::vector<int> values;
    for (const auto& [v, e] : a) {
        if (e < 0 || e >= m.size()) throw InputError("element index out of range for variable '" + v + "'");
        vars.push_back(v);
        values.push_back(e);
    }
    return CompiledFormula(m, f, std::move(vars))(values);
}

bool evaluate(const Structure& m, const Formula& f, const Assignment& a) {
    IndexAssignment idx;
    for (const auto& [v, e] : a) idx.emplace(v, m.index_of(e));
    return evaluate(m, f, idx);
}

}  // namespace fmw
