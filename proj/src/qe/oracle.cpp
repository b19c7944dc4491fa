#include <algorithm>
#include <map>
#include <numeric>

#include "fmw/error.hpp"
#include "fmw/kernels.hpp"
#include "fmw/qe.hpp"

namespace fmw {

StructureFamily::StructureFamily(std::vector<Structure> members) : members_(std::move(members)) {
    if (members_.empty()) throw InputError("a structure family needs at least one member");
    for (const auto& m : members_)
        if (!(m.signature() == members_.front().signature()))
            throw InputError("family members must share one signature");
    base_ = members_.front().signature();
}

std::string StructureFamily::add_symbol(const Formula& definition, const std::vector<std::string>& vars) {
    if (vars.empty()) throw ContractError("a new relation symbol needs at least one argument");
    std::string name;
    do name = "R_phi_" + std::to_string(++counter_);
    while (signature().contains(name));
    const int k = static_cast<int>(vars.size());
    for (auto& m : members_) {
        const auto ext = extension(m, definition, vars);
        Relation rel(k, m.size());
        for (std::size_t i = 0; i < ext.size(); ++i) rel.set(i, ext[i] != 0);
        m = m.expand(name, std::move(rel));
    }
    added_.push_back({name, vars, definition});
    return name;
}

Formula StructureFamily::expand(const Formula& f) const {
    switch (f.kind()) {
        case NodeKind::atom: {
            auto it = std::find_if(added_.begin(), added_.end(),
                                   [&](const MorleySymbol& s) { return s.symbol == f.symbol(); });
            if (it == added_.end()) return f;
            std::map<std::string, std::string> ren;
            for (std::size_t i = 0; i < it->variables.size(); ++i) ren[it->variables[i]] = f.args()[i];
            return expand(substitute(it->definition, ren));
        }
        case NodeKind::equal:
            return f;
        case NodeKind::negation:
            return negation(expand(f.child()));
        case NodeKind::conjunction:
        case NodeKind::disjunction: {
            std::vector<Formula> cs;
            for (const auto& c : f.children()) cs.push_back(expand(c));
            return f.kind() == NodeKind::conjunction ? conj(std::move(cs)) : disj(std::move(cs));
        }
        case NodeKind::implication:
            return implies(expand(f.child(0)), expand(f.child(1)));
        case NodeKind::exists:
            return exists(f.var(), expand(f.child()));
        case NodeKind::forall:
            return forall(f.var(), expand(f.child()));
    }
    return f;
}

std::pair<Structure, MorleyContext> morleyize(const Structure& m, const std::vector<Formula>& formulas) {
    StructureFamily family({m});
    for (const auto& f : formulas) {
        auto vars = sorted_free_variables(f);
        if (vars.empty()) throw InputError("cannot add a symbol for the sentence " + f.to_string());
        family.add_symbol(f, vars);
    }
    MorleyContext ctx{m.signature(), family.added(), family.members()};
    return {family.member(0), std::move(ctx)};
}

namespace {

bool is_literal_conjunction(const Formula& f) {
    if (f.is_literal() || f.is_true()) return true;
    if (f.kind() != NodeKind::conjunction) return false;
    return std::all_of(f.children().begin(), f.children().end(), [](const Formula& c) { return c.is_literal(); });
}

// An atomic formula over the input variables, evaluated by table lookup.
struct AtomProbe {
    Formula formula;
    std::string symbol;     // empty for equality
    std::vector<int> slots;  // positions in the variable list
};

std::vector<AtomProbe> atom_probes(const Signature& sig, const std::vector<std::string>& vars) {
    std::vector<AtomProbe> out;
    const int k = static_cast<int>(vars.size());
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            out.push_back({equal(vars[static_cast<std::size_t>(i)], vars[static_cast<std::size_t>(j)]), "", {i, j}});
    for (const auto& [sym, arity] : sig.symbols()) {
        std::vector<int> slots(static_cast<std::size_t>(arity), 0);
        while (true) {
            std::vector<std::string> args;
            for (int s : slots) args.push_back(vars[static_cast<std::size_t>(s)]);
            out.push_back({atom(sym, args), sym, slots});
            int p = arity - 1;
            while (p >= 0 && slots[static_cast<std::size_t>(p)] == k - 1) slots[static_cast<std::size_t>(p--)] = 0;
            if (p < 0) break;
            ++slots[static_cast<std::size_t>(p)];
        }
    }
    return out;
}

struct LabelledType {
    std::vector<std::uint8_t> bits;
    bool label;
};

// Greedy decision tree over atomic types; true leaves become conjunctions
// of the literals on their path.
class TreeBuilder {
public:
    TreeBuilder(const std::vector<AtomProbe>& atoms, const std::vector<LabelledType>& types)
        : atoms_(atoms), types_(types) {}

    Formula build() {
        std::vector<std::size_t> all(types_.size());
        std::iota(all.begin(), all.end(), 0);
        std::vector<Formula> path;
        grow(all, path);
        return disj(std::move(leaves_));
    }

private:
    const std::vector<AtomProbe>& atoms_;
    const std::vector<LabelledType>& types_;
    std::vector<Formula> leaves_;

    void grow(const std::vector<std::size_t>& ids, std::vector<Formula>& path) {
        const std::size_t trues = static_cast<std::size_t>(
            std::count_if(ids.begin(), ids.end(), [&](std::size_t i) { return types_[i].label; }));
        if (trues == 0) return;
        if (trues == ids.size()) {
            leaves_.push_back(conj(path));
            return;
        }
        std::size_t best = atoms_.size();
        double best_score = 0;
        for (std::size_t a = 0; a < atoms_.size(); ++a) {
            double side[2] = {0, 0}, pos[2] = {0, 0};
            for (std::size_t i : ids) {
                const int b = types_[i].bits[a];
                side[b] += 1;
                pos[b] += types_[i].label ? 1 : 0;
            }
            if (side[0] == 0 || side[1] == 0) continue;
            double score = 0;
            for (int b = 0; b < 2; ++b) score += pos[b] * (side[b] - pos[b]) / side[b];
            if (best == atoms_.size() || score < best_score) {
                best = a;
                best_score = score;
            }
        }
        if (best == atoms_.size()) throw ContractError("atomic types do not separate the labels");
        std::vector<std::size_t> parts[2];
        for (std::size_t i : ids) parts[types_[i].bits[best]].push_back(i);
        path.push_back(atoms_[best].formula);
        grow(parts[1], path);
        path.back() = negation(atoms_[best].formula);
        grow(parts[0], path);
        path.pop_back();
    }
};

}  // namespace

bool is_primitive_existential(const Formula& f) {
    return f.kind() == NodeKind::exists && is_literal_conjunction(f.child());
}

BruteForceOracle::BruteForceOracle(std::shared_ptr<StructureFamily> family, std::vector<std::size_t> scope,
                                   std::size_t cap)
    : family_(std::move(family)), scope_(std::move(scope)), cap_(cap) {
    if (!family_) throw ContractError("oracle without a structure family");
    if (scope_.empty()) throw ContractError("oracle scope is empty");
    for (auto i : scope_)
        if (i >= family_->size()) throw ContractError("oracle scope index out of range");
}

std::vector<Structure> BruteForceOracle::scope() const {
    std::vector<Structure> out;
    for (auto i : scope_) out.push_back(family_->member(i));
    return out;
}

Formula BruteForceOracle::eliminate(const Formula& primitive) {
    if (!is_primitive_existential(primitive) && !is_literal_conjunction(primitive))
        throw ContractError("oracle input is not primitive: " + primitive.to_string());
    const auto vars = sorted_free_variables(primitive);
    const int k = static_cast<int>(vars.size());

    std::size_t total = 0;
    for (auto i : scope_) {
        std::size_t t = 1;
        for (int j = 0; j < k; ++j) {
            t *= static_cast<std::size_t>(family_->member(i).size());
            if (t > cap_) break;
        }
        total += t;
        if (total > cap_)
            throw ResourceError("oracle would inspect more than " + std::to_string(cap_) + " tuples");
    }

    std::vector<std::vector<std::uint8_t>> exts;
    for (auto i : scope_) exts.push_back(extension(family_->member(i), primitive, vars));

    if (k == 0) {
        bool first = exts.front()[0] != 0;
        for (const auto& e : exts)
            if ((e[0] != 0) != first)
                throw PreconditionError("the sentence " + primitive.to_string() +
                                        " does not have the same truth value in every structure of the scope");
        return first ? top() : bottom();
    }

    const auto probes = atom_probes(family_->signature(), vars);
    std::map<std::vector<std::uint8_t>, bool> label_of;
    bool consistent = true, any_true = false, any_false = false;
    std::vector<int> tuple(static_cast<std::size_t>(k));
    std::vector<int> args;
    for (std::size_t s = 0; s < scope_.size() && consistent; ++s) {
        const Structure& m = family_->member(scope_[s]);
        for (std::size_t idx = 0; idx < exts[s].size(); ++idx) {
            decode_tuple(idx, m.size(), tuple);
            std::vector<std::uint8_t> bits(probes.size());
            for (std::size_t a = 0; a < probes.size(); ++a) {
                const auto& pr = probes[a];
                if (pr.symbol.empty()) {
                    bits[a] = tuple[static_cast<std::size_t>(pr.slots[0])] == tuple[static_cast<std::size_t>(pr.slots[1])];
                } else {
                    args.clear();
                    for (int sl : pr.slots) args.push_back(tuple[static_cast<std::size_t>(sl)]);
                    bits[a] = m.holds(pr.symbol, args);
                }
            }
            const bool label = exts[s][idx] != 0;
            (label ? any_true : any_false) = true;
            auto [it, fresh] = label_of.emplace(std::move(bits), label);
            if (!fresh && it->second != label) {
                consistent = false;
                break;
            }
        }
    }

    if (!consistent) {
        const std::string sym = family_->add_symbol(primitive, vars);
        return atom(sym, vars);
    }
    const std::string& v = vars.front();
    if (!any_false) return equal(v, v);
    if (!any_true) return negation(equal(v, v));
    std::vector<LabelledType> types;
    for (auto& [bits, label] : label_of) types.push_back({bits, label});
    return TreeBuilder(probes, types).build();
}

std::unique_ptr<BruteForceOracle> brute_force_qe_oracle(std::vector<Structure> structures, std::size_t cap) {
    std::vector<std::size_t> scope(structures.size());
    std::iota(scope.begin(), scope.end(), 0);
    auto family = std::make_shared<StructureFamily>(std::move(structures));
    return std::make_unique<BruteForceOracle>(std::move(family), std::move(scope), cap);
}

}  // namespace fmw
