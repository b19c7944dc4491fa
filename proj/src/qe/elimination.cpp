#include <algorithm>
#include <functional>
#include <optional>
#include <set>

#include "fmw/error.hpp"
#include "fmw/kernels.hpp"
#include "fmw/qe.hpp"
#include "fmw/symmetry.hpp"

namespace fmw {

namespace {

// Rewrites the atoms and equalities of a quantifier-free formula.
Formula map_atoms(const Formula& f, const std::function<Formula(const Formula&)>& fn) {
    switch (f.kind()) {
        case NodeKind::atom:
        case NodeKind::equal:
            return fn(f);
        case NodeKind::negation:
            return negation(map_atoms(f.child(), fn));
        case NodeKind::conjunction:
        case NodeKind::disjunction: {
            std::vector<Formula> cs;
            for (const auto& c : f.children()) cs.push_back(map_atoms(c, fn));
            return f.kind() == NodeKind::conjunction ? conj(std::move(cs)) : disj(std::move(cs));
        }
        case NodeKind::implication:
            return implies(map_atoms(f.child(0), fn), map_atoms(f.child(1), fn));
        default:
            throw ContractError("expected a quantifier-free formula: " + f.to_string());
    }
}

bool covers(const VariablePartition& d, const std::string& v) {
    return std::find(d.variables().begin(), d.variables().end(), v) != d.variables().end();
}

std::vector<Literal> conjuncts_of(const Formula& body) {
    std::vector<Literal> out;
    if (body.is_true()) return out;
    if (body.is_literal()) return {to_literal(body)};
    for (const auto& c : body.children()) out.push_back(to_literal(c));
    return out;
}

// Folds s and cross-block equalities under the diagram; nullopt when some
// literal becomes false.
std::optional<std::vector<Literal>> fold_literals(const std::vector<Literal>& lits, const VariablePartition& d) {
    std::vector<Literal> out;
    for (const auto& l : lits) {
        const bool s_atom = !l.is_equal && l.symbol == "s";
        if (s_atom || l.is_equal) {
            const bool same = d.same_block(l.args[0], l.args[1]);
            bool value;
            if (s_atom)
                value = same;
            else if (l.args[0] == l.args[1])
                value = true;
            else if (!same)
                value = false;
            else {
                out.push_back(l);
                continue;
            }
            if (value != l.positive) return std::nullopt;
            continue;
        }
        out.push_back(l);
    }
    return out;
}

void require_transitive_base(const Structure& base) {
    const int cap = std::max(kDefaultSymmetryCap, base.size());
    if (auto w = transitivity_counterexample(base, cap))
        throw PreconditionError("the base is not vertex-transitive: no automorphism maps " + base.name(w->first) +
                                " to " + base.name(w->second));
}

// Moves phi1 from the base to the product under the equality diagram d:
// variables collapse to block representatives, equalities and diagonal atoms
// become constants, then '=' turns into s and the s-diagram is conjoined.
Formula transport(const Formula& phi1, const VariablePartition& d, const Structure& base) {
    std::map<std::string, std::string> ren;
    for (const auto& v : d.variables()) ren[v] = d.representative(v);
    const Formula renamed = substitute(phi1, ren);
    const Formula folded = map_atoms(renamed, [&](const Formula& a) -> Formula {
        const auto& args = a.args();
        if (a.kind() == NodeKind::equal) return args[0] == args[1] ? top() : bottom();
        if (std::all_of(args.begin(), args.end(), [&](const std::string& x) { return x == args[0]; })) {
            // The base is transitive, so any element stands in for the diagonal.
            std::vector<int> t(args.size(), 0);
            return base.holds(a.symbol(), t) ? top() : bottom();
        }
        return a;
    });
    return simplify(conj({SDiagram(d).render(), tilde(simplify(folded))}));
}

Formula s_clique(const std::vector<std::string>& vars) {
    std::vector<Formula> out;
    for (std::size_t i = 0; i < vars.size(); ++i)
        for (std::size_t j = i + 1; j < vars.size(); ++j) out.push_back(atom("s", {vars[i], vars[j]}));
    return conj(std::move(out));
}

std::vector<Formula> to_formulas(const std::vector<Literal>& lits) {
    std::vector<Formula> out;
    for (const auto& l : lits) out.push_back(l.to_formula());
    return out;
}

}  // namespace

Formula fold_under_diagram(const Formula& f, const VariablePartition& d) {
    return simplify(map_atoms(f, [&](const Formula& a) -> Formula {
        const auto& args = a.args();
        const bool s_atom = a.kind() == NodeKind::atom && a.symbol() == "s";
        if (!s_atom && a.kind() != NodeKind::equal) return a;
        if (args[0] == args[1]) return top();
        if (!covers(d, args[0]) || !covers(d, args[1])) return a;
        const bool same = d.same_block(args[0], args[1]);
        if (s_atom) return same ? top() : bottom();
        return same ? a : bottom();
    }));
}

I1I2Split split_I1_I2(const std::vector<Literal>& conjuncts, const SDiagram& diagram, const std::string& w) {
    I1I2Split out;
    const int wb = diagram.block(w);
    std::set<std::string> in_v2;
    for (const auto& l : conjuncts) {
        const auto vs = l.variables();
        const bool inside = std::all_of(vs.begin(), vs.end(), [&](const std::string& v) { return diagram.block(v) == wb; });
        (inside ? out.i2 : out.i1).push_back(l);
        if (inside)
            for (const auto& v : vs)
                if (v != w) in_v2.insert(v);
    }
    for (const auto& v : diagram.variables()) {
        if (v == w) continue;
        (in_v2.count(v) ? out.v2 : out.v1).push_back(v);
    }
    return out;
}

Formula eliminate_exists_over_product(const ProductStructure& p, const Formula& phi, QeOracle& oracle_m,
                                      QeOracle& oracle_n, EliminationStats* stats) {
    if (!p.with_s) throw ContractError("elimination runs on the s-expanded product");
    if (!is_primitive_existential(phi)) throw ContractError("not a primitive existential formula: " + phi.to_string());
    require_transitive_base(p.base);
    if (stats) ++stats->primitive_calls;

    const std::string w = phi.var();
    std::vector<Formula> outside;
    std::vector<Literal> inner;
    for (const auto& l : conjuncts_of(phi.child())) {
        if (l.mentions(w))
            inner.push_back(l);
        else
            outside.push_back(l.to_formula());
    }
    if (inner.empty()) return simplify(conj(std::move(outside)));

    std::set<std::string> var_set;
    for (const auto& l : inner)
        for (const auto& v : l.variables())
            if (v != w) var_set.insert(v);
    const std::vector<std::string> vars(var_set.begin(), var_set.end());
    std::vector<std::string> diagram_vars = vars;
    diagram_vars.push_back(w);

    std::vector<Formula> disjuncts;
    for (const auto& d : enumerate_s_diagrams(diagram_vars)) {
        const auto folded = fold_literals(inner, d);
        if (!folded) continue;
        if (stats) ++stats->diagrams_expanded;
        const auto split = split_I1_I2(*folded, d, w);

        std::vector<Formula> m_side{EqualityDiagram(d).render()};
        for (auto& f : to_formulas(split.i1)) m_side.push_back(std::move(f));
        const Formula phi1 = oracle_m.eliminate(exists(w, conj(std::move(m_side))));

        std::vector<std::string> fiber_block;
        for (const auto& v : vars)
            if (d.same_block(v, w)) fiber_block.push_back(v);
        std::vector<Formula> n_side = to_formulas(split.i2);
        std::vector<std::string> clique = split.v2;
        if (split.v2.empty() && !fiber_block.empty()) {
            // Anchors the fiber sentence at the fiber of w's block.
            n_side.push_back(equal(fiber_block.front(), fiber_block.front()));
            clique = {fiber_block.front()};
        }
        const Formula phi2 = oracle_n.eliminate(exists(w, conj(std::move(n_side))));

        const Formula moved = transport(phi1, d.restrict_to(vars), oracle_m.scope().front());
        disjuncts.push_back(conj({s_clique(clique), moved, phi2}));
    }
    outside.push_back(disj(std::move(disjuncts)));
    return simplify(conj(std::move(outside)));
}

namespace {

Formula eliminate_one(const ProductStructure& p, const std::string& w, const Formula& body_in, QeOracle& om,
                      QeOracle& on, EliminationStats* stats) {
    const Formula body = simplify(body_in);
    if (!body.free_variables().count(w)) return body;
    const auto vars = sorted_free_variables(body);
    std::vector<Formula> parts;
    for (const auto& d : enumerate_s_diagrams(vars)) {
        const Formula b = fold_under_diagram(body, d);
        if (b.is_false()) continue;
        const Formula frame = d.render();
        for (const auto& clause : dnf_clauses(b)) {
            std::vector<Formula> lits{frame};
            for (const auto& l : clause) lits.push_back(l.to_formula());
            parts.push_back(eliminate_exists_over_product(p, exists(w, conj(std::move(lits))), om, on, stats));
        }
    }
    return simplify(disj(std::move(parts)));
}

Formula eliminate_rec(const ProductStructure& p, const Formula& f, QeOracle& om, QeOracle& on,
                      EliminationStats* stats) {
    if (f.is_quantifier_free()) return f;
    switch (f.kind()) {
        case NodeKind::negation:
            return negation(eliminate_rec(p, f.child(), om, on, stats));
        case NodeKind::conjunction:
        case NodeKind::disjunction: {
            std::vector<Formula> cs;
            for (const auto& c : f.children()) cs.push_back(eliminate_rec(p, c, om, on, stats));
            return f.kind() == NodeKind::conjunction ? conj(std::move(cs)) : disj(std::move(cs));
        }
        case NodeKind::implication:
            return implies(eliminate_rec(p, f.child(0), om, on, stats), eliminate_rec(p, f.child(1), om, on, stats));
        case NodeKind::exists:
            return eliminate_one(p, f.var(), eliminate_rec(p, f.child(), om, on, stats), om, on, stats);
        case NodeKind::forall:
            return simplify(negation(
                eliminate_one(p, f.var(), negation(eliminate_rec(p, f.child(), om, on, stats)), om, on, stats)));
        default:
            return f;
    }
}

}  // namespace

Formula eliminate_all(const ProductStructure& p, const Formula& phi, QeOracle& oracle_m, QeOracle& oracle_n,
                      EliminationStats* stats) {
    if (!p.with_s) throw ContractError("elimination runs on the s-expanded product");
    require_transitive_base(p.base);
    return simplify(eliminate_rec(p, phi, oracle_m, oracle_n, stats));
}

EliminationSession::EliminationSession(ProductStructure p, std::size_t oracle_cap) : p_(std::move(p)) {
    if (!p_.with_s) throw ContractError("elimination runs on the s-expanded product");
    std::vector<Structure> members{p_.base};
    std::vector<std::size_t> fiber_scope;
    for (const auto& n : p_.fibers) {
        auto it = std::find(members.begin() + 1, members.end(), n);
        if (it == members.end()) {
            fiber_scope.push_back(members.size());
            fiber_member_.push_back(members.size());
            members.push_back(n);
        } else {
            fiber_member_.push_back(static_cast<std::size_t>(it - members.begin()));
        }
    }
    family_ = std::make_shared<StructureFamily>(std::move(members));
    oracle_m_ = std::make_unique<BruteForceOracle>(family_, std::vector<std::size_t>{0}, oracle_cap);
    oracle_n_ = std::make_unique<BruteForceOracle>(family_, fiber_scope, oracle_cap);
}

Formula EliminationSession::eliminate_exists(const Formula& primitive) {
    return eliminate_exists_over_product(p_, primitive, *oracle_m_, *oracle_n_, &stats_);
}

Formula EliminationSession::eliminate_all(const Formula& phi) {
    return fmw::eliminate_all(p_, phi, *oracle_m_, *oracle_n_, &stats_);
}

ProductStructure EliminationSession::morleyized_product() const {
    std::vector<Structure> fibers;
    for (auto i : fiber_member_) fibers.push_back(family_->member(i));
    return generalized_product(family_->member(0), fibers, true);
}

bool EliminationSession::verify(const Formula& input, const Formula& output) const {
    const auto vars = sorted_free_variables(input);
    for (const auto& v : output.free_variables())
        if (!std::binary_search(vars.begin(), vars.end(), v)) return false;
    const auto expanded = morleyized_product();
    return extension(p_.structure, input, vars) == extension(expanded.structure, output, vars);
}

}  // namespace fmw
