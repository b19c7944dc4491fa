#include "fmw/normal_forms.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "fmw/error.hpp"

namespace fmw {

Formula Literal::to_formula() const {
    Formula f = is_equal ? equal(args[0], args[1]) : atom(symbol, args);
    return positive ? f : negation(f);
}

Literal Literal::negated() const {
    Literal l = *this;
    l.positive = !positive;
    return l;
}

std::vector<std::string> Literal::variables() const {
    std::vector<std::string> v = args;
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

bool Literal::mentions(const std::string& v) const { return std::find(args.begin(), args.end(), v) != args.end(); }

Literal to_literal(const Formula& f) {
    if (f.kind() == NodeKind::negation) {
        Literal l = to_literal(f.child());
        l.positive = !l.positive;
        return l;
    }
    if (f.kind() == NodeKind::equal) {
        Literal l{true, true, "", f.args()};
        if (l.args[1] < l.args[0]) std::swap(l.args[0], l.args[1]);
        return l;
    }
    if (f.kind() == NodeKind::atom) return Literal{true, false, f.symbol(), f.args()};
    throw ContractError("not a literal: " + f.to_string());
}

namespace {

Formula nnf(const Formula& f, bool negate) {
    switch (f.kind()) {
        case NodeKind::atom:
        case NodeKind::equal:
            return negate ? negation(f) : f;
        case NodeKind::negation:
            return nnf(f.child(), !negate);
        case NodeKind::conjunction:
        case NodeKind::disjunction: {
            std::vector<Formula> cs;
            for (const auto& c : f.children()) cs.push_back(nnf(c, negate));
            const bool as_and = (f.kind() == NodeKind::conjunction) != negate;
            return as_and ? conj(std::move(cs)) : disj(std::move(cs));
        }
        case NodeKind::implication:
            if (negate) return conj({nnf(f.child(0), false), nnf(f.child(1), true)});
            return disj({nnf(f.child(0), true), nnf(f.child(1), false)});
        case NodeKind::exists:
        case NodeKind::forall: {
            const bool as_exists = (f.kind() == NodeKind::exists) != negate;
            Formula body = nnf(f.child(), negate);
            return as_exists ? exists(f.var(), body) : forall(f.var(), body);
        }
    }
    return f;
}

void all_names(const Formula& f, std::set<std::string>& out) {
    out.insert(f.args().begin(), f.args().end());
    if (f.kind() == NodeKind::exists || f.kind() == NodeKind::forall) out.insert(f.var());
    for (const auto& c : f.children()) all_names(c, out);
}

struct Prefix {
    NodeKind kind;
    std::string var;
};

class Prenexer {
public:
    explicit Prenexer(const Formula& f) { all_names(f, taken_); }

    // Returns the matrix and appends the quantifier prefix (outermost first).
    Formula pull(const Formula& f, std::vector<Prefix>& prefix) {
        switch (f.kind()) {
            case NodeKind::exists:
            case NodeKind::forall: {
                const std::string fresh = next_fresh();
                Formula body = substitute(f.child(), {{f.var(), fresh}});
                prefix.push_back({f.kind(), fresh});
                return pull(body, prefix);
            }
            case NodeKind::conjunction:
            case NodeKind::disjunction: {
                std::vector<Formula> cs;
                for (const auto& c : f.children()) cs.push_back(pull(c, prefix));
                return f.kind() == NodeKind::conjunction ? conj(std::move(cs)) : disj(std::move(cs));
            }
            default:
                return f;
        }
    }

private:
    std::set<std::string> taken_;
    int counter_ = 0;

    std::string next_fresh() {
        std::string name;
        do name = "_w" + std::to_string(++counter_);
        while (taken_.count(name));
        taken_.insert(name);
        return name;
    }
};

void normalize_clause(Clause& c, bool& contradictory) {
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    contradictory = false;
    Clause kept;
    for (const auto& l : c) {
        if (l.is_equal && l.args[0] == l.args[1]) {
            if (!l.positive) {
                contradictory = true;
                return;
            }
            continue;
        }
        if (std::binary_search(c.begin(), c.end(), l.negated())) {
            contradictory = true;
            return;
        }
        kept.push_back(l);
    }
    c = std::move(kept);
}

bool subsumes(const Clause& small, const Clause& big) {
    return small.size() <= big.size() && std::includes(big.begin(), big.end(), small.begin(), small.end());
}

constexpr std::size_t kSubsumptionLimit = 2000;

std::vector<Clause> prune(std::vector<Clause> clauses) {
    std::sort(clauses.begin(), clauses.end());
    clauses.erase(std::unique(clauses.begin(), clauses.end()), clauses.end());
    if (clauses.size() > kSubsumptionLimit) return clauses;
    std::stable_sort(clauses.begin(), clauses.end(),
                     [](const Clause& a, const Clause& b) { return a.size() < b.size(); });
    std::vector<Clause> kept;
    for (auto& c : clauses) {
        bool dominated = false;
        for (const auto& k : kept)
            if (subsumes(k, c)) {
                dominated = true;
                break;
            }
        if (!dominated) kept.push_back(std::move(c));
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

std::vector<Clause> dnf(const Formula& f, std::size_t cap) {
    switch (f.kind()) {
        case NodeKind::atom:
        case NodeKind::equal:
        case NodeKind::negation: {
            Clause c{to_literal(f)};
            bool bad = false;
            normalize_clause(c, bad);
            if (bad) return {};
            return {c};
        }
        case NodeKind::disjunction: {
            std::vector<Clause> out;
            for (const auto& c : f.children()) {
                auto part = dnf(c, cap);
                out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
                if (out.size() > cap) throw ResourceError("DNF exceeds " + std::to_string(cap) + " clauses");
            }
            return prune(std::move(out));
        }
        case NodeKind::conjunction: {
            std::vector<Clause> acc{Clause{}};
            for (const auto& c : f.children()) {
                auto part = dnf(c, cap);
                std::vector<Clause> next;
                for (const auto& a : acc) {
                    for (const auto& b : part) {
                        Clause merged = a;
                        merged.insert(merged.end(), b.begin(), b.end());
                        bool bad = false;
                        normalize_clause(merged, bad);
                        if (bad) continue;
                        next.push_back(std::move(merged));
                        if (next.size() > cap)
                            throw ResourceError("DNF exceeds " + std::to_string(cap) + " clauses");
                    }
                }
                acc = prune(std::move(next));
                if (acc.empty()) break;
            }
            return acc;
        }
        default:
            throw ContractError("unexpected node in NNF");
    }
}

}  // namespace

Formula to_nnf(const Formula& f) { return nnf(f, false); }

Formula to_prenex(const Formula& f) {
    Formula n = to_nnf(f);
    Prenexer p(n);
    std::vector<Prefix> prefix;
    Formula matrix = p.pull(n, prefix);
    for (auto it = prefix.rbegin(); it != prefix.rend(); ++it)
        matrix = it->kind == NodeKind::exists ? exists(it->var, matrix) : forall(it->var, matrix);
    return matrix;
}

std::optional<Formula> innermost_quantifier(const Formula& f) {
    if (f.quantifier_rank() == 0) return std::nullopt;
    if ((f.kind() == NodeKind::exists || f.kind() == NodeKind::forall) && f.quantifier_rank() == 1) return f;
    for (const auto& c : f.children())
        if (auto q = innermost_quantifier(c)) return q;
    return std::nullopt;
}

std::vector<Clause> dnf_clauses(const Formula& f, std::size_t cap) {
    if (!f.is_quantifier_free()) throw ContractError("DNF requires a quantifier-free formula");
    return dnf(to_nnf(f), cap);
}

Formula from_clauses(const std::vector<Clause>& clauses) {
    std::vector<Formula> ds;
    for (const auto& c : clauses) {
        std::vector<Formula> ls;
        for (const auto& l : c) ls.push_back(l.to_formula());
        ds.push_back(conj(std::move(ls)));
    }
    return disj(std::move(ds));
}

Formula to_dnf(const Formula& f, std::size_t cap) { return from_clauses(dnf_clauses(f, cap)); }

Formula simplify(const Formula& f) {
    switch (f.kind()) {
        case NodeKind::atom:
            return f;
        case NodeKind::equal:
            return f.args()[0] == f.args()[1] ? top() : f;
        case NodeKind::negation: {
            Formula c = simplify(f.child());
            if (c.is_true()) return bottom();
            if (c.is_false()) return top();
            if (c.kind() == NodeKind::negation) return c.child();
            return negation(c);
        }
        case NodeKind::conjunction:
        case NodeKind::disjunction: {
            const bool is_and = f.kind() == NodeKind::conjunction;
            std::vector<Formula> cs;
            for (const auto& c : f.children()) {
                Formula s = simplify(c);
                if (is_and ? s.is_false() : s.is_true()) return s;
                if (is_and ? s.is_true() : s.is_false()) continue;
                if (std::find(cs.begin(), cs.end(), s) == cs.end()) cs.push_back(std::move(s));
            }
            return is_and ? conj(std::move(cs)) : disj(std::move(cs));
        }
        case NodeKind::implication: {
            Formula a = simplify(f.child(0));
            Formula b = simplify(f.child(1));
            if (a.is_false() || b.is_true()) return top();
            if (a.is_true()) return b;
            if (b.is_false()) return simplify(negation(a));
            return implies(a, b);
        }
        case NodeKind::exists:
        case NodeKind::forall: {
            Formula body = simplify(f.child());
            if (!body.free_variables().count(f.var())) return body;
            return f.kind() == NodeKind::exists ? exists(f.var(), body) : forall(f.var(), body);
        }
    }
    return f;
}

}  // namespace fmw
