#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fmw/formula.hpp"

namespace fmw {

// Atomic or negated atomic formula in a flat, orderable form.
struct Literal {
    bool positive = true;
    bool is_equal = false;
    std::string symbol;  // empty for equalities
    std::vector<std::string> args;

    Formula to_formula() const;
    Literal negated() const;
    // Variables mentioned, sorted and deduplicated.
    std::vector<std::string> variables() const;
    bool mentions(const std::string& v) const;

    auto operator<=>(const Literal&) const = default;
};

// Literal view of an atom, equality, or their negation; throws ContractError otherwise.
Literal to_literal(const Formula& f);

using Clause = std::vector<Literal>;

inline constexpr std::size_t kDefaultDnfCap = 10000;

// Negation normal form: no implications, negations only on atoms and equalities.
Formula to_nnf(const Formula& f);

// Prenex form with every bound variable renamed to a fresh "_wN".
Formula to_prenex(const Formula& f);

// The innermost quantified subformula (deepest, leftmost), if any.
std::optional<Formula> innermost_quantifier(const Formula& f);

// Disjunctive normal form of a quantifier-free formula as sorted clauses.
// Contradictory clauses and x!=x are dropped, x=x literals removed, and
// subsumed clauses pruned. Throws ContractError on quantified input and
// ResourceError once the clause count exceeds `cap`.
std::vector<Clause> dnf_clauses(const Formula& f, std::size_t cap = kDefaultDnfCap);
Formula to_dnf(const Formula& f, std::size_t cap = kDefaultDnfCap);
Formula from_clauses(const std::vector<Clause>& clauses);

// Constant folding: drops true/false parts, x=x, and double negations.
Formula simplify(const Formula& f);

}  // namespace fmw
