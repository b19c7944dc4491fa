#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace fmw {

enum class NodeKind { atom, equal, negation, conjunction, disjunction, implication, exists, forall };

// Immutable first-order formula over a relational signature. Copies share
// the node; equality is structural.
class Formula {
public:
    NodeKind kind() const { return n_->kind; }

    // Atom: relation symbol. Empty for other kinds.
    const std::string& symbol() const { return n_->symbol; }
    // Atom arguments, or the two sides of an equality.
    const std::vector<std::string>& args() const { return n_->args; }
    // Bound variable of a quantifier.
    const std::string& var() const { return n_->symbol; }
    // Subformulas: one for negation and quantifiers, two for implication,
    // any number for conjunction/disjunction.
    const std::vector<Formula>& children() const { return n_->children; }
    const Formula& child(std::size_t i = 0) const { return n_->children[i]; }

    const std::set<std::string>& free_variables() const { return n_->free; }
    int quantifier_rank() const { return n_->rank; }
    bool is_quantifier_free() const { return n_->rank == 0; }
    bool is_literal() const;
    bool is_true() const { return n_->kind == NodeKind::conjunction && n_->children.empty(); }
    bool is_false() const { return n_->kind == NodeKind::disjunction && n_->children.empty(); }

    bool operator==(const Formula& other) const;

    std::string to_string() const;

    friend Formula atom(std::string symbol, std::vector<std::string> args);
    friend Formula equal(std::string x, std::string y);
    friend Formula negation(Formula f);
    friend Formula conj(std::vector<Formula> parts);
    friend Formula disj(std::vector<Formula> parts);
    friend Formula implies(Formula a, Formula b);
    friend Formula exists(std::string var, Formula body);
    friend Formula forall(std::string var, Formula body);

private:
    struct Node {
        NodeKind kind;
        std::string symbol;
        std::vector<std::string> args;
        std::vector<Formula> children;
        std::set<std::string> free;
        int rank = 0;
    };
    explicit Formula(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
    static Formula make(Node n);

    std::shared_ptr<const Node> n_;
};

Formula atom(std::string symbol, std::vector<std::string> args);
Formula equal(std::string x, std::string y);
Formula negation(Formula f);
// Nested conjunctions are flattened and singletons collapse; conj({}) is "true".
Formula conj(std::vector<Formula> parts);
// Nested disjunctions are flattened and singletons collapse; disj({}) is "false".
Formula disj(std::vector<Formula> parts);
Formula implies(Formula a, Formula b);
Formula exists(std::string var, Formula body);
Formula forall(std::string var, Formula body);
Formula top();
Formula bottom();

inline int quantifier_rank(const Formula& f) { return f.quantifier_rank(); }

// Every relation symbol occurring in f with the arity it is used at.
std::map<std::string, int> symbols_used(const Formula& f);

// Replaces every equality x=y by s(x,y), recursively.
Formula tilde(const Formula& f);

// Capture-avoiding renaming of free variables.
Formula substitute(const Formula& f, const std::map<std::string, std::string>& renaming);

}  // namespace fmw
