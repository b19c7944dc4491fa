#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fmw/diagrams.hpp"
#include "fmw/formula.hpp"
#include "fmw/normal_forms.hpp"
#include "fmw/product.hpp"
#include "fmw/structure.hpp"

namespace fmw {

// Relation symbol added by Morleyization: symbol(variables) <-> definition.
struct MorleySymbol {
    std::string symbol;
    std::vector<std::string> variables;
    Formula definition;
};

struct MorleyContext {
    Signature base_signature;
    std::vector<MorleySymbol> added;
    std::vector<Structure> structures;  // expanded
};

// Structures sharing one signature that grow new symbols together: a symbol
// added for any member is interpreted in every member by its definition.
class StructureFamily {
public:
    explicit StructureFamily(std::vector<Structure> members);

    std::size_t size() const { return members_.size(); }
    const Structure& member(std::size_t i) const { return members_[i]; }
    const std::vector<Structure>& members() const { return members_; }
    const Signature& signature() const { return members_.front().signature(); }
    const Signature& base_signature() const { return base_; }
    const std::vector<MorleySymbol>& added() const { return added_; }

    // Adds R_phi_k(vars) := definition to every member; returns the symbol.
    // Names colliding with the signature are skipped.
    std::string add_symbol(const Formula& definition, const std::vector<std::string>& vars);

    // Replaces added symbols by their definitions, recursively.
    Formula expand(const Formula& f) const;

private:
    std::vector<Structure> members_;
    Signature base_;
    std::vector<MorleySymbol> added_;
    int counter_ = 0;
};

// Expands m by one symbol per formula, arguments in sorted free-variable order.
std::pair<Structure, MorleyContext> morleyize(const Structure& m, const std::vector<Formula>& formulas);

inline constexpr std::size_t kDefaultOracleCap = 100000;

// Quantifier elimination for a fixed family of structures.
class QeOracle {
public:
    virtual ~QeOracle() = default;
    // Quantifier-free equivalent of a primitive formula (an existential over a
    // conjunction of literals, or such a conjunction) on every scope structure.
    virtual Formula eliminate(const Formula& primitive) = 0;
    // Current (possibly expanded) scope structures.
    virtual std::vector<Structure> scope() const = 0;
    virtual const std::vector<MorleySymbol>& extension_log() const = 0;
};

// Answers by computing extensions. When the extension is a union of atomic
// types across the whole scope, returns a quantifier-free formula over the
// current signature (a decision tree on atoms flattened to a disjunction);
// otherwise adds a fresh symbol to the family and returns its atom.
class BruteForceOracle : public QeOracle {
public:
    BruteForceOracle(std::shared_ptr<StructureFamily> family, std::vector<std::size_t> scope,
                     std::size_t cap = kDefaultOracleCap);

    Formula eliminate(const Formula& primitive) override;
    std::vector<Structure> scope() const override;
    const std::vector<MorleySymbol>& extension_log() const override { return family_->added(); }
    const StructureFamily& family() const { return *family_; }

private:
    std::shared_ptr<StructureFamily> family_;
    std::vector<std::size_t> scope_;
    std::size_t cap_;
};

std::unique_ptr<BruteForceOracle> brute_force_qe_oracle(std::vector<Structure> structures,
                                                        std::size_t cap = kDefaultOracleCap);

// True for an existential over a conjunction of literals (or a bare literal).
bool is_primitive_existential(const Formula& f);

struct I1I2Split {
    std::vector<Literal> i1;
    std::vector<Literal> i2;
    std::vector<std::string> v1;
    std::vector<std::string> v2;
};

// I2: literals all of whose variables lie in w's block; I1: the rest.
// v2: variables (other than w) of I2 literals; v1: the remaining diagram variables.
I1I2Split split_I1_I2(const std::vector<Literal>& conjuncts, const SDiagram& diagram, const std::string& w);

struct EliminationStats {
    std::size_t diagrams_expanded = 0;
    std::size_t primitive_calls = 0;
};

// One existential over a conjunction of literals on an s-expanded product.
// oracle_m answers for the base, oracle_n for all fibers; both must draw on
// one StructureFamily so added symbols exist on both sides.
// ContractError for non-primitive input or a product without s;
// PreconditionError when the base is not vertex-transitive.
Formula eliminate_exists_over_product(const ProductStructure& p, const Formula& phi, QeOracle& oracle_m,
                                      QeOracle& oracle_n, EliminationStats* stats = nullptr);

// Any formula: innermost quantifiers first, forall as not-exists-not.
Formula eliminate_all(const ProductStructure& p, const Formula& phi, QeOracle& oracle_m, QeOracle& oracle_n,
                      EliminationStats* stats = nullptr);

// Family, oracles, and bookkeeping for eliminations over one product.
// Not thread safe; independent sessions may run concurrently.
class EliminationSession {
public:
    explicit EliminationSession(ProductStructure p, std::size_t oracle_cap = kDefaultOracleCap);

    const ProductStructure& product() const { return p_; }
    Formula eliminate_exists(const Formula& primitive);
    Formula eliminate_all(const Formula& phi);

    // Product of the current expanded base and fibers.
    ProductStructure morleyized_product() const;
    // Extension of `input` on the original product equals that of `output`
    // on the Morleyized product, over the input's free variables.
    bool verify(const Formula& input, const Formula& output) const;

    const StructureFamily& family() const { return *family_; }
    const EliminationStats& stats() const { return stats_; }
    QeOracle& oracle_m() { return *oracle_m_; }
    QeOracle& oracle_n() { return *oracle_n_; }

private:
    ProductStructure p_;
    std::shared_ptr<StructureFamily> family_;
    std::vector<std::size_t> fiber_member_;  // base index -> family index
    std::unique_ptr<BruteForceOracle> oracle_m_;
    std::unique_ptr<BruteForceOracle> oracle_n_;
    EliminationStats stats_;
};

struct QeWitness {
    bool matched = false;
    std::optional<Formula> formula;                   // when matched
    std::optional<std::pair<int, int>> certificate;  // separated elements, otherwise
    std::size_t type_classes = 0;                     // one-variable atomic types realized
};

// Searches the quantifier-free one-variable formulas over the structure's
// signature (with equality) for one equivalent to phi. ContractError unless
// phi has exactly one free variable.
QeWitness qe_failure_witness(const Structure& p, const Formula& phi);

using FormulaPair = std::pair<Formula, Formula>;

// Pairs (phi1, phi2) over the base signature with
// P |= phi((a,b)) iff M |= phi1(a) and N |= phi2(b) for some pair.
// PreconditionError unless the fibers are constant.
std::vector<FormulaPair> decompose_product_formula(const ProductStructure& p, const Formula& phi,
                                                   std::size_t oracle_cap = kDefaultOracleCap);

// Replaces s(x,y) by its truth value under the diagram and folds equalities
// between different blocks to false.
Formula fold_under_diagram(const Formula& f, const VariablePartition& d);

}  // namespace fmw
