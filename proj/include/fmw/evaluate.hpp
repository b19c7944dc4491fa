#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "fmw/formula.hpp"
#include "fmw/structure.hpp"

namespace fmw {

// Variable name -> element identifier.
using Assignment = std::map<std::string, std::string>;
// Variable name -> element index.
using IndexAssignment = std::map<std::string, int>;

// Formula compiled against one structure with a fixed order of input
// variables. Evaluation is reentrant: each call uses its own scratch slots.
class CompiledFormula {
public:
    // `vars` must cover the free variables of f (ContractError otherwise);
    // every atom must match the structure's signature (InputError otherwise).
    CompiledFormula(const Structure& m, const Formula& f, std::vector<std::string> vars);

    const std::vector<std::string>& variables() const { return vars_; }
    const Structure& structure() const { return m_; }
    int slot_count() const { return slots_; }

    // values[i] is the element index bound to variables()[i].
    bool operator()(std::span<const int> values) const;
    // Same, reusing caller-provided scratch of at least slot_count() entries.
    bool eval(std::span<const int> values, std::span<int> scratch) const;

private:
    struct Op {
        NodeKind kind;
        const Relation* rel = nullptr;
        std::vector<int> slots;     // atom/equality arguments, or the bound slot
        std::vector<int> children;  // indices into ops_
    };
    Structure m_;
    std::vector<std::string> vars_;
    std::vector<Op> ops_;
    int root_ = 0;
    int slots_ = 0;

    int compile(const Formula& f, std::map<std::string, int>& scope);
    bool run(int op, std::span<int> slots) const;
};

// Tarskian truth of f in m. Throws ContractError on an unbound free variable
// and InputError on an unknown element or symbol.
bool evaluate(const Structure& m, const Formula& f, const Assignment& a);
bool evaluate(const Structure& m, const Formula& f, const IndexAssignment& a);

}  // namespace fmw
