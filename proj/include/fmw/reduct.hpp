#pragma once

#include <string>
#include <vector>

#include "fmw/formula.hpp"
#include "fmw/structure.hpp"

namespace fmw {

// New symbol defined by a formula; `variables` gives the argument order.
struct Definition {
    std::string symbol;
    std::vector<std::string> variables;
    Formula formula;
};

// Structure on the same universe whose signature is exactly the defined
// symbols, each interpreted by its formula's extension in m. InputError when
// a definition's variables do not match its formula's free variables.
Structure definitional_reduct(const Structure& m, const std::vector<Definition>& defs);

// Interpretation of f in m as a relation over `vars`.
Relation define_relation(const Structure& m, const Formula& f, const std::vector<std::string>& vars);

}  // namespace fmw
