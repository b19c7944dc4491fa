#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fmw/evaluate.hpp"
#include "fmw/formula.hpp"
#include "fmw/structure.hpp"

namespace fmw {

// Generalized lexicographic product M[N_a]_{a in M}, optionally expanded by
// the fiber relation s. Elements are named "(a|b)"; the universe is ordered
// by base element, then by fiber element.
struct ProductStructure {
    Structure structure;
    Structure base;
    std::vector<Structure> fibers;                // indexed by base element index
    bool with_s = false;
    std::vector<std::pair<int, int>> components;  // product index -> (base index, fiber index)
    std::vector<std::vector<int>> element_at;     // [base index][fiber index] -> product index

    const Structure& fiber(int a) const { return fibers[static_cast<std::size_t>(a)]; }
    bool constant_fibers() const;
};

std::string pair_id(const std::string& a, const std::string& b);
// Inverse of pair_id; nullopt when the name is not a pair.
std::optional<std::pair<std::string, std::string>> split_pair_id(const std::string& id);

// Throws InputError when the factor signatures differ or already contain s.
ProductStructure lexicographic_product(const Structure& m, const Structure& n, bool with_s);
// Fibers keyed by base element name; every base element needs exactly one.
ProductStructure generalized_product(const Structure& m, const std::map<std::string, Structure>& fibers,
                                     bool with_s);
ProductStructure generalized_product(const Structure& m, const std::vector<Structure>& fibers, bool with_s);

// b -> (a|b) from N_a into the product.
StructureMap fiber_embedding(const ProductStructure& p, const std::string& a);

// (a, b) names of a product element; ContractError for a foreign element.
std::pair<std::string, std::string> decompose_element(const ProductStructure& p, const std::string& e);

// Every relational atom of the quantifier-free f (s excluded) sees at least
// two distinct base coordinates under a. ContractError if an assigned element
// is not a product element or f has quantifiers.
bool is_admissible(const Formula& f, const ProductStructure& p, const Assignment& a);
bool is_admissible(const Formula& f, const ProductStructure& p, const IndexAssignment& a);

}  // namespace fmw
