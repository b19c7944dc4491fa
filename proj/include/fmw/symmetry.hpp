#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "fmw/product.hpp"
#include "fmw/structure.hpp"

namespace fmw {

inline constexpr int kDefaultSymmetryCap = 10;

using Permutation = std::vector<int>;

struct AutomorphismSet {
    Structure structure;
    std::vector<Permutation> elements;  // lexicographic order; identity first

    // Closure under composition and inverses, identity present, and every
    // member an isomorphism onto the structure.
    bool verify_group() const;
};

struct OrbitPartition {
    std::vector<std::vector<int>> orbits;  // each sorted; ordered by least element
    std::vector<int> orbit_of;             // element index -> orbit number
    std::size_t count() const { return orbits.size(); }
};

// All automorphisms by backtracking in universe order. ResourceError when
// |M| exceeds cap.
AutomorphismSet automorphisms(const Structure& m, int cap = kDefaultSymmetryCap);

// Completes a partial map (pairs of element indices) to an automorphism.
std::optional<Permutation> extend_to_automorphism(const Structure& m, const std::vector<std::pair<int, int>>& partial);

OrbitPartition orbits(const Structure& m, int cap = kDefaultSymmetryCap);
bool is_transitive(const Structure& m, int cap = kDefaultSymmetryCap);
// Two elements in different orbits, when m is not transitive.
std::optional<std::pair<int, int>> transitivity_counterexample(const Structure& m, int cap = kDefaultSymmetryCap);

struct EmbeddingVerdict {
    bool holds = true;
    std::optional<Permutation> witness;  // automorphism of the substructure that does not extend
    std::size_t checked = 0;
};

// Every automorphism of sub extends to one of m. PreconditionError unless sub
// is an induced substructure of m (same element names).
EmbeddingVerdict is_symmetrically_embedded(const Structure& sub, const Structure& m, int cap = kDefaultSymmetryCap);

struct UltrahomogeneityVerdict {
    bool holds = true;
    std::optional<std::vector<std::pair<int, int>>> witness;  // non-extendable partial isomorphism
    int max_size = 0;
    std::size_t checked = 0;
};

// Every partial isomorphism between subsets of size <= max_size extends to
// an automorphism.
UltrahomogeneityVerdict is_ultrahomogeneous(const Structure& m, int max_size, int cap = kDefaultSymmetryCap);

// (a|b) -> (sigma(a)|b). ContractError if sigma is not an automorphism of the
// base, PreconditionError if the fibers are not constant.
StructureMap lift_automorphism(const ProductStructure& p, const Permutation& sigma);

// Restriction of tau to the s-class of e as an isomorphism N_a1 -> N_a2.
// ContractError if tau is not an automorphism of the product or splits a class.
StructureMap fiber_isomorphism_from_automorphism(const ProductStructure& p, const Permutation& tau, int element);

}  // namespace fmw
