#pragma once

#include <span>
#include <utility>
#include <vector>

#include "fmw/structure.hpp"

namespace fmw::detail {

using RelationPairs = std::vector<std::pair<const Relation*, const Relation*>>;

// Relation table pairs (source, target) for every symbol of the source signature.
RelationPairs relation_pairs(const Structure& src, const Structure& tgt);

// Checks t in R_src <=> image(t) in R_tgt for every tuple drawn from `assigned`
// that uses the last element of `assigned`. `image` is indexed by source index.
bool extends_consistently(const RelationPairs& rels, std::span<const int> assigned, std::span<const int> image);

// Per-element invariant: for every relation and argument position, how many
// tuples carry the element there, plus membership of the diagonal tuple.
// Automorphisms and isomorphisms preserve it.
std::vector<std::vector<int>> element_profiles(const Structure& m);

}  // namespace fmw::detail
