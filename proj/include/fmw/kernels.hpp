#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fmw/formula.hpp"
#include "fmw/structure.hpp"

namespace fmw {

// Truth table of f over all n^k tuples for vars (v1..vk), tuples in
// lexicographic order with v1 most significant. The serial version is the
// reference; the parallel one must agree with it bit for bit.
std::vector<std::uint8_t> extension_serial(const Structure& m, const Formula& f, const std::vector<std::string>& vars);
std::vector<std::uint8_t> extension_parallel(const Structure& m, const Formula& f,
                                             const std::vector<std::string>& vars);
// Picks the parallel kernel for large tables.
std::vector<std::uint8_t> extension(const Structure& m, const Formula& f, const std::vector<std::string>& vars);

// Sorted free variables of f.
std::vector<std::string> sorted_free_variables(const Formula& f);

// Decodes a table index into a tuple over a universe of size n.
void decode_tuple(std::size_t index, int n, std::span<int> out);

// Number of k-subsets of {0..n-1}; throws ResourceError above `cap`.
std::size_t binomial_checked(int n, int k, std::size_t cap);

// k-subsets of {0..n-1} in lexicographic order, as sorted index vectors.
// `rank` maps to the rank-th subset in that order.
std::vector<int> unrank_subset(std::size_t rank, int n, int k);

// First (lowest rank) k-subset of {0..n-1} accepted by `pred`, scanning in
// lexicographic order. Returns the subset and the number of subsets examined
// (rank + 1 on success, total count on exhaustion).
struct SubsetSearchResult {
    std::optional<std::vector<int>> witness;
    std::size_t examined = 0;
};
using SubsetPredicate = std::function<bool(std::span<const int>)>;
SubsetSearchResult first_subset_serial(int n, int k, const SubsetPredicate& pred);
// Parallel scan in fixed-size chunks; the lowest accepted rank wins, so the
// witness and count match the serial scan. `pred` must be thread safe.
SubsetSearchResult first_subset_parallel(int n, int k, const SubsetPredicate& pred);

}  // namespace fmw
