#include "fmw/kernels.hpp"

#include <algorithm>
#include <cstdint>

#include "fmw/error.hpp"
#include "fmw/evaluate.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fmw {

namespace {

std::size_t table_size(int n, std::size_t k) {
    std::size_t size = 1;
    for (std::size_t i = 0; i < k; ++i) {
        size *= static_cast<std::size_t>(n);
        if (size > kMaxRelationTable) throw ResourceError("extension table too large");
    }
    return size;
}

constexpr std::size_t kParallelThreshold = 4096;
constexpr std::size_t kSubsetChunk = std::size_t{1} << 16;

}  // namespace

void decode_tuple(std::size_t index, int n, std::span<int> out) {
    for (std::size_t p = out.size(); p-- > 0;) {
        out[p] = static_cast<int>(index % static_cast<std::size_t>(n));
        index /= static_cast<std::size_t>(n);
    }
}

std::vector<std::string> sorted_free_variables(const Formula& f) {
    return {f.free_variables().begin(), f.free_variables().end()};
}

std::vector<std::uint8_t> extension_serial(const Structure& m, const Formula& f, const std::vector<std::string>& vars) {
    const CompiledFormula cf(m, f, vars);
    const std::size_t size = table_size(m.size(), vars.size());
    std::vector<std::uint8_t> out(size, 0);
    std::vector<int> tuple(vars.size()), scratch(static_cast<std::size_t>(cf.slot_count()));
    for (std::size_t i = 0; i < size; ++i) {
        decode_tuple(i, m.size(), tuple);
        out[i] = cf.eval(tuple, scratch) ? 1 : 0;
    }
    return out;
}

std::vector<std::uint8_t> extension_parallel(const Structure& m, const Formula& f,
                                             const std::vector<std::string>& vars) {
    const CompiledFormula cf(m, f, vars);
    const std::size_t size = table_size(m.size(), vars.size());
    std::vector<std::uint8_t> out(size, 0);
    const auto total = static_cast<long long>(size);
#pragma omp parallel
    {
        std::vector<int> tuple(vars.size()), scratch(static_cast<std::size_t>(cf.slot_count()));
#pragma omp for schedule(static)
        for (long long i = 0; i < total; ++i) {
            decode_tuple(static_cast<std::size_t>(i), m.size(), tuple);
            out[static_cast<std::size_t>(i)] = cf.eval(tuple, scratch) ? 1 : 0;
        }
    }
    return out;
}

std::vector<std::uint8_t> extension(const Structure& m, const Formula& f, const std::vector<std::string>& vars) {
    if (table_size(m.size(), vars.size()) >= kParallelThreshold) return extension_parallel(m, f, vars);
    return extension_serial(m, f, vars);
}

std::size_t binomial_checked(int n, int k, std::size_t cap) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::size_t r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
        if (r > cap) throw ResourceError("subset count exceeds cap");
    }
    return r;
}

std::vector<int> unrank_subset(std::size_t rank, int n, int k) {
    std::vector<int> out;
    int next = 0;
    for (int pos = 0; pos < k; ++pos) {
        for (int c = next; c < n; ++c) {
            const std::size_t with_c = binomial_checked(n - c - 1, k - pos - 1, SIZE_MAX);
            if (rank < with_c) {
                out.push_back(c);
                next = c + 1;
                break;
            }
            rank -= with_c;
        }
    }
    return out;
}

SubsetSearchResult first_subset_serial(int n, int k, const SubsetPredicate& pred) {
    SubsetSearchResult res;
    if (k < 0 || k > n) return res;
    std::vector<int> sub(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) sub[static_cast<std::size_t>(i)] = i;
    while (true) {
        ++res.examined;
        if (pred(sub)) {
            res.witness = sub;
            return res;
        }
        int i = k - 1;
        while (i >= 0 && sub[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) return res;
        ++sub[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) sub[static_cast<std::size_t>(j)] = sub[static_cast<std::size_t>(j - 1)] + 1;
    }
}

namespace {

bool next_combination(std::vector<int>& sub, int n) {
    const int k = static_cast<int>(sub.size());
    int i = k - 1;
    while (i >= 0 && sub[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return false;
    ++sub[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) sub[static_cast<std::size_t>(j)] = sub[static_cast<std::size_t>(j - 1)] + 1;
    return true;
}

}  // namespace

// Chunks grow geometrically so an early witness costs little; inside a chunk,
// threads scan contiguous blocks and skip blocks past the best hit so far.
SubsetSearchResult first_subset_parallel(int n, int k, const SubsetPredicate& pred) {
    SubsetSearchResult res;
    if (k < 0 || k > n) return res;
    const std::size_t total = binomial_checked(n, k, SIZE_MAX);
    constexpr std::size_t kBlock = 256;
    std::size_t chunk = 4 * kBlock;
    for (std::size_t start = 0; start < total; start += chunk, chunk = std::min(chunk * 2, kSubsetChunk)) {
        const std::size_t len = std::min(chunk, total - start);
        const long long blocks = static_cast<long long>((len + kBlock - 1) / kBlock);
        std::size_t best = SIZE_MAX;
#pragma omp parallel for schedule(dynamic, 1)
        for (long long b = 0; b < blocks; ++b) {
            const std::size_t from = start + static_cast<std::size_t>(b) * kBlock;
            const std::size_t to = std::min(from + kBlock, start + len);
            std::size_t seen;
#pragma omp atomic read
            seen = best;
            if (from > seen) continue;
            auto sub = unrank_subset(from, n, k);
            for (std::size_t r = from; r < to; ++r) {
                if (pred(sub)) {
#pragma omp critical(fmw_subset_best)
                    best = std::min(best, r);
                    break;
                }
                next_combination(sub, n);
            }
        }
        if (best != SIZE_MAX) {
            res.examined = best + 1;
            res.witness = unrank_subset(best, n, k);
            return res;
        }
    }
    res.examined = total;
    return res;
}

}  // namespace fmw
