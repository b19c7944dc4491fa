// Serial vs OpenMP timings for the extension kernel and the subset search.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>

#include "fmw/exploration.hpp"
#include "fmw/kernels.hpp"
#include "fmw/parser.hpp"

using namespace fmw;

namespace {

Structure random_graph(int n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    Relation e(2, n);
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (coin(rng)) {
                e.insert(std::vector<int>{x, y});
                e.insert(std::vector<int>{y, x});
            }
    std::vector<std::string> u;
    for (int i = 0; i < n; ++i) u.push_back(std::to_string(i));
    std::map<std::string, Relation, std::less<>> rels;
    rels.emplace("E", std::move(e));
    return Structure(Signature{{"E", 2}}, u, std::move(rels));
}

double time_ms(const std::function<void()>& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

void report(const char* name, double serial, double parallel, bool same) {
    std::printf("%-28s serial %9.1f ms  parallel %9.1f ms  speedup %5.2fx  %s\n", name, serial, parallel,
                serial / parallel, same ? "same result" : "RESULT MISMATCH");
}

}  // namespace

int main() {
    std::printf("threads: %d\n", omp_get_max_threads());

    const Structure g = random_graph(36, 0.3, 1);
    const Formula f = parse("E w. (E(v1,w) & E(v2,w) & !E(v3,w) & A u. (E(w,u) -> !u=v1 | E(v3,u)))");
    const std::vector<std::string> vars{"v1", "v2", "v3"};
    std::vector<std::uint8_t> a, b;
    const double es = time_ms([&] { a = extension_serial(g, f, vars); });
    const double ep = time_ms([&] { b = extension_parallel(g, f, vars); });
    report("extension (n=36, 3 vars)", es, ep, a == b);

    const Structure h = random_graph(26, 0.5, 2);
    const SubsetPredicate independent = [&](std::span<const int> s) {
        for (std::size_t i = 0; i < s.size(); ++i)
            for (std::size_t j = i + 1; j < s.size(); ++j)
                if (h.holds("E", std::vector<int>{s[i], s[j]})) return false;
        return true;
    };
    SubsetSearchResult rs, rp;
    const double ss = time_ms([&] { rs = first_subset_serial(26, 7, independent); });
    const double sp = time_ms([&] { rp = first_subset_parallel(26, 7, independent); });
    report("subset search (26 choose 7)", ss, sp, rs.witness == rp.witness);

    Coloring c = uniform_coloring(h);
    for (int e = 0; e < h.size(); ++e) c.colors[static_cast<std::size_t>(e)] = e % 3 == 0 ? "blue" : "red";
    const Structure target = random_graph(6, 0.9, 3);
    MonochromaticOptions os, op;
    os.mode = SearchMode::serial;
    os.cap = op.cap = 26;
    MonochromaticResult ms, mp;
    const double cs = time_ms([&] { ms = find_monochromatic_copy(c, target, os); });
    const double cp = time_ms([&] { mp = find_monochromatic_copy(c, target, op); });
    report("monochromatic copy search", cs, cp, ms.witness == mp.witness);
    return 0;
}
