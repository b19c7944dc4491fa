#pragma once

// Fixed structures shared by property and acceptance tests.

#include <string>
#include <utility>
#include <vector>

#include "fmw/builders.hpp"
#include "fmw/product.hpp"
#include "fmw/structure.hpp"

namespace corpus {

using Edges = std::vector<std::pair<int, int>>;

inline fmw::Structure graph(int n, const Edges& edges, bool symmetric, const std::string& sym = "E") {
    std::vector<std::string> u;
    for (int i = 0; i < n; ++i) u.push_back(std::to_string(i));
    fmw::Structure::NamedTuples rels;
    auto& list = rels[sym];
    for (auto [a, b] : edges) {
        list.push_back({u[static_cast<std::size_t>(a)], u[static_cast<std::size_t>(b)]});
        if (symmetric && a != b) list.push_back({u[static_cast<std::size_t>(b)], u[static_cast<std::size_t>(a)]});
    }
    return fmw::Structure(fmw::Signature{{sym, 2}}, u, rels);
}

inline fmw::Structure complete_graph(int n) {
    Edges e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return graph(n, e, true);
}

inline fmw::Structure directed_cycle(int n) {
    Edges e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return graph(n, e, false);
}

inline fmw::Structure loops(int n) {
    Edges e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, i);
    return graph(n, e, false);
}

// Vertex-transitive {E/2} structures with at most 4 elements.
inline std::vector<std::pair<std::string, fmw::Structure>> transitive_bases() {
    return {
        {"K1", graph(1, {}, false)},
        {"loop1", loops(1)},
        {"empty2", graph(2, {}, false)},
        {"K2", complete_graph(2)},
        {"empty3", graph(3, {}, false)},
        {"dC3", directed_cycle(3)},
        {"K3", complete_graph(3)},
        {"dC4", directed_cycle(4)},
        {"C4", graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, true)},
        {"2K2", graph(4, {{0, 1}, {2, 3}}, true)},
        {"K4", complete_graph(4)},
        {"loops2", loops(2)},
    };
}

// {E/2} fibers with at most 3 elements.
inline std::vector<std::pair<std::string, fmw::Structure>> small_fibers() {
    return {
        {"K1", graph(1, {}, false)},
        {"loop1", loops(1)},
        {"arc", graph(2, {{0, 1}}, false)},
        {"path3", graph(3, {{0, 1}, {1, 2}}, true)},
        {"edge+pt", graph(3, {{0, 1}}, true)},
        {"tour3", graph(3, {{0, 1}, {0, 2}, {1, 2}}, false)},
        {"dC3", directed_cycle(3)},
        {"empty2", graph(2, {}, false)},
    };
}

// Same structure with element i renamed to perm[i] (relations carried along).
inline fmw::Structure relabel(const fmw::Structure& m, const std::vector<int>& perm) {
    fmw::Structure::NamedTuples rels;
    for (const auto& [sym, r] : m.relations()) {
        auto& list = rels[sym];
        for (const auto& t : r.tuples()) {
            std::vector<std::string> named;
            for (int x : t) named.push_back(m.name(perm[static_cast<std::size_t>(x)]));
            list.push_back(named);
        }
    }
    return fmw::Structure(m.signature(), m.universe(), rels);
}

struct QeInstance {
    std::string name;
    fmw::ProductStructure product;
};

// Transitive bases paired with fibers that are constant or relabelled copies.
inline std::vector<QeInstance> qe_corpus() {
    const auto bases = transitive_bases();
    const auto fibers = small_fibers();
    std::vector<QeInstance> out;
    for (std::size_t i = 0; i < bases.size(); ++i) {
        for (std::size_t j : {i % fibers.size(), (i * 3 + 2) % fibers.size()}) {
            const auto& [bn, base] = bases[i];
            const auto& [fname, fiber] = fibers[j];
            out.push_back({bn + "[" + fname + "]", fmw::lexicographic_product(base, fiber, true)});
        }
    }
    // Non-constant fibers: each base element gets a differently labelled copy.
    for (std::size_t i : {3u, 5u, 8u, 9u}) {
        const auto& [bn, base] = bases[i];
        for (std::size_t j : {2u, 3u, 5u}) {
            const auto& [fname, fiber] = fibers[j];
            std::vector<fmw::Structure> fs;
            for (int a = 0; a < base.size(); ++a) {
                std::vector<int> perm(static_cast<std::size_t>(fiber.size()));
                for (int x = 0; x < fiber.size(); ++x) perm[static_cast<std::size_t>(x)] = (x + a) % fiber.size();
                fs.push_back(relabel(fiber, perm));
            }
            out.push_back({bn + "[" + fname + "~]", fmw::generalized_product(base, fs, true)});
        }
    }
    return out;
}

}  // namespace corpus
