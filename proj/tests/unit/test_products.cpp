#include <doctest.h>

#include "../support/corpus.hpp"
#include "../support/generators.hpp"
#include "../support/oracles.hpp"
#include "fmw/builders.hpp"
#include "fmw/error.hpp"
#include "fmw/io.hpp"
#include "fmw/parser.hpp"
#include "fmw/product.hpp"

using namespace fmw;

TEST_CASE("lexicographic product examples") {
    const auto p = lexicographic_product(pure_set(2), chain(2), false);
    CHECK(p.structure.size() == 4);
    const auto lt = p.structure.relation("lt").tuples();
    CHECK(lt.size() == 2);
    for (const auto& t : lt) CHECK(p.components[static_cast<std::size_t>(t[0])].first == p.components[static_cast<std::size_t>(t[1])].first);

    const auto c = lexicographic_product(chain(2), chain(2), false);
    CHECK(oracle::isomorphic(c.structure, chain(4)));

    const auto ps = lexicographic_product(pure_set(2), chain(2), true);
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y)
            CHECK(ps.structure.holds("s", std::vector<int>{x, y}) ==
                  (ps.components[static_cast<std::size_t>(x)].first == ps.components[static_cast<std::size_t>(y)].first));
    CHECK(ps.structure.name(1) == "(0|1)");
}

TEST_CASE("product errors") {
    CHECK_THROWS_AS(lexicographic_product(chain(2), path(2), false), InputError);
    const auto ps = lexicographic_product(pure_set(2), chain(2), true);
    CHECK_THROWS_AS(lexicographic_product(ps.structure, ps.structure, true), InputError);
    CHECK_THROWS_AS(generalized_product(pure_set(2), std::map<std::string, Structure>{{"0", chain(1)}}, false),
                    InputError);
}

TEST_CASE("generalized products") {
    const auto g = generalized_product(pure_set(2), std::vector<Structure>{chain(1), chain(2)}, true);
    CHECK(g.structure.size() == 3);
    std::map<int, int> sizes;
    for (const auto& [a, b] : g.components) ++sizes[a];
    CHECK(sizes == std::map<int, int>{{0, 1}, {1, 2}});
    CHECK_FALSE(g.constant_fibers());

    const auto lex = lexicographic_product(cycle(3), path(3), true);
    const auto gen = generalized_product(cycle(3), std::vector<Structure>(3, path(3)), true);
    CHECK(lex.structure == gen.structure);
    CHECK(gen.constant_fibers());
}

TEST_CASE("product relation invariant against the definition") {
    gen::Rng rng(31);
    const Signature sig{{"E", 2}, {"T", 3}};
    for (int t = 0; t < 25; ++t) {
        const Structure m = gen::random_structure(rng, sig, 1 + rng.below(3));
        std::vector<Structure> fibers;
        for (int a = 0; a < m.size(); ++a) fibers.push_back(gen::random_structure(rng, sig, 1 + rng.below(3)));
        const auto p = generalized_product(m, fibers, rng.chance(0.5));
        const int n = p.structure.size();
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                const auto cx = p.components[static_cast<std::size_t>(x)], cy = p.components[static_cast<std::size_t>(y)];
                CHECK(p.structure.holds("E", std::vector<int>{x, y}) == oracle::product_holds(p, "E", {cx, cy}));
                for (int z = 0; z < n; ++z) {
                    const auto cz = p.components[static_cast<std::size_t>(z)];
                    CHECK(p.structure.holds("T", std::vector<int>{x, y, z}) == oracle::product_holds(p, "T", {cx, cy, cz}));
                }
                if (p.with_s) CHECK(p.structure.holds("s", std::vector<int>{x, y}) == (cx.first == cy.first));
            }
    }
}

TEST_CASE("fiber embedding and element decomposition") {
    const auto p = lexicographic_product(pure_set(2), chain(2), true);
    const auto e = fiber_embedding(p, "0");
    CHECK(e.mapping.size() == 2);
    CHECK(check_embedding(StructureMap{e.source, p.structure.restrict_to(e.source.signature()), e.mapping}));
    CHECK(decompose_element(p, "(0|1)") == std::pair<std::string, std::string>{"0", "1"});
    CHECK_THROWS_AS(fiber_embedding(p, "7"), InputError);
    CHECK_THROWS_AS(decompose_element(p, "(9|9)"), ContractError);
    CHECK(split_pair_id(pair_id("a", "b")) == std::pair<std::string, std::string>{"a", "b"});
}

TEST_CASE("admissibility") {
    const auto p = lexicographic_product(pure_set(2, Signature{{"R", 2}}), pure_set(2, Signature{{"R", 2}}), true);
    const Formula r = parse("R(v1,v2)");
    CHECK_FALSE(is_admissible(r, p, Assignment{{"v1", "(0|0)"}, {"v2", "(0|1)"}}));
    CHECK(is_admissible(r, p, Assignment{{"v1", "(0|0)"}, {"v2", "(1|1)"}}));
    CHECK(is_admissible(parse("v1=v2"), p, Assignment{{"v1", "(0|0)"}, {"v2", "(0|1)"}}));
    CHECK_THROWS_AS(is_admissible(r, p, Assignment{{"v1", "x"}, {"v2", "(0|1)"}}), ContractError);
}

TEST_CASE("product JSON round trip") {
    const auto p = generalized_product(pure_set(2), std::vector<Structure>{chain(1), chain(2)}, true);
    const auto back = io::product_from_json(io::product_to_json(p));
    CHECK(back.structure == p.structure);
    CHECK(back.with_s);
    CHECK(back.fibers.size() == 2);
}
