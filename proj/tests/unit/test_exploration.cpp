#include <doctest.h>

#include "../support/generators.hpp"
#include "../support/oracles.hpp"
#include "fmw/builders.hpp"
#include "fmw/error.hpp"
#include "fmw/exploration.hpp"
#include "fmw/io.hpp"
#include "fmw/parser.hpp"
#include "fmw/symmetry.hpp"

using namespace fmw;

namespace {

HypergraphSpec spec(int arity, int colors, int size, bool complete, std::uint64_t seed = 1) {
    HypergraphSpec s;
    s.arity = arity;
    s.colors = colors;
    s.size = size;
    s.complete = complete;
    s.seed = seed;
    return s;
}

// Axioms checked directly from their statements.
bool axioms_hold(const Structure& m, const HypergraphSpec& sp) {
    const int n = m.size();
    std::vector<int> t(static_cast<std::size_t>(sp.arity), 0);
    while (true) {
        std::set<int> distinct(t.begin(), t.end());
        int colored = 0;
        for (int c = 1; c <= sp.colors; ++c) {
            const bool in = m.holds(HypergraphSpec::color_symbol(c), t);
            colored += in;
            if (in && static_cast<int>(distinct.size()) < sp.arity) return false;
            auto perm = t;
            std::sort(perm.begin(), perm.end());
            do
                if (m.holds(HypergraphSpec::color_symbol(c), perm) != in) return false;
            while (std::next_permutation(perm.begin(), perm.end()));
        }
        if (colored > 1) return false;
        if (sp.complete && static_cast<int>(distinct.size()) == sp.arity && colored != 1) return false;
        int p = sp.arity - 1;
        while (p >= 0 && t[static_cast<std::size_t>(p)] == n - 1) t[static_cast<std::size_t>(p--)] = 0;
        if (p < 0) break;
        ++t[static_cast<std::size_t>(p)];
    }
    return true;
}

Structure with_tuple(const Structure& m, const std::string& sym, std::vector<int> t) {
    Relation r = m.relation(sym);
    r.insert(t);
    auto rels = m.relations();
    rels[sym] = r;
    return Structure(m.signature(), m.universe(), rels);
}

}  // namespace

TEST_CASE("hypergraph generation") {
    const Structure g = gen_colored_hypergraph(spec(2, 1, 5, false));
    CHECK(g.signature() == Signature{{"R_1", 2}});
    CHECK(axioms_hold(g, spec(2, 1, 5, false)));
    const Structure d = gen_colored_hypergraph(spec(2, 2, 3, true));
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y)
            if (x != y)
                CHECK(d.holds("R_1", std::vector<int>{x, y}) + d.holds("R_2", std::vector<int>{x, y}) == 1);
    CHECK(gen_colored_hypergraph(spec(3, 2, 6, false, 9)) == gen_colored_hypergraph(spec(3, 2, 6, false, 9)));
    CHECK_THROWS_AS(gen_colored_hypergraph(spec(0, 1, 3, false)), InputError);
}

TEST_CASE("generator and validator agree") {
    gen::Rng rng(71);
    for (int t = 0; t < 60; ++t) {
        const auto sp = spec(2 + rng.below(2), 1 + rng.below(3), 1 + rng.below(6), rng.chance(0.5),
                             static_cast<std::uint64_t>(t));
        const Structure m = gen_colored_hypergraph(sp);
        CHECK(check_class_axioms(m, sp).holds);
        CHECK(axioms_hold(m, sp));
    }
}

TEST_CASE("axiom violations are reported with witnesses") {
    const auto sp = spec(2, 2, 3, false);
    const Structure base = gen_colored_hypergraph(spec(2, 2, 3, false, 3));
    Structure clash = with_tuple(with_tuple(base, "R_1", {0, 1}), "R_1", {1, 0});
    clash = with_tuple(with_tuple(clash, "R_2", {0, 1}), "R_2", {1, 0});
    const auto v = check_class_axioms(clash, sp);
    CHECK_FALSE(v.holds);
    CHECK(v.axiom == "disjointness");
    const auto loop = check_class_axioms(with_tuple(base, "R_1", {2, 2}), sp);
    CHECK_FALSE(loop.holds);
    CHECK(loop.axiom == "irreflexivity");
    CHECK(loop.tuple == std::vector<int>{2, 2});
    const auto asym = check_class_axioms(with_tuple(pure_set(3, sp.signature()), "R_2", {0, 1}), sp);
    CHECK(asym.axiom == "symmetry");
    const auto incomplete = check_class_axioms(pure_set(3, sp.signature()), spec(2, 2, 3, true));
    CHECK(incomplete.axiom == "completeness");
    CHECK_THROWS_AS(check_class_axioms(chain(3), sp), InputError);
}

TEST_CASE("extension property") {
    const auto sp = spec(2, 1, 3, false);
    for (int m = 2; m <= 4; ++m) {
        const Structure ps = pure_set(m, sp.signature());
        CHECK(find_extension_witness(ps, sp, ExtensionDemand{{0}, {{{0}, 0}}}).has_value());
    }
    const Structure edge = io::structure_from_json(io::parse_json(
        R"({"signature":{"R_1":2},"universe":["0","1"],"relations":{"R_1":[["0","1"],["1","0"]]}})"));
    const ExtensionDemand both{{0, 1}, {{{0}, 1}, {{1}, 1}}};
    CHECK_FALSE(find_extension_witness(edge, sp, both).has_value());
    const auto v = check_extension_property(edge, sp, 2, ExtensionProperty::with_none);
    CHECK_FALSE(v.holds);
    REQUIRE(v.unmet);
    CHECK_FALSE(find_extension_witness(edge, sp, *v.unmet).has_value());
}

TEST_CASE("stage-built class D structure satisfies the colors-only extension property") {
    const auto sp = spec(2, 2, 8, true, 5);
    const Structure d = build_extension_stage(sp, 1, ExtensionProperty::colors_only, 64);
    CHECK(d.size() >= 8);
    CHECK(check_class_axioms(d, sp).holds);
    CHECK(check_extension_property(d, sp, 1, ExtensionProperty::colors_only).holds);
}

TEST_CASE("coloring by formula") {
    const Structure p3 = path(3);
    const auto c = color_by_formula(p3, parse("E y. E z. (E(x,y) & E(x,z) & !y=z)"));
    CHECK(c.colors == std::vector<std::string>{"red", "blue", "red"});
    CHECK(color_by_formula(p3, parse("x=x")).class_of("blue").size() == 3);
    CHECK(color_by_formula(p3, parse("!x=x")).class_of("red").size() == 3);
    CHECK_THROWS_AS(color_by_formula(p3, parse("E(x,y)")), ContractError);
}

TEST_CASE("staircase coloring") {
    for (int n = 1; n <= 5; ++n) {
        const auto p = lexicographic_product(pure_set(n), chain(n), true);
        std::vector<int> order(static_cast<std::size_t>(n));
        std::iota(order.begin(), order.end(), 0);
        const auto c = staircase_coloring(p, orbit_rank(chain(n)), order);
        for (int i = 0; i < n; ++i) {
            int red = 0;
            for (int j = 0; j < n; ++j)
                red += c.color_of(p.element_at[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) == "red";
            CHECK(red == i + 1);
        }
    }
    const auto one = lexicographic_product(pure_set(1), chain(3), true);
    CHECK(staircase_coloring(one, {0, 0, 0}, {0}).class_of("red").size() == 3);
    CHECK_THROWS_AS(staircase_coloring(one, {0, 0}, {0}), InputError);
}

TEST_CASE("monochromatic copies") {
    gen::Rng rng(81);
    for (int t = 0; t < 16; ++t) {
        Coloring c = uniform_coloring(pure_set(4));
        for (auto& col : c.colors) col = rng.chance(0.5) ? "red" : "blue";
        const auto r = find_monochromatic_copy(c, pure_set(2));
        REQUIRE(r.witness);
        CHECK(c.color_of(r.witness->at(0)) == c.color_of(r.witness->at(1)));
    }
    const Structure p3 = path(3);
    const auto mid = color_by_formula(p3, parse("E y. E z. (E(x,y) & E(x,z) & !y=z)"));
    const auto none = find_monochromatic_copy(mid, p3);
    CHECK_FALSE(none.witness);
    CHECK(none.examined.size() == 2);

    const Structure c4 = chain(4);
    const auto all = find_monochromatic_copy(uniform_coloring(c4), c4);
    REQUIRE(all.witness);
    CHECK(*all.witness == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("serial and parallel monochromatic search agree") {
    gen::Rng rng(82);
    for (int t = 0; t < 30; ++t) {
        const Structure m = gen::random_structure(rng, Signature{{"E", 2}}, 4 + rng.below(4), 0.4);
        Coloring c = uniform_coloring(m);
        for (auto& col : c.colors) col = rng.chance(0.5) ? "red" : "blue";
        const Structure target = gen::random_structure(rng, Signature{{"E", 2}}, 2 + rng.below(2), 0.4);
        MonochromaticOptions a, b;
        a.mode = SearchMode::serial;
        b.mode = SearchMode::parallel;
        const auto ra = find_monochromatic_copy(c, target, a);
        const auto rb = find_monochromatic_copy(c, target, b);
        CHECK(ra.witness == rb.witness);
        CHECK(ra.color == rb.color);
    }
}

TEST_CASE("product assembly") {
    const auto p = lexicographic_product(pure_set(3), pure_set(3), true);
    const auto red = product_of_monochromatic_pieces(p, uniform_coloring(p.structure), pure_set(2), pure_set(2));
    CHECK(red.success);
    CHECK(red.color == "red");
    REQUIRE(red.f_map);
    CHECK(check_isomorphism(*red.f_map));

    Coloring split = uniform_coloring(p.structure);
    for (int e = 0; e < p.structure.size(); ++e)
        split.colors[static_cast<std::size_t>(e)] = p.components[static_cast<std::size_t>(e)].second == 0 ? "blue" : "red";
    const auto fail = product_of_monochromatic_pieces(p, split, pure_set(3), pure_set(2));
    CHECK_FALSE(fail.success);
    CHECK(fail.failing_stage == "fiber 0");
}

TEST_CASE("orbit census") {
    const auto two = orbit_census(generalized_product(pure_set(2), std::vector<Structure>{chain(1), chain(2)}, true));
    CHECK(two.orbits.size() >= 2);
    CHECK_FALSE(two.transitive());
    const auto p3 = orbit_census(lexicographic_product(pure_set(2, path(3).signature()), path(3), true));
    CHECK(p3.orbits.size() == 2);
    const auto three =
        orbit_census(generalized_product(pure_set(3), std::vector<Structure>{chain(1), chain(2), pure_set(2)}, true));
    CHECK(three.orbits.size() >= 3);
}

TEST_CASE("orbit census never mixes non-isomorphic fibers") {
    gen::Rng rng(91);
    for (int t = 0; t < 25; ++t) {
        const Structure base = gen::random_structure(rng, Signature{{"E", 2}}, 1 + rng.below(3), 0.3);
        std::vector<Structure> fibers;
        int total = 0;
        for (int a = 0; a < base.size(); ++a) {
            fibers.push_back(gen::random_structure(rng, Signature{{"E", 2}}, 1 + rng.below(3), 0.4));
            total += fibers.back().size();
        }
        if (total > 12) continue;
        const auto p = generalized_product(base, fibers, true);
        const auto census = orbit_census(p);
        CHECK(census.consistent);
        for (const auto& orbit : census.orbits)
            for (int e : orbit) {
                const int a = p.components[static_cast<std::size_t>(e)].first;
                const int b = p.components[static_cast<std::size_t>(orbit.front())].first;
                CHECK(oracle::isomorphic(p.fiber(a), p.fiber(b)));
            }
    }
}

TEST_CASE("coloring JSON") {
    const Structure p3 = path(3);
    const auto c = io::coloring_from_json(io::parse_json(R"({"colors":{"a":"red","b":"blue","c":"red"}})"), p3);
    CHECK(c.colors == std::vector<std::string>{"red", "blue", "red"});
    CHECK(io::coloring_from_json(io::coloring_to_json(c), p3).colors == c.colors);
    CHECK_THROWS_AS(io::coloring_from_json(io::parse_json(R"({"colors":{"a":"red"}})"), p3), InputError);
    const auto green = io::coloring_from_json(io::parse_json(R"({"colors":{"a":"red","b":"green","c":"red"}})"), p3);
    CHECK(green.palette == std::vector<std::string>{"red", "blue", "green"});
    CHECK_THROWS_AS(io::coloring_from_json(
                        io::parse_json(R"({"colors":{"a":"red","b":"green","c":"red"},"palette":["red","blue"]})"), p3),
                    InputError);
}
