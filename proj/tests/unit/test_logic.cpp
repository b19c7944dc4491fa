#include <doctest.h>

#include "../support/corpus.hpp"
#include "../support/generators.hpp"
#include "../support/oracles.hpp"
#include "fmw/builders.hpp"
#include "fmw/diagrams.hpp"
#include "fmw/error.hpp"
#include "fmw/evaluate.hpp"
#include "fmw/kernels.hpp"
#include "fmw/normal_forms.hpp"
#include "fmw/parser.hpp"

using namespace fmw;

namespace {

bool same_truth(const Structure& m, const Formula& a, const Formula& b) {
    std::set<std::string> vs = a.free_variables();
    vs.insert(b.free_variables().begin(), b.free_variables().end());
    const std::vector<std::string> vars(vs.begin(), vs.end());
    return oracle::table(m, a, vars) == oracle::table(m, b, vars);
}

bool has_equal(const Formula& f) {
    if (f.kind() == NodeKind::equal) return true;
    for (const auto& c : f.children())
        if (has_equal(c)) return true;
    return false;
}

}  // namespace

TEST_CASE("parser shapes") {
    const Signature sig{{"R", 2}};
    const Formula f = parse("E w. (R(v1,w) & !v1=w)", sig);
    CHECK(f == exists("w", conj({atom("R", {"v1", "w"}), negation(equal("v1", "w"))})));
    CHECK(parse("A x. x=x") == forall("x", equal("x", "x")));
    CHECK_THROWS_AS(parse("R(x)", sig), InputError);
    CHECK_THROWS_AS(parse("R(x,"), ParseError);
    CHECK_THROWS_AS(parse("E . R(x,y)"), ParseError);
}

TEST_CASE("parser precedence and scope") {
    CHECK(parse("P(x) | Q(x) & R(x)") == disj({atom("P", {"x"}), conj({atom("Q", {"x"}), atom("R", {"x"})})}));
    CHECK(parse("!P(x) & Q(x)") == conj({negation(atom("P", {"x"})), atom("Q", {"x"})}));
    CHECK(parse("P(x) -> Q(x) | R(x)") == implies(atom("P", {"x"}), disj({atom("Q", {"x"}), atom("R", {"x"})})));
    CHECK(parse("E x. P(x) & Q(x)") == exists("x", conj({atom("P", {"x"}), atom("Q", {"x"})})));
}

TEST_CASE("parse/print round trip on random formulas") {
    gen::Rng rng(99);
    const Signature sig{{"E", 2}, {"P", 1}, {"T", 3}};
    gen::FormulaGen fg(rng, sig, {"v1", "v2", "v3", "v4"});
    for (int i = 0; i < 500; ++i) {
        const Formula f = fg.make(3, 4);
        CHECK(parse(f.to_string(), sig) == f);
    }
}

TEST_CASE("evaluation examples") {
    const Structure c3 = chain(3);
    CHECK_FALSE(evaluate(c3, parse("E x. lt(x,y)"), Assignment{{"y", "0"}}));
    CHECK(evaluate(c3, parse("A x. A y. (lt(x,y) | lt(y,x) | x=y)"), Assignment{}));
    const Structure ab = ab_structure();
    const Formula phi = parse("E y. R(x,y)");
    CHECK(evaluate(ab, phi, Assignment{{"x", "p"}}));
    CHECK_FALSE(evaluate(ab, phi, Assignment{{"x", "q1"}}));
    CHECK_THROWS_AS(evaluate(c3, phi, Assignment{}), ContractError);
    CHECK(evaluate(c3, parse("x=x"), Assignment{{"x", "1"}}));
}

TEST_CASE("evaluator agrees with the reference on random inputs") {
    gen::Rng rng(3);
    const Signature sig{{"E", 2}, {"P", 1}};
    for (int t = 0; t < 300; ++t) {
        const Structure m = gen::random_structure(rng, sig, 1 + rng.below(3));
        gen::FormulaGen fg(rng, sig, {"v1", "v2"});
        const Formula f = fg.make(2);
        IndexAssignment a{{"v1", rng.below(m.size())}, {"v2", rng.below(m.size())}};
        std::map<std::string, int> env(a.begin(), a.end());
        CHECK(evaluate(m, f, a) == oracle::eval(m, f, env));
    }
}

TEST_CASE("tilde") {
    CHECK(tilde(parse("x=y & R(x,y)")) == parse("s(x,y) & R(x,y)"));
    CHECK(tilde(parse("R(x,y)")) == parse("R(x,y)"));
    CHECK(tilde(parse("E w. w=x")) == parse("E w. s(w,x)"));
}

TEST_CASE("tilde is a homomorphism and removes equality") {
    gen::Rng rng(8);
    gen::FormulaGen fg(rng, Signature{{"R", 2}}, {"v1", "v2", "v3"});
    for (int i = 0; i < 300; ++i) {
        const Formula f = fg.make(2);
        const Formula t = tilde(f);
        CHECK_FALSE(has_equal(t));
        CHECK(t.kind() == (f.kind() == NodeKind::equal ? NodeKind::atom : f.kind()));
        CHECK(t.children().size() == f.children().size());
        for (std::size_t k = 0; k < f.children().size(); ++k) CHECK(t.child(k) == tilde(f.child(k)));
    }
}

TEST_CASE("quantifier rank") {
    CHECK(quantifier_rank(parse("R(x,y)")) == 0);
    CHECK(quantifier_rank(parse("E x. R(x,y)")) == 1);
    CHECK(quantifier_rank(parse("E x. A y. R(x,y)")) == 2);
    CHECK(quantifier_rank(parse("(E x. P(x)) & (E y. P(y))")) == 1);
}

TEST_CASE("normal form examples") {
    CHECK(to_nnf(parse("!(P(x) & Q(x))")) == parse("!P(x) | !Q(x)"));
    CHECK(to_nnf(parse("!E x. P(x)")) == parse("A x. !P(x)"));
    CHECK(to_dnf(parse("(P(x)|Q(x)) & R(x,y)")) == parse("(P(x)&R(x,y)) | (Q(x)&R(x,y))"));
    CHECK_THROWS_AS(to_dnf(parse("E x. P(x)")), ContractError);
}

TEST_CASE("DNF cap raises a resource error") {
    std::vector<Formula> parts;
    for (int i = 0; i < 16; ++i)
        parts.push_back(disj({atom("P", {"x" + std::to_string(i)}), atom("Q", {"x" + std::to_string(i)})}));
    CHECK_THROWS_AS(to_dnf(conj(parts)), ResourceError);
    CHECK(dnf_clauses(conj(std::vector<Formula>(parts.begin(), parts.begin() + 4))).size() == 16);
}

TEST_CASE("normal forms preserve truth exhaustively") {
    gen::Rng rng(21);
    const Signature sig{{"E", 2}, {"P", 1}};
    for (int t = 0; t < 150; ++t) {
        const Structure m = gen::random_structure(rng, sig, 1 + rng.below(3));
        gen::FormulaGen fg(rng, sig, {"v1", "v2", "v3"});
        const Formula f = fg.make(2);
        CHECK(same_truth(m, f, to_nnf(f)));
        CHECK(same_truth(m, f, simplify(f)));
        const Formula pr = to_prenex(f);
        CHECK(same_truth(m, f, pr));
        CHECK(pr.quantifier_rank() >= f.quantifier_rank());
        const Formula qf = fg.make(0);
        CHECK(same_truth(m, qf, to_dnf(qf)));
    }
}

TEST_CASE("prenexing renames bound variables apart") {
    const Formula f = parse("(E w. P(w)) & (E w. !P(w))");
    const Formula p = to_prenex(f);
    CHECK(p.kind() == NodeKind::exists);
    CHECK(p.child().kind() == NodeKind::exists);
    CHECK(p.var() != p.child().var());
    const Structure m = chain(2);
    (void)m;
}

TEST_CASE("diagram enumeration") {
    CHECK(enumerate_equality_diagrams({"x"}).size() == 1);
    CHECK(enumerate_equality_diagrams({"x", "y"}).size() == 2);
    CHECK(enumerate_equality_diagrams({"x", "y", "z"}).size() == 5);
    CHECK(enumerate_s_diagrams({"x", "y"}).size() == 2);
    CHECK(enumerate_s_diagrams({"x", "y", "z"}).size() == 5);
    CHECK_THROWS_AS(enumerate_equality_diagrams({"x", "x"}), InputError);
    const SDiagram d({"v1", "v2", "w"}, {0, 0, 1});
    CHECK(d.render() == parse("s(v1,v2) & !s(v1,w) & !s(v2,w)"));
    CHECK(d.to_string() == "{v1 v2}{w}");
    for (int n = 1; n <= 5; ++n) {
        std::vector<std::string> vars;
        for (int i = 0; i < n; ++i) vars.push_back("v" + std::to_string(i));
        CHECK(static_cast<long long>(set_partitions(vars).size()) == oracle::bell(n));
    }
}

TEST_CASE("equality diagrams partition the assignments") {
    for (int n = 1; n <= 3; ++n) {
        std::vector<std::string> vars;
        for (int i = 1; i <= n; ++i) vars.push_back("v" + std::to_string(i));
        const auto ds = enumerate_equality_diagrams(vars);
        for (int size = 1; size <= 3; ++size) {
            const Structure m = pure_set(size);
            std::vector<int> count;
            for (const auto& d : ds) {
                const auto t = oracle::table(m, d.render(), vars);
                if (count.empty()) count.assign(t.size(), 0);
                for (std::size_t i = 0; i < t.size(); ++i) count[i] += t[i];
            }
            for (int c : count) CHECK(c == 1);
        }
    }
}

TEST_CASE("compiled formulas match evaluation") {
    const Structure c3 = chain(3);
    const Formula f = parse("E z. (lt(x,z) & lt(z,y))");
    CompiledFormula cf(c3, f, {"x", "y"});
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y) CHECK(cf(std::vector<int>{x, y}) == (x == 0 && y == 2));
}
