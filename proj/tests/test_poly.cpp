#include <catch2/catch_amalgamated.hpp>

#include "lgv/poly.hpp"

#include "helpers.hpp"

using namespace lgv;
using testutil::binomial;
using testutil::random_poly;

namespace {

MultiPoly x(int k) { return MultiPoly::variable(VarId::x(k)); }

}  // namespace

TEST_CASE("complete homogeneous basics") {
    const MultiPoly h2 = complete_homogeneous(2, 1, 3);
    MultiPoly expected;
    expected += x(1) * x(1);
    expected += x(2) * x(2);
    expected += x(3) * x(3);
    expected += x(1) * x(2);
    expected += x(1) * x(3);
    expected += x(2) * x(3);
    CHECK(h2 == expected);

    CHECK(complete_homogeneous(0, 1, 5) == MultiPoly(1));
    CHECK(complete_homogeneous(-3, 1, 2).is_zero());
    CHECK_THROWS_AS(complete_homogeneous(2, 3, 2), Error);
    CHECK_THROWS_AS(complete_homogeneous(2, 0, 2), Error);
}

TEST_CASE("complete homogeneous degree and term count") {
    for (int r = 0; r <= 7; ++r)
        for (int lo = 1; lo <= 3; ++lo)
            for (int hi = lo; hi <= 4; ++hi) {
                const MultiPoly h = complete_homogeneous(r, lo, hi);
                CHECK(static_cast<long long>(h.term_count()) == binomial(r + hi - lo, hi - lo));
                for (const auto& [m, c] : h.terms()) {
                    CHECK(m.degree() == r);
                    CHECK(c == 1);
                }
            }
}

TEST_CASE("addition basics") {
    CHECK((x(1) - x(1)).is_zero());
    const MultiPoly h1 = complete_homogeneous(1, 1, 2);
    MultiPoly doubled;
    doubled.add_term(Monomial::var(VarId::x(1)), 2);
    doubled.add_term(Monomial::var(VarId::x(2)), 2);
    CHECK(h1 + h1 == doubled);
    CHECK(MultiPoly{} + h1 == h1);
}

TEST_CASE("multiplication basics") {
    CHECK((x(1) + x(2)) * (x(1) - x(2)) == x(1) * x(1) - x(2) * x(2));
    Rng rng(11);
    const MultiPoly p = random_poly(rng);
    CHECK(p * MultiPoly(1) == p);

    const MultiPoly h1 = complete_homogeneous(1, 1, 2);
    MultiPoly expected = x(1) * x(1) + x(2) * x(2);
    expected.add_term(Monomial::var(VarId::x(1)) * Monomial::var(VarId::x(2)), 2);
    CHECK(h1 * h1 == expected);
    CHECK((h1 * h1).degree() == 2);
}

TEST_CASE("ring laws on random polynomials") {
    Rng rng(20240501);
    for (int trial = 0; trial < 200; ++trial) {
        const MultiPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("evaluation is a ring homomorphism") {
    Rng rng(77);
    for (int trial = 0; trial < 100; ++trial) {
        const MultiPoly a = random_poly(rng), b = random_poly(rng);
        std::map<VarId, BigInt> pt;
        for (int k = 1; k <= 3; ++k) pt[VarId::x(k)] = rng.uniform(-4, 4);
        CHECK((a + b).eval(pt) == a.eval(pt) + b.eval(pt));
        CHECK((a * b).eval(pt) == a.eval(pt) * b.eval(pt));
    }
}

TEST_CASE("evaluation examples") {
    std::map<VarId, BigInt> ones = {{VarId::x(1), 1}, {VarId::x(2), 1}, {VarId::x(3), 1}};
    CHECK(complete_homogeneous(2, 1, 3).eval(ones) == 6);
    CHECK(MultiPoly{}.eval({}) == 0);
    CHECK((x(1) * x(2)).eval({{VarId::x(1), 3}, {VarId::x(2), -2}}) == -6);
    CHECK_THROWS_AS(x(1).eval({}), Error);
}

TEST_CASE("degree of homogeneous products adds") {
    const MultiPoly h2 = complete_homogeneous(2, 1, 2);
    const MultiPoly h3 = complete_homogeneous(3, 1, 2);
    CHECK((h2 * h3).degree() == 5);
}

TEST_CASE("canonical text form") {
    CHECK(MultiPoly{}.str() == "0");
    CHECK(MultiPoly(1).str() == "1");
    CHECK((x(1) - x(2)).str() == "x1 - x2");
    CHECK(complete_homogeneous(2, 1, 2).str() == "x1^2 + x1*x2 + x2^2");
    MultiPoly p;
    p.add_term(Monomial::var(VarId::x(1), 2), -1);
    p.add_term(Monomial{}, 3);
    CHECK(p.str() == "-x1^2 + 3");
    CHECK(MultiPoly::variable(VarId::y(4)).str() == "y4");
    CHECK(MultiPoly::variable(VarId::y(1, 2)).str() == "y1_2");
}

TEST_CASE("x and y variable namespaces stay disjoint") {
    const MultiPoly p = x(1) * MultiPoly::variable(VarId::y(1));
    CHECK(p.term_count() == 1);
    CHECK(p.variables().size() == 2);
    CHECK(VarId::x(1) != VarId::y(1));
    CHECK(VarId::y(1) != VarId::y(1, 0));
}
