#include <catch2/catch_amalgamated.hpp>

#include "lgv/linalg.hpp"

#include "helpers.hpp"

using namespace lgv;
using testutil::det3;

TEST_CASE("minor selection") {
    RingMatrix<BigInt> a(3, 4);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 4; ++j) a.at(i, j) = 10 * i + j;
    CHECK(minor(a, IndexSet::full(3), IndexSet::full(4)) == a);

    const auto m = minor(a, std::vector<int>{1, 3}, std::vector<int>{2, 4});
    CHECK(m.at(1, 1) == 12);
    CHECK(m.at(2, 2) == 34);

    // composition of minors is a minor of composed index lists
    const auto twice = minor(minor(a, std::vector<int>{1, 3}, std::vector<int>{2, 3, 4}),
                             std::vector<int>{2}, std::vector<int>{1, 3});
    CHECK(twice == minor(a, std::vector<int>{3}, std::vector<int>{2, 4}));

    // deletion is the complementary minor
    CHECK(delete_rowcols(a, {2}, {1, 3}) == minor(a, std::vector<int>{1, 3}, std::vector<int>{2, 4}));
    CHECK_THROWS_AS(minor(a, std::vector<int>{5}, std::vector<int>{1}), Error);
}

TEST_CASE("index sets") {
    const IndexSet s({2, 4}, 5);
    CHECK(s.complement() == IndexSet({1, 3, 5}, 5));
    CHECK(IndexSet::full(3).values() == std::vector<int>{1, 2, 3});
    CHECK_THROWS_AS(IndexSet({2, 2}, 5), Error);
    CHECK_THROWS_AS(IndexSet({0}, 5), Error);
}

TEST_CASE("determinant basics") {
    CHECK(det(identity_matrix(3)) == 1);
    CHECK(det(RingMatrix<BigInt>(0, 0)) == 1);

    const auto g = generic_matrix(2, 2);
    const MultiPoly expect = MultiPoly::variable(VarId::y(1, 1)) * MultiPoly::variable(VarId::y(2, 2)) -
                             MultiPoly::variable(VarId::y(1, 2)) * MultiPoly::variable(VarId::y(2, 1));
    CHECK(det(g) == expect);

    RingMatrix<BigInt> r(2, 3);
    CHECK_THROWS_AS(det(r), Error);
}

TEST_CASE("determinant routes agree") {
    Rng rng(91);
    for (int m = 1; m <= 5; ++m)
        for (int trial = 0; trial < 20; ++trial) {
            const auto a = random_int_matrix(rng, m, m, -9, 9);
            const BigInt reference = det_leibniz(a);
            CHECK(det(a) == reference);
            CHECK(det_bareiss(a) == reference);
        }
    // and over the polynomial ring, against the expanded permutation sum
    for (int m = 1; m <= 4; ++m) {
        const auto g = generic_matrix(m, m);
        CHECK(det(g) == det_leibniz(g));
    }
}

TEST_CASE("bareiss handles zero pivots") {
    RingMatrix<BigInt> a(3, 3);
    // first pivot zero, still nonsingular
    int vals[3][3] = {{0, 1, 2}, {3, 0, 4}, {5, 6, 0}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) a.at(i + 1, j + 1) = vals[i][j];
    CHECK(det_bareiss(a) == det_leibniz(a));

    RingMatrix<BigInt> z(3, 3);  // singular
    z.at(1, 2) = 1;
    z.at(2, 2) = 2;
    z.at(3, 2) = 3;
    CHECK(det_bareiss(z) == 0);
}

TEST_CASE("determinant is alternating and multilinear in rows") {
    Rng rng(92);
    for (int trial = 0; trial < 30; ++trial) {
        const int m = static_cast<int>(rng.uniform(2, 4));
        auto a = random_int_matrix(rng, m, m, -6, 6);
        const BigInt d = det(a);
        auto swapped = a;
        for (int j = 1; j <= m; ++j) std::swap(swapped.at(1, j), swapped.at(2, j));
        CHECK(det(swapped) == -d);
        auto dup = a;
        for (int j = 1; j <= m; ++j) dup.at(1, j) = dup.at(2, j);
        CHECK(det(dup) == 0);
    }
}

TEST_CASE("determinant is multiplicative") {
    Rng rng(93);
    for (int m = 1; m <= 5; ++m)
        for (int trial = 0; trial < 10; ++trial) {
            const auto a = random_int_matrix(rng, m, m, -5, 5);
            const auto b = random_int_matrix(rng, m, m, -5, 5);
            CHECK(det(a * b) == det(a) * det(b));
        }
}

TEST_CASE("complementary minor products") {
    RingMatrix<BigInt> a(3, 3);
    int vals[3][3] = {{2, -1, 3}, {0, 4, 1}, {5, 2, -2}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) a.at(i + 1, j + 1) = vals[i][j];
    CHECK(detprod_cminors(a, IndexSet::full(3), IndexSet::full(3)) == det(a));
    CHECK(detprod_cminors(a, IndexSet({}, 3), IndexSet({}, 3)) == det(a));

    Rng rng(94);
    const auto b = random_int_matrix(rng, 4, 4, -9, 9);
    // brute force: 1x1 times the complementary 3x3
    const BigInt byhand = b.at(1, 2) * det3(delete_rowcols(b, {1}, {2}));
    CHECK(detprod_cminors(b, IndexSet({1}, 4), IndexSet({2}, 4)) == byhand);
    CHECK_THROWS_AS(detprod_cminors(b, IndexSet({1}, 4), IndexSet({1, 2}, 4)), Error);
}

TEST_CASE("shuffle") {
    CHECK(shuffle({1, 2, 3}, {2}, {5}) == std::vector<int>{1, 5, 3});
    CHECK(shuffle({1, 2, 3}, {}, {}) == std::vector<int>{1, 2, 3});
    CHECK(shuffle({1, 2, 3, 4}, {1, 3}, {7, 9}) == std::vector<int>{7, 2, 9, 4});
    CHECK_THROWS_AS(shuffle({1, 2}, {3}, {4}), Error);
    CHECK_THROWS_AS(shuffle({1, 2}, {1}, {2}), Error);
    CHECK_THROWS_AS(shuffle({1, 2}, {1, 2}, {3}), Error);
}

TEST_CASE("sumset") {
    const std::vector<int> X = {10, 20, 30, 40, 50};
    CHECK(sumset({}, X) == 0);
    CHECK(sumset({20, 40}, X) == 6);
    CHECK(sumset(X, X) == 15);
    CHECK_THROWS_AS(sumset({7}, X), Error);
}

TEST_CASE("random matrix generation is deterministic") {
    Rng a(5), b(5);
    CHECK(random_int_matrix(a, 3, 3, -9, 9) == random_int_matrix(b, 3, 3, -9, 9));
}
