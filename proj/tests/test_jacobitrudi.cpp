#include <catch2/catch_amalgamated.hpp>

#include "lgv/jacobitrudi.hpp"
#include "lgv/tableaux.hpp"

#include "helpers.hpp"

#include <set>

using namespace lgv;

namespace {

Shape straight(std::vector<int> parts) { return Shape::straight(partition(std::move(parts))); }

}  // namespace

TEST_CASE("jt matrix entries") {
    const auto a = jt_matrix(straight({2, 1}), 2);
    CHECK(a.rows() == 2);
    CHECK(a.at(1, 1) == complete_homogeneous(2, 1, 2));
    CHECK(a.at(1, 2) == MultiPoly(1));  // h_0
    CHECK(a.at(2, 1) == complete_homogeneous(3, 1, 2));
    CHECK(a.at(2, 2) == complete_homogeneous(1, 1, 2));
    CHECK(det(a) == skew_schur(straight({2, 1}), 2));
}

TEST_CASE("jt determinant equals the tableau route") {
    CHECK(det(jt_matrix(straight({3, 1}), 3)) == skew_schur(straight({3, 1}), 3));
    const Shape skew(Semipartition({4, 2, 1}), Semipartition({2, 1}));
    CHECK(det(jt_matrix(skew, 3)) == skew_schur(skew, 3));
}

TEST_CASE("empty shape gives the empty matrix with determinant one") {
    const auto a = jt_matrix(Shape(), 3);
    CHECK(a.rows() == 0);
    CHECK(det(a) == MultiPoly(1));
}

TEST_CASE("zero-width rows give unitriangular padding") {
    // lambda = mu on every row: the matrix is unitriangular, determinant 1
    const Shape sh(Semipartition({2, 2}), Semipartition({2, 2}));
    CHECK(det(jt_matrix(sh, 2)) == MultiPoly(1));
    CHECK(skew_schur(sh, 2) == MultiPoly(1));
    const Shape half(Semipartition({3, 2}), Semipartition({3}));
    CHECK(det(jt_matrix(half, 2)) == skew_schur(half, 2));
}

TEST_CASE("minor deletion dictionary") {
    const Shape sh(Semipartition({5, 4, 2, 1}), Semipartition({2, 1}));
    CHECK(check_minor_deletion(sh, 3, {}, {}).pass);
    for (int r = 1; r <= 4; ++r)
        for (int c = 1; c <= 4; ++c)
            CHECK(check_minor_deletion(sh, 3, {r}, {c}).pass);
    CHECK(check_minor_deletion(sh, 3, {1, 3}, {2, 4}).pass);
    CHECK(check_minor_deletion(sh, 3, {2}, {}).pass);
    CHECK(check_minor_deletion(sh, 3, {}, {1, 2}).pass);
}

TEST_CASE("minor deletion, condensation instance") {
    // lambda + 1^6 over 1^6 with rows/cols {1,6} deleted
    const Partition lam = partition({9, 7, 5, 3, 3, 1});
    const Shape sh(add_const(lam, 1, 6), Semipartition({1, 1, 1, 1, 1, 1}));
    CHECK(check_minor_deletion(sh, 2, {1, 6}, {1, 6}).pass);
    // and the deleted pair is the middle slice, shifted
    const Semipartition expect_lambda = delete_parts(sh.lambda(), {1, 6});
    CHECK(shift_normalize(Shape(expect_lambda, Semipartition({}, expect_lambda.tail()))).lambda() ==
          Semipartition({9, 7, 5, 5}));
}

TEST_CASE("distinct entry partitions") {
    CHECK(distinct_entry_partition(1) == partition({1}));
    CHECK(distinct_entry_partition(2) == partition({4, 2}));
    CHECK(distinct_entry_partition(4) == partition({16, 12, 8, 4}));
    for (int m = 1; m <= 4; ++m) {
        const Shape sh = Shape::straight(distinct_entry_partition(m));
        std::set<int> indices;
        for (int i = 1; i <= m; ++i)
            for (int j = 1; j <= m; ++j) CHECK(indices.insert(jt_entry_index(sh, i, j)).second);
    }
}

TEST_CASE("genericize") {
    const auto g = genericize(Shape::straight(distinct_entry_partition(2)));
    CHECK(g.at(1, 1) == MultiPoly::variable(VarId::y(4)));
    CHECK(g.at(1, 2) == MultiPoly::variable(VarId::y(1)));
    CHECK(g.at(2, 1) == MultiPoly::variable(VarId::y(5)));
    CHECK(g.at(2, 2) == MultiPoly::variable(VarId::y(2)));

    // m^2 independent variables for the distinct-entry shapes
    for (int m = 1; m <= 4; ++m) {
        const auto a = genericize(Shape::straight(distinct_entry_partition(m)));
        std::set<VarId> vars;
        for (int i = 1; i <= m; ++i)
            for (int j = 1; j <= m; ++j)
                for (const VarId& v : a.at(i, j).variables()) vars.insert(v);
        CHECK(vars.size() == static_cast<std::size_t>(m) * m);
    }

    // h_0 entries stay literal 1, negative indices stay 0
    const auto b = genericize(straight({2, 1}));
    CHECK(b.at(1, 2) == MultiPoly(1));
    const auto c = genericize(Shape(Semipartition({6, 1}), Semipartition({3})));
    CHECK(c.at(1, 2).is_zero());

    // duplicate positive indices are rejected
    CHECK_THROWS_AS(genericize(straight({2, 2})), Error);
}

TEST_CASE("jt identity across a small lattice of shapes") {
    for (const auto& lam : testutil::partitions_in_box(3, 4)) {
        if (lam.empty()) continue;
        for (const auto& mu : testutil::subpartitions(lam, 5)) {
            const Shape sh(partition(lam), partition(mu));
            CHECK(det(jt_matrix(sh, 2)) == skew_schur(sh, 2));
        }
    }
}
