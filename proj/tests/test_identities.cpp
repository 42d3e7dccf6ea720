#include <catch2/catch_amalgamated.hpp>

#include "lgv/identities.hpp"
#include "lgv/jsonio.hpp"

#include "helpers.hpp"

using namespace lgv;

TEST_CASE("dodgson: generic symbolic") {
    // m = 2 is the two-by-two determinant formula itself
    CHECK(check_dodgson(generic_matrix(2, 2)).pass);
    CHECK(check_dodgson(generic_matrix(3, 3)).pass);
    CHECK_THROWS_AS(check_dodgson(generic_matrix(1, 1)), Error);
}

TEST_CASE("dodgson: integer fuzz") {
    IdentityParams p;
    p.m = 4;
    const Verdict v = fuzz("dodgson", p, 300, 7);
    CHECK(v.pass);
    CHECK(v.trials == 300);
}

TEST_CASE("dodgson schur route") {
    CHECK(check_dodgson_schur(partition({1, 1}), 2).pass);
    CHECK(check_dodgson_schur(partition({2, 1}), 2).pass);
    CHECK(check_dodgson_schur(partition({3, 2, 1}), 3).pass);
}

TEST_CASE("schur route matches the generic route through the h-matrix") {
    // Specialize the generic condensation at the h-matrix of lambda+1^m / 1^m;
    // the identity must hold exactly over the polynomial ring.
    const Partition lambda = partition({2, 2, 1});
    const int m = lambda.length(), n = 2;
    const Shape padded(add_const(lambda, 1, m), Semipartition(std::vector<int>(static_cast<std::size_t>(m), 1)));
    const Verdict generic = check_dodgson(jt_matrix(padded, n));
    const Verdict schur = check_dodgson_schur(lambda, n);
    CHECK(generic.pass == schur.pass);
    CHECK(generic.pass);
}

TEST_CASE("cauchy-binet cases") {
    Rng rng(31);
    // m > n: both sides vanish
    const auto wide = random_int_matrix(rng, 3, 2, -9, 9);
    const auto tall = random_int_matrix(rng, 2, 3, -9, 9);
    CHECK(check_cauchy_binet(wide, tall).pass);
    // m = n: multiplicativity
    IdentityParams sq;
    sq.m = 3;
    sq.n = 3;
    CHECK(fuzz("cauchy-binet", sq, 200, 5).pass);
    IdentityParams p;
    p.m = 2;
    p.n = 4;
    CHECK(fuzz("cauchy-binet", p, 300, 5).pass);
    // small symbolic instance
    CHECK(check_cauchy_binet(generic_matrix(2, 3), generic_matrix(3, 2, 0, 3)).pass);
}

TEST_CASE("pluecker: symbolic three-term relation") {
    CHECK(check_pluecker(generic_matrix(2, 4), {1}).pass);
    CHECK(check_pluecker(generic_matrix(2, 4), {1, 2}).pass);
    CHECK_THROWS_AS(check_pluecker(generic_matrix(2, 4), {}), Error);
}

TEST_CASE("pluecker: full exchange has a single term") {
    // R = [m]: the only S is the whole right block
    Rng rng(43);
    for (int trial = 0; trial < 50; ++trial) {
        const auto a = random_int_matrix(rng, 3, 6, -9, 9);
        CHECK(!eq_pluecker(a, {1, 2, 3}).has_value());
    }
}

TEST_CASE("pluecker: integer fuzz at m=3") {
    for (int r = 1; r <= 3; ++r) {
        IdentityParams p;
        p.m = 3;
        p.size_r = r;
        CHECK(fuzz("pluecker", p, 300, 11).pass);
    }
}

TEST_CASE("pluecker general") {
    // one-column exchange, symbolically
    IdentityParams sym;
    sym.m = 2;
    sym.k = 1;
    sym.size_r = 1;
    CHECK(run_symbolic("pluecker-general", sym).pass);
    // k=2, m=1 on random integer matrices
    IdentityParams p;
    p.m = 1;
    p.k = 2;
    p.size_r = 1;
    CHECK(fuzz("pluecker-general", p, 300, 13).pass);
    // explicit column choice
    Rng rng(14);
    const auto a = random_int_matrix(rng, 3, 5, -9, 9);
    CHECK(check_pluecker_general(a, {1, 3, 4, 5}, {1}).pass);
    CHECK(check_pluecker_general(a, {1, 3, 4, 5}, {1, 3}).pass);
}

TEST_CASE("laplace column expansion") {
    CHECK(check_laplace_column(generic_matrix(2, 2), 1).pass);
    for (int j = 1; j <= 4; ++j) CHECK(check_laplace_column(generic_matrix(4, 4), j).pass);
    IdentityParams p;
    p.m = 5;
    CHECK(fuzz("laplace", p, 200, 17).pass);  // every column each trial
}

TEST_CASE("laplace general") {
    // |I| = 1 reduces to a single-row expansion
    CHECK(check_laplace_general(generic_matrix(3, 3), {2}).pass);
    // I = [m]: the single term J = [m]
    Rng rng(18);
    const auto a = random_int_matrix(rng, 4, 4, -9, 9);
    CHECK(check_laplace_general(a, {1, 2, 3, 4}).pass);
    CHECK(check_laplace_general(a, {}).pass);
    IdentityParams p;
    p.m = 5;
    p.size_i = 2;
    CHECK(fuzz("laplace-general", p, 200, 19).pass);
}

TEST_CASE("muir148 oracle gate fixes the reading") {
    const Muir148Gate& gate = muir148_gate();
    CHECK(gate.reading == Muir148Reading::DeletionForm);
    REQUIRE(!gate.notes.empty());
    // the literal reading is refuted on a concrete instance
    RingMatrix<BigInt> a(3, 3);
    int vals[3][3] = {{1, 2, 3}, {4, 5, 6}, {7, 8, 10}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) a.at(i + 1, j + 1) = vals[i][j];
    CHECK(eq_muir148(a, {1, 2}, {1, 2}, {1}, Muir148Reading::PaperLiteral).has_value());
    CHECK(!eq_muir148(a, {1, 2}, {1, 2}, {1}, Muir148Reading::DeletionForm).has_value());
}

TEST_CASE("muir148 checker") {
    Rng rng(23);
    const auto a = random_int_matrix(rng, 5, 5, -9, 9);
    CHECK(check_muir148(a, {1, 3, 4}, {2, 3, 5}, {3}).pass);
    // R = C = everything reduces to the general Laplace expansion
    const auto b = random_int_matrix(rng, 4, 4, -9, 9);
    CHECK(check_muir148(b, {1, 2, 3, 4}, {1, 2, 3, 4}, {1, 3}).pass);
    CHECK(check_laplace_general(b, {1, 3}).pass);
    // empty I: single term, det(a)*det(del R,C) = det(del I..)*det(del R,C)
    CHECK(check_muir148(b, {2, 3}, {1, 4}, {}).pass);
    IdentityParams p;
    p.m = 2;
    p.k = 3;
    p.size_i = 1;
    CHECK(fuzz("muir148", p, 200, 29).pass);
}

TEST_CASE("generalized condensation") {
    const MaybenewGate& gate = maybenew_gate();
    CHECK(gate.ok);
    // k = 2 with R = C = {1, m} is condensation itself
    Rng rng(37);
    for (int trial = 0; trial < 50; ++trial) {
        const auto a = random_int_matrix(rng, 4, 4, -9, 9);
        CHECK(!eq_maybenew(a, {1, 4}, {1, 4}).has_value());
        CHECK(!eq_maybenew_k4_display(a).has_value());
    }
    for (auto [m, k] : std::vector<std::pair<int, int>>{{0, 2}, {1, 2}, {0, 3}, {1, 3}, {0, 4}}) {
        IdentityParams p;
        p.m = m;
        p.k = k;
        CHECK(fuzz("maybenew", p, 100, 41).pass);
    }
}

TEST_CASE("fuzz harness") {
    IdentityParams p;
    p.m = 3;
    const Verdict vac = fuzz("dodgson", p, 0, 1);
    CHECK(vac.pass);
    REQUIRE(!vac.notes.empty());
    CHECK(vac.notes.front().find("vacuous") != std::string::npos);

    CHECK_THROWS_AS(fuzz("no-such-identity", p, 10, 1), Error);
}

TEST_CASE("mutants are detected within ten trials") {
    IdentityParams lap;
    lap.m = 4;
    const Verdict vl = fuzz("laplace-mutant", lap, 10, 51);
    CHECK(!vl.pass);
    REQUIRE(vl.counterexample.has_value());

    IdentityParams dod;
    dod.m = 3;
    const Verdict vd = fuzz("dodgson-mutant", dod, 10, 51);
    CHECK(!vd.pass);
}

TEST_CASE("verdicts replay byte for byte") {
    IdentityParams p;
    p.m = 4;
    const Verdict a = fuzz("dodgson", p, 50, 99);
    const Verdict b = fuzz("dodgson", p, 50, 99);
    CHECK(verdict_to_json(a).dump(2) == verdict_to_json(b).dump(2));

    IdentityParams q = p;
    const Verdict c = fuzz("dodgson-mutant", q, 10, 99);
    const Verdict d = fuzz("dodgson-mutant", q, 10, 99);
    CHECK(!c.pass);
    CHECK(verdict_to_json(c).dump(2) == verdict_to_json(d).dump(2));
}

TEST_CASE("symbolic pass extends to fuzz one size up") {
    CHECK(check_dodgson(generic_matrix(3, 3)).pass);
    IdentityParams p;
    p.m = 4;
    CHECK(fuzz("dodgson", p, 100, 61).pass);

    CHECK(check_laplace_column(generic_matrix(3, 3), 1).pass);
    IdentityParams l;
    l.m = 4;
    CHECK(fuzz("laplace", l, 100, 61).pass);
}

TEST_CASE("counterexamples carry the failing matrix") {
    IdentityParams p;
    p.m = 3;
    const Verdict v = fuzz("laplace-mutant", p, 10, 3);
    REQUIRE(v.counterexample.has_value());
    CHECK(v.counterexample->find("matrix=[[") != std::string::npos);
    CHECK(v.counterexample->find("trial ") != std::string::npos);
}
