#include <catch2/catch_amalgamated.hpp>

#include "lgv/identities.hpp"
#include "lgv/jsonio.hpp"
#include "lgv/overlays.hpp"
#include "lgv/svg.hpp"

#include "helpers.hpp"

using namespace lgv;

TEST_CASE("matrix json round trip") {
    Rng rng(8);
    const auto a = random_int_matrix(rng, 3, 4, -99, 99);
    CHECK(matrix_from_json(matrix_to_json(a)) == a);

    RingMatrix<BigInt> big(1, 1);
    big.at(1, 1) = BigInt("123456789012345678901234567890");
    const Json j = matrix_to_json(big);
    CHECK(j["entries"][0][0].is_string());
    CHECK(matrix_from_json(j) == big);
}

TEST_CASE("verdict json shape") {
    IdentityParams p;
    p.m = 3;
    const Json j = verdict_to_json(fuzz("dodgson", p, 5, 4));
    CHECK(j["schema"] == "lgv-verdict/1");
    CHECK(j["identity"] == "dodgson");
    CHECK(j["route"] == "integer-fuzz");
    CHECK(j["status"] == "pass");
    CHECK(j["seed"] == 4);
    CHECK(j["trials"] == 5);
    CHECK(j["counterexample"].is_null());
    CHECK(j["notes"].is_array());
}

TEST_CASE("svg output is deterministic and well formed") {
    Tableau t;
    t.shape = Shape(Semipartition({2, 1}), Semipartition{});
    t.rows = {{1, 2}, {2}};
    t.n = 2;
    const PathTuple tuple = tableau_to_paths(t);
    const std::string a = svg_paths(tuple);
    const std::string b = svg_paths(tuple);
    CHECK(a == b);
    CHECK(a.starts_with("<?xml"));
    CHECK(a.find("<svg") != std::string::npos);
    CHECK(a.rfind("</svg>\n") == a.size() - 7);
    // one path element per lattice path
    std::size_t count = 0;
    for (std::size_t pos = a.find("<path"); pos != std::string::npos; pos = a.find("<path", pos + 1))
        ++count;
    CHECK(count == tuple.paths.size());
}

TEST_CASE("overlay svg shows both colour classes and the trail highlight") {
    const Partition lam = partition({3, 2, 1});
    const DodgsonInstance inst = dodgson_orientation(lam, 2);
    const auto overlays = enumerate_overlays(inst.green, inst.red, 2);
    REQUIRE(!overlays.empty());
    const Overlay& o = overlays.front();
    SvgOptions opt;
    const std::string plain = svg_overlay(o, opt);
    CHECK(plain.find(opt.green) != std::string::npos);
    CHECK(plain.find(opt.red) != std::string::npos);

    const BicolouredTrail t = trail_from(o, Point{lam.part(1) - 1, 2});
    const std::string marked = svg_overlay(o, opt, &t);
    CHECK(marked.find("#f1c40f") != std::string::npos);
    CHECK(svg_overlay(o, opt, &t) == marked);
}
