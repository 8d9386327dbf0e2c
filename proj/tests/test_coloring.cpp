#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "abcolor/coloring.hpp"
#include "abcolor/graph.hpp"
#include "abcolor/solver.hpp"
#include "oracles.hpp"

using namespace abcolor;
namespace to = test_oracles;

TEST_CASE("verify accepts the contract examples") {
    Graph k4 = to::complete_graph(4);
    MixedColoring c(4);
    c.set_d1(0, 0);
    c.set_d1(1, 1);
    c.set_d1(2, 2);
    c.set_d2(3, 0);
    CHECK(verify(k4, {3, 1}, c).empty());

    // a star is (1,1)-colorable: center d2, leaves d1
    Graph star = to::star_graph(5);
    MixedColoring sc(6);
    sc.set_d2(0, 0);
    for (int v = 1; v <= 5; ++v) sc.set_d1(v, 0);
    CHECK(verify(star, {1, 1}, sc).empty());
}

TEST_CASE("verify reports violations with witnesses") {
    Graph p3 = to::path_graph(3);
    MixedColoring c(3);
    c.set_d2(0, 0);
    c.set_d1(1, 0);
    c.set_d2(2, 0);
    auto bad = verify(p3, {1, 1}, c);
    REQUIRE(bad.size() == 1);
    CHECK(bad[0].kind == ViolationKind::d2_dist2);
    CHECK(bad[0].u == 0);
    CHECK(bad[0].v == 2);

    // adjacent same d2 class
    Graph k2 = to::complete_graph(2);
    MixedColoring cc(2);
    cc.set_d2(0, 0);
    cc.set_d2(1, 0);
    auto bad2 = verify(k2, {0, 1}, cc);
    REQUIRE(bad2.size() == 1);
    CHECK(bad2[0].kind == ViolationKind::d2_dist1);

    // monochromatic d1 edge
    MixedColoring ce(2);
    ce.set_d1(0, 0);
    ce.set_d1(1, 0);
    auto bad3 = verify(k2, {1, 0}, ce);
    REQUIRE(bad3.size() == 1);
    CHECK(bad3[0].kind == ViolationKind::d1_edge);

    // partial colorings are refused by default and name the vertex
    MixedColoring partial(2);
    partial.set_d1(0, 0);
    auto bad4 = verify(k2, {1, 0}, partial);
    REQUIRE(bad4.size() == 1);
    CHECK(bad4[0].kind == ViolationKind::uncolored);
    CHECK(bad4[0].u == 1);
    CHECK(verify(k2, {1, 0}, partial, true).empty());

    // out-of-range index
    MixedColoring oor(2);
    oor.set_d1(0, 5);
    oor.set_d1(1, 0);
    CHECK(verify(k2, {1, 0}, oor)[0].kind == ViolationKind::out_of_range);
}

namespace {
MixedColoring random_assignment(int n, Params p, std::mt19937_64& rng) {
    MixedColoring c(n);
    std::uniform_int_distribution<int> pick(0, p.d1 + p.d2 - 1);
    for (int v = 0; v < n; ++v) {
        int x = pick(rng);
        if (x < p.d1)
            c.set_d1(v, x);
        else
            c.set_d2(v, x - p.d1);
    }
    return c;
}
}  // namespace

TEST_CASE("verify agrees with the square-graph encoding") {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 300; ++t) {
        Graph g = to::random_graph(1 + t % 8, 0.4, rng);
        Params p{1 + static_cast<int>(t % 3), 1 + static_cast<int>(t % 2)};
        MixedColoring c = random_assignment(g.n(), p, rng);

        bool redundant_ok = true;
        for (auto [u, v] : g.edges())
            if (c.at(u).kind == ColorKind::d1 && c.at(u) == c.at(v)) redundant_ok = false;
        Graph sq = square(g);
        for (auto [u, v] : sq.edges())
            if (c.at(u).kind == ColorKind::d2 && c.at(u) == c.at(v)) redundant_ok = false;

        CHECK(verify(g, p, c).empty() == redundant_ok);
    }
}

TEST_CASE("monotone reinterpretation stays valid") {
    std::mt19937_64 rng(43);
    int found = 0;
    for (int t = 0; t < 200 && found < 40; ++t) {
        Graph g = to::random_graph(1 + t % 7, 0.35, rng);
        Params p{static_cast<int>(t % 3), 1 + static_cast<int>(t % 2)};
        auto res = decide(g, p);
        if (res.status != SolveStatus::colorable) continue;
        ++found;
        CHECK(verify(g, {p.d1 + 1, p.d2}, *res.witness).empty());
        CHECK(verify(g, {p.d1, p.d2 + 1}, *res.witness).empty());
    }
    CHECK(found > 0);
}

TEST_CASE("count_classes") {
    MixedColoring ind(3);
    for (int v = 0; v < 3; ++v) ind.set_d1(v, 0);
    CHECK(count_classes(ind) == std::pair<int, int>{1, 0});

    MixedColoring rainbow(5);
    for (int v = 0; v < 5; ++v) rainbow.set_d2(v, v);
    CHECK(count_classes(rainbow) == std::pair<int, int>{0, 5});
}

TEST_CASE("canonicalization is a class-permutation invariant") {
    std::mt19937_64 rng(47);
    std::uniform_int_distribution<int> idx(0, 2);
    for (int t = 0; t < 50; ++t) {
        MixedColoring c = random_assignment(6, {3, 3}, rng);
        // permute classes
        int perm1[3] = {2, 0, 1}, perm2[3] = {1, 2, 0};
        MixedColoring pc(6);
        for (int v = 0; v < 6; ++v) {
            if (c.at(v).kind == ColorKind::d1)
                pc.set_d1(v, perm1[c.at(v).index]);
            else
                pc.set_d2(v, perm2[c.at(v).index]);
        }
        CHECK(canonicalized(c) == canonicalized(pc));
    }
}

TEST_CASE("certificate round-trip") {
    Graph star = to::star_graph(3);
    MixedColoring c(4);
    c.set_d2(0, 0);
    for (int v = 1; v < 4; ++v) c.set_d1(v, 0);
    std::string text = certificate_to_string({1, 1}, c);
    auto cert = parse_certificate(text, 4);
    CHECK(cert.params.d1 == 1);
    CHECK(cert.params.d2 == 1);
    CHECK(cert.coloring == c);
    CHECK(certificate_to_string(cert.params, cert.coloring) == text);

    CHECK_THROWS_WITH(parse_certificate("v 1 d1 0\n", 3),
                      Catch::Matchers::ContainsSubstring("COLORING"));
    CHECK_THROWS_WITH(parse_certificate("s COLORING a=1 b=1\nv 9 d1 0\n", 3),
                      Catch::Matchers::ContainsSubstring("out of range"));
}
