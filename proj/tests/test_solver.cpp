#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "abcolor/generators.hpp"
#include "abcolor/solver.hpp"
#include "oracles.hpp"

using namespace abcolor;
namespace to = test_oracles;

TEST_CASE("decide on the anchor instances") {
    Graph k4 = to::complete_graph(4);
    CHECK(decide(k4, {3, 0}).status == SolveStatus::not_colorable);
    CHECK(decide(k4, {3, 1}).status == SolveStatus::colorable);

    CHECK(decide(to::cycle_graph(6), {0, 3}).status == SolveStatus::colorable);
    CHECK(decide(to::cycle_graph(7), {0, 3}).status == SolveStatus::not_colorable);
    CHECK(to::naive_colorable(to::cycle_graph(6), 0, 3));
    CHECK_FALSE(to::naive_colorable(to::cycle_graph(7), 0, 3));

    CHECK(decide(gen_apex_triangles(2), {2, 2}).status == SolveStatus::not_colorable);
    CHECK(decide(Graph::build(0, {}), {1, 0}).status == SolveStatus::colorable);
}

TEST_CASE("oracle equivalence on random small graphs") {
    std::mt19937_64 rng(101);
    for (int t = 0; t < 150; ++t) {
        Graph g = to::random_graph(1 + t % 6, 0.45, rng);
        for (int a = 0; a <= 2; ++a)
            for (int b = 0; b <= 2; ++b) {
                bool expect = to::naive_colorable(g, a, b);
                auto res = decide(g, {a, b});
                REQUIRE(res.status != SolveStatus::unknown);
                CHECK((res.status == SolveStatus::colorable) == expect);
            }
    }
}

TEST_CASE("witnesses always verify") {
    std::mt19937_64 rng(103);
    for (int t = 0; t < 100; ++t) {
        Graph g = to::random_graph(2 + t % 7, 0.4, rng);
        auto res = decide(g, {1 + t % 2, 1 + t % 3});
        if (res.status == SolveStatus::colorable) {
            REQUIRE(res.witness.has_value());
            CHECK(res.witness->is_total());
            CHECK(verify(g, {1 + t % 2, 1 + t % 3}, *res.witness).empty());
        }
    }
}

TEST_CASE("monotonicity in the class counts") {
    std::mt19937_64 rng(107);
    for (int t = 0; t < 120; ++t) {
        Graph g = to::random_graph(1 + t % 6, 0.5, rng);
        int a = t % 3, b = t % 2;
        if (a + b == 0) a = 1;
        if (decide(g, {a, b}).status == SolveStatus::colorable) {
            CHECK(decide(g, {a + 1, b}).status == SolveStatus::colorable);
            CHECK(decide(g, {a, b + 1}).status == SolveStatus::colorable);
        }
    }
}

TEST_CASE("enumeration counts") {
    auto two = enumerate_colorings(to::complete_graph(2), {1, 1}, 100);
    CHECK(two.colorings.size() == 2);
    CHECK(two.complete);
    CHECK_FALSE(two.overflow);

    auto one = enumerate_colorings(Graph::build(1, {}), {1, 0}, 100);
    CHECK(one.colorings.size() == 1);

    auto none = enumerate_colorings(to::complete_graph(3), {1, 1}, 100);
    CHECK(none.colorings.empty());
    CHECK(none.complete);

    auto capped = enumerate_colorings(to::complete_graph(2), {1, 1}, 1);
    CHECK(capped.overflow);
    CHECK(capped.colorings.size() == 1);

    CHECK_THROWS(enumerate_colorings(to::complete_graph(2), {1, 1}, 0));
}

TEST_CASE("budget exhaustion reports unknown") {
    auto res = decide(to::complete_graph(4), {3, 1}, {1, {}});
    CHECK(res.status == SolveStatus::unknown);
    CHECK(res.nodes_explored >= 1);
}

TEST_CASE("pre-colored searches") {
    // a length-9 path with equal d2 endpoints and d1 endpoint-neighbors
    // admits no (1,2) extension; dropping the d1 pins restores one
    Graph p10 = to::path_graph(10);
    SearchConstraints cons = SearchConstraints::free_for(10);
    cons.fixed[0] = d2_color(0);
    cons.fixed[9] = d2_color(0);
    cons.fixed[1] = d1_color(0);
    cons.fixed[8] = d1_color(0);
    CHECK(decide(p10, {1, 2}, {}, &cons).status == SolveStatus::not_colorable);

    SearchConstraints relaxed = SearchConstraints::free_for(10);
    relaxed.fixed[0] = d2_color(0);
    relaxed.fixed[9] = d2_color(0);
    CHECK(decide(p10, {1, 2}, {}, &relaxed).status == SolveStatus::colorable);

    CHECK_THROWS(([&] {
        SearchConstraints bad = SearchConstraints::free_for(10);
        bad.fixed[0] = d2_color(9);
        decide(p10, {1, 2}, {}, &bad);
    })());
}

TEST_CASE("gadget checker") {
    auto fr = gen_friendship(1);
    CHECK(check_gadget(fr, {2, 1}).status == GadgetCheckStatus::holds);

    // an outer triangle vertex may take a d1 color
    GadgetSpec outer = fr;
    outer.ports = {{"s", 0}, {"t", 1}};
    outer.property = {GadgetPropertyKind::forced_d2, {"t"}};
    auto res = check_gadget(outer, {2, 1});
    REQUIRE(res.status == GadgetCheckStatus::fails_with_witness);
    CHECK(res.witness->at(1).kind == ColorKind::d1);
    CHECK(verify(fr.gadget, {2, 1}, *res.witness).empty());

    // single edge: u may take the d1 color at (1,1)
    GadgetSpec edge;
    edge.gadget = to::complete_graph(2);
    edge.ports = {{"u", 0}, {"v", 1}};
    edge.property = {GadgetPropertyKind::forced_d2, {"u"}};
    CHECK(check_gadget(edge, {1, 1}).status == GadgetCheckStatus::fails_with_witness);

    CHECK_THROWS(([&] {
        GadgetSpec broken = fr;
        broken.ports = {{"s", 0}, {"s2", 0}};
        check_gadget(broken, {2, 1});
    })());
}

TEST_CASE("corner pattern property") {
    // K4 corners take three distinct d1 colors plus one d2: pattern violated
    GadgetSpec k4;
    k4.gadget = to::complete_graph(4);
    k4.ports = {{"v1", 0}, {"v2", 1}, {"v3", 2}, {"v4", 3}};
    k4.property = {GadgetPropertyKind::corner_pattern, {"v1", "v2", "v3", "v4"}};
    CHECK(check_gadget(k4, {3, 1}).status == GadgetCheckStatus::fails_with_witness);

    // K5 is not (3,1)-colorable at all, so the pattern holds vacuously
    GadgetSpec k5;
    k5.gadget = to::complete_graph(5);
    k5.ports = {{"v1", 0}, {"v2", 1}, {"v3", 2}, {"v4", 3}};
    k5.property = {GadgetPropertyKind::corner_pattern, {"v1", "v2", "v3", "v4"}};
    CHECK(check_gadget(k5, {3, 1}).status == GadgetCheckStatus::holds);

    // corners joined to two pinned adjacent hubs can only share the third
    // d1 class or spend the d2 color once
    std::vector<std::pair<int, int>> e;
    int next = 0;
    int s = next++;  // forced-d2 center of two K4 blades
    for (int t = 0; t < 2; ++t) {
        int a = next++, b = next++, c = next++;
        e.insert(e.end(), {{s, a}, {s, b}, {s, c}, {a, b}, {a, c}, {b, c}});
    }
    int x1 = next++, x2 = next++, h1 = next++, h2 = next++;
    e.insert(e.end(), {{x1, s}, {x2, s}, {h1, x1}, {h2, x2}, {h1, h2}});
    std::vector<int> corners;
    for (int i = 0; i < 4; ++i) {
        int v = next++;
        corners.push_back(v);
        e.insert(e.end(), {{v, h1}, {v, h2}});
    }
    GadgetSpec pinned;
    pinned.gadget = Graph::build(next, e);
    pinned.ports = {{"v1", corners[0]}, {"v2", corners[1]}, {"v3", corners[2]},
                    {"v4", corners[3]}};
    pinned.property = {GadgetPropertyKind::corner_pattern, {"v1", "v2", "v3", "v4"}};
    CHECK(decide(pinned.gadget, {3, 1}).status == SolveStatus::colorable);
    CHECK(check_gadget(pinned, {3, 1}).status == GadgetCheckStatus::holds);
}

TEST_CASE("obstruction profiles on the contract examples") {
    auto two = obstruction_profile(Graph::build(2, {}), 0, 1, 1);
    CHECK(two.has_bc);
    CHECK(two.pairs.empty());
    CHECK(two.complete);

    auto edge = obstruction_profile(to::complete_graph(2), 0, 1, 1);
    CHECK_FALSE(edge.has_bc);
}

TEST_CASE("profiles block exactly when the restored vertex is stuck") {
    std::mt19937_64 rng(113);
    int tested = 0;
    for (int t = 0; t < 400 && tested < 60; ++t) {
        Graph g = to::random_graph(6, 0.35, rng);
        int v = -1;
        for (int u = 0; u < g.n(); ++u)
            if (g.degree(u) == 2) v = u;
        if (v == -1) continue;
        int v1 = g.neighbors(v)[0], v2 = g.neighbors(v)[1];
        int k = 1 + t % 2;

        std::vector<std::pair<int, int>> rest;
        auto shift = [&](int x) { return x > v ? x - 1 : x; };
        for (auto [a, b] : g.edges())
            if (a != v && b != v) rest.emplace_back(shift(a), shift(b));
        Graph gm = Graph::build(g.n() - 1, rest);

        auto prof = obstruction_profile(gm, shift(v1), shift(v2), k);
        REQUIRE(prof.complete);
        if (prof.colorings_seen == 0) continue;  // g - v itself uncolorable
        ++tested;
        bool g_colorable = decide(g, {2, k}).status == SolveStatus::colorable;
        CHECK(g_colorable == (prof.unblocked > 0));
    }
    CHECK(tested >= 30);
}
