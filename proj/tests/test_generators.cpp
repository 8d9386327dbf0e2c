#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "abcolor/colorers.hpp"
#include "abcolor/generators.hpp"
#include "oracles.hpp"

using namespace abcolor;
namespace to = test_oracles;

TEST_CASE("clique star family") {
    for (int k = 1; k <= 3; ++k)
        for (int l = 1; l <= 3; ++l) {
            Graph g = gen_clique_star(k, l);
            CHECK(g.n() == k * l * l + (2 * k + 1) * l + k + 2);
            CHECK(degeneracy_ordering(g).degeneracy == k);
            // hub degree l+1, middles carry l+1 cliques of k vertices each
            CHECK(g.degree(0) == l + 1);
        }
    CHECK(gen_clique_star(1, 1).n() == 7);
    CHECK_THROWS(gen_clique_star(0, 1));
}

TEST_CASE("theta family") {
    for (int k = 2; k <= 4; ++k) {
        Graph g = gen_theta(k);
        CHECK(g.n() == 4 * k);
        CHECK(girth(g) == 6);
        CHECK(is_bipartite(g).bipartite);
        CHECK(g.degree(0) == 2 * k - 1);
    }
    CHECK_THROWS(gen_theta(1));
}

TEST_CASE("apex triangles family") {
    Graph k1 = gen_apex_triangles(1);
    CHECK(k1.n() == 4);
    CHECK(k1.m() == 6);  // the apex over one triangle is complete
    for (int k = 1; k <= 3; ++k) {
        Graph g = gen_apex_triangles(k);
        CHECK(g.n() == 3 * k + 1);
        CHECK(diameter(g) == (k == 1 ? 1 : 2));  // one triangle plus apex is complete
    }
}

TEST_CASE("friendship gadget") {
    for (int k = 1; k <= 2; ++k) {
        auto spec = gen_friendship(k);
        CHECK(spec.gadget.n() == 2 * (k + 1) + 1);
        CHECK(decide(spec.gadget, {2, k}).status == SolveStatus::colorable);
        CHECK(check_gadget(spec, {2, k}).status == GadgetCheckStatus::holds);
    }
    // reverse direction: k+1 copies under an apex are not (2,k)-colorable
    auto fr = gen_friendship(1);
    Graph apex = apex_over_copies(fr.gadget, fr.port("s"), 2);
    CHECK(decide(apex, {2, 1}).status == SolveStatus::not_colorable);
}

TEST_CASE("blowup") {
    Graph c4 = gen_blowup(to::complete_graph(2), 3, 1);
    CHECK(c4.n() == 4);
    CHECK(c4.m() == 4);
    CHECK(girth(c4) == 4);

    std::mt19937_64 rng(211);
    for (int t = 0; t < 8; ++t) {
        Graph g = to::random_graph(3 + t % 3, 0.5, rng);
        int k = 1 + t % 2;
        Graph bl = gen_blowup(g, 3, k);
        CHECK(bl.n() == g.n() * (k + 1));
        bool src3 = decide(g, {3, 0}).status == SolveStatus::colorable;
        bool tgt = decide(bl, {3, k}).status == SolveStatus::colorable;
        CHECK(src3 == tgt);
    }
}

TEST_CASE("grid") {
    Graph g = grid_graph(3, 3);
    CHECK(g.n() == 9);
    CHECK(girth(g) == 4);
    CHECK(is_bipartite(g).bipartite);
}

TEST_CASE("random class generators pass their validators") {
    Graph kd = random_kdegenerate(100, 2, 1);
    CHECK(kd.n() == 100);
    CHECK(degeneracy_ordering(kd).degeneracy <= 2);

    Graph ca = random_cactus(50, 4, 7);
    auto dec = blocks(ca);
    for (size_t b = 0; b < dec.block_edges.size(); ++b) {
        size_t ne = dec.block_edges[b].size(), nv = dec.block_vertices[b].size();
        bool edge_block = ne == 1;
        bool cycle_block = ne == nv && nv >= 4;
        CHECK((edge_block || cycle_block));
    }

    Graph tf = random_tf_outerplanar(120, 3);
    CHECK(girth(tf) >= 4);
    CHECK(tf.m() <= 2 * tf.n() - 3);

    Graph st = random_stacked_triangulation(60, 5);
    CHECK(st.m() == 3 * st.n() - 6);
    CHECK(degeneracy_ordering(st).degeneracy == 3);

    // deterministic per seed
    CHECK(random_kdegenerate(40, 2, 9) == random_kdegenerate(40, 2, 9));
    CHECK_FALSE(random_kdegenerate(40, 2, 9) == random_kdegenerate(40, 2, 10));
}

namespace {
// local builder for nonstandard obstruction sources
struct Builder {
    std::vector<std::pair<int, int>> e;
    int n = 0;
    int star = -1;
    int fresh() { return n++; }
    void edge(int a, int b) { e.push_back({a, b}); }
    void core() {
        star = fresh();
        for (int t = 0; t < 2; ++t) {
            int a = fresh(), b = fresh();
            edge(star, a);
            edge(star, b);
            edge(a, b);
        }
    }
    void pin(int u) {
        int x = fresh();
        edge(u, x);
        edge(x, star);
    }
    void excl(int p, int q) {
        int a = fresh(), b = fresh(), c = fresh();
        edge(p, a);
        edge(a, q);
        edge(q, b);
        edge(b, c);
        edge(c, p);
        pin(a);
        pin(b);
        pin(c);
    }
    Graph g() const { return Graph::build(n, e); }
};

ObstructionProfile profile_without(const Graph& gp, int v, int v1, int v2, int k) {
    std::vector<std::pair<int, int>> rest;
    auto shift = [&](int x) { return x > v ? x - 1 : x; };
    for (auto [a, b] : gp.edges())
        if (a != v && b != v) rest.emplace_back(shift(a), shift(b));
    return obstruction_profile(Graph::build(gp.n() - 1, rest), shift(v1), shift(v2), k);
}

void check_emitted(const Graph& gp, int v, int v1, int v2) {
    REQUIRE(decide(gp, {2, 1}).status == SolveStatus::not_colorable);
    auto prof = profile_without(gp, v, v1, v2, 1);
    auto spec = gen_forced_vertex(gp, v, v1, v2, 1, prof);
    CHECK(decide(spec.gadget, {2, 1}, {50'000'000, {}}).status == SolveStatus::colorable);
    CHECK(check_gadget(spec, {2, 1}, {50'000'000, {}}).status == GadgetCheckStatus::holds);
}
}  // namespace

TEST_CASE("forced vertex constructions across all obstruction shapes") {
    // both neighbors forced d2: apex over two friendship copies
    auto fr = gen_friendship(1);
    Graph apex = apex_over_copies(fr.gadget, fr.port("s"), 2);
    int v = apex.n() - 1;
    auto prof1 = profile_without(apex, v, 0, fr.gadget.n(), 1);
    CHECK(prof1.has_bc);
    CHECK(prof1.pairs.empty());
    check_emitted(apex, v, 0, fr.gadget.n());

    // saturated distinct-d1 pair: triangle with both corners next to cores
    {
        Builder b;
        int vv = b.fresh(), v1 = b.fresh(), v2 = b.fresh();
        b.edge(vv, v1);
        b.edge(vv, v2);
        b.edge(v1, v2);
        b.core();
        int s1 = b.star;
        b.edge(v1, s1);
        b.core();
        b.edge(v2, b.star);
        auto prof = profile_without(b.g(), vv, v1, v2, 1);
        CHECK_FALSE(prof.has_bc);
        REQUIRE(prof.pairs.size() == 1);
        CHECK(prof.pairs.begin()->s1 == std::vector<int>{0});
        CHECK(prof.pairs.begin()->s2 == std::vector<int>{0});
        check_emitted(b.g(), vv, v1, v2);
    }

    // distinct-d1 pair with one bare neighborhood
    {
        Builder b;
        int vv = b.fresh(), v1 = b.fresh(), v2 = b.fresh();
        b.edge(vv, v1);
        b.edge(vv, v2);
        b.edge(v1, v2);
        b.core();
        b.edge(v1, b.star);
        b.core();
        b.pin(v2);
        auto prof = profile_without(b.g(), vv, v1, v2, 1);
        CHECK_FALSE(prof.has_bc);
        REQUIRE(prof.pairs.size() == 1);
        CHECK(prof.pairs.begin()->s2.empty());
        check_emitted(b.g(), vv, v1, v2);
    }

    // both shapes mixed, via exclusive five-cycle couplers
    for (int with_second_triangle = 0; with_second_triangle <= 1; ++with_second_triangle) {
        Builder b;
        int vv = b.fresh(), v1 = b.fresh(), v2 = b.fresh(), mid = b.fresh();
        b.edge(vv, v1);
        b.edge(vv, v2);
        b.core();
        b.excl(v1, mid);
        b.excl(mid, v2);
        int w1 = b.fresh(), w2 = b.fresh();
        b.edge(v1, w1);
        b.edge(w1, w2);
        b.edge(w2, v2);
        b.pin(w1);
        b.pin(w2);
        int u1 = b.fresh(), p1 = b.fresh();
        b.edge(v1, u1);
        b.edge(u1, p1);
        b.edge(p1, v1);
        b.pin(p1);
        if (with_second_triangle) {
            int u2 = b.fresh(), p2 = b.fresh();
            b.edge(v2, u2);
            b.edge(u2, p2);
            b.edge(p2, v2);
            b.pin(p2);
        }
        auto prof = profile_without(b.g(), vv, v1, v2, 1);
        CHECK(prof.has_bc);
        REQUIRE(prof.pairs.size() == 1);
        CHECK(prof.pairs.begin()->s2.empty() == !with_second_triangle);
        check_emitted(b.g(), vv, v1, v2);
    }
}

TEST_CASE("forced vertex rejects profiles that do not block") {
    // P3's middle vertex has degree 2 but the graph is (2,1)-colorable
    Graph p3 = to::path_graph(3);
    Graph host = Graph::build(3, {{0, 1}, {1, 2}});
    auto prof = obstruction_profile(Graph::build(2, {}), 0, 1, 1);
    CHECK_THROWS_WITH(gen_forced_vertex(host, 1, 0, 2, 1, prof),
                      Catch::Matchers::ContainsSubstring("restorable"));
    (void)p3;

    // mismatched profile is rejected before use
    auto fr = gen_friendship(1);
    Graph apex = apex_over_copies(fr.gadget, fr.port("s"), 2);
    ObstructionProfile fake;
    fake.has_bc = false;
    CHECK_THROWS_WITH(gen_forced_vertex(apex, apex.n() - 1, 0, fr.gadget.n(), 1, fake),
                      Catch::Matchers::ContainsSubstring("does not match"));
}
