#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "abcolor/generators.hpp"
#include "abcolor/graph.hpp"
#include "abcolor/graph_io.hpp"
#include "oracles.hpp"

using namespace abcolor;
namespace to = test_oracles;

TEST_CASE("build validates and deduplicates") {
    Graph k3 = Graph::build(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(k3.m() == 3);

    Graph iso = Graph::build(2, {});
    CHECK(iso.n() == 2);
    CHECK(iso.m() == 0);

    Graph dup = Graph::build(4, {{0, 1}, {0, 1}});
    CHECK(dup.m() == 1);

    CHECK_THROWS_WITH(Graph::build(3, {{1, 1}}), Catch::Matchers::ContainsSubstring("self-loop"));
    CHECK_THROWS_WITH(Graph::build(3, {{0, 7}}), Catch::Matchers::ContainsSubstring("(0,7)"));
}

TEST_CASE("square graph") {
    CHECK(square(to::cycle_graph(5)) == to::complete_graph(5));

    Graph p4 = to::path_graph(4);
    Graph sq = square(p4);
    CHECK(sq.m() == 5);  // K4 minus the endpoint pair
    CHECK_FALSE(sq.has_edge(0, 3));

    CHECK(square(to::star_graph(3)) == to::complete_graph(4));

    std::mt19937_64 rng(11);
    for (int t = 0; t < 40; ++t) {
        Graph g = to::random_graph(1 + t % 8, 0.4, rng);
        auto dist = to::all_pairs_distances(g);
        Graph sq2 = square(g);
        for (int u = 0; u < g.n(); ++u)
            for (int v = u + 1; v < g.n(); ++v)
                CHECK(sq2.has_edge(u, v) == (dist[u][v] <= 2));
    }
}

TEST_CASE("girth") {
    CHECK(girth(to::complete_graph(3)) == 3);
    CHECK(girth(to::path_graph(6)) == kInfinity);
    CHECK(girth(Graph::build(7, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}})) == kInfinity);
    CHECK(girth(gen_theta(2)) == 6);
    CHECK(girth(to::cycle_graph(9)) == 9);
    CHECK(girth(grid_graph(4, 4)) == 4);
    // two cycles sharing a path
    CHECK(girth(Graph::build(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {1, 4}, {4, 3}})) == 4);
}

TEST_CASE("degeneracy ordering") {
    auto forest = degeneracy_ordering(to::path_graph(7));
    CHECK(forest.degeneracy == 1);
    CHECK(degeneracy_ordering(to::complete_graph(4)).degeneracy == 3);
    CHECK(degeneracy_ordering(gen_clique_star(2, 3)).degeneracy == 2);

    std::mt19937_64 rng(5);
    for (int t = 0; t < 60; ++t) {
        Graph g = to::random_graph(1 + t % 8, 0.5, rng);
        auto d = degeneracy_ordering(g);
        // soundness: no vertex has more than d earlier neighbors
        std::vector<int> pos(g.n());
        for (int i = 0; i < g.n(); ++i) pos[d.order[i]] = i;
        for (int v = 0; v < g.n(); ++v) {
            int back = 0;
            for (int w : g.neighbors(v))
                if (pos[w] < pos[v]) ++back;
            CHECK(back <= d.degeneracy);
        }
        // optimality against subset enumeration
        if (g.n() >= 1) CHECK(d.degeneracy == to::brute_degeneracy(g));
    }
}

namespace {
std::vector<int> brute_cut_vertices(const Graph& g) {
    std::vector<int> cuts;
    auto comp_count = [](const Graph& h, int skip) {
        std::vector<int> seen(h.n(), 0);
        if (skip >= 0) seen[skip] = 1;
        int c = 0;
        for (int r = 0; r < h.n(); ++r) {
            if (seen[r]) continue;
            ++c;
            std::vector<int> stack{r};
            seen[r] = 1;
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                for (int w : h.neighbors(u))
                    if (!seen[w]) {
                        seen[w] = 1;
                        stack.push_back(w);
                    }
            }
        }
        return c;
    };
    int base = comp_count(g, -1);
    for (int v = 0; v < g.n(); ++v) {
        // removing v loses one trivial component if v was isolated
        int without = comp_count(g, v);
        int isolated = g.degree(v) == 0 ? 1 : 0;
        if (without > base - isolated) cuts.push_back(v);
    }
    return cuts;
}
}  // namespace

TEST_CASE("block decomposition") {
    Graph bowtie = Graph::build(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}});
    auto dec = blocks(bowtie);
    CHECK(dec.block_edges.size() == 2);
    CHECK(dec.cut_vertices == std::vector<int>{2});

    auto ring = blocks(to::cycle_graph(6));
    CHECK(ring.block_edges.size() == 1);
    CHECK(ring.cut_vertices.empty());

    auto p5 = blocks(to::path_graph(5));
    CHECK(p5.block_edges.size() == 4);

    std::mt19937_64 rng(17);
    for (int t = 0; t < 60; ++t) {
        Graph g = to::random_graph(2 + t % 9, 0.3, rng);
        auto d = blocks(g);
        // blocks partition the edge set
        std::set<std::pair<int, int>> seen;
        size_t total = 0;
        for (const auto& blk : d.block_edges) {
            total += blk.size();
            for (auto e : blk) CHECK(seen.insert(e).second);
        }
        CHECK(total == static_cast<size_t>(g.m()));
        CHECK(d.cut_vertices == brute_cut_vertices(g));
    }
}

TEST_CASE("bfs, bipartiteness, diameter") {
    Graph c5 = to::cycle_graph(5);
    CHECK(bfs_distance(c5, 0, 2) == 2);
    CHECK(bfs_distance(Graph::build(3, {{0, 1}}), 0, 2) == kInfinity);

    auto odd = is_bipartite(c5);
    REQUIRE_FALSE(odd.bipartite);
    REQUIRE(odd.odd_cycle.size() % 2 == 1);
    for (size_t i = 0; i < odd.odd_cycle.size(); ++i)
        CHECK(c5.has_edge(odd.odd_cycle[i], odd.odd_cycle[(i + 1) % odd.odd_cycle.size()]));

    CHECK(is_bipartite(gen_theta(2)).bipartite);
    CHECK(diameter(gen_apex_triangles(2)) == 2);
    CHECK(diameter(gen_apex_triangles(3)) == 2);

    // square of a diameter-<=2 graph is complete
    std::mt19937_64 rng(23);
    int tested = 0;
    for (int t = 0; t < 200 && tested < 30; ++t) {
        Graph g = to::random_graph(2 + t % 6, 0.6, rng);
        if (diameter(g) > 2) continue;
        ++tested;
        CHECK(square(g).m() == g.n() * (g.n() - 1) / 2);
    }
    CHECK(tested > 0);
}

TEST_CASE("graph text format") {
    Graph th = gen_theta(2);
    std::string text = graph_to_string(th, {"family theta", "k 2"});
    Graph back = parse_graph(text);
    CHECK(back == th);
    // canonical writer is a fixed point
    CHECK(graph_to_string(parse_graph(graph_to_string(th))) == graph_to_string(th));

    CHECK_THROWS_WITH(parse_graph("e 1 2\n"), Catch::Matchers::ContainsSubstring("header"));
    CHECK_THROWS_WITH(parse_graph("p 3 2\ne 1 2\n"),
                      Catch::Matchers::ContainsSubstring("declares"));
    CHECK_THROWS_WITH(parse_graph("p 3 1\ne 1 9\n"),
                      Catch::Matchers::ContainsSubstring("out of range"));

    std::mt19937_64 rng(31);
    for (int t = 0; t < 25; ++t) {
        Graph g = to::random_graph(1 + t % 10, 0.4, rng);
        CHECK(parse_graph(graph_to_string(g)) == g);
    }
}

TEST_CASE("vertex sets") {
    VertexSet s(10);
    s.insert(3);
    s.insert(7);
    s.insert(3);
    CHECK(s.size() == 2);
    CHECK(s.contains(3));
    CHECK_FALSE(s.contains(4));
    s.erase(3);
    CHECK(s.size() == 1);
    CHECK(s.to_vector() == std::vector<int>{7});
    CHECK_THROWS(s.insert(10));
}
