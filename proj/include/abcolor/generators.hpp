#ifndef ABCOLOR_GENERATORS_HPP
#define ABCOLOR_GENERATORS_HPP

#include <array>
#include <random>
#include <string>
#include <vector>

#include "abcolor/graph.hpp"
#include "abcolor/solver.hpp"

namespace abcolor {

// Hub c over l+1 middle vertices, each middle fully joined to l+1 private
// k-cliques. Order k(l+1)^2 + (l+1) + 1; k-degenerate; not (k,l)-colorable:
// some middle must take a d1 color, and then each of its l+1 cliques needs a
// d2 vertex, all pairwise within distance 2.
inline Graph gen_clique_star(int k, int l) {
    if (k < 1 || l < 1) throw std::invalid_argument("clique star: need k >= 1 and l >= 1");
    std::vector<std::pair<int, int>> edges;
    int next = 0;
    int c = next++;
    for (int i = 0; i <= l; ++i) {
        int u = next++;
        edges.emplace_back(c, u);
        for (int j = 0; j <= l; ++j) {
            int base = next;
            next += k;
            for (int x = 0; x < k; ++x) {
                edges.emplace_back(u, base + x);
                for (int y = x + 1; y < k; ++y) edges.emplace_back(base + x, base + y);
            }
        }
    }
    return Graph::build(next, edges);
}

// Generalized theta graph: 2k-1 internally disjoint s-t paths of length 3.
// Bipartite, planar, girth 6, order 4k; not (1,k)-colorable for k >= 2.
inline Graph gen_theta(int k) {
    if (k < 2) throw std::invalid_argument("theta: need k >= 2 (hub degree must exceed k)");
    std::vector<std::pair<int, int>> edges;
    int s = 0, t = 1;
    int rails = 2 * k - 1;
    for (int i = 0; i < rails; ++i) {
        int u = 2 + i, v = 2 + rails + i;
        edges.emplace_back(s, u);
        edges.emplace_back(u, v);
        edges.emplace_back(v, t);
    }
    return Graph::build(2 + 2 * rails, edges);
}

// Apex vertex joined to every vertex of k disjoint triangles. Order 3k+1,
// diameter 2; not (2,k)-colorable.
inline Graph gen_apex_triangles(int k) {
    if (k < 1) throw std::invalid_argument("apex triangles: need k >= 1");
    std::vector<std::pair<int, int>> edges;
    int c = 0;
    for (int i = 0; i < k; ++i) {
        int a = 1 + 3 * i, b = a + 1, d = a + 2;
        edges.emplace_back(a, b);
        edges.emplace_back(b, d);
        edges.emplace_back(a, d);
        edges.emplace_back(c, a);
        edges.emplace_back(c, b);
        edges.emplace_back(c, d);
    }
    return Graph::build(3 * k + 1, edges);
}

// Windmill: `copies` cliques of size clique_size sharing one center vertex 0.
inline Graph gen_windmill(int copies, int clique_size) {
    if (copies < 1 || clique_size < 2) throw std::invalid_argument("windmill: bad parameters");
    std::vector<std::pair<int, int>> edges;
    int next = 1;
    for (int i = 0; i < copies; ++i) {
        int base = next;
        next += clique_size - 1;
        for (int x = 0; x < clique_size - 1; ++x) {
            edges.emplace_back(0, base + x);
            for (int y = x + 1; y < clique_size - 1; ++y) edges.emplace_back(base + x, base + y);
        }
    }
    return Graph::build(next, edges);
}

// k+1 triangles sharing the special vertex s. In any (2,k)-coloring s takes a
// d2 color: otherwise each triangle contributes a d2 vertex and the k+1 of
// them are pairwise at distance 2 through s.
inline GadgetSpec gen_friendship(int k) {
    if (k < 1) throw std::invalid_argument("friendship: need k >= 1");
    GadgetSpec spec;
    spec.gadget = gen_windmill(k + 1, 3);
    spec.ports = {{"s", 0}};
    spec.property = {GadgetPropertyKind::forced_d2, {"s"}};
    return spec;
}

// Copies of a forced-d2 gadget plus an apex adjacent to every copy's port.
// With k+1 copies the result is not (2,k)-colorable.
inline Graph apex_over_copies(const Graph& gadget, int port, int copies) {
    if (copies < 1) throw std::invalid_argument("apex: need at least one copy");
    if (port < 0 || port >= gadget.n()) throw std::invalid_argument("apex: port out of range");
    std::vector<int> offsets;
    Graph uni = disjoint_union(std::vector<Graph>(copies, gadget), &offsets);
    std::vector<std::pair<int, int>> edges(uni.edges());
    int apex = uni.n();
    for (int i = 0; i < copies; ++i) edges.emplace_back(offsets[i] + port, apex);
    return Graph::build(uni.n() + 1, edges);
}

// Replaces every vertex by k+1 copies and every edge by a complete bipartite
// join between the copy groups. The c parameter names the number of d1
// classes the equivalence is stated for; the construction depends on k only.
inline Graph gen_blowup(const Graph& g, int c, int k) {
    if (k < 1) throw std::invalid_argument("blowup: need k >= 1");
    if (c < 1) throw std::invalid_argument("blowup: need c >= 1");
    int r = k + 1;
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges())
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) edges.emplace_back(u * r + i, v * r + j);
    return Graph::build(g.n() * r, edges);
}

inline Graph grid_graph(int w, int h) {
    if (w < 1 || h < 1) throw std::invalid_argument("grid: need positive dimensions");
    std::vector<std::pair<int, int>> edges;
    auto id = [&](int r, int col) { return r * w + col; };
    for (int r = 0; r < h; ++r)
        for (int col = 0; col < w; ++col) {
            if (col + 1 < w) edges.emplace_back(id(r, col), id(r, col + 1));
            if (r + 1 < h) edges.emplace_back(id(r, col), id(r + 1, col));
        }
    return Graph::build(w * h, edges);
}

// ---------------------------------------------------------------------------
// Random members of the structured classes, deterministic per seed.

// Each new vertex attaches to min(i,k) distinct earlier vertices.
inline Graph random_kdegenerate(int n, int k, uint64_t seed) {
    if (n < 1 || k < 1) throw std::invalid_argument("random k-degenerate: bad parameters");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) {
        int take = std::min(v, k);
        std::vector<int> pool(v);
        for (int i = 0; i < v; ++i) pool[i] = i;
        for (int i = 0; i < take; ++i) {
            std::uniform_int_distribution<int> pick(i, v - 1);
            std::swap(pool[i], pool[pick(rng)]);
            edges.emplace_back(pool[i], v);
        }
    }
    return Graph::build(n, edges);
}

// Random tree of blocks, each an edge or a cycle of length >= min_girth.
inline Graph random_cactus(int n, int min_girth, uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random cactus: need n >= 1");
    if (min_girth < 4) throw std::invalid_argument("random cactus: girth must be >= 4");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    int built = 1;
    while (built < n) {
        std::uniform_int_distribution<int> attach(0, built - 1);
        int u = attach(rng);
        int remaining = n - built;
        bool cycle = remaining >= min_girth - 1 && std::uniform_int_distribution<int>(0, 1)(rng);
        if (cycle) {
            int longest = std::min(min_girth + 4, remaining + 1);
            std::uniform_int_distribution<int> len_pick(min_girth, longest);
            int len = len_pick(rng);
            int prev = u;
            for (int i = 0; i < len - 1; ++i) {
                edges.emplace_back(prev, built);
                prev = built++;
            }
            edges.emplace_back(prev, u);
        } else {
            edges.emplace_back(u, built++);
        }
    }
    return Graph::build(built, edges);
}

// Fan (path plus a hub joined to every path vertex) with one edge of each
// triangle deleted at random; triangle-free and outerplanar by construction.
inline Graph random_tf_outerplanar(int n, uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random outerplanar: need n >= 1");
    if (n <= 2) {
        std::vector<std::pair<int, int>> e;
        if (n == 2) e.emplace_back(0, 1);
        return Graph::build(n, e);
    }
    std::mt19937_64 rng(seed);
    int hub = n - 1;
    std::set<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < hub; ++i) edges.insert({i, i + 1});
    for (int i = 0; i < hub; ++i) edges.insert({i, hub});
    for (int i = 0; i + 1 < hub; ++i) {
        bool full = edges.count({i, i + 1}) && edges.count({i, hub}) && edges.count({i + 1, hub});
        if (!full) continue;
        switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
            case 0: edges.erase({i, i + 1}); break;
            case 1: edges.erase({i, hub}); break;
            default: edges.erase({i + 1, hub}); break;
        }
    }
    return Graph::build(n, std::vector<std::pair<int, int>>(edges.begin(), edges.end()));
}

// Repeated face splits starting from a triangle; planar and 3-degenerate.
inline Graph random_stacked_triangulation(int n, uint64_t seed) {
    if (n < 3) throw std::invalid_argument("stacked triangulation: need n >= 3");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> edges{{0, 1}, {1, 2}, {0, 2}};
    std::vector<std::array<int, 3>> faces{{0, 1, 2}};
    for (int v = 3; v < n; ++v) {
        std::uniform_int_distribution<size_t> pick(0, faces.size() - 1);
        size_t f = pick(rng);
        auto [a, b, c] = faces[f];
        edges.emplace_back(a, v);
        edges.emplace_back(b, v);
        edges.emplace_back(c, v);
        faces[f] = {a, b, v};
        faces.push_back({a, c, v});
        faces.push_back({b, c, v});
    }
    return Graph::build(n, edges);
}

// ---------------------------------------------------------------------------
// Forced-vertex constructions from obstruction profiles.

namespace detail {

inline Graph remove_vertex(const Graph& g, int v, int* v1, int* v2) {
    std::vector<std::pair<int, int>> edges;
    auto shift = [&](int x) { return x > v ? x - 1 : x; };
    for (auto [a, b] : g.edges()) {
        if (a == v || b == v) continue;
        edges.emplace_back(shift(a), shift(b));
    }
    *v1 = shift(*v1);
    *v2 = shift(*v2);
    return Graph::build(g.n() - 1, edges);
}

}  // namespace detail

// Builds a (2,k)-colorable gadget whose port s is forced to a d2 color, from
// a graph g_prime that is not (2,k)-colorable and has a degree-2 vertex v
// with neighbors v1, v2. The profile is recomputed on g_prime - v and must
// match the one supplied; which construction is emitted depends on the
// realized obstruction set:
//   {Bc} alone            -> g_prime - v itself, s = v1
//   {(full,full)} alone   -> one copy plus pendants v1', v2' and s
//   no Bc, some small set -> two copies, v1-copies joined, s over v2-copies
//   {Bc, (full,full)}     -> k+2 copies fanned into one, plus a 4-path to s
//   Bc and a small set    -> 2k+2 copies, paired v1 edges, s over all v2
inline GadgetSpec gen_forced_vertex(const Graph& g_prime, int v, int v1, int v2, int k,
                                    const ObstructionProfile& profile, const Budget& budget = {}) {
    if (v < 0 || v >= g_prime.n()) throw std::invalid_argument("forced vertex: v out of range");
    if (g_prime.degree(v) != 2 || !g_prime.has_edge(v, v1) || !g_prime.has_edge(v, v2))
        throw std::invalid_argument("forced vertex: v must have exactly the neighbors v1, v2");

    int w1 = v1, w2 = v2;
    Graph gm = detail::remove_vertex(g_prime, v, &w1, &w2);
    ObstructionProfile found = obstruction_profile(gm, w1, w2, k, budget);
    if (!found.complete)
        throw std::invalid_argument("forced vertex: profile enumeration exceeded budget");
    if (found.has_bc != profile.has_bc || found.pairs != profile.pairs)
        throw std::invalid_argument("forced vertex: supplied profile does not match g_prime");
    if (found.colorings_seen == 0)
        throw std::invalid_argument("forced vertex: g_prime - v is not (2,k)-colorable");
    if (found.unblocked > 0 || (!found.has_bc && found.pairs.empty()))
        throw std::invalid_argument(
            "forced vertex: profile empty (g_prime was (2,k)-colorable with v restorable)");

    bool full_only = !found.pairs.empty();
    bool small_s2 = false, small_s1 = false;
    for (const auto& pr : found.pairs) {
        if (static_cast<int>(pr.s1.size()) < k || static_cast<int>(pr.s2.size()) < k)
            full_only = false;
        if (static_cast<int>(pr.s2.size()) < k) small_s2 = true;
        if (static_cast<int>(pr.s1.size()) < k) small_s1 = true;
    }
    // swap roles so the small side is always s2
    int a1 = w1, a2 = w2;
    if (!small_s2 && small_s1) {
        std::swap(a1, a2);
        small_s2 = true;
    }

    GadgetSpec spec;
    spec.property = {GadgetPropertyKind::forced_d2, {"s"}};

    if (found.pairs.empty()) {
        // every coloring gives v1, v2 one d2 class
        spec.gadget = gm;
        spec.ports = {{"s", a1}};
        return spec;
    }

    if (!found.has_bc && full_only) {
        // v1, v2 always take distinct d1 colors with saturated neighborhoods
        std::vector<std::pair<int, int>> edges(gm.edges());
        int p1 = gm.n(), p2 = gm.n() + 1, s = gm.n() + 2;
        edges.emplace_back(a1, p1);
        edges.emplace_back(a2, p2);
        edges.emplace_back(p1, s);
        edges.emplace_back(p2, s);
        spec.gadget = Graph::build(gm.n() + 3, edges);
        spec.ports = {{"s", s}};
        return spec;
    }

    if (!found.has_bc) {
        // two copies; joined v1 copies force opposite d1 colors on the v2 side
        std::vector<int> off;
        Graph uni = disjoint_union({gm, gm}, &off);
        std::vector<std::pair<int, int>> edges(uni.edges());
        int s = uni.n();
        edges.emplace_back(off[0] + a1, off[1] + a1);
        edges.emplace_back(off[0] + a2, s);
        edges.emplace_back(off[1] + a2, s);
        spec.gadget = Graph::build(uni.n() + 1, edges);
        spec.ports = {{"s", s}};
        return spec;
    }

    if (full_only) {
        // k+2 copies: fanning k+1 v1 copies into the main v2 forces the main
        // pair into the saturated d1 case, then a 4-path pins s
        std::vector<int> off;
        Graph uni = disjoint_union(std::vector<Graph>(k + 2, gm), &off);
        std::vector<std::pair<int, int>> edges(uni.edges());
        int main = off[k + 1];
        for (int i = 0; i <= k; ++i) edges.emplace_back(main + a2, off[i] + a1);
        int p1 = uni.n(), s = uni.n() + 1, p2 = uni.n() + 2;
        edges.emplace_back(main + a1, p1);
        edges.emplace_back(p1, s);
        edges.emplace_back(s, p2);
        edges.emplace_back(p2, main + a2);
        spec.gadget = Graph::build(uni.n() + 3, edges);
        spec.ports = {{"s", s}};
        return spec;
    }

    // Bc plus a pair with a small side: 2k+2 copies, v1 copies joined in
    // pairs, s adjacent to every v2 copy
    std::vector<int> off;
    Graph uni = disjoint_union(std::vector<Graph>(2 * k + 2, gm), &off);
    std::vector<std::pair<int, int>> edges(uni.edges());
    int s = uni.n();
    for (int i = 0; i < 2 * k + 2; ++i) edges.emplace_back(off[i] + a2, s);
    for (int i = 0; i <= k; ++i) edges.emplace_back(off[2 * i] + a1, off[2 * i + 1] + a1);
    spec.gadget = Graph::build(uni.n() + 1, edges);
    spec.ports = {{"s", s}};
    return spec;
}

}  // namespace abcolor

#endif  // ABCOLOR_GENERATORS_HPP
