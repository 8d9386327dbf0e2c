#ifndef ABCOLOR_COLORERS_HPP
#define ABCOLOR_COLORERS_HPP

#include <cmath>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "abcolor/coloring.hpp"
#include "abcolor/graph.hpp"
#include "abcolor/solver.hpp"

namespace abcolor {

// sqrt(n)-shaped bound, stored exactly: bound = sqrt(coeff_sq_num/coeff_sq_den * n) - offset.
struct BoundClaim {
    std::string formula;
    long long coeff_sq_num = 0;
    long long coeff_sq_den = 1;
    int offset = 0;

    double value(long long n) const {
        return std::sqrt(static_cast<double>(coeff_sq_num) / coeff_sq_den * n) - offset;
    }
    // used <= coeff*sqrt(n) - offset, compared in exact integer arithmetic
    bool holds(long long used, long long n) const {
        long long u = used + offset;
        if (u <= 0) return true;
        return static_cast<__int128>(u) * u * coeff_sq_den <=
               static_cast<__int128>(coeff_sq_num) * n;
    }
};

struct BoundCertificate {
    std::string algorithm;
    long long n = 0;
    double threshold = 0;  // the degree cutoff N
    int s_size = 0;
    int s_prime_size = 0;
    int used_d1 = 0;
    int used_d2 = 0;
    BoundClaim claim;

    bool bound_holds() const { return claim.holds(used_d2, n); }
};

struct ColoredResult {
    MixedColoring coloring;
    Params params;  // smallest (a,b) the coloring is valid for
    BoundCertificate certificate;
};

namespace detail {

inline void check_output(const Graph& g, Params p, const MixedColoring& c, const char* who) {
    auto bad = verify(g, p, c);
    if (!bad.empty())
        throw std::runtime_error(std::string(who) + ": produced an invalid coloring (" +
                                 violation_name(bad.front().kind) + " at " +
                                 std::to_string(bad.front().u) + ")");
}

// Recolors each d2 vertex whose neighborhood misses one of the a d1 classes.
// Dropping a d2 color never creates conflicts, so this only shrinks the d2
// palette; done in vertex order for determinism.
inline void reclaim_d1(const Graph& g, MixedColoring& c, int a) {
    for (int v = 0; v < g.n(); ++v) {
        if (c.at(v).kind != ColorKind::d2) continue;
        std::vector<bool> seen(a, false);
        for (int w : g.neighbors(v))
            if (c.at(w).kind == ColorKind::d1) seen[c.at(w).index] = true;
        for (int i = 0; i < a; ++i)
            if (!seen[i]) {
                c.set_d1(v, i);
                break;
            }
    }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// dominated_peel: given a dominating set s of a k-degenerate g, grows
// t >= s with |t| <= (k+1)|s| while properly k-coloring g - t.

struct PeelResult {
    VertexSet t;
    std::vector<int> coloring;  // color in [0,k) for v outside t, -1 inside
};

// Walks the given k-degeneracy ordering: a vertex joins t if it is in s, or
// if it has no spare color; a vertex with an earlier t-neighbor always has
// one. Every vertex of t - s sees all its dominators later, and each s-vertex
// has at most k earlier neighbors, which gives the size bound.
inline PeelResult dominated_peel_with_order(const Graph& g, const VertexSet& s, int k,
                                            const std::vector<int>& order) {
    if (k < 1) throw std::invalid_argument("dominated peel: need k >= 1");
    int n = g.n();
    std::vector<int> pos(n, -1);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;

    PeelResult res;
    res.t = VertexSet(n);
    res.coloring.assign(n, -1);
    std::vector<bool> taken(k);

    for (int v : order) {
        // domination check rolled into the walk: every vertex must be in s
        // or adjacent to s
        if (s.contains(v)) {
            res.t.insert(v);
            continue;
        }
        bool dominated = false, earlier_t = false;
        std::fill(taken.begin(), taken.end(), false);
        int earlier = 0;
        for (int w : g.neighbors(v)) {
            if (s.contains(w)) dominated = true;
            if (pos[w] < pos[v]) {
                ++earlier;
                if (res.t.contains(w))
                    earlier_t = true;
                else if (res.coloring[w] >= 0)
                    taken[res.coloring[w]] = true;
            }
        }
        if (earlier > k)
            throw std::invalid_argument("dominated peel: order is not a k-degeneracy ordering");
        if (!dominated) throw std::invalid_argument("dominated peel: s is not a dominating set");
        int spare = -1;
        for (int c = 0; c < k; ++c)
            if (!taken[c]) {
                spare = c;
                break;
            }
        if (spare >= 0) {
            res.coloring[v] = spare;
        } else {
            if (earlier_t)
                throw std::runtime_error("dominated peel: t-neighbor without a spare color");
            res.t.insert(v);
        }
    }
    if (res.t.size() > (k + 1) * s.size())
        throw std::runtime_error("dominated peel: size bound violated");
    return res;
}

inline PeelResult dominated_peel(const Graph& g, const VertexSet& s, int k) {
    auto d = degeneracy_ordering(g);
    if (d.degeneracy > k)
        throw std::invalid_argument("dominated peel: graph is not " + std::to_string(k) +
                                    "-degenerate");
    return dominated_peel_with_order(g, s, k, d.order);
}

// ---------------------------------------------------------------------------
// greedy_2distance: first-fit on the square graph along a degeneracy order;
// a d-degenerate graph of maximum degree D needs at most (2d-1)D + 1 classes.

inline std::vector<int> greedy_2distance(const Graph& g) {
    std::vector<int> color(g.n(), -1);
    auto order = degeneracy_ordering(g).order;
    std::vector<int> taken;
    for (int v : order) {
        taken.clear();
        for (int u : two_ball(g, v))
            if (color[u] >= 0) taken.push_back(color[u]);
        std::sort(taken.begin(), taken.end());
        int c = 0;
        for (int t : taken) {
            if (t == c) ++c;
            else if (t > c) break;
        }
        color[v] = c;
    }
    return color;
}

inline int classes_used(const std::vector<int>& coloring) {
    int m = -1;
    for (int c : coloring) m = std::max(m, c);
    return m + 1;
}

// ---------------------------------------------------------------------------
// color_degenerate: high-degree vertices are peeled into uniquely d2-colored
// t, the rest of their closed neighborhood takes the k d1 classes, and the
// low-degree remainder is 2-distance colored with fresh classes.

inline ColoredResult color_degenerate(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("color degenerate: need k >= 1");
    auto dord = degeneracy_ordering(g);
    if (dord.degeneracy > k)
        throw std::invalid_argument("color degenerate: graph is not " + std::to_string(k) +
                                    "-degenerate");
    long long n = g.n();
    double threshold = std::sqrt(static_cast<double>(k + 1)) * std::sqrt(static_cast<double>(n));

    VertexSet s(g.n());
    for (int v = 0; v < g.n(); ++v)
        if (static_cast<double>(g.degree(v)) >= threshold) s.insert(v);

    ColoredResult out;
    out.coloring = MixedColoring(g.n());
    int next_d2 = 0;

    VertexSet closed(g.n());
    for (int v : s.to_vector()) {
        closed.insert(v);
        for (int w : g.neighbors(v)) closed.insert(w);
    }

    if (!s.empty()) {
        auto sub = induced(g, closed);
        VertexSet s_local(sub.graph.n());
        std::vector<int> host_to_local(g.n(), -1);
        for (int i = 0; i < sub.graph.n(); ++i) host_to_local[sub.to_host[i]] = i;
        for (int v : s.to_vector()) s_local.insert(host_to_local[v]);
        auto peel = dominated_peel(sub.graph, s_local, k);
        for (int i = 0; i < sub.graph.n(); ++i) {
            if (peel.t.contains(i))
                out.coloring.set_d2(sub.to_host[i], next_d2++);
            else
                out.coloring.set_d1(sub.to_host[i], peel.coloring[i]);
        }
    }

    // remainder: 2-distance color g - s, keep classes only outside N[s]
    std::vector<int> rest;
    for (int v = 0; v < g.n(); ++v)
        if (!s.contains(v)) rest.push_back(v);
    auto sub = induced(g, rest);
    auto rest_colors = greedy_2distance(sub.graph);
    std::map<int, int> remap;  // fresh indices for classes appearing outside N[s]
    for (int i = 0; i < sub.graph.n(); ++i) {
        int host = sub.to_host[i];
        if (closed.contains(host)) continue;
        auto [it, fresh] = remap.try_emplace(rest_colors[i], next_d2 + static_cast<int>(remap.size()));
        (void)fresh;
        out.coloring.set_d2(host, it->second);
    }

    detail::reclaim_d1(g, out.coloring, k);
    out.coloring = canonicalized(out.coloring);
    auto [u1, u2] = count_classes(out.coloring);
    out.params = {k, u2};
    out.certificate = {"degenerate",
                       n,
                       threshold,
                       s.size(),
                       s.size(),
                       u1,
                       u2,
                       {"4*" + std::to_string(k) + "*sqrt(" + std::to_string(k + 1) + ")*sqrt(n)",
                        16LL * k * k * (k + 1), 1, 0}};
    detail::check_output(g, {std::max(out.params.d1, 1), std::max(out.params.d2, 1)}, out.coloring,
                         "color_degenerate");
    return out;
}

// ---------------------------------------------------------------------------
// color_cactus_g4: leaf-block induction; a block is colored when its anchor
// cut vertex already is, the anchor-far vertex takes the d2 color whenever
// the anchor holds a d1 color.

namespace detail {

// vertices of a cycle block in ring order, starting and ending at anchor's
// neighbors
inline std::vector<int> cycle_path_from(const std::vector<std::pair<int, int>>& edges, int anchor) {
    std::map<int, std::vector<int>> adj;
    for (auto [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<int> path;
    int prev = anchor, cur = adj[anchor].front();
    while (cur != anchor) {
        path.push_back(cur);
        int nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        prev = cur;
        cur = nxt;
    }
    return path;
}

}  // namespace detail

inline MixedColoring color_cactus_g4(const Graph& g) {
    auto dec = blocks(g);
    for (size_t b = 0; b < dec.block_edges.size(); ++b) {
        size_t ne = dec.block_edges[b].size(), nv = dec.block_vertices[b].size();
        if (ne == 1) continue;
        if (ne != nv) throw std::invalid_argument("cactus colorer: a block is not an edge or cycle");
        if (nv == 3) throw std::invalid_argument("cactus colorer: triangle block, girth below 4");
    }

    MixedColoring col(g.n());
    std::vector<int> block_of_vertex_any(g.n(), -1);
    std::vector<std::vector<int>> blocks_at(g.n());
    for (size_t b = 0; b < dec.block_edges.size(); ++b)
        for (int v : dec.block_vertices[b]) {
            block_of_vertex_any[v] = static_cast<int>(b);
            blocks_at[v].push_back(static_cast<int>(b));
        }

    auto other_d1 = [](int i) { return 1 - i; };

    std::vector<bool> done(dec.block_edges.size(), false);
    for (int root = 0; root < g.n(); ++root) {
        if (col.at(root).kind != ColorKind::none) continue;
        if (block_of_vertex_any[root] == -1) {  // isolated vertex
            col.set_d1(root, 0);
            continue;
        }
        // BFS over the block-cut structure; the root block is colored
        // standalone, children extend from their anchor cut vertex.
        std::vector<std::pair<int, int>> queue{{block_of_vertex_any[root], -1}};  // block, anchor
        done[block_of_vertex_any[root]] = true;
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            auto [b, anchor] = queue[qi];
            const auto& edges = dec.block_edges[b];
            const auto& verts = dec.block_vertices[b];
            if (edges.size() == 1) {
                auto [x, y] = edges[0];
                if (anchor == -1) {
                    col.set_d1(x, 0);
                    col.set_d1(y, 1);
                } else {
                    int w = x == anchor ? y : x;
                    int ai = col.at(anchor).kind == ColorKind::d1 ? col.at(anchor).index : -1;
                    col.set_d1(w, ai == 0 ? 1 : 0);
                }
            } else if (anchor == -1) {
                // standalone cycle: even alternates, odd spends the d2 color once
                int start = verts.front();
                auto path = detail::cycle_path_from(edges, start);
                bool odd = (path.size() + 1) % 2 == 1;
                if (odd) {
                    col.set_d2(start, 0);
                    for (size_t i = 0; i < path.size(); ++i) col.set_d1(path[i], i % 2);
                } else {
                    col.set_d1(start, 0);
                    for (size_t i = 0; i < path.size(); ++i) col.set_d1(path[i], (i + 1) % 2);
                }
            } else {
                auto path = detail::cycle_path_from(edges, anchor);
                if (col.at(anchor).kind == ColorKind::d2) {
                    for (size_t i = 0; i < path.size(); ++i) col.set_d1(path[i], i % 2);
                } else {
                    int ai = col.at(anchor).index;
                    // path[1] sits at distance 2 from the anchor inside the
                    // block; all other d2 vertices are separated through it
                    col.set_d1(path[0], other_d1(ai));
                    col.set_d2(path[1], 0);
                    size_t m = path.size();
                    for (size_t i = 2; i < m; ++i)
                        col.set_d1(path[i], (m - 1 - i) % 2 == 0 ? other_d1(ai) : ai);
                }
            }
            for (int v : verts)
                for (int nb : blocks_at[v])
                    if (!done[nb]) {
                        done[nb] = true;
                        queue.emplace_back(nb, v);
                    }
        }
    }
    detail::check_output(g, {2, 1}, col, "color_cactus_g4");
    return col;
}

// ---------------------------------------------------------------------------
// cluster: merges seed vertices into connected parts pairwise at distance
// >= 4, absorbing connecting paths of length <= 3 until a fixed point.

struct ClusterPartition {
    VertexSet s_prime;
    std::vector<VertexSet> parts;
    int seed_size = 0;
};

inline ClusterPartition cluster(const Graph& g, const VertexSet& s) {
    std::vector<std::vector<int>> parts;
    for (int v : s.to_vector()) parts.push_back({v});

    std::vector<int> part_of(g.n(), -1), dist(g.n()), parent(g.n());
    auto rebuild = [&] {
        std::fill(part_of.begin(), part_of.end(), -1);
        for (size_t i = 0; i < parts.size(); ++i)
            for (int v : parts[i]) part_of[v] = static_cast<int>(i);
    };
    rebuild();

    bool merged = true;
    while (merged) {
        merged = false;
        for (size_t i = 0; i < parts.size() && !merged; ++i) {
            // BFS to depth 3 from part i
            std::fill(dist.begin(), dist.end(), -1);
            std::fill(parent.begin(), parent.end(), -1);
            std::deque<int> q;
            for (int v : parts[i]) {
                dist[v] = 0;
                q.push_back(v);
            }
            while (!q.empty() && !merged) {
                int u = q.front();
                q.pop_front();
                if (dist[u] >= 3) continue;
                for (int w : g.neighbors(u)) {
                    if (dist[w] != -1) continue;
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    if (part_of[w] != -1 && part_of[w] != static_cast<int>(i)) {
                        // absorb part_of[w] plus the interior of the path
                        size_t j = part_of[w];
                        std::vector<int>& target = parts[i];
                        for (int x = parent[w]; x != -1 && part_of[x] == -1; x = parent[x])
                            target.push_back(x);
                        target.insert(target.end(), parts[j].begin(), parts[j].end());
                        parts.erase(parts.begin() + j);
                        rebuild();
                        merged = true;
                        break;
                    }
                    q.push_back(w);
                }
            }
        }
    }

    ClusterPartition out;
    out.seed_size = s.size();
    out.s_prime = VertexSet(g.n());
    for (const auto& p : parts) {
        out.parts.push_back(VertexSet::of(g.n(), p));
        for (int v : p) out.s_prime.insert(v);
    }
    if (out.s_prime.size() > 3 * s.size())
        throw std::runtime_error("cluster: size bound violated");
    return out;
}

// ---------------------------------------------------------------------------
// oct_for_cluster: bipartizes g - d by 3-coloring the union of its odd
// blocks exactly and removing the smallest class.

inline VertexSet oct_for_cluster(const Graph& g, const VertexSet& d, const Budget& budget = {}) {
    std::vector<int> keep;
    for (int v = 0; v < g.n(); ++v)
        if (!d.contains(v)) keep.push_back(v);
    auto gm = induced(g, keep);

    auto dec = blocks(gm.graph);
    std::set<int> odd_union;
    for (size_t b = 0; b < dec.block_edges.size(); ++b) {
        auto sub = induced(gm.graph, dec.block_vertices[b]);
        if (!is_bipartite(sub.graph).bipartite)
            odd_union.insert(dec.block_vertices[b].begin(), dec.block_vertices[b].end());
    }

    VertexSet x(g.n());
    if (!odd_union.empty()) {
        auto u = induced(gm.graph, std::vector<int>(odd_union.begin(), odd_union.end()));
        std::vector<int> color3(u.graph.n(), -1);
        for (const auto& comp : connected_components(u.graph)) {
            auto cg = induced(u.graph, comp);
            auto res = decide(cg.graph, {3, 0}, budget);
            if (res.status != SolveStatus::colorable)
                throw std::runtime_error(
                    "oct: exact 3-coloring failed on an odd component (status " +
                    std::string(status_name(res.status)) + ")");
            for (int i = 0; i < cg.graph.n(); ++i)
                color3[cg.to_host[i]] = res.witness->at(i).index;
        }
        int counts[3] = {0, 0, 0};
        for (int c : color3) ++counts[c];
        int smallest = std::min_element(counts, counts + 3) - counts;
        for (int i = 0; i < u.graph.n(); ++i)
            if (color3[i] == smallest) x.insert(gm.to_host[u.to_host[i]]);
    }

    // postcondition: g - d - x is bipartite
    std::vector<int> rest;
    for (int v : keep)
        if (!x.contains(v)) rest.push_back(v);
    if (!is_bipartite(induced(g, rest).graph).bipartite)
        throw std::runtime_error("oct: removal set failed to bipartize");
    return x;
}

// ---------------------------------------------------------------------------
// peel_homomorphism: maps an outerplanar graph of girth >= g0 into the odd
// cycle C_{2k+1}, k = floor(g0/2), by cut-vertex recursion and ear peeling.

struct HomomorphismResult {
    int cycle_len = 0;       // 2k+1
    std::vector<int> image;  // vertex -> Z_{cycle_len}
};

namespace detail {

// walk of length len from a to b around C_L, a and b adjacent; returns the
// interior values
inline std::vector<int> cycle_walk(int a, int b, int len, int L) {
    int dir = (a + 1) % L == b ? 1 : -1;
    std::vector<int> interior;
    if (len % 2 == 1) {
        // oscillate a,b then land on b
        for (int i = 1; i < len; ++i) interior.push_back(i % 2 == 1 ? b : a);
    } else {
        if (len < L - 1) throw std::runtime_error("homomorphism: ear too short for parity");
        int pad = len - (L - 1);
        int back = ((a - dir) % L + L) % L;
        for (int i = 1; i <= pad; ++i) interior.push_back(i % 2 == 1 ? back : a);
        for (int j = 1; j < L - 1; ++j) interior.push_back(((a - dir * j) % L + L) % L);
    }
    return interior;
}

std::vector<int> hom_component(const Graph& g, int L);

// g is 2-connected (or a single edge); maps it into C_L
inline std::vector<int> hom_block(const Graph& g, int L) {
    int n = g.n();
    if (n == 1) return {0};
    if (n == 2) return {0, 1};

    bool all_deg2 = true;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) != 2) all_deg2 = false;
    if (all_deg2) {
        // bare cycle: walk around once (odd) or oscillate (even)
        std::vector<int> ring{0, g.neighbors(0)[0]};
        while (true) {
            int prev = ring[ring.size() - 2], cur = ring.back();
            int nxt = g.neighbors(cur)[0] == prev ? g.neighbors(cur)[1] : g.neighbors(cur)[0];
            if (nxt == 0) break;
            ring.push_back(nxt);
        }
        std::vector<int> image(n, 0);
        if (n % 2 == 0) {
            for (int i = 0; i < n; ++i) image[ring[i]] = i % 2;
        } else {
            if (n < L) throw std::runtime_error("homomorphism: odd cycle shorter than target");
            // wrap once, then oscillate between L-1 and L-2 back to 0's neighbor
            for (int i = 0; i < n; ++i)
                image[ring[i]] = i < L ? i : ((i - L) % 2 == 0 ? L - 2 : L - 1);
        }
        return image;
    }

    // find a maximal degree-2 ear whose boundary is an edge
    std::vector<bool> used(n, false);
    for (int start = 0; start < n; ++start) {
        if (g.degree(start) != 2 || used[start]) continue;
        std::vector<int> ear{start};
        used[start] = true;
        int prev = start, cur = g.neighbors(start)[1];
        while (g.degree(cur) == 2) {
            ear.push_back(cur);
            used[cur] = true;
            int nxt = g.neighbors(cur)[0] == prev ? g.neighbors(cur)[1] : g.neighbors(cur)[0];
            prev = cur;
            cur = nxt;
        }
        int right = cur;
        prev = start;
        cur = g.neighbors(start)[0];
        while (g.degree(cur) == 2) {
            ear.insert(ear.begin(), cur);
            used[cur] = true;
            int nxt = g.neighbors(cur)[0] == prev ? g.neighbors(cur)[1] : g.neighbors(cur)[0];
            prev = cur;
            cur = nxt;
        }
        int left = cur;
        if (!g.has_edge(left, right)) continue;  // not a face ear; keep scanning

        std::vector<int> rest;
        std::vector<bool> in_ear(n, false);
        for (int v : ear) in_ear[v] = true;
        for (int v = 0; v < n; ++v)
            if (!in_ear[v]) rest.push_back(v);
        auto sub = induced(g, rest);
        auto f = hom_component(sub.graph, L);
        std::vector<int> image(n, -1);
        for (int i = 0; i < sub.graph.n(); ++i) image[sub.to_host[i]] = f[i];
        auto interior = cycle_walk(image[left], image[right],
                                   static_cast<int>(ear.size()) + 1, L);
        for (size_t i = 0; i < ear.size(); ++i) image[ear[i]] = interior[i];
        return image;
    }
    throw std::invalid_argument("homomorphism: ear peel stalled, graph is not outerplanar");
}

inline std::vector<int> hom_component(const Graph& g, int L) {
    int n = g.n();
    if (n == 1) return {0};
    auto dec = blocks(g);
    if (dec.block_edges.size() == 1 &&
        static_cast<int>(dec.block_vertices[0].size()) == n)
        return hom_block(g, L);

    // root the block-cut tree and align each block by rotation at its anchor
    std::vector<int> image(n, -1);
    std::vector<std::vector<int>> blocks_at(n);
    for (size_t b = 0; b < dec.block_edges.size(); ++b)
        for (int v : dec.block_vertices[b]) blocks_at[v].push_back(static_cast<int>(b));

    std::vector<bool> done(dec.block_edges.size(), false);
    std::vector<int> queue{0};
    done[0] = true;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        int b = queue[qi];
        auto sub = induced(g, dec.block_vertices[b]);
        auto f = hom_block(sub.graph, L);
        // rotation offset: anchor vertex already has an image in rooted order
        int shift = 0;
        for (int i = 0; i < sub.graph.n(); ++i)
            if (image[sub.to_host[i]] != -1) {
                shift = ((image[sub.to_host[i]] - f[i]) % L + L) % L;
                break;
            }
        for (int i = 0; i < sub.graph.n(); ++i)
            image[sub.to_host[i]] = (f[i] + shift) % L;
        for (int v : dec.block_vertices[b])
            for (int nb : blocks_at[v])
                if (!done[nb]) {
                    done[nb] = true;
                    queue.push_back(nb);
                }
    }
    for (int v = 0; v < n; ++v)
        if (image[v] == -1) image[v] = 0;  // isolated inside component cannot happen
    return image;
}

}  // namespace detail

inline HomomorphismResult peel_homomorphism(const Graph& g, int g0) {
    if (g0 < 3) throw std::invalid_argument("homomorphism: need girth parameter >= 3");
    if (girth(g) < g0) throw std::invalid_argument("homomorphism: graph girth below requirement");
    int k = g0 / 2;
    HomomorphismResult out;
    out.cycle_len = 2 * k + 1;
    out.image.assign(g.n(), -1);
    for (const auto& comp : connected_components(g)) {
        auto sub = induced(g, comp);
        auto f = detail::hom_component(sub.graph, out.cycle_len);
        for (int i = 0; i < sub.graph.n(); ++i) out.image[sub.to_host[i]] = f[i];
    }
    for (auto [u, v] : g.edges()) {
        int diff = std::abs(out.image[u] - out.image[v]);
        if (diff != 1 && diff != out.cycle_len - 1)
            throw std::runtime_error("homomorphism: edge not preserved");
    }
    return out;
}

// ---------------------------------------------------------------------------
// vc_outerplanar: vertex cover of size <= n(k+1)/(2k+1) as the complement of
// the heaviest preimage among the 2k+1 maximum independent sets of C_{2k+1}.

inline VertexSet vc_outerplanar(const Graph& g, int g0) {
    auto hom = peel_homomorphism(g, g0);
    int L = hom.cycle_len, k = (L - 1) / 2;
    int best_start = 0, best_count = -1;
    for (int start = 0; start < L; ++start) {
        std::vector<bool> in_set(L, false);
        for (int j = 0; j < k; ++j) in_set[(start + 2 * j) % L] = true;
        int count = 0;
        for (int v = 0; v < g.n(); ++v)
            if (in_set[hom.image[v]]) ++count;
        if (count > best_count) {
            best_count = count;
            best_start = start;
        }
    }
    std::vector<bool> in_set(L, false);
    for (int j = 0; j < k; ++j) in_set[(best_start + 2 * j) % L] = true;
    VertexSet cover(g.n());
    for (int v = 0; v < g.n(); ++v)
        if (!in_set[hom.image[v]]) cover.insert(v);

    for (auto [u, v] : g.edges())
        if (!cover.contains(u) && !cover.contains(v))
            throw std::runtime_error("vertex cover: edge left uncovered");
    if (static_cast<long long>(cover.size()) * (2 * k + 1) >
        static_cast<long long>(g.n()) * (k + 1))
        throw std::runtime_error("vertex cover: size bound violated");
    return cover;
}

// ---------------------------------------------------------------------------
// color_tf_outerplanar: one d1 color for the neighborhood of the high-degree
// set minus a vertex cover of its internal paths, unique d2 colors on that
// cover plus the high-degree set, and a fresh d2 pool over a fill-in
// elimination order for the rest.

namespace detail {

struct Elimination {
    std::vector<int> order;                 // elimination order
    std::vector<std::vector<int>> t_edges;  // fill-completed adjacency
};

// degree-<=2 elimination with fill-in; prefers fill-free steps, then steps
// whose neighbors have absorbed the fewest fill edges. Stalls on inputs of
// treewidth above 2.
inline Elimination eliminate_tw2(const Graph& g) {
    int n = g.n();
    std::vector<std::set<int>> adj(n);
    for (auto [u, v] : g.edges()) {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    Elimination out;
    out.t_edges.assign(n, {});
    for (int v = 0; v < n; ++v)
        out.t_edges[v].assign(adj[v].begin(), adj[v].end());

    std::vector<int> fill_count(n, 0);
    std::vector<bool> gone(n, false);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        long long best_score = -1;
        for (int v = 0; v < n; ++v) {
            if (gone[v] || adj[v].size() > 2) continue;
            long long score;
            if (adj[v].size() <= 1) {
                score = 0;
            } else {
                auto it = adj[v].begin();
                int a = *it++, b = *it;
                bool filled = !adj[a].count(b);
                score = filled ? 2 + fill_count[a] + fill_count[b] : 1;
            }
            if (best == -1 || score < best_score) {
                best = v;
                best_score = score;
            }
            if (score == 0) break;  // cannot improve; smallest id wins
        }
        if (best == -1)
            throw std::invalid_argument("elimination stalled: graph is not treewidth-2 eliminable");
        int v = best;
        if (adj[v].size() == 2) {
            auto it = adj[v].begin();
            int a = *it++, b = *it;
            if (!adj[a].count(b)) {
                adj[a].insert(b);
                adj[b].insert(a);
                out.t_edges[a].push_back(b);
                out.t_edges[b].push_back(a);
                ++fill_count[a];
                ++fill_count[b];
            }
        }
        for (int w : adj[v]) adj[w].erase(v);
        adj[v].clear();
        gone[v] = true;
        out.order.push_back(v);
    }
    return out;
}

}  // namespace detail

inline ColoredResult color_tf_outerplanar(const Graph& g) {
    if (girth(g) == 3) throw std::invalid_argument("outerplanar colorer: triangle found");
    long long n = g.n();
    ColoredResult out;
    out.coloring = MixedColoring(g.n());
    double alpha = std::sqrt(34.0 / 5.0);
    double threshold = alpha * std::sqrt(static_cast<double>(n));

    VertexSet s(g.n());
    for (int v = 0; v < g.n(); ++v)
        if (static_cast<double>(g.degree(v)) >= threshold) s.insert(v);

    VertexSet closed(g.n()), open(g.n());
    for (int v : s.to_vector()) {
        closed.insert(v);
        for (int w : g.neighbors(v)) {
            closed.insert(w);
            if (!s.contains(w)) open.insert(w);
        }
    }

    // middle vertices of S-v-v'-S paths: open-neighborhood vertices with an
    // open-neighborhood neighbor (triangle-freeness makes the two anchors
    // distinct automatically)
    std::vector<int> vprime;
    for (int v : open.to_vector())
        for (int w : g.neighbors(v))
            if (open.contains(w)) {
                vprime.push_back(v);
                break;
            }

    VertexSet s_prime(g.n());
    for (int v : s.to_vector()) s_prime.insert(v);
    if (!vprime.empty()) {
        auto sub = induced(g, vprime);
        auto cover = vc_outerplanar(sub.graph, 4);
        for (int i : cover.to_vector()) s_prime.insert(sub.to_host[i]);
    }

    int next_d2 = 0;
    for (int v : s_prime.to_vector()) out.coloring.set_d2(v, next_d2++);
    for (int v : open.to_vector())
        if (!s_prime.contains(v)) out.coloring.set_d1(v, 0);

    // remaining vertices: fresh d2 pool along the reverse elimination order;
    // forbidden classes sit within fill distance 2 among earlier vertices
    auto elim = detail::eliminate_tw2(g);
    std::vector<int> rank(g.n());
    std::vector<int> construction(elim.order.rbegin(), elim.order.rend());
    for (int i = 0; i < g.n(); ++i) rank[construction[i]] = i;

    std::vector<int> pool(g.n(), -1);
    int pool_used = 0;
    std::set<int> forbidden;
    for (int v : construction) {
        if (out.coloring.at(v).kind != ColorKind::none) continue;
        forbidden.clear();
        for (int p : elim.t_edges[v]) {
            if (rank[p] > rank[v]) continue;
            if (pool[p] >= 0) forbidden.insert(pool[p]);
            for (int q : elim.t_edges[p])
                if (rank[q] < rank[v] && pool[q] >= 0) forbidden.insert(pool[q]);
        }
        int c = 0;
        while (forbidden.count(c)) ++c;
        pool[v] = c;
        pool_used = std::max(pool_used, c + 1);
        out.coloring.set_d2(v, next_d2 + c);
    }

    detail::reclaim_d1(g, out.coloring, 1);
    out.coloring = canonicalized(out.coloring);
    auto [u1, u2] = count_classes(out.coloring);
    out.params = {1, u2};
    out.certificate = {"tf-outerplanar",
                       n,
                       threshold,
                       s.size(),
                       s_prime.size(),
                       u1,
                       u2,
                       {"4*sqrt(34/5)*sqrt(n)-1", 544, 5, 1}};
    detail::check_output(g, {1, std::max(u2, 1)}, out.coloring, "color_tf_outerplanar");
    return out;
}

// ---------------------------------------------------------------------------
// color_planar_g4: clusters the high-degree set, gives each cluster and its
// odd-cycle transversal unique d2 colors and 2-colors the bipartized
// neighborhoods with the two d1 colors; the remainder is 2-distance colored
// with fresh classes.

inline ColoredResult color_planar_g4(const Graph& g, const Budget& oct_budget = {}) {
    if (girth(g) == 3) throw std::invalid_argument("planar girth-4 colorer: triangle found");
    long long n = g.n();
    ColoredResult out;
    out.coloring = MixedColoring(g.n());

    long long t = std::max<long long>(1, std::llround(std::sqrt(32.0 * n / 5.0)));
    VertexSet s(g.n());
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) >= t) s.insert(v);

    auto cp = cluster(g, s);
    int next_d2 = 0;
    VertexSet in_closed(g.n());

    for (const auto& part : cp.parts) {
        std::vector<int> closed_part;
        for (int v : part.to_vector()) {
            closed_part.push_back(v);
            for (int w : g.neighbors(v)) closed_part.push_back(w);
        }
        std::sort(closed_part.begin(), closed_part.end());
        closed_part.erase(std::unique(closed_part.begin(), closed_part.end()), closed_part.end());
        auto sub = induced(g, closed_part);
        VertexSet d_local(sub.graph.n());
        for (int i = 0; i < sub.graph.n(); ++i)
            if (part.contains(sub.to_host[i])) d_local.insert(i);

        auto x_local = oct_for_cluster(sub.graph, d_local, oct_budget);

        std::vector<int> bip_keep;
        for (int i = 0; i < sub.graph.n(); ++i) {
            in_closed.insert(sub.to_host[i]);
            if (d_local.contains(i) || x_local.contains(i))
                out.coloring.set_d2(sub.to_host[i], next_d2++);
            else
                bip_keep.push_back(i);
        }
        auto bip = induced(sub.graph, bip_keep);
        auto bres = is_bipartite(bip.graph);
        if (!bres.bipartite)
            throw std::runtime_error("planar girth-4 colorer: bipartized part has an odd cycle");
        for (int i = 0; i < bip.graph.n(); ++i)
            out.coloring.set_d1(sub.to_host[bip.to_host[i]], bres.side[i]);
    }

    // remainder beyond the closed cluster neighborhoods
    std::vector<int> rest;
    for (int v = 0; v < g.n(); ++v)
        if (!cp.s_prime.contains(v)) rest.push_back(v);
    auto sub = induced(g, rest);
    auto rest_colors = greedy_2distance(sub.graph);
    std::map<int, int> remap;
    for (int i = 0; i < sub.graph.n(); ++i) {
        int host = sub.to_host[i];
        if (in_closed.contains(host)) continue;
        auto [it, fresh] = remap.try_emplace(rest_colors[i], next_d2 + static_cast<int>(remap.size()));
        (void)fresh;
        out.coloring.set_d2(host, it->second);
    }

    detail::reclaim_d1(g, out.coloring, 2);
    out.coloring = canonicalized(out.coloring);
    auto [u1, u2] = count_classes(out.coloring);
    out.params = {2, u2};
    out.certificate = {"planar-g4",
                       n,
                       static_cast<double>(t),
                       s.size(),
                       cp.s_prime.size(),
                       u1,
                       u2,
                       {"8*sqrt(10)*sqrt(n)", 640, 1, 0}};
    detail::check_output(g, {2, std::max(u2, 1)}, out.coloring, "color_planar_g4");
    return out;
}

// ---------------------------------------------------------------------------
// color_planar: clusters the high-degree set, uniquely d2-colors it, greedily
// 3-colors the cluster neighborhoods (outerplanar, hence 2-degenerate) with
// the three d1 colors, and 2-distance colors the remainder with fresh classes.

inline ColoredResult color_planar(const Graph& g) {
    long long n = g.n();
    ColoredResult out;
    out.coloring = MixedColoring(g.n());

    long long t = std::max<long long>(1, std::llround(std::sqrt(2.0 * n)));
    VertexSet s(g.n());
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) >= t) s.insert(v);

    auto cp = cluster(g, s);
    int next_d2 = 0;
    for (int v : cp.s_prime.to_vector()) out.coloring.set_d2(v, next_d2++);

    VertexSet in_closed(g.n());
    std::vector<int> ring;
    for (int v : cp.s_prime.to_vector()) {
        in_closed.insert(v);
        for (int w : g.neighbors(v))
            if (!cp.s_prime.contains(w)) {
                if (!in_closed.contains(w)) ring.push_back(w);
                in_closed.insert(w);
            }
    }
    if (!ring.empty()) {
        auto sub = induced(g, ring);
        auto dord = degeneracy_ordering(sub.graph);
        if (dord.degeneracy > 2)
            throw std::runtime_error(
                "planar colorer: cluster neighborhood needs a fourth d1 color (input not planar "
                "or clustering broke)");
        std::vector<int> c3(sub.graph.n(), -1);
        for (int v : dord.order) {
            bool taken[3] = {false, false, false};
            for (int w : sub.graph.neighbors(v))
                if (c3[w] >= 0) taken[c3[w]] = true;
            for (int c = 0; c < 3; ++c)
                if (!taken[c]) {
                    c3[v] = c;
                    break;
                }
        }
        for (int i = 0; i < sub.graph.n(); ++i) out.coloring.set_d1(sub.to_host[i], c3[i]);
    }

    std::vector<int> rest;
    for (int v = 0; v < g.n(); ++v)
        if (!cp.s_prime.contains(v)) rest.push_back(v);
    auto sub = induced(g, rest);
    auto rest_colors = greedy_2distance(sub.graph);
    std::map<int, int> remap;
    for (int i = 0; i < sub.graph.n(); ++i) {
        int host = sub.to_host[i];
        if (in_closed.contains(host)) continue;
        auto [it, fresh] = remap.try_emplace(rest_colors[i], next_d2 + static_cast<int>(remap.size()));
        (void)fresh;
        out.coloring.set_d2(host, it->second);
    }

    detail::reclaim_d1(g, out.coloring, 3);
    out.coloring = canonicalized(out.coloring);
    auto [u1, u2] = count_classes(out.coloring);
    out.params = {3, u2};
    out.certificate = {"planar",
                       n,
                       static_cast<double>(t),
                       s.size(),
                       cp.s_prime.size(),
                       u1,
                       u2,
                       {"18*sqrt(2)*sqrt(n)", 648, 1, 0}};
    detail::check_output(g, {3, std::max(u2, 1)}, out.coloring, "color_planar");
    return out;
}

}  // namespace abcolor

#endif  // ABCOLOR_COLORERS_HPP
