#ifndef ABCOLOR_GRAPH_HPP
#define ABCOLOR_GRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace abcolor {

// Sentinel for "no finite value" (distances, girth, diameter).
inline constexpr int kInfinity = std::numeric_limits<int>::max();

// Immutable simple undirected graph. Vertices are dense integers 0..n-1,
// adjacency lists are sorted, no self-loops, no parallel edges.
class Graph {
public:
    Graph() = default;

    // Validates and deduplicates the edge list. Rejects self-loops and
    // out-of-range endpoints, naming the offending pair.
    static Graph build(int n, const std::vector<std::pair<int, int>>& edge_list) {
        if (n < 0) throw std::invalid_argument("graph: negative vertex count");
        std::vector<std::pair<int, int>> edges;
        edges.reserve(edge_list.size());
        for (auto [u, v] : edge_list) {
            if (u == v)
                throw std::invalid_argument("graph: self-loop at vertex " + std::to_string(u));
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw std::invalid_argument("graph: endpoint out of range in edge (" +
                                            std::to_string(u) + "," + std::to_string(v) + ")");
            if (u > v) std::swap(u, v);
            edges.emplace_back(u, v);
        }
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

        Graph g;
        g.n_ = n;
        g.edges_ = std::move(edges);
        g.adj_.assign(n, {});
        for (auto [u, v] : g.edges_) {
            g.adj_[u].push_back(v);
            g.adj_[v].push_back(u);
        }
        for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
        return g;
    }

    int n() const { return n_; }
    int m() const { return static_cast<int>(edges_.size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    bool has_edge(int u, int v) const {
        if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
        const auto& nb = adj_[u];
        return std::binary_search(nb.begin(), nb.end(), v);
    }

    int max_degree() const {
        int d = 0;
        for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
        return d;
    }

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<std::pair<int, int>> edges_;
};

// Subset of the vertices of a host graph, stored as a bitmask.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int n) : n_(n), bits_((n + 63) / 64, 0) {}

    int host_size() const { return n_; }
    int size() const { return count_; }
    bool empty() const { return count_ == 0; }

    bool contains(int v) const {
        return v >= 0 && v < n_ && (bits_[v >> 6] >> (v & 63)) & 1;
    }
    void insert(int v) {
        check(v);
        if (!contains(v)) {
            bits_[v >> 6] |= uint64_t(1) << (v & 63);
            ++count_;
        }
    }
    void erase(int v) {
        check(v);
        if (contains(v)) {
            bits_[v >> 6] &= ~(uint64_t(1) << (v & 63));
            --count_;
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count_);
        for (int v = 0; v < n_; ++v)
            if (contains(v)) out.push_back(v);
        return out;
    }

    static VertexSet of(int n, const std::vector<int>& vs) {
        VertexSet s(n);
        for (int v : vs) s.insert(v);
        return s;
    }

    bool operator==(const VertexSet& other) const {
        return n_ == other.n_ && bits_ == other.bits_;
    }

private:
    void check(int v) const {
        if (v < 0 || v >= n_)
            throw std::invalid_argument("vertex set: vertex " + std::to_string(v) +
                                        " outside host range");
    }
    int n_ = 0;
    int count_ = 0;
    std::vector<uint64_t> bits_;
};

// BFS distances from src; kInfinity for unreachable vertices.
inline std::vector<int> bfs_distances(const Graph& g, int src) {
    std::vector<int> dist(g.n(), kInfinity);
    std::queue<int> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : g.neighbors(u))
            if (dist[w] == kInfinity) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
    }
    return dist;
}

inline int bfs_distance(const Graph& g, int u, int v) {
    if (u == v) return 0;
    return bfs_distances(g, u)[v];
}

// Vertices at distance exactly 1 or 2 from v, sorted.
inline std::vector<int> two_ball(const Graph& g, int v) {
    std::vector<int> out;
    for (int u : g.neighbors(v)) {
        out.push_back(u);
        for (int w : g.neighbors(u))
            if (w != v) out.push_back(w);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Square graph: uv is an edge iff 1 <= dist(u,v) <= 2.
inline Graph square(const Graph& g) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < g.n(); ++v)
        for (int u : two_ball(g, v))
            if (u > v) edges.emplace_back(v, u);
    return Graph::build(g.n(), edges);
}

// Length of a shortest cycle, kInfinity for forests. BFS from every vertex:
// a non-tree edge (x,y) seen from root r closes a walk of length
// dist(x)+dist(y)+1 that contains a cycle, and every shortest cycle is
// realized exactly from any of its vertices.
inline int girth(const Graph& g) {
    int best = kInfinity;
    std::vector<int> dist(g.n()), parent(g.n());
    for (int r = 0; r < g.n(); ++r) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::queue<int> q;
        dist[r] = 0;
        q.push(r);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            if (2 * dist[u] >= best) continue;
            for (int w : g.neighbors(u)) {
                if (dist[w] == -1) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    q.push(w);
                } else if (w != parent[u] && u < w) {
                    best = std::min(best, dist[u] + dist[w] + 1);
                }
            }
        }
    }
    return best;
}

struct DegeneracyOrdering {
    int degeneracy = 0;
    // order[i] has at most `degeneracy` neighbors among order[0..i-1]
    std::vector<int> order;
};

// Repeated minimum-degree removal; the returned order is the reverse of the
// removal order. Ties broken by smallest vertex id.
inline DegeneracyOrdering degeneracy_ordering(const Graph& g) {
    int n = g.n();
    DegeneracyOrdering out;
    out.order.resize(n);
    if (n == 0) return out;

    std::vector<int> deg(n);
    std::vector<std::set<int>> bucket(n);
    for (int v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        bucket[deg[v]].insert(v);
    }
    std::vector<bool> removed(n, false);
    int d = 0, cur = 0;
    for (int step = 0; step < n; ++step) {
        if (cur > 0) --cur;  // removal can only drop degrees by one
        while (bucket[cur].empty()) ++cur;
        int v = *bucket[cur].begin();
        bucket[cur].erase(bucket[cur].begin());
        removed[v] = true;
        d = std::max(d, cur);
        out.order[n - 1 - step] = v;
        for (int w : g.neighbors(v))
            if (!removed[w]) {
                bucket[deg[w]].erase(w);
                --deg[w];
                bucket[deg[w]].insert(w);
            }
    }
    out.degeneracy = d;
    return out;
}

struct BlockDecomposition {
    std::vector<std::vector<std::pair<int, int>>> block_edges;  // partition E(G)
    std::vector<std::vector<int>> block_vertices;               // sorted, per block
    std::vector<int> cut_vertices;                              // sorted
};

// Standard block-cut decomposition, iterative DFS with an edge stack.
// Isolated edges are blocks; isolated vertices belong to no block.
inline BlockDecomposition blocks(const Graph& g) {
    int n = g.n();
    BlockDecomposition out;
    std::vector<int> disc(n, -1), low(n, -1);
    std::vector<bool> is_cut(n, false);
    std::vector<std::pair<int, int>> estack;
    int timer = 0;

    struct Frame {
        int v;
        int parent;
        size_t next = 0;
        int children = 0;
    };

    auto pop_block = [&](int u, int w) {
        std::vector<std::pair<int, int>> block;
        while (!estack.empty()) {
            auto e = estack.back();
            estack.pop_back();
            block.push_back(e);
            if (e == std::make_pair(u, w) || e == std::make_pair(w, u)) break;
        }
        std::vector<int> verts;
        for (auto [a, b] : block) {
            verts.push_back(a);
            verts.push_back(b);
        }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        for (auto& e : block)
            if (e.first > e.second) std::swap(e.first, e.second);
        std::sort(block.begin(), block.end());
        out.block_edges.push_back(std::move(block));
        out.block_vertices.push_back(std::move(verts));
    };

    for (int root = 0; root < n; ++root) {
        if (disc[root] != -1) continue;
        std::vector<Frame> stack;
        stack.push_back({root, -1});
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            const auto& nb = g.neighbors(f.v);
            if (f.next < nb.size()) {
                int w = nb[f.next++];
                if (w == f.parent) continue;
                if (disc[w] == -1) {
                    estack.emplace_back(f.v, w);
                    disc[w] = low[w] = timer++;
                    ++f.children;
                    stack.push_back({w, f.v});
                } else if (disc[w] < disc[f.v]) {
                    estack.emplace_back(f.v, w);
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
            } else {
                int v = f.v, parent = f.parent;
                stack.pop_back();
                if (parent != -1) {
                    Frame& pf = stack.back();
                    low[pf.v] = std::min(low[pf.v], low[v]);
                    if (low[v] >= disc[pf.v]) {
                        pop_block(pf.v, v);
                        // root is a cut vertex only with a second DFS child
                        if (pf.parent != -1 || pf.children > 1) is_cut[pf.v] = true;
                    }
                }
            }
        }
    }
    for (int v = 0; v < n; ++v)
        if (is_cut[v]) out.cut_vertices.push_back(v);
    return out;
}

struct BipartiteResult {
    bool bipartite = false;
    std::vector<int> side;       // 0/1 per vertex when bipartite
    std::vector<int> odd_cycle;  // vertex sequence of an odd cycle otherwise
};

inline BipartiteResult is_bipartite(const Graph& g) {
    int n = g.n();
    BipartiteResult res;
    std::vector<int> side(n, -1), parent(n, -1), depth(n, 0);
    for (int r = 0; r < n; ++r) {
        if (side[r] != -1) continue;
        side[r] = 0;
        std::queue<int> q;
        q.push(r);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : g.neighbors(u)) {
                if (side[w] == -1) {
                    side[w] = side[u] ^ 1;
                    parent[w] = u;
                    depth[w] = depth[u] + 1;
                    q.push(w);
                } else if (side[w] == side[u]) {
                    // reconstruct odd cycle through u-w
                    std::vector<int> pu{u}, pw{w};
                    int a = u, b = w;
                    while (depth[a] > depth[b]) pu.push_back(a = parent[a]);
                    while (depth[b] > depth[a]) pw.push_back(b = parent[b]);
                    while (a != b) {
                        pu.push_back(a = parent[a]);
                        pw.push_back(b = parent[b]);
                    }
                    res.odd_cycle = pu;  // u .. lca
                    for (auto it = pw.rbegin() + 1; it != pw.rend(); ++it)
                        res.odd_cycle.push_back(*it);  // below lca .. w
                    res.bipartite = false;
                    return res;
                }
            }
        }
    }
    res.bipartite = true;
    res.side = std::move(side);
    return res;
}

// Largest finite eccentricity is the diameter; kInfinity when disconnected.
inline int diameter(const Graph& g) {
    if (g.n() == 0) return 0;
    int best = 0;
    for (int v = 0; v < g.n(); ++v) {
        auto dist = bfs_distances(g, v);
        for (int d : dist) {
            if (d == kInfinity) return kInfinity;
            best = std::max(best, d);
        }
    }
    return best;
}

inline bool is_connected(const Graph& g) {
    if (g.n() <= 1) return true;
    auto dist = bfs_distances(g, 0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d == kInfinity; });
}

// Induced subgraph on `keep` (sorted order), with the vertex map back to g.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_host;  // new id -> host id
};

inline InducedSubgraph induced(const Graph& g, const std::vector<int>& keep) {
    std::vector<int> to_new(g.n(), -1);
    InducedSubgraph out;
    out.to_host = keep;
    std::sort(out.to_host.begin(), out.to_host.end());
    out.to_host.erase(std::unique(out.to_host.begin(), out.to_host.end()), out.to_host.end());
    for (size_t i = 0; i < out.to_host.size(); ++i) to_new[out.to_host[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges())
        if (to_new[u] != -1 && to_new[v] != -1) edges.emplace_back(to_new[u], to_new[v]);
    out.graph = Graph::build(static_cast<int>(out.to_host.size()), edges);
    return out;
}

inline InducedSubgraph induced(const Graph& g, const VertexSet& keep) {
    return induced(g, keep.to_vector());
}

// Disjoint union; offsets[i] is the id shift of part i in the result.
inline Graph disjoint_union(const std::vector<Graph>& parts, std::vector<int>* offsets = nullptr) {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    if (offsets) offsets->clear();
    for (const auto& p : parts) {
        if (offsets) offsets->push_back(n);
        for (auto [u, v] : p.edges()) edges.emplace_back(u + n, v + n);
        n += p.n();
    }
    return Graph::build(n, edges);
}

inline std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<std::vector<int>> comps;
    std::vector<bool> seen(g.n(), false);
    for (int r = 0; r < g.n(); ++r) {
        if (seen[r]) continue;
        std::vector<int> comp;
        std::queue<int> q;
        q.push(r);
        seen[r] = true;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            comp.push_back(u);
            for (int w : g.neighbors(u))
                if (!seen[w]) {
                    seen[w] = true;
                    q.push(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

}  // namespace abcolor

#endif  // ABCOLOR_GRAPH_HPP
