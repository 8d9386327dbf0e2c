#ifndef ABCOLOR_COLORING_HPP
#define ABCOLOR_COLORING_HPP

#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "abcolor/graph.hpp"

namespace abcolor {

// Mixed coloring parameters: d1 classes must be independent sets, d2 classes
// must be independent in the square graph (pairwise distance >= 3).
struct Params {
    int d1 = 0;
    int d2 = 0;
};

enum class ColorKind : uint8_t { none, d1, d2 };

struct VertexColor {
    ColorKind kind = ColorKind::none;
    int index = -1;

    bool operator==(const VertexColor& o) const { return kind == o.kind && index == o.index; }
};

inline VertexColor d1_color(int i) { return {ColorKind::d1, i}; }
inline VertexColor d2_color(int j) { return {ColorKind::d2, j}; }

// Per-vertex tagged color assignment over a host graph of matching size.
struct MixedColoring {
    std::vector<VertexColor> colors;

    MixedColoring() = default;
    explicit MixedColoring(int n) : colors(n) {}

    int n() const { return static_cast<int>(colors.size()); }
    const VertexColor& at(int v) const { return colors[v]; }
    void set(int v, VertexColor c) { colors[v] = c; }
    void set_d1(int v, int i) { colors[v] = d1_color(i); }
    void set_d2(int v, int j) { colors[v] = d2_color(j); }

    bool is_total() const {
        for (const auto& c : colors)
            if (c.kind == ColorKind::none) return false;
        return true;
    }

    bool operator==(const MixedColoring& o) const { return colors == o.colors; }
    bool operator<(const MixedColoring& o) const {
        auto key = [](const VertexColor& c) {
            return std::pair<int, int>(static_cast<int>(c.kind), c.index);
        };
        for (int v = 0; v < n() && v < o.n(); ++v) {
            if (key(colors[v]) != key(o.colors[v])) return key(colors[v]) < key(o.colors[v]);
        }
        return n() < o.n();
    }
};

enum class ViolationKind : uint8_t { d1_edge, d2_dist1, d2_dist2, out_of_range, uncolored };

struct Violation {
    ViolationKind kind;
    int u;
    int v;  // -1 for single-vertex violations

    bool operator==(const Violation& o) const { return kind == o.kind && u == o.u && v == o.v; }
};

inline const char* violation_name(ViolationKind k) {
    switch (k) {
        case ViolationKind::d1_edge: return "d1-edge";
        case ViolationKind::d2_dist1: return "d2-dist1";
        case ViolationKind::d2_dist2: return "d2-dist2";
        case ViolationKind::out_of_range: return "out-of-range";
        case ViolationKind::uncolored: return "uncolored";
    }
    return "?";
}

// Checks a coloring against g and p; empty result means valid. Partial
// colorings are rejected unless allow_partial is set (solver/gadget mode).
// d2 classes are checked by marking closed neighborhoods per class: two
// members are within distance 2 iff their radius-1 balls intersect.
inline std::vector<Violation> verify(const Graph& g, Params p, const MixedColoring& c,
                                     bool allow_partial = false) {
    std::vector<Violation> out;
    if (c.n() != g.n()) {
        out.push_back({ViolationKind::out_of_range, c.n(), -1});
        return out;
    }
    int max_d2 = -1;
    for (int v = 0; v < g.n(); ++v) {
        const auto& col = c.at(v);
        switch (col.kind) {
            case ColorKind::none:
                if (!allow_partial) out.push_back({ViolationKind::uncolored, v, -1});
                break;
            case ColorKind::d1:
                if (col.index < 0 || col.index >= p.d1)
                    out.push_back({ViolationKind::out_of_range, v, -1});
                break;
            case ColorKind::d2:
                if (col.index < 0 || col.index >= p.d2)
                    out.push_back({ViolationKind::out_of_range, v, -1});
                else
                    max_d2 = std::max(max_d2, col.index);
                break;
        }
    }
    if (!out.empty()) return out;

    for (auto [u, v] : g.edges()) {
        const auto &cu = c.at(u), &cv = c.at(v);
        if (cu.kind == ColorKind::d1 && cv.kind == ColorKind::d1 && cu.index == cv.index)
            out.push_back({ViolationKind::d1_edge, u, v});
    }

    // owner[w] = the d2-class member whose closed ball currently covers w
    std::vector<int> owner(g.n(), -1);
    for (int cls = 0; cls <= max_d2; ++cls) {
        std::fill(owner.begin(), owner.end(), -1);
        for (int x = 0; x < g.n(); ++x) {
            if (c.at(x).kind != ColorKind::d2 || c.at(x).index != cls) continue;
            auto touch = [&](int w) {
                if (owner[w] != -1 && owner[w] != x) {
                    int y = owner[w];
                    bool adjacent = g.has_edge(x, y);
                    out.push_back({adjacent ? ViolationKind::d2_dist1 : ViolationKind::d2_dist2,
                                   std::min(x, y), std::max(x, y)});
                } else {
                    owner[w] = x;
                }
            };
            touch(x);
            for (int w : g.neighbors(x)) touch(w);
        }
    }
    std::sort(out.begin(), out.end(), [](const Violation& a, const Violation& b) {
        return std::tie(a.u, a.v, a.kind) < std::tie(b.u, b.v, b.kind);
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline bool is_valid(const Graph& g, Params p, const MixedColoring& c) {
    return c.is_total() && verify(g, p, c).empty();
}

// Number of distinct class indices actually used, per tag.
inline std::pair<int, int> count_classes(const MixedColoring& c) {
    std::set<int> d1s, d2s;
    for (const auto& col : c.colors) {
        if (col.kind == ColorKind::d1) d1s.insert(col.index);
        if (col.kind == ColorKind::d2) d2s.insert(col.index);
    }
    return {static_cast<int>(d1s.size()), static_cast<int>(d2s.size())};
}

// Relabels classes of each tag in order of first appearance (by least
// vertex), so certificates are deterministic under class permutation.
inline MixedColoring canonicalized(const MixedColoring& c) {
    MixedColoring out(c.n());
    std::map<int, int> d1_map, d2_map;
    for (int v = 0; v < c.n(); ++v) {
        const auto& col = c.at(v);
        if (col.kind == ColorKind::d1) {
            auto [it, fresh] = d1_map.try_emplace(col.index, static_cast<int>(d1_map.size()));
            out.set_d1(v, it->second);
            (void)fresh;
        } else if (col.kind == ColorKind::d2) {
            auto [it, fresh] = d2_map.try_emplace(col.index, static_cast<int>(d2_map.size()));
            out.set_d2(v, it->second);
            (void)fresh;
        }
    }
    return out;
}

// Certificate format: `s COLORING a=<a> b=<b>` then one line per vertex,
// `v <vertex> d1 <i>` or `v <vertex> d2 <j>`, vertices 1-based.
inline void write_certificate(std::ostream& out, Params p, const MixedColoring& c) {
    out << "s COLORING a=" << p.d1 << " b=" << p.d2 << "\n";
    for (int v = 0; v < c.n(); ++v) {
        const auto& col = c.at(v);
        if (col.kind == ColorKind::none) continue;
        out << "v " << v + 1 << " " << (col.kind == ColorKind::d1 ? "d1" : "d2") << " "
            << col.index << "\n";
    }
}

inline std::string certificate_to_string(Params p, const MixedColoring& c) {
    std::ostringstream out;
    write_certificate(out, p, c);
    return out.str();
}

struct Certificate {
    Params params;
    MixedColoring coloring;
};

inline Certificate read_certificate(std::istream& in, int n) {
    std::string line;
    int lineno = 0;
    bool have_header = false;
    Certificate cert;
    cert.coloring = MixedColoring(n);
    auto fail = [&](const std::string& msg) {
        throw std::invalid_argument("certificate, line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ss(line);
        std::string tag;
        if (!(ss >> tag)) continue;
        if (tag == "c") continue;
        if (tag == "s") {
            std::string kind, af, bf;
            if (!(ss >> kind >> af >> bf) || kind != "COLORING" || af.rfind("a=", 0) != 0 ||
                bf.rfind("b=", 0) != 0)
                fail("malformed status line");
            cert.params.d1 = std::stoi(af.substr(2));
            cert.params.d2 = std::stoi(bf.substr(2));
            have_header = true;
        } else if (tag == "v") {
            int vertex, index;
            std::string which;
            if (!(ss >> vertex >> which >> index)) fail("malformed vertex line");
            if (vertex < 1 || vertex > n) fail("vertex out of range");
            if (which == "d1")
                cert.coloring.set_d1(vertex - 1, index);
            else if (which == "d2")
                cert.coloring.set_d2(vertex - 1, index);
            else
                fail("color tag must be d1 or d2");
        } else {
            fail("unknown line tag `" + tag + "`");
        }
    }
    if (!have_header) {
        lineno = 0;
        fail("missing `s COLORING` line");
    }
    return cert;
}

inline Certificate parse_certificate(const std::string& text, int n) {
    std::istringstream in(text);
    return read_certificate(in, n);
}

}  // namespace abcolor

#endif  // ABCOLOR_COLORING_HPP
