#ifndef ABCOLOR_GRAPH_IO_HPP
#define ABCOLOR_GRAPH_IO_HPP

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "abcolor/graph.hpp"

namespace abcolor {

// Text format: one header line `p <n> <m>`, then m lines `e <u> <v>` with
// 1-based endpoints. `c ...` comment lines are ignored. The writer emits
// edges sorted lexicographically, so write(parse(write(g))) == write(g).

inline Graph read_graph(std::istream& in) {
    std::string line;
    int lineno = 0;
    int n = -1;
    long long m = -1, seen = 0;
    std::vector<std::pair<int, int>> edges;
    auto fail = [&](const std::string& msg) {
        throw std::invalid_argument("graph format, line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ss(line);
        std::string tag;
        if (!(ss >> tag)) continue;
        if (tag == "c") continue;
        if (tag == "p") {
            if (n != -1) fail("duplicate header");
            if (!(ss >> n >> m) || n < 0 || m < 0) fail("malformed header, expected `p <n> <m>`");
        } else if (tag == "e") {
            if (n == -1) fail("edge before header");
            int u, v;
            if (!(ss >> u >> v)) fail("malformed edge line");
            if (u < 1 || v < 1 || u > n || v > n) fail("endpoint out of range");
            edges.emplace_back(u - 1, v - 1);
            ++seen;
        } else {
            fail("unknown line tag `" + tag + "`");
        }
    }
    if (n == -1) {
        lineno = 0;
        fail("missing header");
    }
    if (seen != m) {
        lineno = 0;
        fail("header declares " + std::to_string(m) + " edges, found " + std::to_string(seen));
    }
    return Graph::build(n, edges);
}

inline Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    return read_graph(in);
}

inline void write_graph(std::ostream& out, const Graph& g,
                        const std::vector<std::string>& comments = {}) {
    for (const auto& c : comments) out << "c " << c << "\n";
    out << "p " << g.n() << " " << g.m() << "\n";
    for (auto [u, v] : g.edges()) out << "e " << u + 1 << " " << v + 1 << "\n";
}

inline std::string graph_to_string(const Graph& g, const std::vector<std::string>& comments = {}) {
    std::ostringstream out;
    write_graph(out, g, comments);
    return out.str();
}

}  // namespace abcolor

#endif  // ABCOLOR_GRAPH_IO_HPP
