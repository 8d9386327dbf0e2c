#ifndef ABCOLOR_REDUCTIONS_HPP
#define ABCOLOR_REDUCTIONS_HPP

#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "abcolor/coloring.hpp"
#include "abcolor/gadgets.hpp"
#include "abcolor/graph.hpp"
#include "abcolor/solver.hpp"

namespace abcolor {

// ---------------------------------------------------------------------------
// CNF input for the satisfiability reductions.

struct CnfFormula {
    int num_vars = 0;
    std::vector<std::vector<int>> clauses;  // nonzero literals, 1-based variables
};

// DIMACS CNF: `p cnf <vars> <clauses>`, clauses as 0-terminated literal runs.
// Duplicate literals inside a clause are dropped.
inline CnfFormula read_dimacs(std::istream& in) {
    CnfFormula out;
    std::string line;
    int lineno = 0;
    long long declared = -1;
    bool have_header = false;
    std::vector<int> current;
    bool open_clause = false;
    auto fail = [&](const std::string& msg) {
        throw std::invalid_argument("dimacs, line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ss(line);
        std::string tok;
        while (ss >> tok) {
            if (tok == "c") break;  // comment to end of line
            if (tok == "p") {
                std::string kind;
                if (have_header) fail("duplicate header");
                if (!(ss >> kind >> out.num_vars >> declared) || kind != "cnf" ||
                    out.num_vars < 0 || declared < 0)
                    fail("malformed header, expected `p cnf <vars> <clauses>`");
                have_header = true;
                break;
            }
            if (!have_header) fail("clause data before header");
            int lit;
            try {
                lit = std::stoi(tok);
            } catch (...) {
                fail("not a literal: `" + tok + "`");
                return out;
            }
            if (lit == 0) {
                if (current.empty()) fail("empty clause");
                out.clauses.push_back(current);
                current.clear();
                open_clause = false;
            } else {
                if (std::abs(lit) > out.num_vars) fail("variable index overflow");
                if (std::find(current.begin(), current.end(), lit) == current.end())
                    current.push_back(lit);
                open_clause = true;
            }
        }
    }
    if (!have_header) {
        lineno = 0;
        fail("missing header");
    }
    if (open_clause) {
        lineno = 0;
        fail("unterminated clause");
    }
    if (static_cast<long long>(out.clauses.size()) != declared) {
        lineno = 0;
        fail("header declares " + std::to_string(declared) + " clauses, found " +
             std::to_string(out.clauses.size()));
    }
    return out;
}

inline CnfFormula parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    return read_dimacs(in);
}

// Input discipline for the restricted SAT source problem: clauses of size 2
// or 3, every variable exactly twice positive and once negative. Planarity
// of the incidence graph is an input contract, not checked here.
struct RestrictedSatCheck {
    std::vector<int> positive, negative;  // per-variable occurrence counts
    bool clause_sizes_ok = true;
    bool occurrences_ok = true;

    bool pass() const { return clause_sizes_ok && occurrences_ok; }
};

inline RestrictedSatCheck check_restricted_sat(const CnfFormula& phi) {
    RestrictedSatCheck out;
    out.positive.assign(phi.num_vars + 1, 0);
    out.negative.assign(phi.num_vars + 1, 0);
    for (const auto& cl : phi.clauses) {
        if (cl.size() != 2 && cl.size() != 3) out.clause_sizes_ok = false;
        for (int lit : cl) {
            if (lit > 0)
                ++out.positive[lit];
            else
                ++out.negative[-lit];
        }
    }
    for (int x = 1; x <= phi.num_vars; ++x)
        if (out.positive[x] != 2 || out.negative[x] != 1) out.occurrences_ok = false;
    return out;
}

// ---------------------------------------------------------------------------
// Reduction outputs carry a total provenance map and the layout the witness
// builders need.

struct Connector {
    int src_u = -1, src_v = -1;     // source edge
    int pos_u = -1, pos_v = -1;     // slot positions along the two path gadgets
    int end_u = -1, end_v = -1;     // attachment vertices in the output
    std::vector<int> interior;      // fresh vertices, end_u side first
};

struct ReductionOutput {
    Graph graph;
    Params params;
    std::vector<std::string> provenance;  // one entry per output vertex

    Graph source;                          // the instance that was compiled
    std::vector<std::vector<int>> paths;   // per source vertex, its path gadget
    std::vector<Connector> connectors;
    std::vector<std::pair<int, int>> pendants;  // (pendant, parent)

    int max_degree = 0;
    bool bipartite = false;
    int girth_value = 0;  // kInfinity for acyclic outputs
};

namespace reduction_detail {

struct Builder {
    std::vector<std::pair<int, int>> edges;
    std::vector<std::string> provenance;

    int fresh(std::string tag) {
        provenance.push_back(std::move(tag));
        return static_cast<int>(provenance.size()) - 1;
    }
    void edge(int a, int b) { edges.emplace_back(a, b); }

    Graph finish() const { return Graph::build(static_cast<int>(provenance.size()), edges); }
};

inline void fill_report(ReductionOutput& out) {
    out.max_degree = out.graph.max_degree();
    out.bipartite = is_bipartite(out.graph).bipartite;
    out.girth_value = girth(out.graph);
}

}  // namespace reduction_detail

// ---------------------------------------------------------------------------
// Source problem: 2-coloring where each class induces maximum degree 1
// ("defective" 2-coloring). Target: (1,2)-coloring of a high-girth instance.
//
// Every source vertex becomes a path v_0..v_{42g}; every source edge consumes
// one slot pair per endpoint and two connector paths of length 9; path
// vertices at positions divisible by 3 that stay at degree 2 get a pendant.

inline ReductionOutput reduce_defective_to_1_2(const Graph& g, int girth_target) {
    if (girth_target < 3) throw std::invalid_argument("reduction: girth target must be >= 3");
    if (g.max_degree() > 4)
        throw std::invalid_argument("reduction: source degree above 4 exhausts the slot pairs");
    int gt = girth_target;

    reduction_detail::Builder b;
    ReductionOutput out;
    out.source = g;
    out.params = {1, 2};
    out.paths.resize(g.n());

    for (int v = 0; v < g.n(); ++v) {
        for (int i = 0; i <= 42 * gt; ++i) {
            out.paths[v].push_back(
                b.fresh("vertex " + std::to_string(v) + " path " + std::to_string(i)));
            if (i > 0) b.edge(out.paths[v][i - 1], out.paths[v][i]);
        }
    }
    std::vector<int> next_slot(g.n(), 0);
    for (auto [u, v] : g.edges()) {
        int i = next_slot[u]++, j = next_slot[v]++;
        for (int half = 0; half < 2; ++half) {
            int pu = (12 * i + 6 * half) * gt, pv = (12 * j + 6 * half) * gt;
            Connector c;
            c.src_u = u;
            c.src_v = v;
            c.pos_u = pu;
            c.pos_v = pv;
            c.end_u = out.paths[u][pu];
            c.end_v = out.paths[v][pv];
            int prev = c.end_u;
            for (int s = 1; s <= 8; ++s) {
                int w = b.fresh("edge " + std::to_string(u) + "-" + std::to_string(v) +
                                " connector " + std::to_string(half) + " step " +
                                std::to_string(s));
                c.interior.push_back(w);
                b.edge(prev, w);
                prev = w;
            }
            b.edge(prev, c.end_v);
            out.connectors.push_back(std::move(c));
        }
    }
    // pendant padding at positions divisible by 3 that are still at degree 2
    std::vector<int> deg(b.provenance.size(), 0);
    for (auto [a, c] : b.edges) {
        ++deg[a];
        ++deg[c];
    }
    for (int v = 0; v < g.n(); ++v)
        for (int i = 0; i <= 14 * gt; ++i) {
            int pv = out.paths[v][3 * i];
            if (deg[pv] != 2) continue;
            int w = b.fresh("pendant of vertex " + std::to_string(v) + " path " +
                            std::to_string(3 * i));
            b.edge(pv, w);
            out.pendants.emplace_back(w, pv);
        }

    out.graph = b.finish();
    out.provenance = std::move(b.provenance);
    reduction_detail::fill_report(out);
    if (out.max_degree > 3)
        throw std::runtime_error("reduction: output exceeded maximum degree 3");
    if (g.m() > 0 && out.girth_value < 12 * gt + 18)
        throw std::runtime_error("reduction: output girth below 12g+18");
    return out;
}

// ---------------------------------------------------------------------------
// Source problem: 3-coloring. Target: (1,3)-coloring of a high-girth
// instance. Paths v_0..v_{18g} per vertex, slot positions 6ig per edge joined
// by length-2 connectors, every path vertex padded to degree 4 with pendants.

inline ReductionOutput reduce_3col_to_1_3(const Graph& g, int girth_target) {
    if (girth_target < 3) throw std::invalid_argument("reduction: girth target must be >= 3");
    if (g.max_degree() > 4)
        throw std::invalid_argument("reduction: source degree above 4 exhausts the slots");
    int gt = girth_target;

    reduction_detail::Builder b;
    ReductionOutput out;
    out.source = g;
    out.params = {1, 3};
    out.paths.resize(g.n());

    for (int v = 0; v < g.n(); ++v) {
        for (int i = 0; i <= 18 * gt; ++i) {
            out.paths[v].push_back(
                b.fresh("vertex " + std::to_string(v) + " path " + std::to_string(i)));
            if (i > 0) b.edge(out.paths[v][i - 1], out.paths[v][i]);
        }
    }
    std::vector<int> next_slot(g.n(), 0);
    for (auto [u, v] : g.edges()) {
        int i = next_slot[u]++, j = next_slot[v]++;
        Connector c;
        c.src_u = u;
        c.src_v = v;
        c.pos_u = 6 * i * gt;
        c.pos_v = 6 * j * gt;
        c.end_u = out.paths[u][c.pos_u];
        c.end_v = out.paths[v][c.pos_v];
        int w = b.fresh("edge " + std::to_string(u) + "-" + std::to_string(v) + " connector");
        c.interior.push_back(w);
        b.edge(c.end_u, w);
        b.edge(w, c.end_v);
        out.connectors.push_back(std::move(c));
    }
    std::vector<int> deg(b.provenance.size(), 0);
    for (auto [a, c] : b.edges) {
        ++deg[a];
        ++deg[c];
    }
    for (int v = 0; v < g.n(); ++v)
        for (int i = 0; i <= 18 * gt; ++i) {
            int pv = out.paths[v][i];
            while (deg[pv] < 4) {
                int w = b.fresh("pendant of vertex " + std::to_string(v) + " path " +
                                std::to_string(i));
                b.edge(pv, w);
                ++deg[pv];
                out.pendants.emplace_back(w, pv);
            }
        }

    out.graph = b.finish();
    out.provenance = std::move(b.provenance);
    reduction_detail::fill_report(out);
    if (!out.bipartite) throw std::runtime_error("reduction: output is not bipartite");
    if (out.max_degree != 4) throw std::runtime_error("reduction: output degree is not 4");
    if (g.m() > 0 && out.girth_value < 18 * gt + 6)
        throw std::runtime_error("reduction: output girth below 18g+6");
    return out;
}

// ---------------------------------------------------------------------------
// Forward witnesses: lift a valid source coloring to a valid coloring of the
// reduction output.

namespace reduction_detail {

// completes connector interiors by exact search over the local patch, with
// every already-colored vertex at distance <= 2 of the interior pinned
inline void solve_connector(const Graph& g, Params p, const Connector& c, MixedColoring& col) {
    std::set<int> patch(c.interior.begin(), c.interior.end());
    for (int e : {c.end_u, c.end_v}) {
        patch.insert(e);
        for (int w : g.neighbors(e)) patch.insert(w);
    }
    auto sub = induced(g, std::vector<int>(patch.begin(), patch.end()));
    SearchConstraints cons = SearchConstraints::free_for(sub.graph.n());
    for (int i = 0; i < sub.graph.n(); ++i) {
        const auto& vc = col.at(sub.to_host[i]);
        if (vc.kind != ColorKind::none) cons.fixed[i] = vc;
    }
    auto res = decide(sub.graph, p, {}, &cons);
    if (res.status != SolveStatus::colorable)
        throw std::runtime_error("witness: connector patch has no extension");
    for (int i = 0; i < sub.graph.n(); ++i)
        if (col.at(sub.to_host[i]).kind == ColorKind::none) col.set(sub.to_host[i], res.witness->at(i));
}

}  // namespace reduction_detail

// source_coloring: 0/1 per source vertex, each class inducing max degree 1.
// Positions divisible by 3 copy the source class as a d2 color. The two
// cells of each gap run (d1, spare-d2) past a per-gadget switch point and
// (spare-d2, d1) before it; a conflicting edge places the switch of each
// endpoint at one of its two connectors, freeing the spare d2 color for the
// connector interior there, which is what makes the length-9 paths
// extendable.
inline MixedColoring build_witness_defective_1_2(const std::vector<int>& source_coloring,
                                                 const ReductionOutput& red) {
    const Graph& src = red.source;
    if (static_cast<int>(source_coloring.size()) != src.n())
        throw std::invalid_argument("witness: coloring size mismatch");
    std::vector<int> same_class_deg(src.n(), 0);
    for (auto [u, v] : src.edges()) {
        if (source_coloring[u] < 0 || source_coloring[u] > 1 || source_coloring[v] < 0 ||
            source_coloring[v] > 1)
            throw std::invalid_argument("witness: source colors must be 0 or 1");
        if (source_coloring[u] == source_coloring[v]) {
            if (++same_class_deg[u] > 1 || ++same_class_deg[v] > 1)
                throw std::invalid_argument(
                    "witness: a color class induces degree above 1 in the source");
        }
    }

    std::vector<int> switch_at(src.n(), 0);
    std::map<std::pair<int, int>, int> half_seen;
    for (const auto& c : red.connectors) {
        int half = half_seen[{c.src_u, c.src_v}]++;
        if (source_coloring[c.src_u] != source_coloring[c.src_v]) continue;
        if (half == 0)
            switch_at[c.src_v] = c.pos_v;
        else
            switch_at[c.src_u] = c.pos_u;
    }

    MixedColoring col(red.graph.n());
    for (int v = 0; v < src.n(); ++v) {
        int cls = source_coloring[v], sp = switch_at[v];
        for (size_t i = 0; i < red.paths[v].size(); ++i) {
            int out_v = red.paths[v][i];
            int p = static_cast<int>(i);
            bool flipped = (p - p % 3) < sp;  // gap lies before the switch
            switch (p % 3) {
                case 0: col.set_d2(out_v, cls); break;
                case 1:
                    if (flipped)
                        col.set_d2(out_v, 1 - cls);
                    else
                        col.set_d1(out_v, 0);
                    break;
                default:
                    if (flipped)
                        col.set_d1(out_v, 0);
                    else
                        col.set_d2(out_v, 1 - cls);
                    break;
            }
        }
    }
    for (auto [pendant, parent] : red.pendants) {
        (void)parent;
        col.set_d1(pendant, 0);
    }
    for (const auto& c : red.connectors)
        reduction_detail::solve_connector(red.graph, red.params, c, col);

    auto bad = verify(red.graph, red.params, col);
    if (!bad.empty()) throw std::runtime_error("witness: lifted coloring failed verification");
    return col;
}

// source_coloring: proper 3-coloring with colors 0..2; path position i takes
// the d2 color (c + i) mod 3, everything else the d1 color.
inline MixedColoring build_witness_3col_1_3(const std::vector<int>& source_coloring,
                                            const ReductionOutput& red) {
    const Graph& src = red.source;
    if (static_cast<int>(source_coloring.size()) != src.n())
        throw std::invalid_argument("witness: coloring size mismatch");
    for (auto [u, v] : src.edges())
        if (source_coloring[u] == source_coloring[v])
            throw std::invalid_argument("witness: source coloring has a monochromatic edge");
    for (int c : source_coloring)
        if (c < 0 || c > 2) throw std::invalid_argument("witness: source colors must be 0..2");

    MixedColoring col(red.graph.n());
    for (int v = 0; v < src.n(); ++v)
        for (size_t i = 0; i < red.paths[v].size(); ++i)
            col.set_d2(red.paths[v][i], (source_coloring[v] + static_cast<int>(i)) % 3);
    for (auto [pendant, parent] : red.pendants) {
        (void)parent;
        col.set_d1(pendant, 0);
    }
    for (const auto& c : red.connectors) col.set_d1(c.interior.at(0), 0);

    auto bad = verify(red.graph, red.params, col);
    if (!bad.empty()) throw std::runtime_error("witness: lifted coloring failed verification");
    return col;
}

// ---------------------------------------------------------------------------
// Satisfiability reductions assembled from behavioral gadgets.

struct SatReductionOutput {
    Graph graph;
    Params params;
    std::vector<std::string> provenance;
    std::vector<std::array<int, 3>> clause_ports;  // output ids, one row per clause
    std::vector<std::array<int, 3>> var_terminals; // pos1, pos2, neg (or v, v, vbar)
};

namespace reduction_detail {

inline void require_gadget(const GadgetSpec& spec, const GadgetProperty& property, Params p,
                           const Budget& budget, const std::string& what) {
    GadgetSpec probe = spec;
    probe.property = property;
    auto colorable = decide(spec.gadget, p, budget);
    if (colorable.status != SolveStatus::colorable)
        throw std::invalid_argument("reduction: " + what + " gadget is not colorable at the target parameters");
    auto res = check_gadget(probe, p, budget);
    if (res.status == GadgetCheckStatus::unknown)
        throw std::invalid_argument("reduction: " + what + " gadget check exceeded the budget");
    if (res.status == GadgetCheckStatus::fails_with_witness) {
        std::string names;
        for (const auto& s : property.ports) names += " " + s;
        throw std::invalid_argument("reduction: " + what + " gadget fails property" + names);
    }
}

}  // namespace reduction_detail

// Compiles a restricted SAT instance against checked variable and clause
// gadgets. params selects the wiring:
//   (1,k): occurrences identify the variable port with the clause port;
//   (2,k): occurrences become edges, one variable terminal per occurrence,
//          and 2-literal clauses consume a forced-d2 helper on their third
//          port (required argument in that mode).
inline SatReductionOutput reduce_sat_with_gadgets(const CnfFormula& phi, int k,
                                                  const GadgetSpec& var_gadget,
                                                  const GadgetSpec& clause_gadget, Params params,
                                                  const GadgetSpec* helper = nullptr,
                                                  const Budget& budget = {}) {
    auto rc = check_restricted_sat(phi);
    if (!rc.pass())
        throw std::invalid_argument(
            "reduction: formula is not restricted (sizes 2-3, two positive and one negative "
            "occurrence per variable)");
    if (params.d2 != k) throw std::invalid_argument("reduction: params do not match k");

    bool identify = params.d1 == 1;
    if (!identify && params.d1 != 2)
        throw std::invalid_argument("reduction: only (1,k) and (2,k) wirings are supported");

    reduction_detail::require_gadget(clause_gadget,
                                     {GadgetPropertyKind::at_least_one_d2, {"x", "y", "z"}},
                                     params, budget, "clause");
    if (identify) {
        reduction_detail::require_gadget(
            var_gadget, {GadgetPropertyKind::iff_d1_d2, {"v", "vbar"}}, params, budget, "variable");
    } else {
        reduction_detail::require_gadget(
            var_gadget, {GadgetPropertyKind::iff_d1_d2, {"pos1", "neg"}}, params, budget,
            "variable");
        reduction_detail::require_gadget(
            var_gadget, {GadgetPropertyKind::iff_d1_d2, {"pos2", "neg"}}, params, budget,
            "variable");
        bool has_two_clause = false;
        for (const auto& cl : phi.clauses) has_two_clause |= cl.size() == 2;
        if (has_two_clause) {
            if (!helper)
                throw std::invalid_argument(
                    "reduction: 2-literal clauses need a forced-d2 helper gadget");
            reduction_detail::require_gadget(*helper, {GadgetPropertyKind::forced_d2, {"s"}},
                                             params, budget, "helper");
        }
    }

    // lay out copies
    int n = 0;
    std::vector<std::string> prov;
    auto add_copy = [&](const Graph& g, const std::string& tag) {
        int base = n;
        n += g.n();
        for (int v = 0; v < g.n(); ++v) prov.push_back(tag + " vertex " + std::to_string(v));
        return base;
    };
    std::vector<std::pair<int, int>> edges;
    auto copy_edges = [&](const Graph& g, int base) {
        for (auto [u, v] : g.edges()) edges.emplace_back(base + u, base + v);
    };

    SatReductionOutput out;
    out.params = params;

    std::vector<int> var_base(phi.num_vars + 1);
    for (int x = 1; x <= phi.num_vars; ++x) {
        var_base[x] = add_copy(var_gadget.gadget, "variable " + std::to_string(x));
        copy_edges(var_gadget.gadget, var_base[x]);
    }
    std::vector<int> clause_base(phi.clauses.size());
    for (size_t c = 0; c < phi.clauses.size(); ++c) {
        clause_base[c] = add_copy(clause_gadget.gadget, "clause " + std::to_string(c));
        copy_edges(clause_gadget.gadget, clause_base[c]);
    }

    const char* port_names[3] = {"x", "y", "z"};
    std::vector<int> pos_used(phi.num_vars + 1, 0);
    std::vector<std::pair<int, int>> identifications;  // keep a, merge b into a

    out.clause_ports.resize(phi.clauses.size());
    for (size_t c = 0; c < phi.clauses.size(); ++c) {
        for (int t = 0; t < 3; ++t)
            out.clause_ports[c][t] = clause_base[c] + clause_gadget.port(port_names[t]);
        for (size_t t = 0; t < phi.clauses[c].size(); ++t) {
            int lit = phi.clauses[c][t];
            int x = std::abs(lit);
            int var_vertex;
            if (identify) {
                var_vertex = var_base[x] + var_gadget.port(lit > 0 ? "v" : "vbar");
            } else {
                if (lit > 0)
                    var_vertex = var_base[x] + var_gadget.port(pos_used[x]++ == 0 ? "pos1" : "pos2");
                else
                    var_vertex = var_base[x] + var_gadget.port("neg");
            }
            int port = out.clause_ports[c][t];
            if (identify)
                identifications.emplace_back(var_vertex, port);
            else
                edges.emplace_back(var_vertex, port);
        }
        if (phi.clauses[c].size() == 2) {
            if (identify)
                throw std::invalid_argument(
                    "reduction: the (1,k) wiring requires fixed-size 3 clauses");
            int hb = add_copy(helper->gadget, "clause " + std::to_string(c) + " helper");
            copy_edges(helper->gadget, hb);
            edges.emplace_back(out.clause_ports[c][2], hb + helper->port("s"));
        }
    }

    out.var_terminals.resize(phi.num_vars + 1);
    for (int x = 1; x <= phi.num_vars; ++x) {
        if (identify) {
            int v = var_base[x] + var_gadget.port("v");
            int vb = var_base[x] + var_gadget.port("vbar");
            out.var_terminals[x] = {v, v, vb};
        } else {
            out.var_terminals[x] = {var_base[x] + var_gadget.port("pos1"),
                                    var_base[x] + var_gadget.port("pos2"),
                                    var_base[x] + var_gadget.port("neg")};
        }
    }

    if (!identifications.empty()) {
        // merge clause ports into variable ports and compact ids
        std::vector<int> target(n);
        for (int v = 0; v < n; ++v) target[v] = v;
        for (auto [keep, merge] : identifications) target[merge] = keep;
        std::vector<int> remap(n, -1);
        int compact = 0;
        for (int v = 0; v < n; ++v)
            if (target[v] == v) remap[v] = compact++;
        std::vector<std::string> prov2(compact);
        for (int v = 0; v < n; ++v) {
            int rep = remap[target[v]];
            if (prov2[rep].empty())
                prov2[rep] = prov[v];
            else if (target[v] != v)
                prov2[rep] += " = " + prov[v];
        }
        for (auto& e : edges) {
            e.first = remap[target[e.first]];
            e.second = remap[target[e.second]];
        }
        for (auto& row : out.clause_ports)
            for (auto& v : row) v = remap[target[v]];
        for (auto& row : out.var_terminals)
            for (auto& v : row) v = remap[target[v]];
        n = compact;
        prov = std::move(prov2);
    }

    out.graph = Graph::build(n, edges);
    out.provenance = std::move(prov);
    return out;
}

// ---------------------------------------------------------------------------
// 3-coloring to (3,k): attach a checked forced-d1 gadget to every source
// vertex by identifying its v port.

struct AttachReductionOutput {
    Graph graph;
    Params params;
    std::vector<std::string> provenance;
    std::vector<int> vertex_image;  // source vertex -> output vertex
};

inline AttachReductionOutput reduce_3col_to_3_k(const Graph& g, int k, const GadgetSpec& h1,
                                                const Budget& budget = {}) {
    if (g.max_degree() > 4)
        throw std::invalid_argument("reduction: source must have maximum degree 4");
    Params params{3, k};
    reduction_detail::require_gadget(h1, {GadgetPropertyKind::forced_d1, {"u"}}, params, budget,
                                     "attachment");
    reduction_detail::require_gadget(h1, {GadgetPropertyKind::forced_d1, {"v"}}, params, budget,
                                     "attachment");

    AttachReductionOutput out;
    out.params = params;
    int port_v = h1.port("v");
    std::vector<std::pair<int, int>> edges;
    int n = 0;
    out.vertex_image.resize(g.n());
    for (int w = 0; w < g.n(); ++w) {
        int base = n;
        n += h1.gadget.n();
        for (int x = 0; x < h1.gadget.n(); ++x)
            out.provenance.push_back("vertex " + std::to_string(w) + " gadget vertex " +
                                     std::to_string(x));
        for (auto [a, c] : h1.gadget.edges()) edges.emplace_back(base + a, base + c);
        out.vertex_image[w] = base + port_v;
        out.provenance[out.vertex_image[w]] = "vertex " + std::to_string(w);
    }
    for (auto [u, w] : g.edges()) edges.emplace_back(out.vertex_image[u], out.vertex_image[w]);
    out.graph = Graph::build(n, edges);
    if (out.graph.max_degree() > 3 * k + 4)
        throw std::runtime_error("reduction: output exceeded maximum degree 3k+4");
    return out;
}

}  // namespace abcolor

#endif  // ABCOLOR_REDUCTIONS_HPP
