#ifndef ABCOLOR_CLI_HPP
#define ABCOLOR_CLI_HPP

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "abcolor/colorers.hpp"
#include "abcolor/coloring.hpp"
#include "abcolor/gadgets.hpp"
#include "abcolor/generators.hpp"
#include "abcolor/graph.hpp"
#include "abcolor/graph_io.hpp"
#include "abcolor/reductions.hpp"
#include "abcolor/solver.hpp"

namespace abcolor {

// exit codes: 0 property holds / colorable / valid; 1 fails / not colorable;
// 2 unknown or budget exhausted; 3 input error
struct RunReport {
    std::string command;
    std::string input_digest;
    std::string status_line;
    long long nodes = 0;
    int exit_code = 3;
};

namespace cli_detail {

inline std::string fnv_digest(const std::string& data) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream out;
    out << std::hex << h;
    return out.str();
}

inline std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open `" + path + "`");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline Graph load_graph(const std::string& path, std::string* digest = nullptr) {
    std::string text = slurp(path);
    if (digest) *digest = fnv_digest(text);
    return parse_graph(text);
}

// Gadget files are graph files with port and property comment lines:
//   c port <name> <vertex (1-based)>
//   c property <kind> <port names...>
inline GadgetSpec load_gadget(const std::string& path) {
    std::string text = slurp(path);
    GadgetSpec spec;
    spec.gadget = parse_graph(text);
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ss(line);
        std::string tag, what;
        if (!(ss >> tag >> what)) continue;
        if (tag != "c") continue;
        if (what == "port") {
            std::string name;
            int v;
            if (!(ss >> name >> v) || v < 1 || v > spec.gadget.n())
                throw std::invalid_argument("gadget file: malformed port line `" + line + "`");
            spec.ports.emplace_back(name, v - 1);
        } else if (what == "property") {
            std::string kind;
            if (!(ss >> kind))
                throw std::invalid_argument("gadget file: malformed property line");
            if (kind == "forced-d2")
                spec.property.kind = GadgetPropertyKind::forced_d2;
            else if (kind == "forced-d1")
                spec.property.kind = GadgetPropertyKind::forced_d1;
            else if (kind == "iff-d1-d2")
                spec.property.kind = GadgetPropertyKind::iff_d1_d2;
            else if (kind == "at-least-one-d2")
                spec.property.kind = GadgetPropertyKind::at_least_one_d2;
            else if (kind == "corner-pattern")
                spec.property.kind = GadgetPropertyKind::corner_pattern;
            else
                throw std::invalid_argument("gadget file: unknown property `" + kind + "`");
            std::string name;
            spec.property.ports.clear();
            while (ss >> name) spec.property.ports.push_back(name);
        }
    }
    if (spec.ports.empty()) throw std::invalid_argument("gadget file: no ports declared");
    spec.validate();
    return spec;
}

inline const char* property_keyword(GadgetPropertyKind k) {
    switch (k) {
        case GadgetPropertyKind::forced_d2: return "forced-d2";
        case GadgetPropertyKind::forced_d1: return "forced-d1";
        case GadgetPropertyKind::iff_d1_d2: return "iff-d1-d2";
        case GadgetPropertyKind::at_least_one_d2: return "at-least-one-d2";
        case GadgetPropertyKind::corner_pattern: return "corner-pattern";
    }
    return "?";
}

inline void write_gadget(std::ostream& out, const GadgetSpec& spec,
                         const std::vector<std::string>& comments) {
    std::vector<std::string> all = comments;
    for (const auto& [name, v] : spec.ports)
        all.push_back("port " + name + " " + std::to_string(v + 1));
    std::string prop = std::string("property ") + property_keyword(spec.property.kind);
    for (const auto& p : spec.property.ports) prop += " " + p;
    all.push_back(prop);
    write_graph(out, spec.gadget, all);
}

inline void emit(std::ostream& out, const std::string& text, const std::string& to_file) {
    if (to_file.empty()) {
        out << text;
    } else {
        std::ofstream f(to_file);
        if (!f) throw std::invalid_argument("cannot write `" + to_file + "`");
        f << text;
    }
}

}  // namespace cli_detail

inline RunReport run_cli(const std::vector<std::string>& args, std::ostream& out,
                         std::ostream& err) {
    RunReport report;
    for (const auto& a : args) report.command += (report.command.empty() ? "" : " ") + a;

    CLI::App app{"(a,b)-coloring toolkit: exact solving, verified constructive colorers, "
                 "extremal generators and hardness-reduction compilers"};
    app.require_subcommand(1);

    // --- solve ------------------------------------------------------------
    auto* solve_cmd = app.add_subcommand("solve", "decide (a,b)-colorability exactly");
    int sa = 0, sb = 0;
    long long budget_nodes = 10'000'000;
    std::string graph_file;
    solve_cmd->add_option("-a", sa, "number of d1 classes")->required();
    solve_cmd->add_option("-b", sb, "number of d2 classes")->required();
    solve_cmd->add_option("--budget", budget_nodes, "search node budget");
    solve_cmd->add_option("graph", graph_file, "graph file")->required();

    // --- verify -----------------------------------------------------------
    auto* verify_cmd = app.add_subcommand("verify", "check a coloring certificate");
    int va = 0, vb = 0;
    std::string vgraph_file, cert_file;
    verify_cmd->add_option("-a", va, "number of d1 classes")->required();
    verify_cmd->add_option("-b", vb, "number of d2 classes")->required();
    verify_cmd->add_option("graph", vgraph_file, "graph file")->required();
    verify_cmd->add_option("certificate", cert_file, "certificate file")->required();

    // --- color ------------------------------------------------------------
    auto* color_cmd = app.add_subcommand("color", "run a constructive colorer");
    std::string algo, cgraph_file;
    int ck = 0;
    color_cmd
        ->add_option("--algo", algo,
                     "one of degenerate, cactus, tf-outerplanar, planar-g4, planar")
        ->required();
    color_cmd->add_option("--k", ck, "degeneracy bound for --algo degenerate (default: computed)");
    color_cmd->add_option("graph", cgraph_file, "graph file")->required();

    // --- generate ----------------------------------------------------------
    auto* gen_cmd = app.add_subcommand("generate", "emit a parameterized graph family member");
    std::string family, gen_out, gen_input;
    int gk = 1, gl = 1, gc = 3, gn = 10, gw = 3, gh = 3, gcopies = 2, gclique = 3, ggirth = 4;
    uint64_t gseed = 1;
    gen_cmd->add_option("--family", family, "family name")->required();
    gen_cmd->add_option("--k", gk, "family parameter k");
    gen_cmd->add_option("--l", gl, "family parameter l");
    gen_cmd->add_option("--c", gc, "d1 class count recorded for blowup");
    gen_cmd->add_option("--n", gn, "order for random families");
    gen_cmd->add_option("--girth", ggirth, "minimum girth for random cacti");
    gen_cmd->add_option("--width", gw, "grid width");
    gen_cmd->add_option("--height", gh, "grid height");
    gen_cmd->add_option("--copies", gcopies, "windmill copies");
    gen_cmd->add_option("--clique", gclique, "windmill clique size");
    gen_cmd->add_option("--seed", gseed, "random seed");
    gen_cmd->add_option("--out", gen_out, "output file (default stdout)");
    gen_cmd->add_option("input", gen_input, "input graph (blowup only)");

    // --- reduce -------------------------------------------------------------
    auto* red_cmd = app.add_subcommand("reduce", "compile a source instance");
    std::string from, to, red_input, red_out, map_out;
    std::string var_file, clause_file, helper_file;
    int rk = 1, rg = 3;
    long long red_budget = 10'000'000;
    red_cmd->add_option("--from", from, "source problem: defective2, 3col, sat")->required();
    red_cmd->add_option("--to", to, "target parameters: 1-2, 1-3, 1-k, 2-k, 3-k")->required();
    red_cmd->add_option("--k", rk, "k for parameterized targets");
    red_cmd->add_option("--g", rg, "girth target for the path reductions");
    red_cmd->add_option("--var-gadget", var_file, "variable gadget file (default: shipped)");
    red_cmd->add_option("--clause-gadget", clause_file, "clause gadget file (default: shipped)");
    red_cmd->add_option("--helper-gadget", helper_file, "forced-d2 helper file (default: shipped)");
    red_cmd->add_option("--budget", red_budget, "budget for gadget prechecks");
    red_cmd->add_option("--out", red_out, "output graph file (default stdout)");
    red_cmd->add_option("--map", map_out, "provenance sidecar file (default: inline comments)");
    red_cmd->add_option("input", red_input, "source instance file")->required();

    // --- gadget-check --------------------------------------------------------
    auto* gc_cmd = app.add_subcommand("gadget-check", "evaluate a gadget property over all colorings");
    std::string gadget_file;
    int gca = 2, gcb = 1;
    long long gc_budget = 10'000'000;
    gc_cmd->add_option("--gadget", gadget_file, "gadget file")->required();
    gc_cmd->add_option("-a", gca, "number of d1 classes")->required();
    gc_cmd->add_option("-b", gcb, "number of d2 classes")->required();
    gc_cmd->add_option("--budget", gc_budget, "search node budget");

    // --- profile-obstructions ------------------------------------------------
    auto* prof_cmd = app.add_subcommand("profile-obstructions",
                                        "obstruction profile of a removed degree-2 vertex");
    std::string pgraph_file;
    int pk = 1, pv1 = 1, pv2 = 2;
    long long p_budget = 10'000'000;
    prof_cmd->add_option("-k", pk, "number of d2 classes")->required();
    prof_cmd->add_option("--v1", pv1, "first neighbor (1-based)")->required();
    prof_cmd->add_option("--v2", pv2, "second neighbor (1-based)")->required();
    prof_cmd->add_option("--budget", p_budget, "search node budget");
    prof_cmd->add_option("graph", pgraph_file, "graph file (the instance minus the vertex)")
        ->required();

    try {
        std::vector<const char*> argv{"abcolor"};
        for (const auto& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help and friends
            out << app.help();
            report.exit_code = 0;
            return report;
        }
        err << "error: " << e.what() << "\n";
        report.exit_code = 3;
        return report;
    }

    try {
        if (*solve_cmd) {
            Graph g = cli_detail::load_graph(graph_file, &report.input_digest);
            out << "c input " << report.input_digest << "\n";
            auto res = decide(g, {sa, sb}, {budget_nodes, {}});
            report.nodes = res.nodes_explored;
            report.status_line = std::string("s ") + status_name(res.status);
            out << report.status_line << "\n";
            out << "c nodes " << res.nodes_explored << "\n";
            if (res.witness) write_certificate(out, {sa, sb}, canonicalized(*res.witness));
            report.exit_code = res.status == SolveStatus::colorable     ? 0
                               : res.status == SolveStatus::not_colorable ? 1
                                                                          : 2;
        } else if (*verify_cmd) {
            Graph g = cli_detail::load_graph(vgraph_file, &report.input_digest);
            auto cert = parse_certificate(cli_detail::slurp(cert_file), g.n());
            if (cert.params.d1 != va || cert.params.d2 != vb)
                throw std::invalid_argument("certificate parameters do not match -a/-b");
            auto bad = verify(g, {va, vb}, cert.coloring);
            report.status_line = bad.empty() ? "s VALID" : "s INVALID";
            out << report.status_line << "\n";
            for (const auto& viol : bad) {
                out << "v " << violation_name(viol.kind) << " " << viol.u + 1;
                if (viol.v >= 0) out << " " << viol.v + 1;
                out << "\n";
            }
            report.exit_code = bad.empty() ? 0 : 1;
        } else if (*color_cmd) {
            Graph g = cli_detail::load_graph(cgraph_file, &report.input_digest);
            ColoredResult res;
            if (algo == "degenerate") {
                int k = ck > 0 ? ck : degeneracy_ordering(g).degeneracy;
                res = color_degenerate(g, std::max(k, 1));
            } else if (algo == "cactus") {
                res.coloring = color_cactus_g4(g);
                res.params = {2, 1};
                auto [u1, u2] = count_classes(res.coloring);
                res.certificate = {"cactus", g.n(), 0, 0, 0, u1, u2, {"1", 1, 1, 0}};
            } else if (algo == "tf-outerplanar") {
                res = color_tf_outerplanar(g);
            } else if (algo == "planar-g4") {
                res = color_planar_g4(g);
            } else if (algo == "planar") {
                res = color_planar(g);
            } else {
                throw std::invalid_argument("unknown algorithm `" + algo + "`");
            }
            const auto& c = res.certificate;
            out << "c ALGO " << c.algorithm << "\n";
            out << "c BOUND n=" << c.n << " N=" << c.threshold << " used_d2=" << c.used_d2
                << " claim=" << c.claim.formula << "\n";
            write_certificate(out, res.params, canonicalized(res.coloring));
            report.status_line = "s COLORING";
            report.exit_code = 0;
        } else if (*gen_cmd) {
            std::ostringstream body;
            std::vector<std::string> prov{"family " + family};
            auto emit_graph = [&](const Graph& g) { write_graph(body, g, prov); };
            if (family == "clique-star") {
                prov.push_back("k " + std::to_string(gk) + " l " + std::to_string(gl));
                emit_graph(gen_clique_star(gk, gl));
            } else if (family == "theta") {
                prov.push_back("k " + std::to_string(gk));
                emit_graph(gen_theta(gk));
            } else if (family == "apex-triangles") {
                prov.push_back("k " + std::to_string(gk));
                emit_graph(gen_apex_triangles(gk));
            } else if (family == "friendship") {
                prov.push_back("k " + std::to_string(gk));
                cli_detail::write_gadget(body, gen_friendship(gk), prov);
            } else if (family == "windmill") {
                emit_graph(gen_windmill(gcopies, gclique));
            } else if (family == "blowup") {
                if (gen_input.empty()) throw std::invalid_argument("blowup needs an input graph");
                Graph base = cli_detail::load_graph(gen_input, &report.input_digest);
                prov.push_back("c " + std::to_string(gc) + " k " + std::to_string(gk));
                emit_graph(gen_blowup(base, gc, gk));
            } else if (family == "grid") {
                prov.push_back(std::to_string(gw) + "x" + std::to_string(gh));
                emit_graph(grid_graph(gw, gh));
            } else if (family == "random-kdegenerate") {
                prov.push_back("n " + std::to_string(gn) + " k " + std::to_string(gk) + " seed " +
                               std::to_string(gseed));
                emit_graph(random_kdegenerate(gn, gk, gseed));
            } else if (family == "random-cactus") {
                prov.push_back("n " + std::to_string(gn) + " girth " + std::to_string(ggirth) +
                               " seed " + std::to_string(gseed));
                emit_graph(random_cactus(gn, ggirth, gseed));
            } else if (family == "random-tf-outerplanar") {
                prov.push_back("n " + std::to_string(gn) + " seed " + std::to_string(gseed));
                emit_graph(random_tf_outerplanar(gn, gseed));
            } else if (family == "random-stacked") {
                prov.push_back("n " + std::to_string(gn) + " seed " + std::to_string(gseed));
                emit_graph(random_stacked_triangulation(gn, gseed));
            } else if (family == "gadget-var-2-1") {
                cli_detail::write_gadget(body, var_gadget_2_1().spec, prov);
            } else if (family == "gadget-clause-2-1") {
                cli_detail::write_gadget(body, clause_gadget_2_1(), prov);
            } else if (family == "gadget-var-1-k") {
                prov.push_back("k " + std::to_string(gk));
                cli_detail::write_gadget(body, var_gadget_1_k(gk), prov);
            } else if (family == "gadget-clause-1-k") {
                prov.push_back("k " + std::to_string(gk));
                cli_detail::write_gadget(body, clause_gadget_1_k(gk), prov);
            } else if (family == "gadget-h1") {
                prov.push_back("k " + std::to_string(gk));
                cli_detail::write_gadget(body, h1_gadget(gk).spec, prov);
            } else {
                throw std::invalid_argument("unknown family `" + family + "`");
            }
            if (family.rfind("random-", 0) == 0)
                out << "c seed " << gseed << "\n";
            cli_detail::emit(out, body.str(), gen_out);
            report.status_line = "s GENERATED " + family;
            report.exit_code = 0;
        } else if (*red_cmd) {
            std::ostringstream body, mapping;
            if (from == "defective2" || from == "3col") {
                Graph g = cli_detail::load_graph(red_input, &report.input_digest);
                ReductionOutput red;
                if (from == "defective2" && to == "1-2")
                    red = reduce_defective_to_1_2(g, rg);
                else if (from == "3col" && to == "1-3")
                    red = reduce_3col_to_1_3(g, rg);
                else
                    throw std::invalid_argument("unsupported reduction " + from + " -> " + to);
                std::vector<std::string> comments{
                    "reduced from " + from + " to (" + std::to_string(red.params.d1) + "," +
                        std::to_string(red.params.d2) + ")",
                    "girth target " + std::to_string(rg),
                    "slot positions follow the forcing argument: multiples of 6g",
                    "structure maxdeg=" + std::to_string(red.max_degree) +
                        " bipartite=" + std::to_string(red.bipartite) + " girth=" +
                        (red.girth_value == kInfinity ? std::string("inf")
                                                      : std::to_string(red.girth_value))};
                for (int v = 0; v < red.graph.n(); ++v)
                    mapping << "c map " << v + 1 << " " << red.provenance[v] << "\n";
                if (map_out.empty()) {
                    write_graph(body, red.graph, comments);
                    body << mapping.str();
                } else {
                    write_graph(body, red.graph, comments);
                    cli_detail::emit(out, mapping.str(), map_out);
                }
            } else if (from == "sat") {
                auto phi = parse_dimacs(cli_detail::slurp(red_input));
                report.input_digest = cli_detail::fnv_digest(cli_detail::slurp(red_input));
                Params params;
                GadgetSpec var, clause;
                std::optional<GadgetSpec> helper;
                if (to == "2-k") {
                    params = {2, rk};
                    if (rk != 1 && (var_file.empty() || clause_file.empty()))
                        throw std::invalid_argument(
                            "shipped (2,k) gadget candidates exist for k=1 only; pass gadget "
                            "files for larger k");
                    var = var_file.empty() ? var_gadget_2_1().spec
                                           : cli_detail::load_gadget(var_file);
                    clause = clause_file.empty() ? clause_gadget_2_1()
                                                 : cli_detail::load_gadget(clause_file);
                    helper = helper_file.empty() ? gen_friendship(rk)
                                                 : cli_detail::load_gadget(helper_file);
                } else if (to == "1-k") {
                    params = {1, rk};
                    var = var_file.empty() ? var_gadget_1_k(rk)
                                           : cli_detail::load_gadget(var_file);
                    clause = clause_file.empty() ? clause_gadget_1_k(rk)
                                                 : cli_detail::load_gadget(clause_file);
                } else {
                    throw std::invalid_argument("sat reduces to 1-k or 2-k");
                }
                auto red = reduce_sat_with_gadgets(phi, rk, var, clause, params,
                                                   helper ? &*helper : nullptr,
                                                   {red_budget, {}});
                std::vector<std::string> comments{
                    "reduced from sat to (" + std::to_string(params.d1) + "," +
                    std::to_string(params.d2) + ")"};
                for (int v = 0; v < red.graph.n(); ++v)
                    mapping << "c map " << v + 1 << " " << red.provenance[v] << "\n";
                write_graph(body, red.graph, comments);
                if (map_out.empty())
                    body << mapping.str();
                else
                    cli_detail::emit(out, mapping.str(), map_out);
            } else if (from == "3col" && to == "3-k") {
                Graph g = cli_detail::load_graph(red_input, &report.input_digest);
                auto h1 = helper_file.empty() ? h1_gadget(rk).spec
                                              : cli_detail::load_gadget(helper_file);
                auto red = reduce_3col_to_3_k(g, rk, h1, {red_budget, {}});
                std::vector<std::string> comments{"reduced from 3col to (3," +
                                                  std::to_string(rk) + ")"};
                for (int v = 0; v < red.graph.n(); ++v)
                    mapping << "c map " << v + 1 << " " << red.provenance[v] << "\n";
                write_graph(body, red.graph, comments);
                if (map_out.empty())
                    body << mapping.str();
                else
                    cli_detail::emit(out, mapping.str(), map_out);
            } else {
                throw std::invalid_argument("unsupported reduction " + from + " -> " + to);
            }
            cli_detail::emit(out, body.str(), red_out);
            report.status_line = "s REDUCED";
            report.exit_code = 0;
        } else if (*gc_cmd) {
            auto spec = cli_detail::load_gadget(gadget_file);
            report.input_digest = cli_detail::fnv_digest(cli_detail::slurp(gadget_file));
            auto res = check_gadget(spec, {gca, gcb}, {gc_budget, {}});
            report.nodes = res.nodes_explored;
            switch (res.status) {
                case GadgetCheckStatus::holds:
                    report.status_line = "s HOLDS";
                    report.exit_code = 0;
                    break;
                case GadgetCheckStatus::fails_with_witness:
                    report.status_line = "s FAILS";
                    report.exit_code = 1;
                    break;
                case GadgetCheckStatus::unknown:
                    report.status_line = "s UNKNOWN";
                    report.exit_code = 2;
                    break;
            }
            out << report.status_line << "\n";
            out << "c nodes " << res.nodes_explored << "\n";
            if (res.witness) write_certificate(out, {gca, gcb}, *res.witness);
        } else if (*prof_cmd) {
            Graph g = cli_detail::load_graph(pgraph_file, &report.input_digest);
            auto prof = obstruction_profile(g, pv1 - 1, pv2 - 1, pk, {p_budget, {}});
            report.status_line = prof.complete ? "s PROFILE" : "s UNKNOWN";
            out << report.status_line << "\n";
            out << "c colorings " << prof.colorings_seen << " unblocked " << prof.unblocked
                << "\n";
            out << "c bc " << (prof.has_bc ? "present" : "absent") << "\n";
            for (const auto& pr : prof.pairs) {
                out << "c pair s1=";
                for (size_t i = 0; i < pr.s1.size(); ++i)
                    out << (i ? "," : "") << pr.s1[i];
                out << " s2=";
                for (size_t i = 0; i < pr.s2.size(); ++i)
                    out << (i ? "," : "") << pr.s2[i];
                out << "\n";
            }
            report.exit_code = prof.complete ? 0 : 2;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        report.status_line = "s ERROR";
        report.exit_code = 3;
    }
    return report;
}

}  // namespace abcolor

#endif  // ABCOLOR_CLI_HPP
