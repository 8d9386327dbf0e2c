#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "abcolor/cli.hpp"

using namespace abcolor;

namespace {
struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name, const std::string& content = "") {
        path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") + "/abcolor_" +
               name;
        if (!content.empty()) {
            std::ofstream f(path);
            f << content;
        }
    }
    ~TempFile() { std::remove(path.c_str()); }
    std::string read() const {
        std::ifstream f(path);
        std::ostringstream ss;
        ss << f.rdbuf();
        return ss.str();
    }
};

struct Run {
    std::string out, err;
    RunReport report;
};

Run cli(const std::vector<std::string>& args) {
    Run r;
    std::ostringstream out, err;
    r.report = run_cli(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}
}  // namespace

TEST_CASE("solve subcommand statuses and exit codes") {
    TempFile fig("fig8_k1.g");
    auto gen = cli({"generate", "--family", "apex-triangles", "--k", "1", "--out", fig.path});
    REQUIRE(gen.report.exit_code == 0);

    auto not_col = cli({"solve", "-a", "2", "-b", "1", fig.path});
    CHECK(not_col.report.exit_code == 1);
    CHECK(not_col.out.find("s NOT_COLORABLE") != std::string::npos);

    auto col = cli({"solve", "-a", "2", "-b", "2", fig.path});
    CHECK(col.report.exit_code == 0);
    CHECK(col.out.find("s COLORABLE") != std::string::npos);
    CHECK(col.out.find("v 1 ") != std::string::npos);

    auto unknown = cli({"solve", "-a", "2", "-b", "1", "--budget", "1", fig.path});
    CHECK(unknown.report.exit_code == 2);

    // determinism across runs
    auto rerun = cli({"solve", "-a", "2", "-b", "2", fig.path});
    CHECK(rerun.out == col.out);
}

TEST_CASE("verify subcommand") {
    TempFile star("star.g", "p 4 3\ne 1 2\ne 1 3\ne 1 4\n");
    TempFile cert("star.cert", "s COLORING a=1 b=1\nv 1 d2 0\nv 2 d1 0\nv 3 d1 0\nv 4 d1 0\n");
    auto ok = cli({"verify", "-a", "1", "-b", "1", star.path, cert.path});
    CHECK(ok.report.exit_code == 0);
    CHECK(ok.out.find("s VALID") != std::string::npos);

    TempFile bad("bad.cert", "s COLORING a=1 b=1\nv 1 d1 0\nv 2 d1 0\nv 3 d1 0\nv 4 d1 0\n");
    auto fail = cli({"verify", "-a", "1", "-b", "1", star.path, bad.path});
    CHECK(fail.report.exit_code == 1);
    CHECK(fail.out.find("s INVALID") != std::string::npos);
    CHECK(fail.out.find("v d1-edge") != std::string::npos);
}

TEST_CASE("generate emits parseable canonical files") {
    auto theta = cli({"generate", "--family", "theta", "--k", "2"});
    REQUIRE(theta.report.exit_code == 0);
    Graph g = parse_graph(theta.out);
    CHECK(g.n() == 8);
    CHECK(graph_to_string(parse_graph(graph_to_string(g))) == graph_to_string(g));

    auto bad = cli({"generate", "--family", "seven-dimensional"});
    CHECK(bad.report.exit_code == 3);
    CHECK(bad.err.find("unknown family") != std::string::npos);
}

TEST_CASE("color subcommand prints the bound block") {
    TempFile grid("grid.g");
    REQUIRE(cli({"generate", "--family", "grid", "--width", "12", "--height", "12", "--out",
                 grid.path})
                .report.exit_code == 0);
    auto res = cli({"color", "--algo", "planar-g4", grid.path});
    REQUIRE(res.report.exit_code == 0);
    CHECK(res.out.find("c BOUND n=144") != std::string::npos);
    CHECK(res.out.find("claim=8*sqrt(10)*sqrt(n)") != std::string::npos);
    CHECK(res.out.find("s COLORING") != std::string::npos);

    // emitted certificate verifies against the graph
    auto pos = res.out.find("s COLORING");
    auto cert = parse_certificate(res.out.substr(pos), 144);
    Graph g = parse_graph(grid.read());
    CHECK(verify(g, cert.params, cert.coloring).empty());
}

TEST_CASE("gadget files round-trip through gadget-check") {
    TempFile gf("friendship.g");
    REQUIRE(cli({"generate", "--family", "friendship", "--k", "1", "--out", gf.path})
                .report.exit_code == 0);
    auto holds = cli({"gadget-check", "--gadget", gf.path, "-a", "2", "-b", "1"});
    CHECK(holds.report.exit_code == 0);
    CHECK(holds.out.find("s HOLDS") != std::string::npos);

    auto fails = cli({"gadget-check", "--gadget", gf.path, "-a", "2", "-b", "2"});
    CHECK(fails.report.exit_code == 1);
    CHECK(fails.out.find("s FAILS") != std::string::npos);
}

TEST_CASE("reduce subcommand writes graph plus provenance") {
    TempFile k2("k2.g", "p 2 1\ne 1 2\n");
    TempFile out("red.g");
    TempFile map("red.map");
    auto res = cli({"reduce", "--from", "3col", "--to", "1-3", "--g", "3", "--out", out.path,
                    "--map", map.path, k2.path});
    REQUIRE(res.report.exit_code == 0);
    Graph g = parse_graph(out.read());
    CHECK(g.n() == 333);
    CHECK(map.read().find("c map 1 vertex 0 path 0") != std::string::npos);

    auto res2 = cli({"reduce", "--from", "sat", "--to", "2-k", "--k", "1", k2.path});
    CHECK(res2.report.exit_code == 3);  // k2.g is not a cnf file
}

TEST_CASE("profile-obstructions subcommand") {
    TempFile iso("iso.g", "p 2 0\n");
    auto res = cli({"profile-obstructions", "-k", "1", "--v1", "1", "--v2", "2", iso.path});
    REQUIRE(res.report.exit_code == 0);
    CHECK(res.out.find("c bc present") != std::string::npos);
}

TEST_CASE("shipped gadget corpus matches the builders") {
    auto expect = [&](const std::string& file, const GadgetSpec& spec, Params p) {
        auto loaded = cli_detail::load_gadget(std::string(ABCOLOR_GADGET_DIR) + "/" + file);
        CHECK(loaded.gadget == spec.gadget);
        CHECK(loaded.ports == spec.ports);
        CHECK(loaded.property.kind == spec.property.kind);
        CHECK(loaded.property.ports == spec.property.ports);
        CHECK(check_gadget(loaded, p).status == GadgetCheckStatus::holds);
    };
    expect("var_2_1.g", var_gadget_2_1().spec, {2, 1});
    expect("clause_2_1.g", clause_gadget_2_1(), {2, 1});
    expect("var_1_4.g", var_gadget_1_k(4), {1, 4});
    expect("clause_1_4.g", clause_gadget_1_k(4), {1, 4});
    expect("var_1_5.g", var_gadget_1_k(5), {1, 5});
    expect("clause_1_5.g", clause_gadget_1_k(5), {1, 5});
    expect("h1_1.g", h1_gadget(1).spec, {3, 1});
    expect("h1_2.g", h1_gadget(2).spec, {3, 2});
    expect("friendship_1.g", gen_friendship(1), {2, 1});
    expect("friendship_2.g", gen_friendship(2), {2, 2});
}

TEST_CASE("input errors exit with code 3") {
    auto missing = cli({"solve", "-a", "1", "-b", "1", "/nonexistent/file.g"});
    CHECK(missing.report.exit_code == 3);
    auto badflag = cli({"solve", "--frobnicate", "x"});
    CHECK(badflag.report.exit_code == 3);
    TempFile malformed("bad.g", "p 2 1\ne 1 5\n");
    auto parse_fail = cli({"solve", "-a", "1", "-b", "1", malformed.path});
    CHECK(parse_fail.report.exit_code == 3);
    CHECK(parse_fail.err.find("error:") != std::string::npos);
}
