// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "clusterx/problem.hpp"

using namespace clusterx;
namespace fs = std::filesystem;

namespace {

std::string g_cli;
fs::path g_dir;

struct CliResult {
    int code = -1;
    std::string out;
    std::string err;
};

CliResult run_cli(const std::string& args, const std::string& env = "") {
    fs::path out = g_dir / "stdout.txt", err = g_dir / "stderr.txt";
    std::string cmd = env + (env.empty() ? "" : " ") + g_cli + " " + args + " > " +
                      out.string() + " 2> " + err.string();
    int status = std::system(cmd.c_str());
    CliResult r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    auto slurp = [](const fs::path& p) {
        std::ifstream in(p);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

std::string write_file(const std::string& name, const std::string& content) {
    fs::path p = g_dir / name;
    std::ofstream(p) << content;
    return p.string();
}

std::string amplitude_path(double theta = 0.02) {
    ojson j = json::parse(R"({
      "format_version": 1, "problem": "amplitude",
      "graph": {"vertices": [{"id": "a"}, {"id": "b"}],
                "edges": [{"label": 1, "vertices": ["a", "b"],
                           "operator": {"kind": "pauli_rotation", "angle": 0, "pauli": "XX"}}]}
    })");
    j["graph"]["edges"][0]["operator"]["angle"] = theta;
    return write_file("amp.json", j.dump());
}

json parse_report(const std::string& s) { return json::parse(s); }

} // namespace

TEST_CASE("approx on a single-edge amplitude problem") {
    auto r = run_cli("approx " + amplitude_path() + " --epsilon 1e-4");
    REQUIRE(r.code == 0);
    auto j = parse_report(r.out);
    CHECK(j["mode"] == "cluster");
    CHECK(j["condition"]["pass"] == true);
    double re = j["value"][0].get<double>();
    CHECK(std::abs(re - std::cos(0.02)) <= 1e-4);
    CHECK(std::abs(j["value"][1].get<double>()) <= 1e-10);
    CHECK(j["truncation_order"].get<int>() >= 1);
}

TEST_CASE("compare mode reports relative error within epsilon") {
    auto r = run_cli("approx " + amplitude_path() + " --epsilon 1e-3 --compare");
    REQUIRE(r.code == 0);
    auto j = parse_report(r.out);
    CHECK(j["relative_error"].get<double>() <= 1e-3);
}

TEST_CASE("check fails with exit 2 on the GHZ counterexample") {
    auto ghz = ghz_counterexample(2, 2);
    Problem p;
    p.kind = ProblemKind::Expectation;
    p.circuit = ghz.circuit;
    p.observables = ghz.observables;
    auto path = write_file("ghz.json", problem_to_json(p).dump());

    auto r = run_cli("check " + path);
    CHECK(r.code == 2);
    auto j = parse_report(r.out);
    CHECK(j["condition"]["pass"] == false);

    // approx refuses without --force, proceeds with it
    CHECK(run_cli("approx " + path).code == 2);
    auto forced = run_cli("approx " + path + " --force --order 3");
    CHECK(forced.code == 0);
    CHECK(parse_report(forced.out)["forced"] == true);
}

TEST_CASE("oracle on the thermal counterexample returns zero") {
    auto tc = thermal_counterexample(2);
    Problem p;
    p.kind = ProblemKind::Thermal;
    p.spin = tc.system;
    p.observables = tc.observables;
    auto path = write_file("thermal.json", problem_to_json(p).dump());

    auto r = run_cli("oracle " + path);
    REQUIRE(r.code == 0);
    auto j = parse_report(r.out);
    CHECK(j["mode"] == "oracle");
    CHECK(std::abs(j["value"][0].get<double>()) <= 1e-10);
    CHECK(std::abs(j["value"][1].get<double>()) <= 1e-10);
}

TEST_CASE("validation errors exit 3 and name the offender") {
    auto path = write_file("bad.json", R"({"format_version": 1, "problem": "amplitude",
        "graph": {"vertices": [{"id": "a"}], "edges": [{"label": 1, "vertices": ["zz"],
        "operator": {"kind": "pauli_rotation", "angle": 0.1, "pauli": "X"}}]}})");
    auto r = run_cli("approx " + path);
    CHECK(r.code == 3);
    CHECK(r.err.find("zz") != std::string::npos);

    auto nofile = run_cli("approx " + (g_dir / "missing.json").string());
    CHECK(nofile.code == 3);

    auto badcmd = run_cli("frobnicate " + amplitude_path());
    CHECK(badcmd.code == 3);
}

TEST_CASE("oracle guard exits 4") {
    // 13 zero-coupling qubits: fine for approx, beyond the partition oracle
    ojson j;
    j["format_version"] = 1;
    j["problem"] = "partition";
    j["beta"] = {0.0, 0.0};
    ojson verts = ojson::array();
    for (int i = 0; i < 13; ++i)
        verts.push_back(ojson{{"id", "q" + std::to_string(i)}, {"dim", 2}});
    j["graph"] = ojson{{"vertices", verts}, {"edges", ojson::array()}};
    auto path = write_file("big.json", j.dump());
    CHECK(run_cli("oracle " + path).code == 4);
    CHECK(run_cli("approx " + path).code == 0);
}

TEST_CASE("clusters diagnostics") {
    auto r = run_cli("clusters " + amplitude_path() + " --order 5");
    REQUIRE(r.code == 0);
    auto j = parse_report(r.out);
    CHECK(j["mode"] == "clusters");
    CHECK(j["truncation_order"] == 5);
    CHECK(j["polymers"] == 1);
    CHECK(j["clusters"] == 4); // multiplicities 1..4 of the single polymer
}

TEST_CASE("reports are deterministic across runs and worker counts") {
    auto strip = [](std::string s) {
        auto j = json::parse(s);
        j.erase("elapsed");
        return j.dump();
    };
    std::string args = "approx " + amplitude_path(0.019) + " --epsilon 1e-3 --compare";
    auto a = run_cli(args, "CLUSTERX_THREADS=1");
    auto b = run_cli(args, "CLUSTERX_THREADS=1");
    auto c = run_cli(args, "CLUSTERX_THREADS=4");
    REQUIRE(a.code == 0);
    CHECK(strip(a.out) == strip(b.out));
    CHECK(strip(a.out) == strip(c.out));
}

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: test_cli <path-to-clusterx> [doctest args]\n");
        return 1;
    }
    g_cli = argv[argc - 1];
    char tmpl[] = "/tmp/clusterx_cli_XXXXXX";
    const char* dir = mkdtemp(tmpl);
    if (!dir) {
        std::fprintf(stderr, "cannot create temp dir\n");
        return 1;
    }
    g_dir = dir;

    doctest::Context ctx(argc - 1, argv);
    int rc = ctx.run();
    std::error_code ec;
    fs::remove_all(g_dir, ec);
    return rc;
}
