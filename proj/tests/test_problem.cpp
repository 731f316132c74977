// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "clusterx/problem.hpp"

using namespace clusterx;

namespace {

json amplitude_file() {
    return json::parse(R"({
      "format_version": 1,
      "problem": "amplitude",
      "graph": {
        "vertices": [{"id": "a", "dim": 2}, {"id": "b", "dim": 2}],
        "edges": [{"label": 1, "vertices": ["a", "b"],
                   "operator": {"kind": "pauli_rotation", "angle": 0.02, "pauli": "XX"}}]
      }
    })");
}

json thermal_file() {
    return json::parse(R"({
      "format_version": 1,
      "problem": "thermal",
      "beta": [0.005, 0.0],
      "graph": {
        "vertices": [{"id": "a"}, {"id": "b"}],
        "edges": [{"label": 1, "vertices": ["a", "b"],
                   "operator": {"kind": "dense",
                     "matrix": [[1,0],[0,0],[0,0],[0,0],
                                [0,0],[-1,0],[0,0],[0,0],
                                [0,0],[0,0],[-1,0],[0,0],
                                [0,0],[0,0],[0,0],[1,0]]}}]
      },
      "vertex_operators": {
        "a": {"kind": "dense", "matrix": [[2,0],[0,0],[0,0],[0,0]]},
        "b": {"kind": "dense", "matrix": [[2,0],[0,0],[0,0],[0,0]]}
      }
    })");
}

} // namespace

TEST_CASE("parse amplitude problem") {
    auto p = parse_problem(amplitude_file());
    CHECK(p.kind == ProblemKind::Amplitude);
    REQUIRE(p.circuit);
    CHECK(p.circuit->graph.order() == 2);
    Matrix want = pauli_rotation(0.02, "XX");
    CHECK((p.circuit->gates.at(1).mat - want).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("parse thermal problem") {
    auto p = parse_problem(thermal_file());
    CHECK(p.kind == ProblemKind::Thermal);
    REQUIRE(p.spin);
    REQUIRE(p.observables);
    CHECK(p.observables->mode == VertexObservables::Mode::Thermal);
    CHECK(p.spin->beta == Complex{0.005, 0.0});
    CHECK((p.spin->interactions.at(1).mat - pauli_string("ZZ")).cwiseAbs().maxCoeff() ==
          0.0);
}

TEST_CASE("parse ising and hardcore problems") {
    auto ji = json::parse(R"({
      "format_version": 1, "problem": "ising", "beta": [0.0, 0.005],
      "graph": {"vertices": [{"id": "a"}, {"id": "b"}],
                "edges": [{"label": 1, "vertices": ["a", "b"], "coupling": -0.5}]}
    })");
    auto pi = parse_problem(ji);
    REQUIRE(pi.ising);
    CHECK(pi.ising->couplings.at(1) == -0.5);
    CHECK(pi.ising->beta == Complex{0.0, 0.005});

    auto jh = json::parse(R"({
      "format_version": 1, "problem": "hardcore", "activity": [0.03, 0.0],
      "graph": {"vertices": [{"id": "a"}, {"id": "b"}, {"id": "c"}],
                "edges": [{"label": 1, "vertices": ["a", "b"]},
                          {"label": 2, "vertices": ["b", "c"]}]}
    })");
    auto ph = parse_problem(jh);
    REQUIRE(ph.hardcore);
    CHECK(ph.hardcore->activity == Complex{0.03, 0.0});
}

TEST_CASE("strict schema: unknown and malformed fields rejected") {
    auto j = amplitude_file();
    j["extra"] = 1;
    CHECK_THROWS_AS(parse_problem(j), ValidationError);

    j = amplitude_file();
    j["graph"]["edges"][0]["color"] = "red";
    CHECK_THROWS_AS(parse_problem(j), ValidationError);

    j = amplitude_file();
    j["format_version"] = 2;
    CHECK_THROWS_AS(parse_problem(j), ValidationError);

    j = amplitude_file();
    j["problem"] = "magic";
    CHECK_THROWS_AS(parse_problem(j), ValidationError);

    j = amplitude_file();
    j.erase("graph");
    CHECK_THROWS_AS(parse_problem(j), ValidationError);

    // amplitude problems must not carry vertex_operators
    j = amplitude_file();
    j["vertex_operators"] = json::object();
    CHECK_THROWS_AS(parse_problem(j), ValidationError);

    // ising edges must not carry operators
    auto ji = json::parse(R"({
      "format_version": 1, "problem": "ising", "beta": [0.0, 0.0],
      "graph": {"vertices": [{"id": "a"}, {"id": "b"}],
                "edges": [{"label": 1, "vertices": ["a", "b"], "coupling": 1.0,
                           "operator": {"kind": "pauli_rotation", "angle": 1, "pauli": "XX"}}]}
    })");
    CHECK_THROWS_AS(parse_problem(ji), ValidationError);
}

TEST_CASE("operator objects validated") {
    auto j = amplitude_file();
    j["graph"]["edges"][0]["operator"] = {{"kind", "dense"},
                                          {"matrix", {{1, 0}, {0, 0}, {0, 0}}}};
    CHECK_THROWS_AS(parse_problem(j), ValidationError); // not a perfect square

    j = amplitude_file();
    j["graph"]["edges"][0]["operator"] = {{"kind", "mystery"}};
    CHECK_THROWS_AS(parse_problem(j), ValidationError);

    j = amplitude_file();
    j["graph"]["edges"][0]["operator"] = {{"kind", "pauli_rotation"},
                                          {"angle", 0.1},
                                          {"pauli", "XQ"}};
    CHECK_THROWS_AS(parse_problem(j), ValidationError);

    // dimension mismatch with the edge's vertex dims (2x2 on a 2-vertex edge)
    j = amplitude_file();
    j["graph"]["edges"][0]["operator"] = {{"kind", "pauli_rotation"},
                                          {"angle", 0.1},
                                          {"pauli", "X"}};
    CHECK_THROWS_AS(parse_problem(j), ValidationError);

    // non-unitary gate rejected by CircuitSpec
    j = amplitude_file();
    j["graph"]["edges"][0]["operator"] = {{"kind", "identity_plus"},
                                          {"coefficient", {0.5, 0.0}},
                                          {"pauli", "XX"}};
    CHECK_THROWS_AS(parse_problem(j), ValidationError);

    // bad complex encodings
    auto ji = thermal_file();
    ji["beta"] = {0.1};
    CHECK_THROWS_AS(parse_problem(ji), ValidationError);
}

TEST_CASE("vertex_operators must cover every vertex") {
    auto j = thermal_file();
    j["vertex_operators"].erase("b");
    CHECK_THROWS_AS(parse_problem(j), ValidationError);

    j = thermal_file();
    j["vertex_operators"]["z"] = j["vertex_operators"]["a"];
    CHECK_THROWS_AS(parse_problem(j), ValidationError);
}

TEST_CASE("round-trip: parse . serialize . parse is the identity") {
    for (const json& file : {amplitude_file(), thermal_file()}) {
        auto p1 = parse_problem(file);
        ojson out = problem_to_json(p1);
        auto p2 = parse_problem(json::parse(out.dump()));
        CHECK(p1.kind == p2.kind);
        if (p1.circuit) {
            REQUIRE(p2.circuit);
            for (const auto& [label, op] : p1.circuit->gates) {
                const Matrix& a = op.mat;
                const Matrix& b = p2.circuit->gates.at(label).mat;
                CHECK(a.rows() == b.rows());
                CHECK((a - b).cwiseAbs().maxCoeff() == 0.0); // bit-exact
            }
        }
        if (p1.spin) {
            REQUIRE(p2.spin);
            CHECK(p1.spin->beta == p2.spin->beta);
            for (const auto& [label, op] : p1.spin->interactions)
                CHECK((op.mat - p2.spin->interactions.at(label).mat).cwiseAbs().maxCoeff() ==
                      0.0);
        }
        if (p1.observables) {
            REQUIRE(p2.observables);
            for (const auto& [v, op] : p1.observables->ops)
                CHECK((op.mat - p2.observables->ops.at(v).mat).cwiseAbs().maxCoeff() == 0.0);
        }
    }
}

TEST_CASE("report serialization shape") {
    RunReport r;
    r.mode = "cluster";
    r.value = Complex{0.5, -0.25};
    r.truncation_order = 7;
    r.clusters_evaluated = 42;
    r.condition.delta = 2;
    r.condition.rank = 2;
    r.condition.bound = 0.01;
    r.condition.add("test item", 0.01, 0.005);
    r.elapsed = 0.0;
    ojson j = report_to_json(r);
    CHECK(j["mode"] == "cluster");
    CHECK(j["value"][0] == 0.5);
    CHECK(j["value"][1] == -0.25);
    CHECK(j["truncation_order"] == 7);
    CHECK(j["clusters_evaluated"] == 42);
    CHECK(j["condition"]["pass"] == true);
    CHECK(j["condition"]["items"].size() == 1);
    CHECK_FALSE(j.contains("oracle_value"));
}
