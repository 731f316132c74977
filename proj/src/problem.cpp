// SPDX-License-Identifier: Apache-2.0
#include "clusterx/problem.hpp"

#include <cmath>
#include <fstream>
#include <set>

namespace clusterx {

namespace {

void reject_unknown(const json& j, const std::set<std::string>& allowed,
                    const std::string& where) {
    if (!j.is_object()) throw ValidationError(where + " must be an object");
    for (const auto& [key, _] : j.items())
        if (!allowed.count(key))
            throw ValidationError("unknown field '" + key + "' in " + where);
}

const json& require(const json& j, const std::string& key, const std::string& where) {
    auto it = j.find(key);
    if (it == j.end()) throw ValidationError("missing field '" + key + "' in " + where);
    return *it;
}

double parse_real(const json& j, const std::string& where) {
    if (!j.is_number()) throw ValidationError(where + " must be a number");
    return j.get<double>();
}

Complex parse_complex(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw ValidationError(where + " must be a [re, im] pair");
    return Complex(j[0].get<double>(), j[1].get<double>());
}

Matrix parse_dense_matrix(const json& j, const std::string& where) {
    if (!j.is_array() || j.empty())
        throw ValidationError(where + " must be a non-empty row-major array");
    long total = static_cast<long>(j.size());
    long dim = static_cast<long>(std::llround(std::sqrt(static_cast<double>(total))));
    if (dim * dim != total)
        throw ValidationError(where + " length is not a perfect square");
    Matrix m(dim, dim);
    for (long i = 0; i < total; ++i)
        m(i / dim, i % dim) = parse_complex(j[i], where + " entry");
    return m;
}

Matrix parse_operator(const json& j, const std::string& where) {
    if (!j.is_object()) throw ValidationError(where + " must be an operator object");
    std::string kind = require(j, "kind", where).get<std::string>();
    if (kind == "dense") {
        reject_unknown(j, {"kind", "matrix"}, where);
        return parse_dense_matrix(require(j, "matrix", where), where + ".matrix");
    }
    if (kind == "pauli_rotation") {
        reject_unknown(j, {"kind", "angle", "pauli"}, where);
        double angle = parse_real(require(j, "angle", where), where + ".angle");
        return pauli_rotation(angle, require(j, "pauli", where).get<std::string>());
    }
    if (kind == "identity_plus") {
        reject_unknown(j, {"kind", "coefficient", "pauli"}, where);
        Complex c = parse_complex(require(j, "coefficient", where), where + ".coefficient");
        return identity_plus(c, require(j, "pauli", where).get<std::string>());
    }
    throw ValidationError("unknown operator kind '" + kind + "' in " + where);
}

struct ParsedGraph {
    MultiHypergraph graph;
    std::map<std::int64_t, LocalOperator> operators;
    std::map<std::int64_t, double> couplings;
};

ParsedGraph parse_graph(const json& j, bool want_operators, bool want_couplings) {
    reject_unknown(j, {"vertices", "edges"}, "graph");
    const json& jverts = require(j, "vertices", "graph");
    const json& jedges = require(j, "edges", "graph");
    if (!jverts.is_array() || !jedges.is_array())
        throw ValidationError("graph.vertices and graph.edges must be arrays");

    std::vector<MultiHypergraph::Vertex> verts;
    for (const auto& jv : jverts) {
        reject_unknown(jv, {"id", "dim"}, "vertex");
        MultiHypergraph::Vertex v;
        v.id = require(jv, "id", "vertex").get<std::string>();
        v.dim = jv.contains("dim") ? jv["dim"].get<int>() : 2;
        verts.push_back(std::move(v));
    }

    std::vector<std::pair<std::int64_t, std::vector<std::string>>> edges;
    std::map<std::int64_t, json> edge_ops;
    std::map<std::int64_t, double> couplings;
    for (const auto& je : jedges) {
        std::set<std::string> allowed{"label", "vertices"};
        if (want_operators) allowed.insert("operator");
        if (want_couplings) allowed.insert("coupling");
        reject_unknown(je, allowed, "edge");
        std::int64_t label = require(je, "label", "edge").get<std::int64_t>();
        std::string where = "edge " + std::to_string(label);
        std::vector<std::string> ids;
        for (const auto& jid : require(je, "vertices", where))
            ids.push_back(jid.get<std::string>());
        edges.emplace_back(label, std::move(ids));
        if (want_operators) edge_ops[label] = require(je, "operator", where);
        if (want_couplings)
            couplings[label] = parse_real(require(je, "coupling", where), where + ".coupling");
    }

    ParsedGraph out{MultiHypergraph(std::move(verts), std::move(edges)), {}, std::move(couplings)};
    for (const auto& [label, jop] : edge_ops) {
        int ei = out.graph.edge_index_of_label(label);
        LocalOperator op;
        op.support = out.graph.edge(ei).verts;
        op.mat = parse_operator(jop, "operator of edge " + std::to_string(label));
        out.operators[label] = std::move(op);
    }
    return out;
}

VertexObservables parse_vertex_operators(const json& j, const MultiHypergraph& g,
                                         VertexObservables::Mode mode) {
    if (!j.is_object()) throw ValidationError("vertex_operators must be an object");
    VertexObservables obs;
    obs.mode = mode;
    for (const auto& [id, jop] : j.items()) {
        int v = g.vertex_index(id);
        LocalOperator op;
        op.support = {v};
        op.mat = parse_operator(jop, "vertex_operators." + id);
        if (op.mat.rows() != g.vertex(v).dim)
            throw ValidationError("operator dimension mismatch for vertex '" + id + "'");
        obs.ops[v] = std::move(op);
    }
    for (int v = 0; v < g.order(); ++v)
        if (!obs.ops.count(v))
            throw ValidationError("vertex_operators missing vertex '" + g.vertex(v).id + "'");
    return obs;
}

} // namespace

std::string problem_kind_name(ProblemKind k) {
    switch (k) {
        case ProblemKind::Amplitude: return "amplitude";
        case ProblemKind::Expectation: return "expectation";
        case ProblemKind::Partition: return "partition";
        case ProblemKind::Thermal: return "thermal";
        case ProblemKind::Ising: return "ising";
        case ProblemKind::HardCore: return "hardcore";
    }
    throw ValidationError("unknown problem kind");
}

Problem parse_problem(const json& j) {
    if (!j.is_object()) throw ValidationError("problem file must be an object");
    std::string kind = require(j, "problem", "problem file").get<std::string>();
    int version = require(j, "format_version", "problem file").get<int>();
    if (version != 1)
        throw ValidationError("unsupported format_version " + std::to_string(version));

    Problem p;
    if (kind == "amplitude" || kind == "expectation") {
        p.kind = kind == "amplitude" ? ProblemKind::Amplitude : ProblemKind::Expectation;
        std::set<std::string> allowed{"format_version", "problem", "graph"};
        if (p.kind == ProblemKind::Expectation) allowed.insert("vertex_operators");
        reject_unknown(j, allowed, "problem file");
        ParsedGraph pg = parse_graph(require(j, "graph", "problem file"), true, false);
        p.circuit.emplace(std::move(pg.graph), std::move(pg.operators));
        if (p.kind == ProblemKind::Expectation)
            p.observables = parse_vertex_operators(
                require(j, "vertex_operators", "problem file"), p.circuit->graph,
                VertexObservables::Mode::Expectation);
    } else if (kind == "partition" || kind == "thermal") {
        p.kind = kind == "partition" ? ProblemKind::Partition : ProblemKind::Thermal;
        std::set<std::string> allowed{"format_version", "problem", "graph", "beta"};
        if (p.kind == ProblemKind::Thermal) allowed.insert("vertex_operators");
        reject_unknown(j, allowed, "problem file");
        Complex beta = parse_complex(require(j, "beta", "problem file"), "beta");
        ParsedGraph pg = parse_graph(require(j, "graph", "problem file"), true, false);
        p.spin.emplace(std::move(pg.graph), std::move(pg.operators), beta);
        if (p.kind == ProblemKind::Thermal)
            p.observables = parse_vertex_operators(
                require(j, "vertex_operators", "problem file"), p.spin->graph,
                VertexObservables::Mode::Thermal);
    } else if (kind == "ising") {
        p.kind = ProblemKind::Ising;
        reject_unknown(j, {"format_version", "problem", "graph", "beta"}, "problem file");
        Complex beta = parse_complex(require(j, "beta", "problem file"), "beta");
        ParsedGraph pg = parse_graph(require(j, "graph", "problem file"), false, true);
        p.ising.emplace(std::move(pg.graph), std::move(pg.couplings), beta);
    } else if (kind == "hardcore") {
        p.kind = ProblemKind::HardCore;
        reject_unknown(j, {"format_version", "problem", "graph", "activity"}, "problem file");
        Complex x = parse_complex(require(j, "activity", "problem file"), "activity");
        ParsedGraph pg = parse_graph(require(j, "graph", "problem file"), false, false);
        p.hardcore.emplace(std::move(pg.graph), x);
    } else {
        throw ValidationError("unknown problem '" + kind + "'");
    }
    return p;
}

Problem load_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open problem file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("problem file parse error: ") + e.what());
    }
    return parse_problem(j);
}

namespace {

ojson complex_to_json(Complex c) { return ojson::array({c.real(), c.imag()}); }

ojson matrix_to_json(const Matrix& m) {
    ojson rows = ojson::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) rows.push_back(complex_to_json(m(i, j)));
    return ojson{{"kind", "dense"}, {"matrix", rows}};
}

ojson graph_to_json(const MultiHypergraph& g,
                    const std::map<std::int64_t, LocalOperator>* ops,
                    const std::map<std::int64_t, double>* couplings) {
    ojson jverts = ojson::array();
    for (const auto& v : g.vertices())
        jverts.push_back(ojson{{"id", v.id}, {"dim", v.dim}});
    ojson jedges = ojson::array();
    for (const auto& e : g.edges()) {
        ojson je;
        je["label"] = e.label;
        ojson ids = ojson::array();
        for (int v : e.verts) ids.push_back(g.vertex(v).id);
        je["vertices"] = std::move(ids);
        if (ops) je["operator"] = matrix_to_json(ops->at(e.label).mat);
        if (couplings) je["coupling"] = couplings->at(e.label);
        jedges.push_back(std::move(je));
    }
    return ojson{{"vertices", std::move(jverts)}, {"edges", std::move(jedges)}};
}

ojson observables_to_json(const MultiHypergraph& g, const VertexObservables& obs) {
    ojson out = ojson::object();
    for (const auto& [v, op] : obs.ops) out[g.vertex(v).id] = matrix_to_json(op.mat);
    return out;
}

} // namespace

ojson problem_to_json(const Problem& p) {
    ojson j;
    j["format_version"] = 1;
    j["problem"] = problem_kind_name(p.kind);
    switch (p.kind) {
        case ProblemKind::Amplitude:
            j["graph"] = graph_to_json(p.circuit->graph, &p.circuit->gates, nullptr);
            break;
        case ProblemKind::Expectation:
            j["graph"] = graph_to_json(p.circuit->graph, &p.circuit->gates, nullptr);
            j["vertex_operators"] = observables_to_json(p.circuit->graph, *p.observables);
            break;
        case ProblemKind::Partition:
            j["graph"] = graph_to_json(p.spin->graph, &p.spin->interactions, nullptr);
            j["beta"] = complex_to_json(p.spin->beta);
            break;
        case ProblemKind::Thermal:
            j["graph"] = graph_to_json(p.spin->graph, &p.spin->interactions, nullptr);
            j["beta"] = complex_to_json(p.spin->beta);
            j["vertex_operators"] = observables_to_json(p.spin->graph, *p.observables);
            break;
        case ProblemKind::Ising:
            j["graph"] = graph_to_json(p.ising->graph, nullptr, &p.ising->couplings);
            j["beta"] = complex_to_json(p.ising->beta);
            break;
        case ProblemKind::HardCore:
            j["graph"] = graph_to_json(p.hardcore->graph, nullptr, nullptr);
            j["activity"] = complex_to_json(p.hardcore->activity);
            break;
    }
    return j;
}

ojson condition_to_json(const ConditionReport& rep) {
    ojson items = ojson::array();
    for (const auto& it : rep.items)
        items.push_back(ojson{{"name", it.name},
                              {"bound", it.bound},
                              {"observed", it.observed},
                              {"pass", it.pass}});
    return ojson{{"delta", rep.delta},
                 {"rank", rep.rank},
                 {"bound", rep.bound},
                 {"items", std::move(items)},
                 {"pass", rep.pass}};
}

ojson report_to_json(const RunReport& r) {
    ojson j;
    j["mode"] = r.mode;
    if (r.forced) j["forced"] = true;
    if (r.value) j["value"] = complex_to_json(*r.value);
    if (r.truncation_order) j["truncation_order"] = *r.truncation_order;
    if (r.clusters_evaluated) j["clusters_evaluated"] = *r.clusters_evaluated;
    if (r.unnormalized_value) j["unnormalized_value"] = complex_to_json(*r.unnormalized_value);
    if (r.oracle_value) j["oracle_value"] = complex_to_json(*r.oracle_value);
    if (r.relative_error) j["relative_error"] = *r.relative_error;
    j["condition"] = condition_to_json(r.condition);
    j["elapsed"] = r.elapsed;
    return j;
}

} // namespace clusterx
