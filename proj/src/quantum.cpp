// SPDX-License-Identifier: Apache-2.0
#include "clusterx/quantum.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <memory>
#include <numbers>

namespace clusterx {

namespace {

constexpr Complex kI{0.0, 1.0};

long dims_product(const MultiHypergraph& g, const std::vector<int>& verts, long guard) {
    long d = 1;
    for (int v : verts) {
        d *= g.vertex(v).dim;
        if (d > guard) throw GuardError("restricted space dimension exceeds guard");
    }
    return d;
}

void check_gate_table(const MultiHypergraph& g,
                      const std::map<std::int64_t, LocalOperator>& ops,
                      bool require_unitary) {
    for (const auto& e : g.edges()) {
        auto it = ops.find(e.label);
        if (it == ops.end())
            throw ValidationError("no operator for edge " + std::to_string(e.label));
        const LocalOperator& op = it->second;
        std::vector<int> a = op.support, b = e.verts;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b)
            throw ValidationError("operator support does not match edge " +
                                  std::to_string(e.label));
        long d = 1;
        for (int v : op.support) d *= g.vertex(v).dim;
        if (op.mat.rows() != op.mat.cols() || op.mat.rows() != d)
            throw ValidationError("operator dimension mismatch on edge " +
                                  std::to_string(e.label));
        if (require_unitary && !is_unitary(op.mat))
            throw ValidationError("operator on edge " + std::to_string(e.label) +
                                  " is not unitary");
        if (!require_unitary && !is_self_adjoint(op.mat))
            throw ValidationError("interaction on edge " + std::to_string(e.label) +
                                  " is not self-adjoint");
    }
}

} // namespace

DenseState DenseState::zero_state(const MultiHypergraph& g, const std::vector<int>& verts) {
    DenseState s;
    s.verts = verts;
    std::sort(s.verts.begin(), s.verts.end());
    for (int v : s.verts) s.dims.push_back(g.vertex(v).dim);
    long d = dims_product(g, s.verts, 1l << 20);
    s.amp = Vector::Zero(d);
    s.amp(0) = 1.0;
    return s;
}

void apply_gate(DenseState& state, const LocalOperator& op) {
    const int k = static_cast<int>(op.support.size());
    std::vector<int> pos(k);
    for (int i = 0; i < k; ++i) {
        auto it = std::find(state.verts.begin(), state.verts.end(), op.support[i]);
        if (it == state.verts.end())
            throw ValidationError("operator support vertex not present in state");
        pos[i] = static_cast<int>(it - state.verts.begin());
    }
    const int n = static_cast<int>(state.verts.size());
    std::vector<long> stride(n, 1);
    for (int i = n - 2; i >= 0; --i) stride[i] = stride[i + 1] * state.dims[i + 1];

    long opd = 1;
    for (int i = 0; i < k; ++i) opd *= state.dims[pos[i]];
    if (op.mat.rows() != opd) throw ValidationError("operator dimension mismatch");

    // offsets of the support digit combinations, support[0] most significant
    std::vector<long> offset(opd, 0);
    for (long c = 0; c < opd; ++c) {
        long rem = c, off = 0;
        for (int i = k - 1; i >= 0; --i) {
            int d = state.dims[pos[i]];
            off += (rem % d) * stride[pos[i]];
            rem /= d;
        }
        offset[c] = off;
    }

    Vector in(opd), out(opd);
    const long total = state.amp.size();
    for (long base = 0; base < total; ++base) {
        bool is_base = true;
        for (int i = 0; i < k && is_base; ++i)
            if ((base / stride[pos[i]]) % state.dims[pos[i]] != 0) is_base = false;
        if (!is_base) continue;
        for (long c = 0; c < opd; ++c) in(c) = state.amp(base + offset[c]);
        out.noalias() = op.mat * in;
        for (long c = 0; c < opd; ++c) state.amp(base + offset[c]) = out(c);
    }
}

void apply_gate_minus_identity(DenseState& state, const LocalOperator& op) {
    Vector before = state.amp;
    apply_gate(state, op);
    state.amp -= before;
}

CircuitSpec::CircuitSpec(MultiHypergraph g, std::map<std::int64_t, LocalOperator> ops)
    : graph(std::move(g)), gates(std::move(ops)) {
    check_gate_table(graph, gates, /*require_unitary=*/true);
}

SpinSystemSpec::SpinSystemSpec(MultiHypergraph g, std::map<std::int64_t, LocalOperator> ops,
                               Complex b)
    : graph(std::move(g)), interactions(std::move(ops)), beta(b) {
    check_gate_table(graph, interactions, /*require_unitary=*/false);
    for (const auto& [label, op] : interactions)
        if (spectral_norm(op.mat) > 1.0 + 1e-12)
            throw ValidationError("interaction on edge " + std::to_string(label) +
                                  " has norm > 1");
}

Matrix pauli_matrix(char p) {
    Matrix m(2, 2);
    switch (p) {
        case 'I': m << 1, 0, 0, 1; break;
        case 'X': m << 0, 1, 1, 0; break;
        case 'Y': m << 0, -kI, kI, 0; break;
        case 'Z': m << 1, 0, 0, -1; break;
        default: throw ValidationError(std::string("unknown Pauli '") + p + "'");
    }
    return m;
}

Matrix pauli_string(const std::string& s) {
    if (s.empty()) throw ValidationError("empty Pauli string");
    Matrix m = pauli_matrix(s[0]);
    for (std::size_t i = 1; i < s.size(); ++i) m = kron(m, pauli_matrix(s[i]));
    return m;
}

Matrix pauli_rotation(double theta, const std::string& s) {
    Matrix p = pauli_string(s);
    Matrix id = Matrix::Identity(p.rows(), p.cols());
    // P^2 = I, so e^{-i theta P} = cos(theta) I - i sin(theta) P.
    return std::cos(theta) * id - kI * std::sin(theta) * p;
}

Matrix identity_plus(Complex c, const std::string& s) {
    Matrix p = pauli_string(s);
    return Matrix::Identity(p.rows(), p.cols()) + c * p;
}

Complex amplitude_weight(const CircuitSpec& c, const EdgeSubset& gamma) {
    if (gamma.empty()) throw ValidationError("amplitude_weight requires a non-empty polymer");
    DenseState psi = DenseState::zero_state(c.graph, gamma.vertex_set());
    for (int e : gamma.edges) {
        auto it = c.gates.find(c.graph.edge(e).label);
        if (it == c.gates.end())
            throw ValidationError("gate missing for edge in polymer");
        apply_gate_minus_identity(psi, it->second);
    }
    return psi.amp(0);
}

Complex expectation_weight(const CircuitSpec& c, const CausalHypergraph& ch,
                           const VertexObservables& obs, const EdgeSubset& gamma) {
    if (gamma.empty()) throw ValidationError("expectation_weight requires a non-empty polymer");
    // Edges of gamma live on C(G); they name a vertex set W of the circuit.
    std::vector<int> w_verts;
    std::uint64_t cone_verts = 0;
    std::vector<char> in_cone(c.graph.size(), 0);
    for (int e : gamma.edges) {
        int v = ch.edge_vertex.at(e);
        w_verts.push_back(v);
        CausalCone cone = causal_cone(c.graph, v);
        cone_verts |= cone.cone_vertices;
        for (int ce : cone.cone_edges.edges) in_cone[ce] = 1;
    }
    std::vector<int> verts;
    for (int v = 0; v < c.graph.order(); ++v)
        if (cone_verts & (1ull << v)) verts.push_back(v);

    DenseState psi = DenseState::zero_state(c.graph, verts);
    for (int e = 0; e < c.graph.size(); ++e)
        if (in_cone[e]) apply_gate(psi, c.gates.at(c.graph.edge(e).label));

    DenseState phi = psi;
    for (int v : w_verts) {
        auto it = obs.ops.find(v);
        if (it == obs.ops.end())
            throw ValidationError("observable missing for vertex '" +
                                  c.graph.vertex(v).id + "'");
        apply_gate_minus_identity(phi, it->second);
    }
    return psi.amp.dot(phi.amp); // conjugates psi
}

Matrix embed_operator(const MultiHypergraph& g, const std::vector<int>& verts,
                      const LocalOperator& op) {
    long D = dims_product(g, verts, 1l << 20);
    const int n = static_cast<int>(verts.size());
    std::vector<long> stride(n, 1);
    for (int i = n - 2; i >= 0; --i) stride[i] = stride[i + 1] * g.vertex(verts[i + 1]).dim;
    const int k = static_cast<int>(op.support.size());
    std::vector<int> pos(k);
    for (int i = 0; i < k; ++i) {
        auto it = std::find(verts.begin(), verts.end(), op.support[i]);
        if (it == verts.end()) throw ValidationError("operator support outside subspace");
        pos[i] = static_cast<int>(it - verts.begin());
    }
    long opd = op.mat.rows();
    std::vector<long> offset(opd, 0);
    for (long c = 0; c < opd; ++c) {
        long rem = c, off = 0;
        for (int i = k - 1; i >= 0; --i) {
            int d = g.vertex(op.support[i]).dim;
            off += (rem % d) * stride[pos[i]];
            rem /= d;
        }
        offset[c] = off;
    }
    Matrix out = Matrix::Zero(D, D);
    for (long base = 0; base < D; ++base) {
        bool is_base = true;
        for (int i = 0; i < k && is_base; ++i)
            if ((base / stride[pos[i]]) % g.vertex(verts[pos[i]]).dim != 0) is_base = false;
        if (!is_base) continue;
        for (long r = 0; r < opd; ++r)
            for (long cc = 0; cc < opd; ++cc)
                out(base + offset[r], base + offset[cc]) = op.mat(r, cc);
    }
    return out;
}

namespace {

Complex signed_trace_sum(const SpinSystemSpec& s, const EdgeSubset& gamma,
                         const Matrix* weight_op) {
    std::vector<int> verts = gamma.vertex_set();
    long D = dims_product(s.graph, verts, 1l << 12);
    const int ne = gamma.size();
    std::vector<Matrix> phi;
    phi.reserve(ne);
    for (int e : gamma.edges)
        phi.push_back(embed_operator(s.graph, verts, s.interactions.at(s.graph.edge(e).label)));

    Complex total{0.0, 0.0};
    for (std::uint64_t t = 0; t < (1ull << ne); ++t) {
        Complex ntr;
        if (t == 0) {
            ntr = weight_op ? weight_op->trace() / static_cast<double>(D) : Complex{1.0, 0.0};
        } else {
            Matrix h = Matrix::Zero(D, D);
            for (int i = 0; i < ne; ++i)
                if (t & (1ull << i)) h += phi[i];
            Matrix em = expm_hermitian(h, s.beta);
            if (weight_op) em = (*weight_op) * em;
            ntr = em.trace() / static_cast<double>(D);
        }
        bool odd = std::popcount(t) % 2 == 1;
        total += odd ? -ntr : ntr;
    }
    return (ne % 2 == 1) ? -total : total;
}

} // namespace

Complex partition_weight(const SpinSystemSpec& s, const EdgeSubset& gamma) {
    if (gamma.empty()) throw ValidationError("partition_weight requires a non-empty polymer");
    return signed_trace_sum(s, gamma, nullptr);
}

Complex thermal_weight(const SpinSystemSpec& s, const VertexObservables& obs,
                       const EdgeSubset& gamma) {
    if (gamma.empty()) throw ValidationError("thermal_weight requires a non-empty polymer");
    std::vector<int> verts = gamma.vertex_set();
    Matrix psi_op(1, 1);
    psi_op(0, 0) = 1.0;
    for (int v : verts) {
        auto it = obs.ops.find(v);
        if (it == obs.ops.end())
            throw ValidationError("thermal operator missing for vertex '" +
                                  s.graph.vertex(v).id + "'");
        psi_op = kron(psi_op, it->second.mat);
    }
    return signed_trace_sum(s, gamma, &psi_op);
}

void ConditionReport::add(std::string name, double bound_v, double observed) {
    bool ok = observed <= bound_v;
    items.push_back(ConditionItem{std::move(name), bound_v, observed, ok});
    pass = pass && ok;
}

namespace {
double condition_bound(int delta, int rank, double exponent) {
    int d = std::max(delta, 2);
    int r = std::max(rank, 2);
    double choose2 = 0.5 * r * (r - 1);
    return 1.0 / (std::exp(exponent) * d * choose2);
}
} // namespace

double amplitude_bound(int delta, int rank) { return condition_bound(delta, rank, 3.0); }
double partition_bound(int delta, int rank) { return condition_bound(delta, rank, 4.0); }

ConditionReport check_conditions(const CircuitSpec& c) {
    ConditionReport rep;
    rep.delta = c.graph.max_degree();
    rep.rank = c.graph.rank();
    rep.bound = amplitude_bound(rep.delta, rep.rank);
    for (const auto& e : c.graph.edges()) {
        const Matrix& u = c.gates.at(e.label).mat;
        Matrix d = u - Matrix::Identity(u.rows(), u.cols());
        rep.add("norm(U-I) edge " + std::to_string(e.label), rep.bound, spectral_norm(d));
    }
    return rep;
}

ConditionReport check_conditions(const CircuitSpec& c, const VertexObservables& obs) {
    ConditionReport rep;
    CausalHypergraph ch = causal_intersection_hypergraph(c.graph);
    rep.delta = ch.graph.max_degree();
    rep.rank = ch.graph.rank();
    rep.bound = amplitude_bound(rep.delta, rep.rank);
    for (int v = 0; v < c.graph.order(); ++v) {
        auto it = obs.ops.find(v);
        if (it == obs.ops.end())
            throw ValidationError("observable missing for vertex '" +
                                  c.graph.vertex(v).id + "'");
        const Matrix& o = it->second.mat;
        Matrix d = o - Matrix::Identity(o.rows(), o.cols());
        rep.add("norm(O-I) vertex " + c.graph.vertex(v).id, rep.bound, spectral_norm(d));
        Matrix herm = o - o.adjoint();
        rep.add("self-adjoint O vertex " + c.graph.vertex(v).id, 1e-12,
                herm.cwiseAbs().maxCoeff());
    }
    return rep;
}

ConditionReport check_conditions(const SpinSystemSpec& s) {
    ConditionReport rep;
    rep.delta = s.graph.max_degree();
    rep.rank = s.graph.rank();
    rep.bound = partition_bound(rep.delta, rep.rank);
    rep.add("|beta|", rep.bound, std::abs(s.beta));
    for (const auto& e : s.graph.edges())
        rep.add("norm(Phi) edge " + std::to_string(e.label), 1.0 + 1e-12,
                spectral_norm(s.interactions.at(e.label).mat));
    return rep;
}

ConditionReport check_conditions(const SpinSystemSpec& s, const VertexObservables& obs) {
    ConditionReport rep = check_conditions(s);
    for (int v = 0; v < s.graph.order(); ++v) {
        auto it = obs.ops.find(v);
        if (it == obs.ops.end())
            throw ValidationError("thermal operator missing for vertex '" +
                                  s.graph.vertex(v).id + "'");
        const Matrix& o = it->second.mat;
        Eigen::SelfAdjointEigenSolver<Matrix> es;
        double min_eig = -1.0;
        if (is_self_adjoint(o)) {
            es.compute(o, Eigen::EigenvaluesOnly);
            min_eig = es.eigenvalues().minCoeff();
        }
        rep.add("psd Psi vertex " + s.graph.vertex(v).id, 1e-12, -min_eig);
        double ntr_dev = std::abs(o.trace() / static_cast<double>(o.rows()) - 1.0);
        rep.add("normalized trace Psi vertex " + s.graph.vertex(v).id, 1e-12, ntr_dev);
    }
    return rep;
}

ApproxZResult approximate_amplitude(const CircuitSpec& c, double epsilon,
                                    std::optional<int> order) {
    SubgraphPolymerUniverse u(c.graph, [&c](const EdgeSubset& g) {
        return amplitude_weight(c, g);
    });
    return approximate_Z(u, c.graph.order(), epsilon, order);
}

ApproxZResult approximate_expectation(const CircuitSpec& c, const VertexObservables& obs,
                                      double epsilon, std::optional<int> order) {
    auto ch = std::make_shared<CausalHypergraph>(causal_intersection_hypergraph(c.graph));
    SubgraphPolymerUniverse u(ch->graph, [&c, ch, &obs](const EdgeSubset& g) {
        return expectation_weight(c, *ch, obs, g);
    });
    return approximate_Z(u, c.graph.order(), epsilon, order);
}

ApproxZResult approximate_partition(const SpinSystemSpec& s, double epsilon,
                                    std::optional<int> order) {
    SubgraphPolymerUniverse u(s.graph, [&s](const EdgeSubset& g) {
        return partition_weight(s, g);
    });
    return approximate_Z(u, s.graph.order(), epsilon, order);
}

ThermalApprox approximate_thermal(const SpinSystemSpec& s, const VertexObservables& obs,
                                  double epsilon, std::optional<int> order) {
    int m = order ? *order : truncation_order(s.graph.order(), epsilon / 2.0);
    SubgraphPolymerUniverse num(s.graph, [&s, &obs](const EdgeSubset& g) {
        return thermal_weight(s, obs, g);
    });
    SubgraphPolymerUniverse den(s.graph, [&s](const EdgeSubset& g) {
        return partition_weight(s, g);
    });
    ExpansionResult tn = truncated_expansion(num, m);
    ExpansionResult td = truncated_expansion(den, m);
    ThermalApprox out;
    out.order = m;
    out.clusters_evaluated = tn.clusters_evaluated + td.clusters_evaluated;
    out.value = std::exp(tn.log_value - td.log_value);
    return out;
}

GhzInstance ghz_counterexample(int k, int d) {
    if (k < 2 || d < 1) throw ValidationError("ghz_counterexample requires k >= 2, d >= 1");
    double n_sites = std::pow(static_cast<double>(k), d);
    if (n_sites > 64) throw GuardError("ghz_counterexample: k^d exceeds 64 qubits");
    const int n = static_cast<int>(std::llround(n_sites));

    std::vector<MultiHypergraph::Vertex> verts(n);
    for (int i = 0; i < n; ++i) verts[i] = {"q" + std::to_string(i), 2};

    // Seed gate: |0^k> -> (|0^k>+|1^k>)/sqrt(2), |1^k> -> (|0^k>-|1^k>)/sqrt(2).
    long dk = 1l << k;
    Matrix seed = Matrix::Identity(dk, dk);
    const double isq = 1.0 / std::numbers::sqrt2;
    seed(0, 0) = isq;
    seed(dk - 1, 0) = isq;
    seed(0, dk - 1) = isq;
    seed(dk - 1, dk - 1) = -isq;

    // Fanout: if the control (most significant) is 1, complement the targets.
    Matrix fan = Matrix::Zero(dk, dk);
    for (long i = 0; i < dk; ++i) {
        long j = (i & (dk >> 1)) ? ((dk >> 1) | (~i & ((dk >> 1) - 1))) : i;
        fan(j, i) = 1.0;
    }

    std::vector<std::pair<std::int64_t, std::vector<int>>> edges;
    std::map<std::int64_t, LocalOperator> gates;
    std::int64_t label = 1;
    // Layer 1 on the representatives spaced k^(d-1) apart; layer l >= 2 fans
    // each representative out to its block of stride k^(d-l).
    long stride = n / k;
    {
        std::vector<int> sup;
        for (int t = 0; t < k; ++t) sup.push_back(static_cast<int>(t * stride));
        edges.emplace_back(label, sup);
        gates[label] = LocalOperator{sup, seed};
        ++label;
    }
    long prev_stride = stride;
    for (int layer = 2; layer <= d; ++layer) {
        stride = prev_stride / k;
        for (long c = 0; c < n; c += prev_stride) {
            std::vector<int> sup{static_cast<int>(c)};
            for (int t = 1; t < k; ++t) sup.push_back(static_cast<int>(c + t * stride));
            edges.emplace_back(label, sup);
            gates[label] = LocalOperator{sup, fan};
            ++label;
        }
        prev_stride = stride;
    }

    MultiHypergraph g = MultiHypergraph::from_indices(verts, std::move(edges));
    GhzInstance out{CircuitSpec(std::move(g), std::move(gates)), VertexObservables{}, 0.0};
    out.operator_norm = std::tan(std::numbers::pi / (2.0 * n));
    out.observables.mode = VertexObservables::Mode::Expectation;
    for (int v = 0; v < n; ++v)
        out.observables.ops[v] = LocalOperator{{v}, identity_plus(kI * out.operator_norm, "Z")};
    return out;
}

ThermalZeroInstance thermal_counterexample(int delta) {
    if (delta < 1) throw ValidationError("thermal_counterexample requires Delta >= 1");
    std::vector<MultiHypergraph::Vertex> verts{{"a", 2}, {"b", 2}};
    std::vector<std::pair<std::int64_t, std::vector<int>>> edges;
    for (int j = 0; j < delta; ++j) edges.emplace_back(j + 1, std::vector<int>{0, 1});
    MultiHypergraph g = MultiHypergraph::from_indices(verts, std::move(edges));

    Matrix phi = 0.25 * (pauli_string("XX") - pauli_string("YY") - pauli_string("ZZ"));
    std::map<std::int64_t, LocalOperator> inter;
    for (int j = 0; j < delta; ++j) inter[j + 1] = LocalOperator{{0, 1}, phi};

    Complex beta = kI * std::numbers::pi / static_cast<double>(delta);
    ThermalZeroInstance out{SpinSystemSpec(std::move(g), std::move(inter), beta),
                            VertexObservables{}};
    Matrix psi(2, 2);
    psi << 2, 0, 0, 0; // 2|0><0|, normalized trace 1
    out.observables.mode = VertexObservables::Mode::Thermal;
    out.observables.ops[0] = LocalOperator{{0}, psi};
    out.observables.ops[1] = LocalOperator{{1}, psi};
    return out;
}

} // namespace clusterx
