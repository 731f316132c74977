// SPDX-License-Identifier: Apache-2.0
#include "clusterx/oracle.hpp"

#include <bit>
#include <cmath>

namespace clusterx {

namespace {

std::vector<int> all_vertices(const MultiHypergraph& g) {
    std::vector<int> verts(g.order());
    for (int v = 0; v < g.order(); ++v) verts[v] = v;
    return verts;
}

long guarded_dimension(const MultiHypergraph& g, long guard, const char* what) {
    long d = 1;
    for (const auto& v : g.vertices()) {
        d *= v.dim;
        if (d > guard) throw GuardError(std::string(what) + " guard exceeded");
    }
    return d;
}

DenseState run_circuit(const CircuitSpec& c) {
    guarded_dimension(c.graph, 1l << 20, "statevector oracle");
    DenseState psi = DenseState::zero_state(c.graph, all_vertices(c.graph));
    for (const auto& e : c.graph.edges()) apply_gate(psi, c.gates.at(e.label));
    return psi;
}

Matrix total_hamiltonian(const SpinSystemSpec& s, const std::vector<int>& verts, long d) {
    Matrix h = Matrix::Zero(d, d);
    for (const auto& e : s.graph.edges())
        h += embed_operator(s.graph, verts, s.interactions.at(e.label));
    return h;
}

} // namespace

Complex exact_amplitude(const CircuitSpec& c) {
    return run_circuit(c).amp(0);
}

Complex exact_expectation(const CircuitSpec& c, const VertexObservables& obs) {
    DenseState psi = run_circuit(c);
    DenseState phi = psi;
    for (int v = 0; v < c.graph.order(); ++v) {
        auto it = obs.ops.find(v);
        if (it == obs.ops.end())
            throw ValidationError("observable missing for vertex '" +
                                  c.graph.vertex(v).id + "'");
        apply_gate(phi, it->second);
    }
    return psi.amp.dot(phi.amp);
}

Complex exact_partition(const SpinSystemSpec& s) {
    std::vector<int> verts = all_vertices(s.graph);
    long d = guarded_dimension(s.graph, 1l << 12, "dense exponential oracle");
    Matrix em = expm_hermitian(total_hamiltonian(s, verts, d), s.beta);
    return em.trace() / static_cast<double>(d);
}

Complex exact_thermal_numerator(const SpinSystemSpec& s, const VertexObservables& obs) {
    std::vector<int> verts = all_vertices(s.graph);
    long d = guarded_dimension(s.graph, 1l << 12, "dense exponential oracle");
    Matrix em = expm_hermitian(total_hamiltonian(s, verts, d), s.beta);
    Matrix psi = Matrix::Identity(d, d);
    for (int v = 0; v < s.graph.order(); ++v) {
        auto it = obs.ops.find(v);
        if (it == obs.ops.end())
            throw ValidationError("thermal operator missing for vertex '" +
                                  s.graph.vertex(v).id + "'");
        psi = psi * embed_operator(s.graph, verts, it->second);
    }
    return (psi * em).trace() / static_cast<double>(d);
}

Complex exact_thermal(const SpinSystemSpec& s, const VertexObservables& obs) {
    Complex z = exact_partition(s);
    if (std::abs(z) == 0.0) throw ValidationError("partition function vanishes");
    return exact_thermal_numerator(s, obs) / z;
}

Complex exact_ising(const IsingSpec& s) {
    const int n = s.graph.order();
    if (n > 20) throw GuardError("spin enumeration guard: more than 20 vertices");
    Complex total{0.0, 0.0};
    for (std::uint64_t a = 0; a < (1ull << n); ++a) {
        Complex energy{0.0, 0.0};
        for (const auto& e : s.graph.edges()) {
            int su = (a >> e.verts[0]) & 1 ? -1 : 1;
            int sv = (a >> e.verts[1]) & 1 ? -1 : 1;
            energy += s.couplings.at(e.label) * static_cast<double>(su * sv);
        }
        total += std::exp(-s.beta * energy);
    }
    return total / std::pow(2.0, n);
}

Complex exact_independence_poly(const HardCoreSpec& h) {
    const int n = h.graph.order();
    if (n > 24) throw GuardError("independent-set enumeration guard: more than 24 vertices");
    std::vector<std::uint64_t> adj(n, 0);
    for (const auto& e : h.graph.edges()) {
        adj[e.verts[0]] |= 1ull << e.verts[1];
        adj[e.verts[1]] |= 1ull << e.verts[0];
    }
    Complex total{0.0, 0.0};
    for (std::uint64_t set = 0; set < (1ull << n); ++set) {
        bool indep = true;
        for (int v = 0; v < n && indep; ++v)
            if ((set >> v) & 1 && (adj[v] & set)) indep = false;
        if (indep) total += std::pow(h.activity, std::popcount(set));
    }
    return total;
}

} // namespace clusterx
