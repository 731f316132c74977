// SPDX-License-Identifier: Apache-2.0
#ifndef CLUSTERX_QUANTUM_HPP
#define CLUSTERX_QUANTUM_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "clusterx/expansion.hpp"
#include "clusterx/hypergraph.hpp"
#include "clusterx/linalg.hpp"

namespace clusterx {

/// Dense complex square matrix acting on an ordered vertex support.
/// The first support vertex is the most significant tensor factor.
struct LocalOperator {
    std::vector<int> support; // vertex indices of the host graph
    Matrix mat;
};

/// State vector over an ascending list of vertices of a host graph;
/// verts[0] is the most significant digit of the basis index.
struct DenseState {
    std::vector<int> verts;
    std::vector<int> dims;
    Vector amp;

    static DenseState zero_state(const MultiHypergraph& g, const std::vector<int>& verts);
    long dimension() const { return amp.size(); }
};

/// Applies op to the designated tensor factors of the state.
void apply_gate(DenseState& state, const LocalOperator& op);

/// Applies (op - I) in place.
void apply_gate_minus_identity(DenseState& state, const LocalOperator& op);

/// Dense embedding of op into the space over `verts` (ascending vertex
/// indices of g; verts[0] most significant).
Matrix embed_operator(const MultiHypergraph& g, const std::vector<int>& verts,
                      const LocalOperator& op);

struct CircuitSpec {
    MultiHypergraph graph;
    std::map<std::int64_t, LocalOperator> gates; // edge label -> unitary

    CircuitSpec(MultiHypergraph g, std::map<std::int64_t, LocalOperator> ops);
};

struct SpinSystemSpec {
    MultiHypergraph graph;
    std::map<std::int64_t, LocalOperator> interactions; // edge label -> Phi
    Complex beta{0.0, 0.0};

    SpinSystemSpec(MultiHypergraph g, std::map<std::int64_t, LocalOperator> ops, Complex beta);
};

struct VertexObservables {
    enum class Mode { Expectation, Thermal };
    Mode mode = Mode::Expectation;
    std::map<int, LocalOperator> ops; // vertex index -> single-vertex operator
};

// Pauli helpers (qubits only).
Matrix pauli_matrix(char p);
Matrix pauli_string(const std::string& s);
/// e^{-i theta P} for a Pauli string P.
Matrix pauli_rotation(double theta, const std::string& s);
/// I + c P.
Matrix identity_plus(Complex c, const std::string& s);

// Polymer weight functions (restricted-space computations).
Complex amplitude_weight(const CircuitSpec& c, const EdgeSubset& gamma);
Complex expectation_weight(const CircuitSpec& c, const CausalHypergraph& ch,
                           const VertexObservables& obs, const EdgeSubset& gamma);
Complex partition_weight(const SpinSystemSpec& s, const EdgeSubset& gamma);
Complex thermal_weight(const SpinSystemSpec& s, const VertexObservables& obs,
                       const EdgeSubset& gamma);

struct ConditionItem {
    std::string name;
    double bound = 0.0;
    double observed = 0.0;
    bool pass = true;
};

struct ConditionReport {
    int delta = 0; // max degree of the relevant host (clamped to >= 2 in bounds)
    int rank = 0;
    double bound = 0.0;
    std::vector<ConditionItem> items;
    bool pass = true;

    void add(std::string name, double bound_v, double observed);
};

/// 1/(e^3 * Delta * C(r,2)) with Delta, r clamped to >= 2.
double amplitude_bound(int delta, int rank);
/// 1/(e^4 * Delta * C(r,2)) with Delta, r clamped to >= 2.
double partition_bound(int delta, int rank);

ConditionReport check_conditions(const CircuitSpec& c);
ConditionReport check_conditions(const CircuitSpec& c, const VertexObservables& obs);
ConditionReport check_conditions(const SpinSystemSpec& s);
ConditionReport check_conditions(const SpinSystemSpec& s, const VertexObservables& obs);

ApproxZResult approximate_amplitude(const CircuitSpec& c, double epsilon,
                                    std::optional<int> order = std::nullopt);
ApproxZResult approximate_expectation(const CircuitSpec& c, const VertexObservables& obs,
                                      double epsilon,
                                      std::optional<int> order = std::nullopt);
ApproxZResult approximate_partition(const SpinSystemSpec& s, double epsilon,
                                    std::optional<int> order = std::nullopt);

struct ThermalApprox {
    Complex value{1.0, 0.0};
    int order = 0;
    long clusters_evaluated = 0; // numerator + denominator series
};

/// exp(T^Psi_m - T_m) with a shared truncation order and an eps/2 budget
/// per series.
ThermalApprox approximate_thermal(const SpinSystemSpec& s, const VertexObservables& obs,
                                  double epsilon,
                                  std::optional<int> order = std::nullopt);

struct GhzInstance {
    CircuitSpec circuit;
    VertexObservables observables;
    double operator_norm = 0.0; // ||O_v - I|| = tan(pi / (2 k^d))
};

/// Depth-d, k-local GHZ preparation with O_v = I + i tan(pi/(2 k^d)) Z_v;
/// the exact expectation value is 0.
GhzInstance ghz_counterexample(int k, int d);

struct ThermalZeroInstance {
    SpinSystemSpec system;
    VertexObservables observables;
};

/// Two-vertex multigraph with Delta parallel edges, Phi = (XX - YY - ZZ)/4,
/// beta = i pi / Delta, Psi(v) = 2|0><0|; the thermal numerator is 0.
ThermalZeroInstance thermal_counterexample(int delta);

} // namespace clusterx

#endif
