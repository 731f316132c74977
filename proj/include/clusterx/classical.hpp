// SPDX-License-Identifier: Apache-2.0
#ifndef CLUSTERX_CLASSICAL_HPP
#define CLUSTERX_CLASSICAL_HPP

#include <map>
#include <optional>

#include "clusterx/expansion.hpp"
#include "clusterx/hypergraph.hpp"
#include "clusterx/quantum.hpp"

namespace clusterx {

/// Ising model on a multigraph: real couplings phi(eps) with |phi| <= 1,
/// complex inverse temperature. The partition function is normalized by
/// 2^{-|G|}.
struct IsingSpec {
    MultiHypergraph graph;
    std::map<std::int64_t, double> couplings; // edge label -> phi
    Complex beta{0.0, 0.0};

    IsingSpec(MultiHypergraph g, std::map<std::int64_t, double> c, Complex beta);
};

/// Hard-core lattice gas on a simple graph with complex activity x.
struct HardCoreSpec {
    MultiHypergraph graph; // simple: rank-2 edges, no loops, no parallels
    Complex activity{0.0, 0.0};

    HardCoreSpec(MultiHypergraph g, Complex x);
};

/// w_gamma = 2^{-|gamma|} sum_sigma prod_{eps in gamma} (e^{-beta phi ss'} - 1),
/// by exact enumeration over the 2^{|gamma|} spin assignments of V(gamma).
Complex ising_weight(const IsingSpec& s, const EdgeSubset& gamma);

/// |beta| against 1/(e^4 Delta C(r,2)) and every |phi| against 1.
ConditionReport check_conditions(const IsingSpec& s);

/// Normalized (2^{-|G|}) Ising partition function via the polymer engine.
ApproxZResult approximate_ising(const IsingSpec& s, double epsilon,
                                std::optional<int> order = std::nullopt);

/// Vertices as polymers of size 1 with weight x; two polymers are
/// incompatible iff equal or adjacent. Exercises the engine's abstract
/// (non-subgraph) interface.
class HardCoreUniverse : public PolymerUniverse {
public:
    explicit HardCoreUniverse(const HardCoreSpec& h);

    int polymer_count(int max_size) override;
    int polymer_size(int) const override { return 1; }
    bool incompatible(int a, int b) const override;
    Complex weight(int) const override { return activity_; }
    std::string describe(int idx) const override;

private:
    const MultiHypergraph* graph_;
    Complex activity_;
    std::vector<std::uint64_t> adj_; // adjacency masks, self bit set
};

/// 1/(2e(Delta+1)): sufficient activity bound for the hard-core model's
/// cluster expansion with the same |G| e^{-m/2} truncation tail.
double hardcore_bound(int delta);

/// |x| against hardcore_bound(max_degree).
ConditionReport check_conditions(const HardCoreSpec& h);

/// Independence polynomial I(G;x) via the polymer engine.
ApproxZResult approximate_hardcore(const HardCoreSpec& h, double epsilon,
                                   std::optional<int> order = std::nullopt);

struct ThickeningReport {
    Complex lhs{0.0, 0.0}; // Z(G; i theta)
    Complex rhs{0.0, 0.0}; // Z(G_k; i theta / k)
    double difference = 0.0;
};

/// Checks Z(G;beta) = Z(G_k;beta/k) by the exact spin-enumeration oracle.
ThickeningReport thickening_identity_check(const IsingSpec& s, int k);

} // namespace clusterx

#endif
