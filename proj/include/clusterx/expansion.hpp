// SPDX-License-Identifier: Apache-2.0
#ifndef CLUSTERX_EXPANSION_HPP
#define CLUSTERX_EXPANSION_HPP

#include <optional>
#include <string>

#include "clusterx/polymer.hpp"

namespace clusterx {

/// Smallest m with |G| e^{-m/2} <= eps/2, i.e. ceil(2 ln(2|G|/eps)).
/// The eps/2 log budget turns into a multiplicative eps via |e^d - 1|.
int truncation_order(int graph_order, double epsilon);

/// Number of worker threads: CLUSTERX_THREADS if set, else the OpenMP
/// default. Results never depend on this.
int worker_count();

struct ExpansionResult {
    Complex log_value{0.0, 0.0}; // T_m
    int order = 0;               // m
    long clusters_evaluated = 0;
};

/// Truncated cluster expansion T_m: sum of cluster terms over clusters of
/// total size <= m-1, in canonical cluster order. Terms are evaluated in
/// parallel; the final sum is sequential, so the result is bit-identical
/// for any worker count.
ExpansionResult truncated_expansion(PolymerUniverse& u, int m);

/// Plain single-threaded reference of the same sum, kept for testing and
/// benchmarking against the parallel path.
ExpansionResult truncated_expansion_serial(PolymerUniverse& u, int m);

struct DecayCheck {
    bool pass = true;
    double bound_base = 0.0;
    int checked = 0;
    int violating_polymer = -1;
    double observed = 0.0;
    double allowed = 0.0;
    std::string violating_description;
};

/// Verifies |w_gamma| <= bound_base^size for every polymer of size <= m.
DecayCheck weight_decay_check(PolymerUniverse& u, double bound_base, int m);

struct ApproxZResult {
    Complex value{1.0, 0.0};
    ExpansionResult expansion;
};

/// exp(T_m) with m = truncation_order(graph_order, eps), or a caller
/// override. Callers are responsible for the weight-decay condition.
ApproxZResult approximate_Z(PolymerUniverse& u, int graph_order, double epsilon,
                            std::optional<int> order_override = std::nullopt);

/// Exact partition function over admissible sets of polymers of size <= m.
/// Guarded: at most 25 polymers.
Complex brute_force_Z(PolymerUniverse& u, int m);

} // namespace clusterx

#endif
