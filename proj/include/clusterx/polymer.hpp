// SPDX-License-Identifier: Apache-2.0
#ifndef CLUSTERX_POLYMER_HPP
#define CLUSTERX_POLYMER_HPP

#include <complex>
#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "clusterx/hypergraph.hpp"
#include "clusterx/ursell.hpp"

namespace clusterx {

using Complex = std::complex<double>;

/// Abstract polymer model: a countable polymer set with sizes, a symmetric
/// incompatibility relation (every polymer incompatible with itself), and a
/// complex weight oracle.
///
/// Polymers are addressed by their index in the canonical order; the table
/// is materialized up to a requested size via polymer_count().
class PolymerUniverse {
public:
    virtual ~PolymerUniverse() = default;

    /// Number of polymers with size <= max_size; indices 0..count-1 follow
    /// the canonical order and are stable across calls.
    virtual int polymer_count(int max_size) = 0;

    virtual int polymer_size(int idx) const = 0;
    virtual bool incompatible(int a, int b) const = 0;
    virtual Complex weight(int idx) const = 0;
    virtual std::string describe(int idx) const { return "polymer#" + std::to_string(idx); }

    /// Indices of polymers with size <= max_size incompatible with idx.
    std::vector<int> incompatible_with(int idx, int max_size);
};

/// Standard instantiation: polymers are the connected edge subsets of a
/// host multihypergraph, sized by edge count, incompatible iff their
/// induced vertex sets intersect.
class SubgraphPolymerUniverse : public PolymerUniverse {
public:
    using WeightFn = std::function<Complex(const EdgeSubset&)>;

    SubgraphPolymerUniverse(const MultiHypergraph& host, WeightFn weight);

    int polymer_count(int max_size) override;
    int polymer_size(int idx) const override;
    bool incompatible(int a, int b) const override;
    Complex weight(int idx) const override;
    std::string describe(int idx) const override;

    const EdgeSubset& polymer(int idx) const { return polymers_.at(idx); }
    int vertex_order(int idx) const; // |gamma|

private:
    const MultiHypergraph* host_;
    WeightFn weight_fn_;
    int built_up_to_ = 0;
    std::vector<EdgeSubset> polymers_;
    std::vector<std::uint64_t> vmasks_;
    mutable std::vector<std::pair<char, Complex>> weight_cache_;
    mutable std::mutex cache_mutex_;
};

/// Multiset of polymers, parts in canonical polymer order, whose expanded
/// incompatibility graph is connected.
struct Cluster {
    std::vector<std::pair<int, int>> parts; // (polymer index, multiplicity >= 1)
    int total_size = 0;
};

/// All polymers with size <= m in canonical order.
std::vector<int> enumerate_polymers(PolymerUniverse& u, int m);

/// All multiset clusters with total size <= m, each exactly once, in
/// canonical (lexicographic-by-part) order.
std::vector<Cluster> enumerate_clusters(PolymerUniverse& u, int m);

/// Expanded incompatibility graph of a cluster (one node per instance).
IncompatibilityGraph cluster_incompatibility_graph(const Cluster& c, const PolymerUniverse& u);

/// phi-hat of the cluster's expanded incompatibility graph, via the
/// blow-up DP.
BigInt cluster_ursell_hat(const Cluster& c, const PolymerUniverse& u);

/// phi_hat(H) * prod_gamma w^m / m!.
Complex cluster_term(const Cluster& c, const PolymerUniverse& u);

} // namespace clusterx

#endif
