// SPDX-License-Identifier: Apache-2.0
#ifndef CLUSTERX_URSELL_HPP
#define CLUSTERX_URSELL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "clusterx/errors.hpp"

namespace clusterx {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Simple undirected graph on nodes 0..n-1: no loops, no parallel edges.
struct IncompatibilityGraph {
    int nodes = 0;
    std::vector<std::pair<int, int>> edges;

    IncompatibilityGraph() = default;
    IncompatibilityGraph(int n, std::vector<std::pair<int, int>> e);
};

bool is_connected(const IncompatibilityGraph& h);

/// Sum over spanning connected edge subsets S of (-1)^|S|, by direct
/// enumeration of the 2^||H|| subsets. The ground-truth route.
BigInt ursell_hat_subsets(const IncompatibilityGraph& h);

/// Tutte polynomial T_H(1, 0) by deletion-contraction.
BigInt tutte_10(const IncompatibilityGraph& h);

/// Same quantity via the identity
///   sum_{spanning connected S} (-1)^|S| = (-1)^(|H|-1) * T_H(1, 0).
BigInt ursell_hat_tutte(const IncompatibilityGraph& h);

/// Ursell function phi(H) = ursell_hat / |H|!, exact rational.
/// Rejects disconnected input. route 0 = subset enumeration, 1 = Tutte.
BigRational ursell(const IncompatibilityGraph& h, int route = 0);

/// phi-hat of the clique blow-up of a quotient graph: group i holds
/// mult[i] mutually adjacent instances, and groups i, j are completely
/// joined iff adj[i][j]. This is the incompatibility graph of a multiset
/// cluster; the DP runs over instance-count vectors, never materializing
/// the expanded graph.
BigInt ursell_hat_blowup(const std::vector<int>& mult,
                         const std::vector<std::vector<char>>& adj);

} // namespace clusterx

#endif
