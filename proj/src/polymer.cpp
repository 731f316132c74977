// SPDX-License-Identifier: Apache-2.0
#include "clusterx/polymer.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace clusterx {

std::vector<int> PolymerUniverse::incompatible_with(int idx, int max_size) {
    const int n = polymer_count(max_size);
    std::vector<int> out;
    for (int j = 0; j < n; ++j)
        if (incompatible(idx, j)) out.push_back(j);
    return out;
}

SubgraphPolymerUniverse::SubgraphPolymerUniverse(const MultiHypergraph& host, WeightFn weight)
    : host_(&host), weight_fn_(std::move(weight)) {}

int SubgraphPolymerUniverse::polymer_count(int max_size) {
    if (max_size > built_up_to_) {
        // Rebuild the full table; existing indices stay valid because the
        // canonical order (size, then lexicographic label list) is a
        // prefix-stable ordering.
        auto subs = enumerate_connected_subgraphs(*host_, max_size);
        std::stable_sort(subs.begin(), subs.end(), [](const EdgeSubset& a, const EdgeSubset& b) {
            if (a.size() != b.size()) return a.size() < b.size();
            return a.edges < b.edges;
        });
        polymers_ = std::move(subs);
        vmasks_.clear();
        for (const auto& p : polymers_) vmasks_.push_back(p.vertex_mask());
        weight_cache_.assign(polymers_.size(), {0, Complex{}});
        built_up_to_ = max_size;
    }
    int count = 0;
    for (const auto& p : polymers_) {
        if (p.size() > max_size) break;
        ++count;
    }
    return count;
}

int SubgraphPolymerUniverse::polymer_size(int idx) const {
    return polymers_.at(idx).size();
}

bool SubgraphPolymerUniverse::incompatible(int a, int b) const {
    return (vmasks_.at(a) & vmasks_.at(b)) != 0;
}

Complex SubgraphPolymerUniverse::weight(int idx) const {
    {
        std::lock_guard<std::mutex> lock(cache_mutex_);
        if (weight_cache_.at(idx).first) return weight_cache_[idx].second;
    }
    Complex w = weight_fn_(polymers_.at(idx));
    std::lock_guard<std::mutex> lock(cache_mutex_);
    weight_cache_[idx] = {1, w};
    return w;
}

std::string SubgraphPolymerUniverse::describe(int idx) const {
    std::ostringstream os;
    os << "edges{";
    bool first = true;
    for (auto l : polymers_.at(idx).labels()) {
        if (!first) os << ",";
        os << l;
        first = false;
    }
    os << "}";
    return os.str();
}

int SubgraphPolymerUniverse::vertex_order(int idx) const {
    return polymers_.at(idx).vertex_count();
}

std::vector<int> enumerate_polymers(PolymerUniverse& u, int m) {
    if (m < 1) throw ValidationError("polymer size bound must be >= 1");
    std::vector<int> out(u.polymer_count(m));
    std::iota(out.begin(), out.end(), 0);
    return out;
}

namespace {

// Quotient connectivity over the distinct polymers in `parts`: instances of
// one polymer are mutually adjacent, so the expanded graph is connected iff
// the quotient is.
bool quotient_connected(const std::vector<std::pair<int, int>>& parts,
                        const PolymerUniverse& u) {
    const int q = static_cast<int>(parts.size());
    if (q == 0) return false;
    std::uint64_t reached = 1;
    bool grew = true;
    while (grew) {
        grew = false;
        for (int i = 0; i < q; ++i) {
            if (reached & (1ull << i)) continue;
            for (int j = 0; j < q; ++j) {
                if (!(reached & (1ull << j))) continue;
                if (u.incompatible(parts[i].first, parts[j].first)) {
                    reached |= 1ull << i;
                    grew = true;
                    break;
                }
            }
        }
    }
    return reached == (1ull << q) - 1;
}

// Non-decreasing instance sequences visit each multiset exactly once; the
// connectivity filter runs on the quotient.
void cluster_rec(PolymerUniverse& u, int n_polymers, int min_idx, int budget,
                 std::vector<std::pair<int, int>>& parts, int total,
                 std::vector<Cluster>& out) {
    if (!parts.empty() && quotient_connected(parts, u))
        out.push_back(Cluster{parts, total});
    for (int i = min_idx; i < n_polymers; ++i) {
        int s = u.polymer_size(i);
        if (s > budget) continue;
        bool merged = !parts.empty() && parts.back().first == i;
        if (merged)
            ++parts.back().second;
        else
            parts.emplace_back(i, 1);
        cluster_rec(u, n_polymers, i, budget - s, parts, total + s, out);
        if (merged)
            --parts.back().second;
        else
            parts.pop_back();
    }
}

} // namespace

std::vector<Cluster> enumerate_clusters(PolymerUniverse& u, int m) {
    if (m < 1) throw ValidationError("cluster size bound must be >= 1");
    const int n = u.polymer_count(m);
    std::vector<Cluster> out;
    std::vector<std::pair<int, int>> parts;
    cluster_rec(u, n, 0, m, parts, 0, out);
    return out;
}

IncompatibilityGraph cluster_incompatibility_graph(const Cluster& c, const PolymerUniverse& u) {
    std::vector<int> owner; // instance -> part index
    for (int p = 0; p < static_cast<int>(c.parts.size()); ++p)
        for (int k = 0; k < c.parts[p].second; ++k) owner.push_back(p);
    const int n = static_cast<int>(owner.size());
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            int a = c.parts[owner[i]].first, b = c.parts[owner[j]].first;
            if (owner[i] == owner[j] || u.incompatible(a, b)) edges.emplace_back(i, j);
        }
    return IncompatibilityGraph(n, std::move(edges));
}

BigInt cluster_ursell_hat(const Cluster& c, const PolymerUniverse& u) {
    const int q = static_cast<int>(c.parts.size());
    std::vector<int> mult(q);
    std::vector<std::vector<char>> adj(q, std::vector<char>(q, 0));
    for (int i = 0; i < q; ++i) {
        mult[i] = c.parts[i].second;
        for (int j = 0; j < q; ++j)
            if (i != j) adj[i][j] = u.incompatible(c.parts[i].first, c.parts[j].first) ? 1 : 0;
    }
    return ursell_hat_blowup(mult, adj);
}

Complex cluster_term(const Cluster& c, const PolymerUniverse& u) {
    BigInt hat = cluster_ursell_hat(c, u);
    if (hat.is_zero()) return Complex{0.0, 0.0};
    BigInt denom = 1;
    Complex wprod{1.0, 0.0};
    for (auto& [idx, mult] : c.parts) {
        for (int k = 2; k <= mult; ++k) denom *= k;
        Complex w = u.weight(idx);
        for (int k = 0; k < mult; ++k) wprod *= w;
    }
    double coeff = BigRational(hat, denom).convert_to<double>();
    return coeff * wprod;
}

} // namespace clusterx
