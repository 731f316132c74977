// SPDX-License-Identifier: Apache-2.0
#include "clusterx/ursell.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>

namespace clusterx {

IncompatibilityGraph::IncompatibilityGraph(int n, std::vector<std::pair<int, int>> e)
    : nodes(n), edges(std::move(e)) {
    if (n <= 0) throw ValidationError("incompatibility graph needs at least one node");
    std::vector<std::pair<int, int>> norm;
    for (auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ValidationError("incompatibility graph edge endpoint out of range");
        if (u == v) throw ValidationError("incompatibility graph has a self-loop");
        norm.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(norm.begin(), norm.end());
    if (std::adjacent_find(norm.begin(), norm.end()) != norm.end())
        throw ValidationError("incompatibility graph has parallel edges");
    edges = std::move(norm);
}

bool is_connected(const IncompatibilityGraph& h) {
    if (h.nodes == 0) return false;
    if (h.nodes > 64) throw GuardError("incompatibility graph too large (> 64 nodes)");
    std::uint64_t reached = 1;
    bool grew = true;
    while (grew) {
        grew = false;
        for (auto& [u, v] : h.edges) {
            std::uint64_t bu = 1ull << u, bv = 1ull << v;
            bool hu = reached & bu, hv = reached & bv;
            if (hu != hv) {
                reached |= bu | bv;
                grew = true;
            }
        }
    }
    return reached == (h.nodes == 64 ? ~0ull : (1ull << h.nodes) - 1);
}

BigInt ursell_hat_subsets(const IncompatibilityGraph& h) {
    const int m = static_cast<int>(h.edges.size());
    const int n = h.nodes;
    if (n < 1) throw ValidationError("empty incompatibility graph");
    if (m > 24) throw GuardError("subset enumeration guard: more than 24 edges");
    const std::uint64_t full = (n == 64) ? ~0ull : (1ull << n) - 1;
    std::vector<std::uint64_t> emask(m);
    for (int i = 0; i < m; ++i)
        emask[i] = (1ull << h.edges[i].first) | (1ull << h.edges[i].second);
    BigInt total = 0;
    for (std::uint64_t s = 0; s < (1ull << m); ++s) {
        // spanning check
        std::uint64_t cover = 0;
        for (int i = 0; i < m; ++i)
            if (s & (1ull << i)) cover |= emask[i];
        if (n == 1) {
            if (s == 0) total += 1; // single node: only the empty set spans-connects
            continue;
        }
        if (cover != full) continue;
        // connectivity check on the chosen edges
        std::uint64_t reached = 1ull << h.edges.front().first;
        // seed from the lowest vertex of some chosen edge
        for (int i = 0; i < m; ++i)
            if (s & (1ull << i)) { reached = 1ull << h.edges[i].first; break; }
        bool grew = true;
        while (grew) {
            grew = false;
            for (int i = 0; i < m; ++i) {
                if (!(s & (1ull << i))) continue;
                bool hu = reached & (1ull << h.edges[i].first);
                bool hv = reached & (1ull << h.edges[i].second);
                if (hu != hv) {
                    reached |= emask[i];
                    grew = true;
                }
            }
        }
        if (reached != full) continue;
        if (std::popcount(s) % 2 == 0) total += 1; else total -= 1;
    }
    return total;
}

namespace {

// Deletion-contraction state: a multigraph as an edge list over n nodes.
struct MG {
    int nodes;
    std::vector<std::pair<int, int>> edges; // loops allowed during contraction
};

bool mg_connected_without(const MG& g, int skip) {
    if (g.nodes <= 1) return true;
    std::vector<int> comp(g.nodes);
    std::iota(comp.begin(), comp.end(), 0);
    // tiny union-find
    auto find = [&](int x) {
        while (comp[x] != x) x = comp[x] = comp[comp[x]];
        return x;
    };
    for (int i = 0; i < static_cast<int>(g.edges.size()); ++i) {
        if (i == skip) continue;
        int a = find(g.edges[i].first), b = find(g.edges[i].second);
        if (a != b) comp[a] = b;
    }
    int root = find(0);
    for (int v = 1; v < g.nodes; ++v)
        if (find(v) != root) return false;
    return true;
}

MG contract(const MG& g, int which) {
    auto [u, v] = g.edges[which];
    MG out;
    out.nodes = g.nodes - 1;
    auto remap = [&](int x) {
        if (x == v) x = u;
        return x > v ? x - 1 : x;
    };
    for (int i = 0; i < static_cast<int>(g.edges.size()); ++i) {
        if (i == which) continue;
        out.edges.emplace_back(remap(g.edges[i].first), remap(g.edges[i].second));
    }
    return out;
}

// T(1, 0). A loop contributes a factor of y = 0, a bridge a factor of x = 1.
BigInt tutte10_rec(const MG& g) {
    for (auto& [u, v] : g.edges)
        if (u == v) return 0;
    if (g.edges.empty()) return 1;
    const int e = 0;
    if (mg_connected_without(g, e)) {
        MG del = g;
        del.edges.erase(del.edges.begin() + e);
        return tutte10_rec(del) + tutte10_rec(contract(g, e));
    }
    return tutte10_rec(contract(g, e)); // bridge: factor x = 1
}

} // namespace

BigInt tutte_10(const IncompatibilityGraph& h) {
    MG g{h.nodes, h.edges};
    return tutte10_rec(g);
}

BigInt ursell_hat_tutte(const IncompatibilityGraph& h) {
    if (!is_connected(h)) throw ValidationError("ursell requires a connected graph");
    BigInt t = tutte_10(h);
    return (h.nodes % 2 == 1) ? t : -t;
}

BigRational ursell(const IncompatibilityGraph& h, int route) {
    if (!is_connected(h)) throw ValidationError("ursell requires a connected graph");
    BigInt hat = (route == 0) ? ursell_hat_subsets(h) : ursell_hat_tutte(h);
    BigInt fact = 1;
    for (int i = 2; i <= h.nodes; ++i) fact *= i;
    return BigRational(hat, fact);
}

BigInt ursell_hat_blowup(const std::vector<int>& mult,
                         const std::vector<std::vector<char>>& adj) {
    const int q = static_cast<int>(mult.size());
    if (q == 0) throw ValidationError("empty multiset");
    for (int m : mult)
        if (m < 1) throw ValidationError("multiplicity must be >= 1");

    std::vector<std::int64_t> dims(q), stride(q);
    std::int64_t total = 1;
    for (int i = 0; i < q; ++i) {
        dims[i] = mult[i] + 1;
        stride[i] = total;
        total *= dims[i];
        if (total > (1ll << 24)) throw GuardError("blow-up DP state space too large");
    }

    // binomials up to the largest multiplicity
    const int maxm = *std::max_element(mult.begin(), mult.end());
    std::vector<std::vector<std::int64_t>> binom(maxm + 1, std::vector<std::int64_t>(maxm + 1, 0));
    for (int n = 0; n <= maxm; ++n) {
        binom[n][0] = 1;
        for (int k = 1; k <= n; ++k)
            binom[n][k] = binom[n - 1][k - 1] + (k <= n - 1 ? binom[n - 1][k] : 0);
    }

    // indep(a): the chosen instances form an independent set of the blow-up.
    std::vector<char> indep(total, 0);
    std::vector<int> a(q, 0);
    for (std::int64_t idx = 0; idx < total; ++idx) {
        bool ok = true;
        for (int i = 0; i < q && ok; ++i) {
            if (a[i] > 1) ok = false;
            for (int j = i + 1; j < q && ok; ++j)
                if (a[i] >= 1 && a[j] >= 1 && adj[i][j]) ok = false;
        }
        indep[idx] = ok ? 1 : 0;
        for (int i = 0; i < q; ++i) {
            if (++a[i] < dims[i]) break;
            a[i] = 0;
        }
    }

    // c(a) = spanning-connected signed sum for the blow-up with counts a,
    // anchored at one instance of the first non-empty group.
    std::vector<BigInt> c(total);
    std::fill(a.begin(), a.end(), 0);
    std::vector<int> b(q, 0);
    for (std::int64_t idx = 1; idx < total; ++idx) {
        // advance a
        for (int i = 0; i < q; ++i) {
            if (++a[i] < dims[i]) break;
            a[i] = 0;
        }
        int i0 = 0;
        while (a[i0] == 0) ++i0;
        BigInt acc = indep[idx] ? 1 : 0;
        // subtract over proper sub-vectors b <= a with b[i0] >= 1
        std::fill(b.begin(), b.end(), 0);
        b[i0] = 1;
        while (true) {
            std::int64_t bidx = 0;
            for (int i = 0; i < q; ++i) bidx += stride[i] * b[i];
            if (bidx != idx) { // b != a
                std::int64_t rest = idx - bidx; // counts a - b, valid since b <= a digitwise
                if (indep[rest] && !c[bidx].is_zero()) {
                    std::int64_t ways = binom[a[i0] - 1][b[i0] - 1];
                    for (int j = 0; j < q; ++j)
                        if (j != i0) ways *= binom[a[j]][b[j]];
                    acc -= ways * c[bidx];
                }
            }
            // advance b within the box [*, a], keeping b[i0] >= 1
            int i = 0;
            for (; i < q; ++i) {
                int lo = (i == i0) ? 1 : 0;
                if (++b[i] <= a[i]) break;
                b[i] = lo;
            }
            if (i == q) break;
        }
        c[idx] = std::move(acc);
    }
    return c[total - 1];
}

} // namespace clusterx
