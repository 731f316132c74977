// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>
#include <set>

#include "clusterx/polymer.hpp"

using namespace clusterx;

namespace {

MultiHypergraph triangle() {
    return MultiHypergraph({{"a", 2}, {"b", 2}, {"c", 2}},
                           {{1, {"a", "b"}}, {2, {"b", "c"}}, {3, {"c", "a"}}});
}

SubgraphPolymerUniverse constant_universe(const MultiHypergraph& g, Complex w) {
    return SubgraphPolymerUniverse(g, [w](const EdgeSubset&) { return w; });
}

// A tiny abstract universe given explicitly: sizes, adjacency, weights.
class ExplicitUniverse : public PolymerUniverse {
public:
    ExplicitUniverse(std::vector<int> sizes, std::vector<std::vector<char>> inc,
                     std::vector<Complex> weights)
        : sizes_(std::move(sizes)), inc_(std::move(inc)), weights_(std::move(weights)) {}
    int polymer_count(int max_size) override {
        int n = 0;
        for (std::size_t i = 0; i < sizes_.size() && sizes_[i] <= max_size; ++i) ++n;
        return n;
    }
    int polymer_size(int idx) const override { return sizes_.at(idx); }
    bool incompatible(int a, int b) const override { return a == b || inc_[a][b]; }
    Complex weight(int idx) const override { return weights_.at(idx); }

private:
    std::vector<int> sizes_; // must be non-decreasing
    std::vector<std::vector<char>> inc_;
    std::vector<Complex> weights_;
};

// Exhaustive multiset generation: all count vectors with total <= m,
// filtered by expanded-graph connectivity via the blow-up criterion.
std::set<std::vector<std::pair<int, int>>> brute_clusters(PolymerUniverse& u, int m) {
    int n = u.polymer_count(m);
    std::set<std::vector<std::pair<int, int>>> out;
    std::vector<int> counts(n, 0);
    std::function<void(int, int)> rec = [&](int i, int budget) {
        if (i == n) {
            std::vector<std::pair<int, int>> parts;
            for (int j = 0; j < n; ++j)
                if (counts[j]) parts.emplace_back(j, counts[j]);
            if (parts.empty()) return;
            // connectivity of the quotient graph over used polymers
            int k = static_cast<int>(parts.size());
            std::vector<char> seen(k, 0);
            std::vector<int> stack{0};
            seen[0] = 1;
            while (!stack.empty()) {
                int a = stack.back();
                stack.pop_back();
                for (int b = 0; b < k; ++b)
                    if (!seen[b] && u.incompatible(parts[a].first, parts[b].first)) {
                        seen[b] = 1;
                        stack.push_back(b);
                    }
            }
            for (char s : seen)
                if (!s) return;
            out.insert(parts);
            return;
        }
        for (int c = 0; c * u.polymer_size(i) <= budget; ++c) {
            counts[i] = c;
            rec(i + 1, budget - c * u.polymer_size(i));
        }
        counts[i] = 0;
    };
    rec(0, m);
    return out;
}

} // namespace

TEST_CASE("enumerate_polymers") {
    MultiHypergraph single({{"a", 2}, {"b", 2}}, {{1, {"a", "b"}}});
    auto u1 = constant_universe(single, {0.1, 0.0});
    CHECK(enumerate_polymers(u1, 2).size() == 1);

    auto t = triangle();
    auto ut = constant_universe(t, {0.1, 0.0});
    CHECK(enumerate_polymers(ut, 1).size() == 3);
    CHECK(enumerate_polymers(ut, 3).size() == 7);
}

TEST_CASE("canonical polymer order: by size, then lexicographic") {
    auto t = triangle();
    auto u = constant_universe(t, {0.1, 0.0});
    int n = u.polymer_count(3);
    REQUIRE(n == 7);
    for (int i = 1; i < n; ++i) {
        CHECK(u.polymer_size(i - 1) <= u.polymer_size(i));
        if (u.polymer_size(i - 1) == u.polymer_size(i))
            CHECK(u.polymer(i - 1).edges < u.polymer(i).edges);
    }
}

TEST_CASE("enumerate_clusters: reference examples") {
    MultiHypergraph single({{"a", 2}, {"b", 2}}, {{1, {"a", "b"}}});
    auto u = constant_universe(single, {0.1, 0.0});
    auto cl = enumerate_clusters(u, 2);
    REQUIRE(cl.size() == 2);
    CHECK(cl[0].parts == std::vector<std::pair<int, int>>{{0, 1}});
    CHECK(cl[1].parts == std::vector<std::pair<int, int>>{{0, 2}});
    CHECK(cl[1].total_size == 2);

    // two vertex-disjoint edges: no mixed clusters
    MultiHypergraph two({{"a", 2}, {"b", 2}, {"c", 2}, {"d", 2}},
                        {{1, {"a", "b"}}, {2, {"c", "d"}}});
    auto u2 = constant_universe(two, {0.1, 0.0});
    auto cl2 = enumerate_clusters(u2, 2);
    CHECK(cl2.size() == 4);
    for (const auto& c : cl2) CHECK(c.parts.size() == 1);

    // m = 1: singleton clusters of size-1 polymers only
    auto t = triangle();
    auto ut = constant_universe(t, {0.1, 0.0});
    auto cl1 = enumerate_clusters(ut, 1);
    CHECK(cl1.size() == 3);
}

TEST_CASE("enumerate_clusters: completeness against exhaustive generation") {
    auto t = triangle();
    auto ut = constant_universe(t, {0.1, 0.0});
    for (int m = 1; m <= 5; ++m) {
        auto got = enumerate_clusters(ut, m);
        std::set<std::vector<std::pair<int, int>>> got_set;
        for (const auto& c : got) {
            CHECK(c.total_size <= m);
            CHECK(got_set.insert(c.parts).second); // no duplicates
        }
        CHECK(got_set == brute_clusters(ut, m));
    }

    ExplicitUniverse eu({1, 1, 2}, {{0, 1, 0}, {1, 0, 1}, {0, 1, 0}},
                        {{0.1, 0.0}, {0.2, 0.0}, {0.05, 0.0}});
    for (int m = 1; m <= 6; ++m) {
        auto got = enumerate_clusters(eu, m);
        std::set<std::vector<std::pair<int, int>>> got_set;
        for (const auto& c : got) got_set.insert(c.parts);
        CHECK(got_set.size() == got.size());
        CHECK(got_set == brute_clusters(eu, m));
    }
}

TEST_CASE("cluster_term: reference values") {
    MultiHypergraph single({{"a", 2}, {"b", 2}}, {{1, {"a", "b"}}});
    Complex w{0.07, 0.01};
    auto u = constant_universe(single, w);
    u.polymer_count(1);
    Cluster c1{{{0, 1}}, 1};
    CHECK(std::abs(cluster_term(c1, u) - w) <= 1e-15);
    Cluster c2{{{0, 2}}, 2};
    CHECK(std::abs(cluster_term(c2, u) - (-w * w / 2.0)) <= 1e-15);

    // two incompatible distinct polymers: -w1 w2
    ExplicitUniverse eu({1, 1}, {{0, 1}, {1, 0}}, {{0.1, 0.0}, {0.0, 0.2}});
    eu.polymer_count(1);
    Cluster mixed{{{0, 1}, {1, 1}}, 2};
    Complex expect = -Complex{0.1, 0.0} * Complex{0.0, 0.2};
    CHECK(std::abs(cluster_term(mixed, eu) - expect) <= 1e-15);
}

TEST_CASE("cluster phi-hat matches the expanded graph") {
    auto t = triangle();
    auto u = constant_universe(t, {0.1, 0.0});
    for (const auto& c : enumerate_clusters(u, 4)) {
        auto h = cluster_incompatibility_graph(c, u);
        CHECK(cluster_ursell_hat(c, u) == ursell_hat_subsets(h));
    }
}

TEST_CASE("multiset/tuple consistency") {
    // Sum over multiset clusters of phi-hat prod w^m/m! equals the sum
    // over ordered tuples of phi(H) prod w.
    ExplicitUniverse u({1, 1, 1}, {{0, 1, 1}, {1, 0, 0}, {1, 0, 0}},
                       {{0.1, 0.02}, {-0.05, 0.0}, {0.03, 0.01}});
    const int m = 5;
    Complex multiset_sum{0.0, 0.0};
    for (const auto& c : enumerate_clusters(u, m)) multiset_sum += cluster_term(c, u);

    Complex tuple_sum{0.0, 0.0};
    std::vector<int> tup;
    std::function<void()> rec = [&]() {
        if (!tup.empty()) {
            int k = static_cast<int>(tup.size());
            std::vector<std::pair<int, int>> edges;
            for (int a = 0; a < k; ++a)
                for (int b = a + 1; b < k; ++b)
                    if (u.incompatible(tup[a], tup[b])) edges.emplace_back(a, b);
            IncompatibilityGraph h(k, std::move(edges));
            if (is_connected(h)) {
                Complex prod{1.0, 0.0};
                for (int i : tup) prod *= u.weight(i);
                tuple_sum += static_cast<double>(ursell(h).convert_to<double>()) * prod;
            }
        }
        if (static_cast<int>(tup.size()) == m) return;
        for (int i = 0; i < 3; ++i) {
            tup.push_back(i);
            rec();
            tup.pop_back();
        }
    };
    rec();
    CHECK(std::abs(multiset_sum - tuple_sum) <= 1e-12);
}

TEST_CASE("subgraph universe: incompatibility and vertex order bound") {
    auto t = triangle();
    auto u = constant_universe(t, {0.1, 0.0});
    int n = u.polymer_count(3);
    int r = t.rank();
    for (int i = 0; i < n; ++i) {
        CHECK(u.incompatible(i, i));
        CHECK(u.vertex_order(i) <= (r - 1) * u.polymer_size(i) + 1);
        for (int j = 0; j < n; ++j) {
            CHECK(u.incompatible(i, j) == u.incompatible(j, i));
            bool overlap = (u.polymer(i).vertex_mask() & u.polymer(j).vertex_mask()) != 0;
            CHECK(u.incompatible(i, j) == overlap);
        }
    }
}

TEST_CASE("weight cache: oracle called once per polymer") {
    auto t = triangle();
    int calls = 0;
    SubgraphPolymerUniverse u(t, [&calls](const EdgeSubset&) {
        ++calls;
        return Complex{0.1, 0.0};
    });
    int n = u.polymer_count(3);
    for (int rep = 0; rep < 3; ++rep)
        for (int i = 0; i < n; ++i) (void)u.weight(i);
    CHECK(calls == n);
}
