// SPDX-License-Identifier: Apache-2.0
#include "clusterx/classical.hpp"

#include <cmath>

#include "clusterx/oracle.hpp"

namespace clusterx {

namespace {

void check_rank2_edges(const MultiHypergraph& g) {
    for (const auto& e : g.edges()) {
        if (e.verts.size() != 2 || e.verts[0] == e.verts[1])
            throw ValidationError("edge " + std::to_string(e.label) +
                                  " must join two distinct vertices");
    }
}

} // namespace

IsingSpec::IsingSpec(MultiHypergraph g, std::map<std::int64_t, double> c, Complex b)
    : graph(std::move(g)), couplings(std::move(c)), beta(b) {
    check_rank2_edges(graph);
    for (const auto& e : graph.edges()) {
        auto it = couplings.find(e.label);
        if (it == couplings.end())
            throw ValidationError("no coupling for edge " + std::to_string(e.label));
        if (std::abs(it->second) > 1.0)
            throw ValidationError("coupling on edge " + std::to_string(e.label) +
                                  " exceeds 1 in magnitude");
    }
}

HardCoreSpec::HardCoreSpec(MultiHypergraph g, Complex x)
    : graph(std::move(g)), activity(x) {
    check_rank2_edges(graph);
    for (int i = 0; i < graph.size(); ++i)
        for (int j = i + 1; j < graph.size(); ++j)
            if (graph.edge(i).vmask == graph.edge(j).vmask)
                throw ValidationError("parallel edges " +
                                      std::to_string(graph.edge(i).label) + " and " +
                                      std::to_string(graph.edge(j).label));
}

Complex ising_weight(const IsingSpec& s, const EdgeSubset& gamma) {
    if (gamma.empty()) throw ValidationError("ising_weight requires a non-empty polymer");
    std::vector<int> verts = gamma.vertex_set();
    const int n = static_cast<int>(verts.size());
    std::vector<int> pos(s.graph.order(), -1);
    for (int i = 0; i < n; ++i) pos[verts[i]] = i;

    Complex total{0.0, 0.0};
    for (std::uint64_t a = 0; a < (1ull << n); ++a) {
        Complex prod{1.0, 0.0};
        for (int e : gamma.edges) {
            const auto& ed = s.graph.edge(e);
            int su = (a >> pos[ed.verts[0]]) & 1 ? -1 : 1;
            int sv = (a >> pos[ed.verts[1]]) & 1 ? -1 : 1;
            double phi = s.couplings.at(ed.label);
            prod *= std::exp(-s.beta * (phi * su * sv)) - 1.0;
        }
        total += prod;
    }
    return total / std::pow(2.0, n);
}

ConditionReport check_conditions(const IsingSpec& s) {
    ConditionReport rep;
    rep.delta = s.graph.max_degree();
    rep.rank = s.graph.rank();
    rep.bound = partition_bound(rep.delta, rep.rank);
    rep.add("|beta|", rep.bound, std::abs(s.beta));
    for (const auto& e : s.graph.edges())
        rep.add("|phi| edge " + std::to_string(e.label), 1.0,
                std::abs(s.couplings.at(e.label)));
    return rep;
}

ApproxZResult approximate_ising(const IsingSpec& s, double epsilon,
                                std::optional<int> order) {
    SubgraphPolymerUniverse u(s.graph, [&s](const EdgeSubset& g) {
        return ising_weight(s, g);
    });
    return approximate_Z(u, s.graph.order(), epsilon, order);
}

HardCoreUniverse::HardCoreUniverse(const HardCoreSpec& h)
    : graph_(&h.graph), activity_(h.activity) {
    adj_.assign(graph_->order(), 0);
    for (int v = 0; v < graph_->order(); ++v) adj_[v] = 1ull << v;
    for (const auto& e : graph_->edges()) {
        adj_[e.verts[0]] |= 1ull << e.verts[1];
        adj_[e.verts[1]] |= 1ull << e.verts[0];
    }
}

int HardCoreUniverse::polymer_count(int max_size) {
    return max_size >= 1 ? graph_->order() : 0;
}

bool HardCoreUniverse::incompatible(int a, int b) const {
    return (adj_[a] >> b) & 1;
}

std::string HardCoreUniverse::describe(int idx) const {
    return "vertex '" + graph_->vertex(idx).id + "'";
}

double hardcore_bound(int delta) {
    return 1.0 / (2.0 * std::exp(1.0) * (delta + 1));
}

ConditionReport check_conditions(const HardCoreSpec& h) {
    ConditionReport rep;
    rep.delta = h.graph.max_degree();
    rep.rank = h.graph.rank();
    rep.bound = hardcore_bound(rep.delta);
    rep.add("|x|", rep.bound, std::abs(h.activity));
    return rep;
}

ApproxZResult approximate_hardcore(const HardCoreSpec& h, double epsilon,
                                   std::optional<int> order) {
    HardCoreUniverse u(h);
    return approximate_Z(u, h.graph.order(), epsilon, order);
}

ThickeningReport thickening_identity_check(const IsingSpec& s, int k) {
    if (k < 1) throw ValidationError("thickening factor must be >= 1");
    if (s.graph.order() > 16)
        throw GuardError("thickening_identity_check guard: more than 16 vertices");
    MultiHypergraph gk = k_thicken(s.graph, k);
    std::map<std::int64_t, double> ck;
    for (const auto& e : s.graph.edges())
        for (int j = 0; j < k; ++j) ck[e.label * k + j] = s.couplings.at(e.label);
    IsingSpec sk(std::move(gk), std::move(ck), s.beta / static_cast<double>(k));

    ThickeningReport rep;
    rep.lhs = exact_ising(s);
    rep.rhs = exact_ising(sk);
    rep.difference = std::abs(rep.lhs - rep.rhs);
    return rep;
}

} // namespace clusterx
