// SPDX-License-Identifier: Apache-2.0
#include "clusterx/hypergraph.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace clusterx {

namespace {
constexpr int kMaxVertices = 64;
constexpr int kMaxEdges = 64;
} // namespace

MultiHypergraph::MultiHypergraph(
    std::vector<Vertex> vertices,
    std::vector<std::pair<std::int64_t, std::vector<std::string>>> edges) {
    vertices_ = std::move(vertices);
    for (auto& [label, ids] : edges) {
        Edge e;
        e.label = label;
        for (const auto& id : ids) {
            auto it = std::find_if(vertices_.begin(), vertices_.end(),
                                   [&](const Vertex& v) { return v.id == id; });
            if (it == vertices_.end())
                throw ValidationError("edge " + std::to_string(label) +
                                      " references undeclared vertex '" + id + "'");
            e.verts.push_back(static_cast<int>(it - vertices_.begin()));
        }
        edges_.push_back(std::move(e));
    }
    finalize();
}

MultiHypergraph MultiHypergraph::from_indices(
    std::vector<Vertex> vertices,
    std::vector<std::pair<std::int64_t, std::vector<int>>> edges) {
    MultiHypergraph g;
    g.vertices_ = std::move(vertices);
    for (auto& [label, verts] : edges) {
        Edge e;
        e.label = label;
        e.verts = std::move(verts);
        for (int v : e.verts)
            if (v < 0 || v >= g.order())
                throw ValidationError("edge " + std::to_string(label) +
                                      " references vertex index out of range");
        g.edges_.push_back(std::move(e));
    }
    g.finalize();
    return g;
}

void MultiHypergraph::finalize() {
    if (order() > kMaxVertices)
        throw GuardError("graph order exceeds the desk-scale limit of 64 vertices");
    if (size() > kMaxEdges)
        throw GuardError("graph size exceeds the desk-scale limit of 64 edges");
    for (int i = 0; i < order(); ++i) {
        const auto& v = vertices_[i];
        if (v.dim < 1)
            throw ValidationError("vertex '" + v.id + "' has local dimension < 1");
        if (vertex_index_.count(v.id))
            throw ValidationError("duplicate vertex id '" + v.id + "'");
        vertex_index_[v.id] = i;
    }
    std::int64_t prev = 0;
    bool first = true;
    for (int i = 0; i < size(); ++i) {
        auto& e = edges_[i];
        if (e.label < 1)
            throw ValidationError("edge label " + std::to_string(e.label) +
                                  " is not a positive integer");
        if (!first && e.label <= prev)
            throw ValidationError("edge labels are not strictly increasing at label " +
                                  std::to_string(e.label));
        prev = e.label;
        first = false;
        if (e.verts.empty())
            throw ValidationError("edge " + std::to_string(e.label) + " is empty");
        std::set<int> seen;
        e.vmask = 0;
        for (int v : e.verts) {
            if (!seen.insert(v).second)
                throw ValidationError("edge " + std::to_string(e.label) +
                                      " lists vertex '" + vertices_[v].id + "' twice");
            e.vmask |= (1ull << v);
        }
        label_index_[e.label] = i;
    }
}

int MultiHypergraph::max_degree() const {
    int best = 0;
    for (int v = 0; v < order(); ++v) {
        int deg = 0;
        for (const auto& e : edges_)
            if (e.vmask & (1ull << v)) ++deg;
        best = std::max(best, deg);
    }
    return best;
}

int MultiHypergraph::rank() const {
    int best = 0;
    for (const auto& e : edges_) best = std::max(best, static_cast<int>(e.verts.size()));
    return best;
}

int MultiHypergraph::vertex_index(const std::string& id) const {
    auto it = vertex_index_.find(id);
    if (it == vertex_index_.end())
        throw ValidationError("unknown vertex '" + id + "'");
    return it->second;
}

bool MultiHypergraph::has_vertex(const std::string& id) const {
    return vertex_index_.count(id) != 0;
}

int MultiHypergraph::edge_index_of_label(std::int64_t label) const {
    auto it = label_index_.find(label);
    if (it == label_index_.end())
        throw ValidationError("unknown edge label " + std::to_string(label));
    return it->second;
}

std::vector<int> MultiHypergraph::edges_at_vertex(int v) const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
        if (edges_[i].vmask & (1ull << v)) out.push_back(i);
    return out;
}

GraphStats validate(const MultiHypergraph& g) {
    return GraphStats{g.order(), g.size(), g.max_degree(), g.rank()};
}

EdgeSubset::EdgeSubset(const MultiHypergraph& g, std::vector<int> edge_indices)
    : host(&g), edges(std::move(edge_indices)) {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    for (int e : edges)
        if (e < 0 || e >= g.size())
            throw ValidationError("edge subset member index out of range");
}

EdgeSubset EdgeSubset::from_labels(const MultiHypergraph& g,
                                   const std::vector<std::int64_t>& labels) {
    std::vector<int> idx;
    idx.reserve(labels.size());
    for (auto l : labels) idx.push_back(g.edge_index_of_label(l));
    return EdgeSubset(g, std::move(idx));
}

std::uint64_t EdgeSubset::vertex_mask() const {
    std::uint64_t m = 0;
    for (int e : edges) m |= host->edge(e).vmask;
    return m;
}

std::vector<int> EdgeSubset::vertex_set() const {
    std::uint64_t m = vertex_mask();
    std::vector<int> out;
    for (int v = 0; v < host->order(); ++v)
        if (m & (1ull << v)) out.push_back(v);
    return out;
}

int EdgeSubset::vertex_count() const {
    return std::popcount(vertex_mask());
}

std::vector<std::int64_t> EdgeSubset::labels() const {
    std::vector<std::int64_t> out;
    out.reserve(edges.size());
    for (int e : edges) out.push_back(host->edge(e).label);
    return out;
}

bool is_connected(const EdgeSubset& s) {
    if (s.empty()) return false;
    const int n = s.size();
    // BFS on the intersection graph of the member edges.
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    std::uint64_t support = s.host->edge(s.edges[0]).vmask;
    int visited = 1;
    while (!stack.empty()) {
        stack.pop_back();
        bool grew = true;
        while (grew) {
            grew = false;
            for (int i = 0; i < n; ++i) {
                if (seen[i]) continue;
                if (s.host->edge(s.edges[i]).vmask & support) {
                    seen[i] = 1;
                    ++visited;
                    support |= s.host->edge(s.edges[i]).vmask;
                    grew = true;
                }
            }
        }
    }
    return visited == n;
}

std::vector<EdgeSubset> connected_components(const EdgeSubset& s) {
    std::vector<EdgeSubset> out;
    const int n = s.size();
    std::vector<char> used(n, 0);
    for (int i = 0; i < n; ++i) {
        if (used[i]) continue;
        std::vector<int> comp{s.edges[i]};
        used[i] = 1;
        std::uint64_t support = s.host->edge(s.edges[i]).vmask;
        bool grew = true;
        while (grew) {
            grew = false;
            for (int j = 0; j < n; ++j) {
                if (used[j]) continue;
                if (s.host->edge(s.edges[j]).vmask & support) {
                    used[j] = 1;
                    comp.push_back(s.edges[j]);
                    support |= s.host->edge(s.edges[j]).vmask;
                    grew = true;
                }
            }
        }
        out.emplace_back(*s.host, std::move(comp));
    }
    // Components come out ordered by smallest member already (outer loop is
    // ascending), but keep the contract explicit.
    std::sort(out.begin(), out.end(),
              [](const EdgeSubset& a, const EdgeSubset& b) { return a.edges[0] < b.edges[0]; });
    return out;
}

namespace {

// Grows connected supersets of `current`, never adding banned edges.
// Each connected superset is produced exactly once.
void grow(const MultiHypergraph& g, std::vector<int>& current, std::uint64_t support,
          std::uint64_t banned, std::uint64_t in_set, int max_size,
          std::vector<std::vector<int>>& out) {
    out.push_back(current);
    if (static_cast<int>(current.size()) >= max_size) return;
    std::vector<int> frontier;
    for (int e = 0; e < g.size(); ++e) {
        std::uint64_t bit = 1ull << e;
        if ((banned & bit) || (in_set & bit)) continue;
        if (g.edge(e).vmask & support) frontier.push_back(e);
    }
    std::uint64_t ban = banned;
    for (int e : frontier) {
        current.push_back(e);
        grow(g, current, support | g.edge(e).vmask, ban, in_set | (1ull << e), max_size, out);
        current.pop_back();
        ban |= (1ull << e);
    }
}

std::vector<EdgeSubset> finish(const MultiHypergraph& g, std::vector<std::vector<int>> raw) {
    for (auto& s : raw) std::sort(s.begin(), s.end());
    std::sort(raw.begin(), raw.end());
    std::vector<EdgeSubset> out;
    out.reserve(raw.size());
    for (auto& s : raw) out.emplace_back(g, std::move(s));
    return out;
}

} // namespace

std::vector<EdgeSubset> enumerate_connected_subgraphs(const MultiHypergraph& g,
                                                      int pivot, int max_size) {
    if (pivot < 0 || pivot >= g.order())
        throw ValidationError("unknown pivot vertex index");
    if (max_size < 1) throw ValidationError("max_size must be >= 1");
    std::vector<std::vector<int>> raw;
    std::uint64_t ban = 0;
    for (int e : g.edges_at_vertex(pivot)) {
        std::vector<int> cur{e};
        grow(g, cur, g.edge(e).vmask, ban, 1ull << e, max_size, raw);
        ban |= (1ull << e);
    }
    return finish(g, std::move(raw));
}

std::vector<EdgeSubset> enumerate_connected_subgraphs(const MultiHypergraph& g,
                                                      int max_size) {
    if (max_size < 1) throw ValidationError("max_size must be >= 1");
    std::vector<std::vector<int>> raw;
    std::uint64_t ban = 0;
    for (int e = 0; e < g.size(); ++e) {
        // Subsets whose minimum edge is e: all smaller edges banned.
        std::vector<int> cur{e};
        grow(g, cur, g.edge(e).vmask, ban, 1ull << e, max_size, raw);
        ban |= (1ull << e);
    }
    return finish(g, std::move(raw));
}

CausalCone causal_cone(const MultiHypergraph& g, int v) {
    if (v < 0 || v >= g.order()) throw ValidationError("unknown vertex index");
    CausalCone cone;
    cone.root = v;
    std::uint64_t support = 1ull << v;
    std::vector<int> included;
    for (int e = g.size() - 1; e >= 0; --e) {
        if (g.edge(e).vmask & support) {
            included.push_back(e);
            support |= g.edge(e).vmask;
        }
    }
    std::reverse(included.begin(), included.end());
    cone.cone_edges = EdgeSubset(g, std::move(included));
    cone.cone_vertices = support;
    return cone;
}

CausalHypergraph causal_intersection_hypergraph(const MultiHypergraph& g) {
    CausalHypergraph out;
    std::vector<std::pair<std::int64_t, std::vector<int>>> edges;
    for (int v = 0; v < g.order(); ++v) {
        CausalCone c = causal_cone(g, v);
        std::vector<int> verts;
        for (int u = 0; u < g.order(); ++u)
            if (c.cone_vertices & (1ull << u)) verts.push_back(u);
        edges.emplace_back(static_cast<std::int64_t>(v) + 1, std::move(verts));
        out.edge_vertex.push_back(v);
    }
    out.graph = MultiHypergraph::from_indices(g.vertices(), std::move(edges));
    return out;
}

MultiHypergraph k_thicken(const MultiHypergraph& g, int k) {
    if (k < 1) throw ValidationError("thickening factor must be >= 1");
    if (g.rank() > 2)
        throw ValidationError("k_thicken requires a multigraph (rank <= 2), got rank " +
                              std::to_string(g.rank()));
    std::vector<std::pair<std::int64_t, std::vector<int>>> edges;
    for (const auto& e : g.edges())
        for (int j = 0; j < k; ++j)
            edges.emplace_back(e.label * k + j, e.verts);
    return MultiHypergraph::from_indices(g.vertices(), std::move(edges));
}

} // namespace clusterx
