// SPDX-License-Identifier: Apache-2.0
#ifndef CLUSTERX_HYPERGRAPH_HPP
#define CLUSTERX_HYPERGRAPH_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "clusterx/errors.hpp"

namespace clusterx {

/// Labeled multihypergraph with per-vertex local dimensions.
///
/// Edges carry unique, strictly increasing positive integer labels; the
/// label order is the total order used everywhere (gate application,
/// backward scans, subset enumeration). Parallel edges are allowed.
///
/// Desk-scale representation: at most 64 vertices and 64 edges, so vertex
/// and edge sets fit in single-word bitmasks.
class MultiHypergraph {
public:
    struct Vertex {
        std::string id;
        int dim = 2; // local dimension, >= 1
    };

    struct Edge {
        std::int64_t label = 0;
        std::vector<int> verts; // vertex indices, declaration order kept
        std::uint64_t vmask = 0;
    };

    MultiHypergraph() = default;
    MultiHypergraph(std::vector<Vertex> vertices,
                    std::vector<std::pair<std::int64_t, std::vector<std::string>>> edges);

    // Construction from pre-resolved vertex indices (internal transforms).
    static MultiHypergraph from_indices(
        std::vector<Vertex> vertices,
        std::vector<std::pair<std::int64_t, std::vector<int>>> edges);

    int order() const { return static_cast<int>(vertices_.size()); }
    int size() const { return static_cast<int>(edges_.size()); }
    int max_degree() const;
    int rank() const;

    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int idx) const { return edges_.at(idx); }
    const Vertex& vertex(int idx) const { return vertices_.at(idx); }

    int vertex_index(const std::string& id) const;
    bool has_vertex(const std::string& id) const;
    int edge_index_of_label(std::int64_t label) const;

    /// Indices of edges incident to vertex v.
    std::vector<int> edges_at_vertex(int v) const;

private:
    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
    std::map<std::string, int> vertex_index_;
    std::map<std::int64_t, int> label_index_;
    void finalize();
};

struct GraphStats {
    int order = 0;
    int size = 0;
    int max_degree = 0;
    int rank = 0;
};

/// Recomputes and returns the basic structural stats. Construction already
/// rejects invalid graphs, so this never throws on a constructed graph.
GraphStats validate(const MultiHypergraph& g);

/// A subset of the edges of a host graph, stored as sorted edge indices
/// (equivalently, ascending labels).
struct EdgeSubset {
    const MultiHypergraph* host = nullptr;
    std::vector<int> edges; // sorted edge indices

    EdgeSubset() = default;
    EdgeSubset(const MultiHypergraph& g, std::vector<int> edge_indices);
    static EdgeSubset from_labels(const MultiHypergraph& g,
                                  const std::vector<std::int64_t>& labels);

    int size() const { return static_cast<int>(edges.size()); }
    bool empty() const { return edges.empty(); }
    std::uint64_t vertex_mask() const;
    std::vector<int> vertex_set() const;  // sorted vertex indices
    int vertex_count() const;
    std::vector<std::int64_t> labels() const;

    bool operator==(const EdgeSubset& o) const { return edges == o.edges; }
    bool operator<(const EdgeSubset& o) const { return edges < o.edges; }
};

bool is_connected(const EdgeSubset& s);
std::vector<EdgeSubset> connected_components(const EdgeSubset& s);

/// All connected edge subsets with at most max_size edges whose induced
/// vertex set contains pivot, in lexicographic order of their sorted
/// label lists.
std::vector<EdgeSubset> enumerate_connected_subgraphs(const MultiHypergraph& g,
                                                      int pivot, int max_size);

/// All connected edge subsets with at most max_size edges, lexicographic.
std::vector<EdgeSubset> enumerate_connected_subgraphs(const MultiHypergraph& g,
                                                      int max_size);

struct CausalCone {
    int root = -1;
    EdgeSubset cone_edges;
    std::uint64_t cone_vertices = 0; // always includes the root
};

/// Backward (decreasing-label) intersection scan from vertex v: an edge is
/// included iff it intersects the support accumulated so far.
CausalCone causal_cone(const MultiHypergraph& g, int v);

struct CausalHypergraph {
    MultiHypergraph graph;       // one edge per original vertex
    std::vector<int> edge_vertex; // edge index -> original vertex index
};

/// Hypergraph with vertex set V(g) and one edge V(C_v) per vertex v of g.
CausalHypergraph causal_intersection_hypergraph(const MultiHypergraph& g);

/// Replace every edge of a rank-2 multigraph by k parallel copies.
/// Copy j of the edge with label l gets label l*k + j, preserving order.
MultiHypergraph k_thicken(const MultiHypergraph& g, int k);

} // namespace clusterx

#endif
