#pragma once

#include <span>
#include <vector>

#include "planar3c/graph.hpp"

namespace planar3c {

/// Plain adjacency view used by the connectivity routines. Works on any
/// multigraph; the embedding is irrelevant here.
struct SimpleView {
    int vertex_count = 0;
    std::vector<Edge> edges;

    static SimpleView of(const EmbeddedMultigraph& g);
    static SimpleView of(const EmbeddedMultigraph& g, std::span<const EdgeId> subset);
};

struct ComponentLabeling {
    enum class Kind { TwoEdgeConnected, Biconnected };
    Kind kind = Kind::TwoEdgeConnected;
    /// Per vertex (2EC) or per edge (biconnected).
    std::vector<int> label;
    int component_count = 0;
    /// Bridges (2EC) or articulation vertices (biconnected), sorted.
    std::vector<int> cut_elements;
};

ComponentLabeling bridges_and_2ec(const SimpleView& g);
ComponentLabeling biconnected(const SimpleView& g);

/// Connected-component label per vertex.
std::vector<int> connected_components(const SimpleView& g, int* count = nullptr);
bool is_connected(const SimpleView& g);

/// True iff every edge cut has at least k edges (k in 1..3).
bool is_k_edge_connected(const SimpleView& g, int k);
/// True iff |V| > k and no fewer than k vertices disconnect g (k in 1..3).
bool is_k_vertex_connected(const SimpleView& g, int k);

/// Maximum number of edge-disjoint u-v paths, capped at `cap`.
int edge_connectivity_between(const SimpleView& g, VertexId u, VertexId v, int cap = 4);
/// Maximum number of internally vertex-disjoint u-v paths, capped at `cap`.
/// Parallel edges count once; a direct u-v edge counts as one path.
int vertex_connectivity_between(const SimpleView& g, VertexId u, VertexId v, int cap = 4);

/// Given g 3-edge-connected, whether g minus edge `removed` still is.
bool still_3_edge_connected_without(const SimpleView& g, EdgeId removed);
/// Given g simple and triconnected, whether g minus edge `removed` still is.
bool still_triconnected_without(const SimpleView& g, EdgeId removed);

}  // namespace planar3c
