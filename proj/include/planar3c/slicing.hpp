#pragma once

#include <optional>
#include <vector>

#include "planar3c/graph.hpp"
#include "planar3c/layering.hpp"

namespace planar3c {

struct EdgeRef {
    EdgeId slice_edge = 0;
    std::optional<EdgeId> origin;
};

/// One slice H_i^a: the part of window i enclosed by circuit a, with the
/// deeper interior contracted to inner nodes and the exterior to one outer node.
struct Slice {
    EmbeddedMultigraph graph;
    std::vector<VertexKind> kinds;   // per slice vertex
    std::vector<int> weight;         // per slice edge, 0 or 1
    std::vector<EdgeRef> provenance; // per slice edge
    int window_index = 0;
    int circuit_id = 0;
    /// Slice vertex tagged OuterNode, or -1.
    VertexId outer_node = -1;
    /// Number of original vertices on level f(i).
    int base_vertex_count = 0;

    /// Origin of slice edge e in G (always present for slices built here).
    EdgeId origin(EdgeId e) const { return *provenance[e].origin; }
};

std::vector<Slice> build_ec_slices(const EmbeddedMultigraph& g, const LevelAssignment& levels,
                                   const ShiftPlan& plan);
std::vector<Slice> build_vc_slices(const EmbeddedMultigraph& g, const LevelAssignment& levels,
                                   const ShiftPlan& plan);
std::vector<Slice> build_slices(Mode mode, const EmbeddedMultigraph& g,
                                const LevelAssignment& levels, const ShiftPlan& plan);

struct SliceTree {
    int root = 0;
    std::vector<int> parent;  // -1 at the root
    std::vector<std::vector<int>> children;
};

/// Throws MalformedSliceSet if the adjacency relation is not a tree.
SliceTree build_slice_tree(const std::vector<Slice>& slices, const EmbeddedMultigraph& g);

}  // namespace planar3c
