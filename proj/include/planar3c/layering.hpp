#pragma once

#include <vector>

#include "planar3c/graph.hpp"

namespace planar3c {

/// Outer-face peeling levels of the vertices and the induced edge strata.
struct LevelAssignment {
    std::vector<int> level;  // per vertex
    int max_level = 0;
    /// Per edge: the smaller endpoint level, and whether the endpoints
    /// differ (E_{i,i+1}) or agree (E_i).
    std::vector<int> edge_level;
    std::vector<char> edge_between;

    /// Edges with both endpoints on level i.
    std::vector<EdgeId> within(int i) const;
    /// Edges joining level i and level i + 1.
    std::vector<EdgeId> between(int i) const;
};

/// Radial BFS from the outer face; linear in |E|. Throws Disconnected.
LevelAssignment compute_levels(const EmbeddedMultigraph& g);

/// Indices of the (one or two) double layers containing an edge.
std::vector<int> double_layers_of(const LevelAssignment& levels, EdgeId e);

struct ShiftPlan {
    int k = 2;
    int t = 0;
    /// double_layers[i] = D_i, sorted edge ids, for i in [0, max_level].
    std::vector<std::vector<EdgeId>> double_layers;
    /// |R_j| for j in [0, k).
    std::vector<long> residue_sizes;
    std::vector<EdgeId> residual;     // R = R_t, sorted
    std::vector<char> in_residual;    // per edge
    int window_count = 1;

    /// First level of window i: max(0, i*k - k + t).
    int f(int i) const;
};

ShiftPlan plan_shift(const LevelAssignment& levels, int k);

struct Window {
    std::vector<EdgeId> g_edges;  // edges induced by levels [f(i)-1, f(i+1)+1]
    std::vector<EdgeId> h_edges;  // g_edges minus E_{f(i)-1}
};

Window window(const LevelAssignment& levels, const ShiftPlan& plan, int i);

}  // namespace planar3c
