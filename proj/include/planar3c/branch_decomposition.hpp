#pragma once

#include <vector>

#include "planar3c/graph.hpp"

namespace planar3c {

/// Rooted binary tree whose leaves are the edges of a graph. Every internal
/// node has exactly two children; the root's separator is empty.
struct BranchDecomposition {
    struct Node {
        int left = -1;
        int right = -1;
        int parent = -1;
        EdgeId edge = -1;  // leaf edge, -1 for internal nodes
        bool is_leaf() const { return edge >= 0; }
    };
    std::vector<Node> nodes;
    int root = -1;
    /// Per node: vertices incident both to the node's edges and to the rest.
    std::vector<std::vector<VertexId>> separators;
    int width = 0;
    /// Largest number of original-graph vertices on a root path of the
    /// spanning tree that was used.
    int tree_depth = 0;

    /// Nodes in an order where children precede parents.
    std::vector<int> postorder() const;
};

/// Width-bounded decomposition from a shallow spanning tree of the
/// star-triangulated embedding. `root` is the vertex the tree grows from;
/// -1 grows it from the outer face.
BranchDecomposition decompose(const EmbeddedMultigraph& g, VertexId root = -1);

/// Recomputes every separator from scratch; throws CorruptDecomposition if
/// the leaves are not in bijection with the edges or a recorded separator
/// is wrong. Returns the true width.
int verify_width(const BranchDecomposition& bd, const EmbeddedMultigraph& g);

/// Builds a decomposition from a nested-pairs description (used by tests and
/// the JSON loader). Separators are computed.
BranchDecomposition decomposition_from_nodes(const EmbeddedMultigraph& g,
                                             std::vector<BranchDecomposition::Node> nodes, int root);

}  // namespace planar3c
