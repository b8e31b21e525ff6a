#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "planar3c/branch_decomposition.hpp"
#include "planar3c/layering.hpp"
#include "planar3c/ptas.hpp"
#include "planar3c/slicing.hpp"

namespace planar3c {

using Json = nlohmann::ordered_json;

/// {"n", "edges", "rotation", "outer_face"}; rotation and outer face are
/// always written.
Json graph_to_json(const EmbeddedMultigraph& g);
/// Accepts null rotation / outer_face. Excess parallel edges are accepted
/// (the spanner caps them). Throws Format on malformed documents.
EmbeddedMultigraph graph_from_json(const Json& doc);

/// Graph document plus "kinds", "weights" and "origins".
Json slice_to_json(const Slice& slice);
Json plan_to_json(const LevelAssignment& levels, const ShiftPlan& plan);
Json slice_tree_to_json(const SliceTree& tree);
/// {"tree": nested arrays of edge ids, "nodes": [...], "root", "width"}.
Json decomposition_to_json(const BranchDecomposition& bd);
BranchDecomposition decomposition_from_json(const Json& doc, const EmbeddedMultigraph& g);

Json solution_to_json(const Solution& sol);

struct StoredSolution {
    Mode mode = Mode::ECSS;
    std::vector<EdgeId> edges;
};
StoredSolution solution_from_json(const Json& doc);

/// File helpers; throw Format on unreadable or unparsable files.
Json read_json(const std::string& path);
void write_json(const std::string& path, const Json& doc);
EmbeddedMultigraph read_graph(const std::string& path);
void write_graph(const std::string& path, const EmbeddedMultigraph& g);

}  // namespace planar3c
