#include "planar3c/graph_io.hpp"

#include <fstream>
#include <sstream>

namespace planar3c {

namespace {

[[noreturn]] void format_error(const std::string& what) { throw Error(ErrorKind::Format, what); }

int as_int(const Json& v, const char* what) {
    if (!v.is_number_integer()) format_error(std::string(what) + " must be an integer");
    return v.get<int>();
}

const Json& field(const Json& doc, const char* name) {
    if (!doc.is_object() || !doc.contains(name)) format_error(std::string("missing field '") + name + "'");
    return doc.at(name);
}

std::string kind_text(const VertexKind& k) {
    switch (k.tag) {
    case VertexKind::Tag::Original: return "original:" + std::to_string(k.id);
    case VertexKind::Tag::InnerNode: return "inner:" + std::to_string(k.id);
    case VertexKind::Tag::OuterNode: return "outer";
    }
    return "outer";
}

Json nested(const BranchDecomposition& bd, int x) {
    // Iterative to survive deep trees.
    std::vector<Json> built(bd.nodes.size());
    std::vector<std::pair<int, bool>> stack{{x, false}};
    while (!stack.empty()) {
        auto [y, expanded] = stack.back();
        stack.pop_back();
        const auto& node = bd.nodes[y];
        if (node.is_leaf()) {
            built[y] = node.edge;
        } else if (expanded) {
            built[y] = Json::array({std::move(built[node.left]), std::move(built[node.right])});
        } else {
            stack.push_back({y, true});
            stack.push_back({node.right, false});
            stack.push_back({node.left, false});
        }
    }
    return std::move(built[x]);
}

}  // namespace

Json graph_to_json(const EmbeddedMultigraph& g) {
    Json doc;
    doc["n"] = g.vertex_count();
    Json edges = Json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.a, e.b});
    doc["edges"] = std::move(edges);
    doc["rotation"] = g.rotation_edges();
    doc["outer_face"] = g.edge_count() > 0 ? Json(g.outer_face()) : Json(nullptr);
    return doc;
}

EmbeddedMultigraph graph_from_json(const Json& doc) {
    const int n = as_int(field(doc, "n"), "n");
    if (n < 0) format_error("n must be nonnegative");
    const Json& edges_doc = field(doc, "edges");
    if (!edges_doc.is_array()) format_error("edges must be an array");
    std::vector<Edge> edges;
    for (const Json& e : edges_doc) {
        if (!e.is_array() || e.size() != 2) format_error("each edge must be a pair");
        const int a = as_int(e[0], "edge endpoint"), b = as_int(e[1], "edge endpoint");
        if (a < 0 || a >= n || b < 0 || b >= n) format_error("edge endpoint out of range");
        edges.push_back({a, b});
    }
    std::optional<std::vector<std::vector<EdgeId>>> rotation;
    if (doc.contains("rotation") && !doc["rotation"].is_null()) {
        const Json& r = doc["rotation"];
        if (!r.is_array() || static_cast<int>(r.size()) != n) format_error("rotation must list every vertex");
        rotation.emplace();
        for (const Json& list : r) {
            if (!list.is_array()) format_error("rotation entries must be arrays");
            std::vector<EdgeId> ids;
            for (const Json& id : list) ids.push_back(as_int(id, "rotation entry"));
            rotation->push_back(std::move(ids));
        }
    }
    std::optional<FaceId> outer;
    if (doc.contains("outer_face") && !doc["outer_face"].is_null()) outer = as_int(doc["outer_face"], "outer_face");
    BuildOptions options;
    options.allow_excess_parallel = true;
    return EmbeddedMultigraph::build(n, std::move(edges), std::move(rotation), outer, options);
}

Json slice_to_json(const Slice& slice) {
    Json doc = graph_to_json(slice.graph);
    Json kinds = Json::array();
    for (const VertexKind& k : slice.kinds) kinds.push_back(kind_text(k));
    doc["kinds"] = std::move(kinds);
    doc["weights"] = slice.weight;
    Json origins = Json::array();
    for (const EdgeRef& ref : slice.provenance) origins.push_back(ref.origin ? Json(*ref.origin) : Json(nullptr));
    doc["origins"] = std::move(origins);
    doc["window"] = slice.window_index;
    doc["circuit"] = slice.circuit_id;
    return doc;
}

Json plan_to_json(const LevelAssignment& levels, const ShiftPlan& plan) {
    Json doc;
    doc["k"] = plan.k;
    doc["t"] = plan.t;
    doc["max_level"] = levels.max_level;
    doc["window_count"] = plan.window_count;
    doc["levels"] = levels.level;
    Json sizes = Json::array();
    for (const auto& d : plan.double_layers) sizes.push_back(d.size());
    doc["double_layer_sizes"] = std::move(sizes);
    doc["residue_sizes"] = plan.residue_sizes;
    doc["residual"] = plan.residual;
    Json f = Json::array();
    for (int i = 0; i <= plan.window_count; ++i) f.push_back(plan.f(i));
    doc["f"] = std::move(f);
    return doc;
}

Json slice_tree_to_json(const SliceTree& tree) {
    Json doc;
    doc["root"] = tree.root;
    doc["parent"] = tree.parent;
    doc["children"] = tree.children;
    return doc;
}

Json decomposition_to_json(const BranchDecomposition& bd) {
    Json doc;
    doc["tree"] = bd.root >= 0 ? nested(bd, bd.root) : Json(nullptr);
    Json nodes = Json::array();
    for (std::size_t x = 0; x < bd.nodes.size(); ++x) {
        const auto& node = bd.nodes[x];
        Json entry;
        if (node.is_leaf()) entry["edge"] = node.edge;
        else entry["children"] = {node.left, node.right};
        entry["separator"] = bd.separators.empty() ? Json::array() : Json(bd.separators[x]);
        nodes.push_back(std::move(entry));
    }
    doc["nodes"] = std::move(nodes);
    doc["root"] = bd.root;
    doc["width"] = bd.width;
    return doc;
}

BranchDecomposition decomposition_from_json(const Json& doc, const EmbeddedMultigraph& g) {
    const Json& nodes_doc = field(doc, "nodes");
    if (!nodes_doc.is_array()) format_error("nodes must be an array");
    std::vector<BranchDecomposition::Node> nodes;
    for (const Json& entry : nodes_doc) {
        BranchDecomposition::Node node;
        if (entry.contains("edge")) node.edge = as_int(entry["edge"], "edge");
        else {
            const Json& c = field(entry, "children");
            if (!c.is_array() || c.size() != 2) format_error("internal nodes need two children");
            node.left = as_int(c[0], "child");
            node.right = as_int(c[1], "child");
        }
        nodes.push_back(node);
    }
    return decomposition_from_nodes(g, std::move(nodes), as_int(field(doc, "root"), "root"));
}

Json solution_to_json(const Solution& sol) {
    Json doc;
    doc["mode"] = to_string(sol.mode);
    doc["epsilon"] = sol.epsilon;
    doc["k"] = sol.k;
    doc["edges"] = sol.edges;
    doc["size"] = sol.size();
    Json meta;
    meta["t"] = sol.t;
    meta["max_level"] = sol.max_level;
    meta["residual_size"] = sol.residual_size;
    meta["spanner_edges"] = sol.spanner_edges;
    meta["slice_count"] = sol.slices.size();
    Json slices = Json::array();
    for (const SliceReport& s : sol.slices) {
        Json entry;
        entry["window"] = s.window;
        entry["circuit"] = s.circuit;
        entry["vertices"] = s.vertices;
        entry["edges"] = s.edges;
        entry["weight"] = s.weight;
        entry["width"] = s.width;
        entry["solver"] = s.path;
        slices.push_back(std::move(entry));
    }
    meta["slices"] = std::move(slices);
    doc["meta"] = std::move(meta);
    return doc;
}

StoredSolution solution_from_json(const Json& doc) {
    StoredSolution s;
    const Json& mode = field(doc, "mode");
    if (!mode.is_string()) format_error("mode must be a string");
    try {
        s.mode = parse_mode(mode.get<std::string>());
    } catch (const Error& e) {
        format_error(e.what());
    }
    const Json& edges = field(doc, "edges");
    if (!edges.is_array()) format_error("edges must be an array");
    for (const Json& e : edges) s.edges.push_back(as_int(e, "edge index"));
    return s;
}

Json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) format_error("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        format_error("cannot parse '" + path + "': " + e.what());
    }
}

void write_json(const std::string& path, const Json& doc) {
    std::ofstream out(path);
    if (!out) format_error("cannot write '" + path + "'");
    out << doc.dump(2) << '\n';
}

EmbeddedMultigraph read_graph(const std::string& path) { return graph_from_json(read_json(path)); }

void write_graph(const std::string& path, const EmbeddedMultigraph& g) { write_json(path, graph_to_json(g)); }

}  // namespace planar3c
