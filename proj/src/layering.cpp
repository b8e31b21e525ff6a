#include "planar3c/layering.hpp"

#include <algorithm>

namespace planar3c {

std::vector<EdgeId> LevelAssignment::within(int i) const {
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < static_cast<EdgeId>(edge_level.size()); ++e)
        if (edge_level[e] == i && !edge_between[e]) out.push_back(e);
    return out;
}

std::vector<EdgeId> LevelAssignment::between(int i) const {
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < static_cast<EdgeId>(edge_level.size()); ++e)
        if (edge_level[e] == i && edge_between[e]) out.push_back(e);
    return out;
}

LevelAssignment compute_levels(const EmbeddedMultigraph& g) {
    const int n = g.vertex_count();
    LevelAssignment out;
    out.level.assign(n, -1);
    if (n == 0) return out;
    if (g.edge_count() == 0) {
        if (n > 1) throw Error(ErrorKind::Disconnected, "graph is disconnected");
        out.level[0] = 0;
        return out;
    }

    // Vertices on a face of level-L vertices that are still unlabelled get
    // level L + 1; this is exactly peeling the outer face.
    std::vector<char> face_seen(g.face_count(), 0);
    std::vector<FaceId> faces{g.outer_face()};
    face_seen[g.outer_face()] = 1;
    int assigned = 0;
    for (int level = 0; !faces.empty(); ++level) {
        std::vector<VertexId> vertices;
        for (FaceId f : faces)
            for (Dart d : g.face(f)) {
                const VertexId v = g.tail(d);
                if (out.level[v] >= 0) continue;
                out.level[v] = level;
                vertices.push_back(v);
            }
        assigned += static_cast<int>(vertices.size());
        if (!vertices.empty()) out.max_level = level;
        faces.clear();
        for (VertexId v : vertices)
            for (Dart d : g.rotation(v)) {
                const FaceId f = g.face_of(d);
                if (face_seen[f]) continue;
                face_seen[f] = 1;
                faces.push_back(f);
            }
    }
    if (assigned != n) throw Error(ErrorKind::Disconnected, "graph is disconnected");

    out.edge_level.resize(g.edge_count());
    out.edge_between.resize(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const int la = out.level[g.edge(e).a], lb = out.level[g.edge(e).b];
        out.edge_level[e] = std::min(la, lb);
        out.edge_between[e] = la != lb;
    }
    return out;
}

std::vector<int> double_layers_of(const LevelAssignment& levels, EdgeId e) {
    const int l = levels.edge_level[e];
    if (levels.edge_between[e]) return {l, l + 1};
    if (l == 0) return {0};
    return {l - 1, l};
}

int ShiftPlan::f(int i) const { return std::max(0, i * k - k + t); }

ShiftPlan plan_shift(const LevelAssignment& levels, int k) {
    if (k < 2) throw Error(ErrorKind::InvalidArgument, "k must be at least 2");
    ShiftPlan plan;
    plan.k = k;
    plan.double_layers.assign(levels.max_level + 1, {});
    plan.residue_sizes.assign(k, 0);
    const EdgeId m = static_cast<EdgeId>(levels.edge_level.size());
    for (EdgeId e = 0; e < m; ++e) {
        int last_residue = -1;
        for (int i : double_layers_of(levels, e)) {
            plan.double_layers[i].push_back(e);
            if (i % k != last_residue) ++plan.residue_sizes[i % k];
            last_residue = i % k;
        }
    }
    plan.t = static_cast<int>(std::min_element(plan.residue_sizes.begin(), plan.residue_sizes.end()) -
                              plan.residue_sizes.begin());
    plan.in_residual.assign(m, 0);
    for (EdgeId e = 0; e < m; ++e)
        for (int i : double_layers_of(levels, e))
            if (i % k == plan.t) plan.in_residual[e] = 1;
    for (EdgeId e = 0; e < m; ++e)
        if (plan.in_residual[e]) plan.residual.push_back(e);

    plan.window_count = 1;
    while (plan.f(plan.window_count) < levels.max_level) ++plan.window_count;
    return plan;
}

Window window(const LevelAssignment& levels, const ShiftPlan& plan, int i) {
    Window w;
    const int lo = plan.f(i), hi = plan.f(i + 1);
    const EdgeId m = static_cast<EdgeId>(levels.edge_level.size());
    for (EdgeId e = 0; e < m; ++e) {
        const int a = levels.edge_level[e], b = a + (levels.edge_between[e] ? 1 : 0);
        if (a < lo - 1 || b > hi + 1) continue;
        w.g_edges.push_back(e);
        if (!(a == lo - 1 && b == lo - 1)) w.h_edges.push_back(e);
    }
    return w;
}

}  // namespace planar3c
