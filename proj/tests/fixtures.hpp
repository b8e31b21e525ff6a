#pragma once
// Small hand-built instances shared by the unit tests.

#include <algorithm>
#include <set>
#include <vector>

#include "oracles.hpp"
#include "planar3c/connectivity.hpp"
#include "planar3c/graph.hpp"

namespace fixtures {

using planar3c::Edge;
using planar3c::EmbeddedMultigraph;

inline oracle::EdgeList edge_list(const EmbeddedMultigraph& g) {
    oracle::EdgeList out;
    for (const Edge& e : g.edges()) out.push_back({e.a, e.b});
    return out;
}

inline oracle::EdgeList edge_list(const planar3c::SimpleView& g) {
    oracle::EdgeList out;
    for (const Edge& e : g.edges) out.push_back({e.a, e.b});
    return out;
}

// Re-roots the embedding at the face whose corners are exactly `outer`.
inline EmbeddedMultigraph with_outer(const EmbeddedMultigraph& g, const std::vector<int>& outer) {
    const std::set<int> want(outer.begin(), outer.end());
    for (int f = 0; f < g.face_count(); ++f) {
        const auto walk = g.face(f);
        std::set<int> got;
        for (int d : walk) got.insert(g.tail(d));
        if (got == want && walk.size() == want.size()) return g.with_outer_face(f);
    }
    return g;
}

inline EmbeddedMultigraph k4() { return EmbeddedMultigraph::build(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}, {3, 1}}); }

inline EmbeddedMultigraph octahedron() {
    // Poles 0 and 5 around the square 1-2-3-4.
    std::vector<Edge> e{{1, 2}, {2, 3}, {3, 4}, {4, 1}};
    for (int v = 1; v <= 4; ++v) {
        e.push_back({0, v});
        e.push_back({5, v});
    }
    return EmbeddedMultigraph::build(6, e);
}

// Wheel with a rim of r vertices; vertex r is the hub. Outer face = rim.
inline EmbeddedMultigraph wheel(int r) {
    std::vector<Edge> e;
    for (int i = 0; i < r; ++i) e.push_back({i, (i + 1) % r});
    for (int i = 0; i < r; ++i) e.push_back({r, i});
    std::vector<int> rim(r);
    for (int i = 0; i < r; ++i) rim[i] = i;
    return with_outer(EmbeddedMultigraph::build(r + 1, e), rim);
}

// `rings` concentric cycles of length r joined by all rungs; ring j holds
// vertices j*r .. j*r + r - 1 and ring 0 bounds the outer face.
inline EmbeddedMultigraph ring_stack(int r, int rings) {
    std::vector<Edge> e;
    for (int j = 0; j < rings; ++j)
        for (int i = 0; i < r; ++i) e.push_back({j * r + i, j * r + (i + 1) % r});
    for (int j = 0; j + 1 < rings; ++j)
        for (int i = 0; i < r; ++i) e.push_back({j * r + i, (j + 1) * r + i});
    std::vector<int> outer(r);
    for (int i = 0; i < r; ++i) outer[i] = i;
    return with_outer(EmbeddedMultigraph::build(r * rings, e), outer);
}

inline EmbeddedMultigraph prism(int r) { return ring_stack(r, 2); }

// Cycle of length r with every edge present `copies` times; r = 2 gives a
// bundle of `copies` parallel edges.
inline EmbeddedMultigraph multi_cycle(int r, int copies) {
    std::vector<Edge> e;
    for (int c = 0; c < copies; ++c)
        for (int i = 0; i < (r == 2 ? 1 : r); ++i) e.push_back({i, (i + 1) % r});
    return EmbeddedMultigraph::build(r, e);
}

// Graph with edges of g plus an extra copy of each listed edge.
inline EmbeddedMultigraph add_copies(const EmbeddedMultigraph& g, const std::vector<int>& which) {
    std::vector<Edge> e(g.edges().begin(), g.edges().end());
    for (int id : which) e.push_back(g.edge(id));
    return EmbeddedMultigraph::build(g.vertex_count(), e);
}

}  // namespace fixtures
