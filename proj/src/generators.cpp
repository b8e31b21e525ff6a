#include "planar3c/generators.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <set>

#include "planar3c/connectivity.hpp"

namespace planar3c {

const std::vector<std::string>& generator_families() {
    static const std::vector<std::string> families{"triangulation", "nested_rings", "wheel", "prism_stack",
                                                   "twin_pocket"};
    return families;
}

namespace {

struct Draft {
    int n = 0;
    std::vector<Edge> edges;
    std::vector<VertexId> outer;  // vertices of the intended outer face

    std::vector<VertexId> add_vertices(int count) {
        std::vector<VertexId> vs(count);
        for (int i = 0; i < count; ++i) vs[i] = n++;
        return vs;
    }
    void add_cycle(const std::vector<VertexId>& ring) {
        for (std::size_t i = 0; i < ring.size(); ++i) edges.push_back({ring[i], ring[(i + 1) % ring.size()]});
    }
    // Rings nested inside `ring`, each joined to the previous one by
    // alternating spokes so that every vertex keeps degree at least three.
    // The first layer of spokes is complete when `full_first` is set; the
    // last one always is.
    void add_tower(std::vector<VertexId> ring, int extra_rings, bool full_first) {
        const int size = static_cast<int>(ring.size());
        for (int j = 0; j < extra_rings; ++j) {
            const std::vector<VertexId> next = add_vertices(size);
            add_cycle(next);
            const bool full = (j == 0 && full_first) || j + 1 == extra_rings || size % 2 == 1;
            for (int i = 0; i < size; ++i)
                if (full || (i + j) % 2 == 0) edges.push_back({ring[i], next[i]});
            ring = next;
        }
    }
};

int even_at_least(int x, int lo) {
    x = std::max(x, lo);
    return x % 2 == 0 ? x : x + 1;
}

Draft wheel(int n) {
    if (n < 4) throw Error(ErrorKind::InvalidSpec, "wheel needs n >= 4");
    Draft d;
    const VertexId hub = d.add_vertices(1)[0];
    const std::vector<VertexId> rim = d.add_vertices(n - 1);
    d.add_cycle(rim);
    for (VertexId v : rim) d.edges.push_back({hub, v});
    d.outer = rim;
    return d;
}

Draft prism_stack(int n, std::optional<int> depth) {
    if (n < 6) throw Error(ErrorKind::InvalidSpec, "prism_stack needs n >= 6");
    const int rings = depth ? *depth + 1 : std::max(2, static_cast<int>(std::sqrt(static_cast<double>(n))) / 2);
    if (rings < 2) throw Error(ErrorKind::InvalidSpec, "prism_stack needs depth >= 1");
    const int size = std::max(3, n / rings);
    Draft d;
    std::vector<VertexId> ring = d.add_vertices(size);
    d.add_cycle(ring);
    d.outer = ring;
    for (int j = 1; j < rings; ++j) {
        const std::vector<VertexId> next = d.add_vertices(size);
        d.add_cycle(next);
        for (int i = 0; i < size; ++i) d.edges.push_back({ring[i], next[i]});
        ring = next;
    }
    return d;
}

Draft nested_rings(int n, std::optional<int> depth) {
    if (n < 8) throw Error(ErrorKind::InvalidSpec, "nested_rings needs n >= 8");
    const int rings = depth ? *depth + 1 : std::max(2, n / 8);
    if (rings < 2) throw Error(ErrorKind::InvalidSpec, "nested_rings needs depth >= 1");
    const int size = even_at_least(n / rings, 4);
    Draft d;
    const std::vector<VertexId> ring = d.add_vertices(size);
    d.add_cycle(ring);
    d.outer = ring;
    d.add_tower(ring, rings - 1, true);
    return d;
}

// Outer rim with two pockets, each a tower of rings attached to one half of
// the rim; a single edge joins the pockets so they stay separate circuits.
Draft twin_pocket(int n, std::optional<int> depth) {
    const int levels = depth.value_or(3);
    if (levels < 1) throw Error(ErrorKind::InvalidSpec, "twin_pocket needs depth >= 1");
    // Vertex count: 2q (rim) + 2 * q * levels (pockets).
    int q = std::max(3, n / (2 + 2 * levels));
    if (levels > 1) q = even_at_least(q, 4);
    Draft d;
    const std::vector<VertexId> rim = d.add_vertices(2 * q);
    d.add_cycle(rim);
    d.outer = rim;
    std::array<std::vector<VertexId>, 2> pocket;
    for (int side = 0; side < 2; ++side) {
        pocket[side] = d.add_vertices(q);
        d.add_cycle(pocket[side]);
        for (int i = 0; i < q; ++i) d.edges.push_back({rim[side * q + i], pocket[side][i]});
    }
    d.edges.push_back({pocket[0][q - 1], pocket[1][0]});
    for (int side = 0; side < 2; ++side) d.add_tower(pocket[side], levels - 1, false);
    return d;
}

// Random stacked triangulation: repeatedly insert a vertex into a random
// inner face and join it to the three corners.
Draft triangulation(int n, std::mt19937_64& rng) {
    if (n < 4) throw Error(ErrorKind::InvalidSpec, "triangulation needs n >= 4");
    Draft d;
    d.add_vertices(3);
    d.edges = {{0, 1}, {1, 2}, {2, 0}};
    d.outer = {0, 1, 2};
    std::vector<std::array<VertexId, 3>> faces{{0, 1, 2}};
    while (d.n < n) {
        const std::size_t pick = rng() % faces.size();
        const auto [a, b, c] = faces[pick];
        const VertexId v = d.add_vertices(1)[0];
        d.edges.push_back({a, v});
        d.edges.push_back({b, v});
        d.edges.push_back({c, v});
        faces[pick] = {a, b, v};
        faces.push_back({b, c, v});
        faces.push_back({c, a, v});
    }
    return d;
}

}  // namespace

EmbeddedMultigraph generate(const GeneratorSpec& spec) {
    std::mt19937_64 rng(spec.seed);
    Draft d;
    if (spec.family == "wheel") d = wheel(spec.n);
    else if (spec.family == "prism_stack") d = prism_stack(spec.n, spec.depth);
    else if (spec.family == "nested_rings") d = nested_rings(spec.n, spec.depth);
    else if (spec.family == "twin_pocket") d = twin_pocket(spec.n, spec.depth);
    else if (spec.family == "triangulation") d = triangulation(spec.n, rng);
    else throw Error(ErrorKind::InvalidSpec, "unknown family '" + spec.family + "'");

    // Seeded relabelling of vertices and reordering of edges.
    std::vector<VertexId> perm(d.n);
    for (VertexId v = 0; v < d.n; ++v) perm[v] = v;
    for (int i = d.n - 1; i > 0; --i) std::swap(perm[i], perm[rng() % (i + 1)]);
    for (int i = static_cast<int>(d.edges.size()) - 1; i > 0; --i) std::swap(d.edges[i], d.edges[rng() % (i + 1)]);
    for (Edge& e : d.edges) e = {perm[e.a], perm[e.b]};
    std::set<VertexId> outer;
    for (VertexId v : d.outer) outer.insert(perm[v]);

    EmbeddedMultigraph g = EmbeddedMultigraph::build(d.n, std::move(d.edges));
    for (FaceId f = 0; f < g.face_count(); ++f) {
        const auto walk = g.face(f);
        if (walk.size() != outer.size()) continue;
        if (std::all_of(walk.begin(), walk.end(), [&](Dart x) { return outer.count(g.tail(x)) > 0; })) {
            g = g.with_outer_face(f);
            break;
        }
    }
    if (spec.verify && !is_k_vertex_connected(SimpleView::of(g), 3))
        throw Error(ErrorKind::InvalidSpec, "generated " + spec.family + " instance is not triconnected");
    return g;
}

}  // namespace planar3c
