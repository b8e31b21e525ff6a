#include "planar3c/slicing.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <utility>

#include "planar3c/connectivity.hpp"

namespace planar3c {

namespace {

// Per-instance structure shared by all windows: level components, circuits
// (nontrivial 2EC components or blocks of each G[V_l]) and the enclosure
// relation between them.
struct Skeleton {
    std::vector<int> comp_of;                      // level component per vertex
    std::vector<std::vector<VertexId>> comp_vertices;
    std::vector<int> comp_level;
    std::vector<std::vector<int>> comps_by_level;

    std::vector<std::vector<VertexId>> circuit_vertices;  // sorted
    std::vector<int> circuit_level;
    std::vector<std::vector<int>> circuits_by_level;
    std::vector<std::vector<int>> circuits_at;      // per vertex

    std::vector<int> enclosing;  // per level component at level >= 1: circuit
};

Skeleton analyse(Mode mode, const EmbeddedMultigraph& g, const LevelAssignment& levels) {
    const int n = g.vertex_count();
    Skeleton s;

    std::vector<EdgeId> flat;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (!levels.edge_between[e]) flat.push_back(e);
    const SimpleView view = SimpleView::of(g, flat);

    int comp_count = 0;
    s.comp_of = connected_components(view, &comp_count);
    s.comp_vertices.assign(comp_count, {});
    s.comp_level.assign(comp_count, 0);
    for (VertexId v = 0; v < n; ++v) {
        s.comp_vertices[s.comp_of[v]].push_back(v);
        s.comp_level[s.comp_of[v]] = levels.level[v];
    }
    s.comps_by_level.assign(levels.max_level + 1, {});
    for (int c = 0; c < comp_count; ++c) s.comps_by_level[s.comp_level[c]].push_back(c);

    std::vector<std::vector<VertexId>> groups;
    if (mode == Mode::ECSS) {
        const ComponentLabeling lab = bridges_and_2ec(view);
        groups.assign(lab.component_count, {});
        for (VertexId v = 0; v < n; ++v) groups[lab.label[v]].push_back(v);
        std::erase_if(groups, [](const auto& grp) { return grp.size() < 2; });
    } else {
        const ComponentLabeling lab = biconnected(view);
        groups.assign(lab.component_count, {});
        for (std::size_t i = 0; i < view.edges.size(); ++i) {
            groups[lab.label[i]].push_back(view.edges[i].a);
            groups[lab.label[i]].push_back(view.edges[i].b);
        }
        for (auto& grp : groups) {
            std::sort(grp.begin(), grp.end());
            grp.erase(std::unique(grp.begin(), grp.end()), grp.end());
        }
        std::erase_if(groups, [](const auto& grp) { return grp.size() < 3; });
    }
    for (auto& grp : groups) std::sort(grp.begin(), grp.end());
    std::sort(groups.begin(), groups.end(), [&](const auto& x, const auto& y) {
        return std::pair(levels.level[x[0]], x[0]) < std::pair(levels.level[y[0]], y[0]);
    });
    s.circuit_vertices = std::move(groups);
    s.circuit_level.resize(s.circuit_vertices.size());
    s.circuits_by_level.assign(levels.max_level + 1, {});
    s.circuits_at.assign(n, {});
    for (int c = 0; c < static_cast<int>(s.circuit_vertices.size()); ++c) {
        s.circuit_level[c] = levels.level[s.circuit_vertices[c][0]];
        s.circuits_by_level[s.circuit_level[c]].push_back(c);
        for (VertexId v : s.circuit_vertices[c]) s.circuits_at[v].push_back(c);
    }

    // The enclosing circuit of a level component is the one circuit one
    // level up that contains all of the component's upward neighbours.
    s.enclosing.assign(comp_count, -1);
    std::vector<int> seen(n, -1), hits(s.circuit_vertices.size(), 0);
    for (int c = 0; c < comp_count; ++c) {
        if (s.comp_level[c] == 0) continue;
        const int up = s.comp_level[c] - 1;
        std::vector<VertexId> nbrs;
        for (VertexId v : s.comp_vertices[c])
            for (Dart d : g.rotation(v)) {
                const VertexId w = g.head(d);
                if (levels.level[w] != up || seen[w] == c) continue;
                seen[w] = c;
                nbrs.push_back(w);
            }
        std::vector<int> touched;
        for (VertexId w : nbrs)
            for (int a : s.circuits_at[w]) {
                if (hits[a]++ == 0) touched.push_back(a);
            }
        int found = -1;
        for (int a : touched) {
            if (hits[a] == static_cast<int>(nbrs.size()) && found < 0) found = a;
            hits[a] = 0;
        }
        if (found < 0)
            throw Error(ErrorKind::InfeasibleInput,
                        "level component at level " + std::to_string(s.comp_level[c]) +
                            " has no enclosing circuit");
        s.enclosing[c] = found;
    }
    return s;
}

class SliceBuilder {
public:
    SliceBuilder(Mode mode, const EmbeddedMultigraph& g, const LevelAssignment& levels,
                 const ShiftPlan& plan, const Skeleton& sk)
        : mode_(mode), g_(g), levels_(levels), plan_(plan), sk_(sk),
          mark_(g.vertex_count(), -1), local_(g.vertex_count(), -1),
          edge_mark_(g.edge_count(), -1), slice_edge_(g.edge_count(), -1) {}

    std::vector<Slice> run() {
        std::vector<Slice> out;
        std::vector<int> comp_slice(sk_.comp_vertices.size(), -1);
        for (int i = 0; i < plan_.window_count; ++i) {
            const int lo = plan_.f(i), top = plan_.f(i + 1);
            if (lo > levels_.max_level) break;
            const auto& circuits = sk_.circuits_by_level[lo];
            std::vector<std::vector<VertexId>> members(circuits.size());
            std::map<int, int> index_of;
            for (std::size_t a = 0; a < circuits.size(); ++a) {
                index_of[circuits[a]] = static_cast<int>(a);
                members[a] = sk_.circuit_vertices[circuits[a]];
            }
            for (int m = lo + 1; m <= std::min(top, levels_.max_level); ++m)
                for (int c : sk_.comps_by_level[m]) {
                    const int enc = sk_.enclosing[c];
                    comp_slice[c] = m == lo + 1 ? index_of.at(enc)
                                                : comp_slice[sk_.comp_of[sk_.circuit_vertices[enc][0]]];
                    auto& mem = members[comp_slice[c]];
                    mem.insert(mem.end(), sk_.comp_vertices[c].begin(), sk_.comp_vertices[c].end());
                }
            for (std::size_t a = 0; a < circuits.size(); ++a) {
                std::sort(members[a].begin(), members[a].end());
                out.push_back(make_slice(i, circuits[a], top, members[a]));
            }
        }
        return out;
    }

private:
    static constexpr int kOuterKey = -1;

    // Contracted node an unmarked vertex belongs to.
    int node_key(VertexId z, int top) const {
        return levels_.level[z] > top ? sk_.comp_of[z] : kOuterKey;
    }

    Slice make_slice(int window_index, int circuit, int top, const std::vector<VertexId>& members) {
        const int stamp = ++stamp_;
        for (std::size_t i = 0; i < members.size(); ++i) {
            mark_[members[i]] = stamp;
            local_[members[i]] = static_cast<int>(i);
        }
        const auto inside = [&](VertexId z) { return mark_[z] == stamp; };

        // Candidate edges in G order, plus the darts leaving each node.
        struct Candidate {
            EdgeId origin;
            int a, b;  // local endpoints, or -2 - key for contracted nodes
        };
        std::vector<Candidate> cand;
        std::map<int, std::vector<Dart>> exits;  // node key -> darts node -> U
        for (VertexId u : members)
            for (Dart d : g_.rotation(u)) {
                const VertexId z = g_.head(d);
                const EdgeId e = dart_edge(d);
                if (inside(z)) {
                    if (g_.edge(e).a == u) cand.push_back({e, local_[g_.edge(e).a], local_[g_.edge(e).b]});
                    continue;
                }
                const int key = node_key(z, top);
                exits[key].push_back(reverse_dart(d));
                const int enc = -2 - key;
                if (g_.edge(e).a == u) cand.push_back({e, local_[u], enc});
                else cand.push_back({e, enc, local_[u]});
            }
        std::sort(cand.begin(), cand.end(), [](const Candidate& x, const Candidate& y) { return x.origin < y.origin; });

        // Node numbering: inner nodes by component id, then the outer node.
        std::map<int, VertexId> node_index;
        std::vector<VertexKind> kinds;
        for (VertexId v : members) kinds.push_back({VertexKind::Tag::Original, v});
        for (const auto& [key, darts] : exits)
            if (key != kOuterKey) {
                node_index[key] = static_cast<VertexId>(kinds.size());
                kinds.push_back({VertexKind::Tag::InnerNode, key});
            }
        VertexId outer = -1;
        if (exits.count(kOuterKey)) {
            outer = static_cast<VertexId>(kinds.size());
            node_index[kOuterKey] = outer;
            kinds.push_back({VertexKind::Tag::OuterNode, 0});
        }
        const auto resolve = [&](int x) { return x >= 0 ? x : node_index.at(-2 - x); };

        const int cap = mode_ == Mode::ECSS ? 3 : 1;
        std::map<std::pair<int, int>, int> multiplicity;
        std::vector<Edge> edges;
        std::vector<EdgeRef> provenance;
        std::vector<int> weight;
        for (const Candidate& c : cand) {
            const int a = resolve(c.a), b = resolve(c.b);
            if (++multiplicity[{std::min(a, b), std::max(a, b)}] > cap) continue;
            const EdgeId se = static_cast<EdgeId>(edges.size());
            edge_mark_[c.origin] = stamp;
            slice_edge_[c.origin] = se;
            edges.push_back({a, b});
            provenance.push_back({se, c.origin});
            weight.push_back(plan_.in_residual[c.origin] ? 0 : 1);
        }
        const auto kept = [&](EdgeId e) { return edge_mark_[e] == stamp; };

        std::vector<std::vector<EdgeId>> rotation(kinds.size());
        for (VertexId u : members)
            for (Dart d : g_.rotation(u))
                if (kept(dart_edge(d))) rotation[local_[u]].push_back(slice_edge_[dart_edge(d)]);

        // Around a contracted node the cyclic order of its edges is read off
        // the faces of G: from an exit dart, follow the face on the far side
        // through the node until it leaves again.
        for (auto& [key, darts] : exits) {
            const int node_key_value = key;
            const auto in_node = [&](VertexId z) { return !inside(z) && node_key(z, top) == node_key_value; };
            const Dart start = *std::min_element(darts.begin(), darts.end());
            auto& rot = rotation[node_index.at(key)];
            std::size_t visited = 0;
            Dart cur = start;
            do {
                if (++visited > darts.size())
                    throw Error(ErrorKind::MalformedSliceSet, "contracted node rotation does not close");
                if (kept(dart_edge(cur))) rot.push_back(slice_edge_[dart_edge(cur)]);
                Dart d = g_.face_next(reverse_dart(cur));
                while (in_node(g_.head(d))) d = g_.face_next(d);
                cur = d;
            } while (cur != start);
            if (visited != darts.size())
                throw Error(ErrorKind::MalformedSliceSet, "contracted node rotation misses edges");
        }

        Slice s;
        s.graph = EmbeddedMultigraph::build(static_cast<int>(kinds.size()), std::move(edges), std::move(rotation));
        if (outer >= 0) {
            s.graph = s.graph.with_outer_face(s.graph.face_of(s.graph.rotation(outer)[0]));
        } else {
            for (Dart d : g_.face(g_.outer_face()))
                if (kept(dart_edge(d))) {
                    s.graph = s.graph.with_outer_face(s.graph.face_of(2 * slice_edge_[dart_edge(d)] + (d & 1)));
                    break;
                }
        }
        s.kinds = std::move(kinds);
        s.weight = std::move(weight);
        s.provenance = std::move(provenance);
        s.window_index = window_index;
        s.circuit_id = circuit;
        s.outer_node = outer;
        s.base_vertex_count = static_cast<int>(sk_.circuit_vertices[circuit].size());
        return s;
    }

    Mode mode_;
    const EmbeddedMultigraph& g_;
    const LevelAssignment& levels_;
    const ShiftPlan& plan_;
    const Skeleton& sk_;
    int stamp_ = 0;
    std::vector<int> mark_, local_, edge_mark_, slice_edge_;
};

}  // namespace

std::vector<Slice> build_slices(Mode mode, const EmbeddedMultigraph& g, const LevelAssignment& levels,
                                const ShiftPlan& plan) {
    const Skeleton sk = analyse(mode, g, levels);
    return SliceBuilder(mode, g, levels, plan, sk).run();
}

std::vector<Slice> build_ec_slices(const EmbeddedMultigraph& g, const LevelAssignment& levels,
                                   const ShiftPlan& plan) {
    return build_slices(Mode::ECSS, g, levels, plan);
}

std::vector<Slice> build_vc_slices(const EmbeddedMultigraph& g, const LevelAssignment& levels,
                                   const ShiftPlan& plan) {
    return build_slices(Mode::VCSS, g, levels, plan);
}

SliceTree build_slice_tree(const std::vector<Slice>& slices, const EmbeddedMultigraph& g) {
    const int count = static_cast<int>(slices.size());
    if (count == 0) throw Error(ErrorKind::MalformedSliceSet, "no slices");
    std::vector<std::vector<int>> holders(g.edge_count());
    for (int s = 0; s < count; ++s)
        for (const EdgeRef& ref : slices[s].provenance)
            if (ref.origin) holders[*ref.origin].push_back(s);

    std::set<std::pair<int, int>> links;
    for (const auto& h : holders)
        for (std::size_t x = 0; x < h.size(); ++x)
            for (std::size_t y = x + 1; y < h.size(); ++y)
                if (std::abs(slices[h[x]].window_index - slices[h[y]].window_index) == 1)
                    links.insert({std::min(h[x], h[y]), std::max(h[x], h[y])});

    SliceTree tree;
    tree.root = -1;
    const std::vector<EdgeId> boundary = outer_boundary(g);
    if (!boundary.empty())
        for (int s : holders[boundary.front()])
            if (tree.root < 0 || slices[s].window_index < slices[tree.root].window_index) tree.root = s;
    if (tree.root < 0) throw Error(ErrorKind::MalformedSliceSet, "no slice contains the outer boundary");
    if (static_cast<int>(links.size()) != count - 1)
        throw Error(ErrorKind::MalformedSliceSet, "slice adjacency is not a tree");

    std::vector<std::vector<int>> adj(count);
    for (const auto& [a, b] : links) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    tree.parent.assign(count, -2);
    tree.children.assign(count, {});
    tree.parent[tree.root] = -1;
    std::vector<int> queue{tree.root};
    for (std::size_t q = 0; q < queue.size(); ++q)
        for (int b : adj[queue[q]])
            if (tree.parent[b] == -2) {
                tree.parent[b] = queue[q];
                tree.children[queue[q]].push_back(b);
                queue.push_back(b);
            }
    if (static_cast<int>(queue.size()) != count)
        throw Error(ErrorKind::MalformedSliceSet, "slice adjacency is disconnected");
    return tree;
}

}  // namespace planar3c
