#include "planar3c/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <utility>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/graph_traits.hpp>
#include <boost/property_map/property_map.hpp>

namespace planar3c {

const char* to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::NonPlanar: return "NonPlanar";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::TooManyParallel: return "TooManyParallel";
    case ErrorKind::InvalidRotation: return "InvalidRotation";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::InfeasibleInput: return "InfeasibleInput";
    case ErrorKind::InfeasibleSlice: return "InfeasibleSlice";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::MalformedSliceSet: return "MalformedSliceSet";
    case ErrorKind::CorruptDecomposition: return "CorruptDecomposition";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::Format: return "Format";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

const char* to_string(Mode mode) { return mode == Mode::ECSS ? "3ecss" : "3vcss"; }

Mode parse_mode(const std::string& text) {
    if (text == "3ecss") return Mode::ECSS;
    if (text == "3vcss") return Mode::VCSS;
    throw Error(ErrorKind::InvalidArgument, "unknown problem '" + text + "'");
}

namespace {

std::pair<VertexId, VertexId> pair_key(const Edge& e) {
    return {std::min(e.a, e.b), std::max(e.a, e.b)};
}

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                         boost::property<boost::vertex_index_t, int>,
                                         boost::property<boost::edge_index_t, int>>;

// Planar rotation for the simple graph underlying `edges`; parallel copies
// are laid out consecutively (reversed at the far end) so they bound digons.
std::optional<std::vector<std::vector<Dart>>> compute_rotation(int n, const std::vector<Edge>& edges) {
    std::map<std::pair<VertexId, VertexId>, std::vector<EdgeId>> copies;
    for (EdgeId e = 0; e < static_cast<EdgeId>(edges.size()); ++e) copies[pair_key(edges[e])].push_back(e);

    BoostGraph bg(n);
    for (const auto& [key, ids] : copies) {
        auto [ed, ok] = boost::add_edge(key.first, key.second, bg);
        (void)ok;
        boost::put(boost::edge_index, bg, ed, ids.front());
    }
    using EdgeDesc = boost::graph_traits<BoostGraph>::edge_descriptor;
    std::vector<std::vector<EdgeDesc>> storage(n);
    auto embedding = boost::make_iterator_property_map(storage.begin(), boost::get(boost::vertex_index, bg));
    if (!boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = bg,
                                             boost::boyer_myrvold_params::embedding = embedding))
        return std::nullopt;

    std::vector<std::vector<Dart>> rotation(n);
    for (VertexId v = 0; v < n; ++v) {
        for (const EdgeDesc& ed : storage[v]) {
            const EdgeId rep = boost::get(boost::edge_index, bg, ed);
            const auto& ids = copies[pair_key(edges[rep])];
            auto dart_at = [&](EdgeId e) { return edges[e].a == v ? 2 * e : 2 * e + 1; };
            if (edges[rep].a == v) {
                for (EdgeId e : ids) rotation[v].push_back(dart_at(e));
            } else {
                for (auto it = ids.rbegin(); it != ids.rend(); ++it) rotation[v].push_back(dart_at(*it));
            }
        }
    }
    return rotation;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

FaceId face_with_surviving_dart(const EmbeddedMultigraph& old_graph, const EmbeddedMultigraph& new_graph,
                                const std::vector<EdgeId>& new_id_of_old) {
    if (old_graph.outer_face() < 0) return new_graph.outer_face();
    for (Dart d : old_graph.face(old_graph.outer_face())) {
        const EdgeId ne = new_id_of_old[dart_edge(d)];
        if (ne >= 0) return new_graph.face_of(2 * ne + (d & 1));
    }
    return new_graph.outer_face();
}

}  // namespace

EmbeddedMultigraph EmbeddedMultigraph::build(int vertex_count, std::vector<Edge> edges,
                                             std::optional<std::vector<std::vector<EdgeId>>> rotation,
                                             std::optional<FaceId> outer_face, BuildOptions options) {
    if (vertex_count < 0) throw Error(ErrorKind::InvalidArgument, "negative vertex count");
    std::map<std::pair<VertexId, VertexId>, int> multiplicity;
    for (const Edge& e : edges) {
        if (e.a < 0 || e.b < 0 || e.a >= vertex_count || e.b >= vertex_count)
            throw Error(ErrorKind::InvalidArgument, "edge endpoint out of range");
        if (e.a == e.b) throw Error(ErrorKind::SelfLoop, "self-loop at vertex " + std::to_string(e.a));
        if (++multiplicity[pair_key(e)] > 3 && !options.allow_excess_parallel)
            throw Error(ErrorKind::TooManyParallel, "more than three parallel edges between " +
                                                        std::to_string(e.a) + " and " + std::to_string(e.b));
    }

    EmbeddedMultigraph g;
    g.edges_ = std::move(edges);
    const bool given = rotation.has_value();
    if (given) {
        if (static_cast<int>(rotation->size()) != vertex_count)
            throw Error(ErrorKind::InvalidRotation, "rotation has wrong number of vertices");
        g.rotation_.assign(vertex_count, {});
        std::vector<int> seen(2 * g.edges_.size(), 0);
        for (VertexId v = 0; v < vertex_count; ++v) {
            for (EdgeId e : (*rotation)[v]) {
                if (e < 0 || e >= g.edge_count()) throw Error(ErrorKind::InvalidRotation, "rotation edge out of range");
                const Edge& ed = g.edges_[e];
                Dart d;
                if (ed.a == v && !seen[2 * e]) d = 2 * e;
                else if (ed.b == v && !seen[2 * e + 1]) d = 2 * e + 1;
                else throw Error(ErrorKind::InvalidRotation, "edge " + std::to_string(e) + " listed wrongly at vertex " + std::to_string(v));
                seen[d] = 1;
                g.rotation_[v].push_back(d);
            }
        }
        if (std::find(seen.begin(), seen.end(), 0) != seen.end())
            throw Error(ErrorKind::InvalidRotation, "rotation misses an edge end");
    } else {
        auto computed = compute_rotation(vertex_count, g.edges_);
        if (!computed) throw Error(ErrorKind::NonPlanar, "graph is not planar");
        g.rotation_ = std::move(*computed);
    }

    g.position_.assign(2 * g.edges_.size(), 0);
    for (const auto& rot : g.rotation_)
        for (int i = 0; i < static_cast<int>(rot.size()); ++i) g.position_[rot[i]] = i;
    g.trace_faces();
    try {
        g.validate_embedding();
    } catch (const Error& err) {
        if (given) throw Error(ErrorKind::InvalidRotation, err.what());
        throw;
    }

    if (outer_face) {
        if (*outer_face < 0 || *outer_face >= g.face_count())
            throw Error(ErrorKind::InvalidArgument, "outer face out of range");
        g.outer_face_ = *outer_face;
    } else if (g.face_count() > 0) {
        g.outer_face_ = 0;
        for (FaceId f = 1; f < g.face_count(); ++f)
            if (g.faces_[f].size() > g.faces_[g.outer_face_].size()) g.outer_face_ = f;
    }
    return g;
}

Dart EmbeddedMultigraph::rotation_next(Dart d) const {
    const auto& rot = rotation_[tail(d)];
    const int next = position_[d] + 1;
    return rot[next == static_cast<int>(rot.size()) ? 0 : next];
}

void EmbeddedMultigraph::trace_faces() {
    faces_.clear();
    face_of_dart_.assign(2 * edges_.size(), -1);
    for (Dart start = 0; start < static_cast<Dart>(face_of_dart_.size()); ++start) {
        if (face_of_dart_[start] >= 0) continue;
        const FaceId f = static_cast<FaceId>(faces_.size());
        faces_.emplace_back();
        Dart d = start;
        do {
            face_of_dart_[d] = f;
            faces_.back().push_back(d);
            d = face_next(d);
        } while (d != start);
    }
}

void EmbeddedMultigraph::validate_embedding() const {
    const int n = vertex_count();
    UnionFind uf(n);
    for (const Edge& e : edges_) uf.unite(e.a, e.b);
    std::vector<long> vertices(n, 0), edge_count(n, 0), face_count(n, 0);
    for (VertexId v = 0; v < n; ++v) ++vertices[uf.find(v)];
    for (const Edge& e : edges_) ++edge_count[uf.find(e.a)];
    for (const auto& f : faces_) ++face_count[uf.find(tail(f.front()))];
    for (VertexId r = 0; r < n; ++r) {
        if (uf.find(r) != r || edge_count[r] == 0) continue;
        if (vertices[r] - edge_count[r] + face_count[r] != 2)
            throw Error(ErrorKind::NonPlanar, "rotation system is not a planar embedding (Euler check failed)");
    }
}

std::vector<std::vector<EdgeId>> EmbeddedMultigraph::rotation_edges() const {
    std::vector<std::vector<EdgeId>> out(rotation_.size());
    for (size_t v = 0; v < rotation_.size(); ++v)
        for (Dart d : rotation_[v]) out[v].push_back(dart_edge(d));
    return out;
}

EmbeddedMultigraph EmbeddedMultigraph::with_outer_face(FaceId f) const {
    if (f < 0 || f >= face_count()) throw Error(ErrorKind::InvalidArgument, "outer face out of range");
    EmbeddedMultigraph copy = *this;
    copy.outer_face_ = f;
    return copy;
}

int EmbeddedMultigraph::component_count() const {
    UnionFind uf(vertex_count());
    for (const Edge& e : edges_) uf.unite(e.a, e.b);
    int count = 0;
    for (VertexId v = 0; v < vertex_count(); ++v)
        if (uf.find(v) == v) ++count;
    return count;
}

std::vector<EdgeId> outer_boundary(const EmbeddedMultigraph& g) {
    std::vector<EdgeId> out;
    if (g.outer_face() < 0) return out;
    for (Dart d : g.face(g.outer_face())) out.push_back(dart_edge(d));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

// Builds the graph on `n` vertices from surviving edges of `g`, given the
// surviving rotation order per new vertex (as old darts) and the endpoint map.
DerivedGraph assemble(const EmbeddedMultigraph& g, int n, const std::vector<VertexId>& vmap,
                      const std::vector<char>& keep_edge, const std::vector<std::vector<Dart>>& old_rotation) {
    std::vector<EdgeId> new_id(g.edge_count(), -1);
    DerivedGraph out;
    std::vector<Edge> edges;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (!keep_edge[e]) continue;
        new_id[e] = static_cast<EdgeId>(edges.size());
        edges.push_back({vmap[g.edge(e).a], vmap[g.edge(e).b]});
        out.edge_origin.push_back(e);
    }
    std::vector<std::vector<EdgeId>> rotation(n);
    for (VertexId v = 0; v < n; ++v)
        for (Dart d : old_rotation[v]) rotation[v].push_back(new_id[dart_edge(d)]);
    out.graph = EmbeddedMultigraph::build(n, std::move(edges), std::move(rotation), std::nullopt,
                                          BuildOptions{true});
    const FaceId outer = face_with_surviving_dart(g, out.graph, new_id);
    if (outer >= 0 && outer != out.graph.outer_face()) out.graph = out.graph.with_outer_face(outer);
    return out;
}

}  // namespace

DerivedGraph cap_parallel(const EmbeddedMultigraph& g, int cap) {
    if (cap < 1) throw Error(ErrorKind::InvalidArgument, "parallel cap must be positive");
    std::map<std::pair<VertexId, VertexId>, int> count;
    std::vector<char> keep(g.edge_count(), 0);
    for (EdgeId e = 0; e < g.edge_count(); ++e) keep[e] = ++count[pair_key(g.edge(e))] <= cap;
    std::vector<VertexId> identity(g.vertex_count());
    std::iota(identity.begin(), identity.end(), 0);
    std::vector<std::vector<Dart>> rotation(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        for (Dart d : g.rotation(v))
            if (keep[dart_edge(d)]) rotation[v].push_back(d);
    return assemble(g, g.vertex_count(), identity, keep, rotation);
}

DerivedGraph edge_subgraph(const EmbeddedMultigraph& g, std::span<const EdgeId> edges) {
    std::vector<char> keep(g.edge_count(), 0);
    for (EdgeId e : edges) {
        if (e < 0 || e >= g.edge_count()) throw Error(ErrorKind::InvalidArgument, "edge id out of range");
        keep[e] = 1;
    }
    std::vector<VertexId> identity(g.vertex_count());
    std::iota(identity.begin(), identity.end(), 0);
    std::vector<std::vector<Dart>> rotation(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        for (Dart d : g.rotation(v))
            if (keep[dart_edge(d)]) rotation[v].push_back(d);
    return assemble(g, g.vertex_count(), identity, keep, rotation);
}

Contraction contract_components(const EmbeddedMultigraph& g, std::span<const VertexId> keep, int parallel_cap) {
    const int n = g.vertex_count();
    if (keep.empty()) throw Error(ErrorKind::InvalidArgument, "keep set must be nonempty");
    std::vector<char> kept(n, 0);
    for (VertexId v : keep) {
        if (v < 0 || v >= n) throw Error(ErrorKind::InvalidArgument, "keep vertex out of range");
        kept[v] = 1;
    }

    Contraction out;
    out.vertex_map.assign(n, -1);
    int next_id = 0;
    for (VertexId v = 0; v < n; ++v)
        if (kept[v]) {
            out.vertex_map[v] = next_id++;
            out.kinds.push_back({VertexKind::Tag::Original, v});
        }

    // Circular doubly linked rotation lists over darts.
    const int darts = 2 * g.edge_count();
    std::vector<Dart> next(darts), prev(darts);
    for (VertexId v = 0; v < n; ++v) {
        auto rot = g.rotation(v);
        for (size_t i = 0; i < rot.size(); ++i) {
            next[rot[i]] = rot[(i + 1) % rot.size()];
            prev[rot[i]] = rot[(i + rot.size() - 1) % rot.size()];
        }
    }
    std::vector<char> removed(darts, 0);
    auto unlink = [&](Dart d) {
        if (next[d] != d) {
            next[prev[d]] = next[d];
            prev[next[d]] = prev[d];
        }
        removed[d] = 1;
    };
    auto splice = [&](Dart du, Dart dv) {
        const bool su = next[du] == du, sv = next[dv] == dv;
        const Dart a = prev[du], b = next[du], c = prev[dv], d = next[dv];
        if (su && sv) {
        } else if (su) {
            next[c] = d;
            prev[d] = c;
        } else if (sv) {
            next[a] = b;
            prev[b] = a;
        } else {
            next[a] = d;
            prev[d] = a;
            next[c] = b;
            prev[b] = c;
        }
        removed[du] = removed[dv] = 1;
    };

    std::vector<int> component(n, -1);
    for (VertexId s = 0; s < n; ++s) {
        if (kept[s] || component[s] >= 0) continue;
        const int c = out.component_count++;
        out.kinds.push_back({VertexKind::Tag::InnerNode, c});
        const VertexId node = next_id++;
        std::queue<VertexId> queue;
        queue.push(s);
        component[s] = c;
        while (!queue.empty()) {
            const VertexId u = queue.front();
            queue.pop();
            out.vertex_map[u] = node;
            for (Dart d : g.rotation(u)) {
                const VertexId w = g.head(d);
                if (kept[w] || component[w] >= 0) continue;
                component[w] = c;
                splice(d, reverse_dart(d));
                queue.push(w);
            }
        }
    }

    std::vector<char> keep_edge(g.edge_count(), 0);
    std::map<std::pair<VertexId, VertexId>, int> count;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (removed[2 * e]) continue;
        const VertexId a = out.vertex_map[g.edge(e).a], b = out.vertex_map[g.edge(e).b];
        if (a == b || ++count[{std::min(a, b), std::max(a, b)}] > parallel_cap) {
            unlink(2 * e);
            unlink(2 * e + 1);
            continue;
        }
        keep_edge[e] = 1;
    }

    std::vector<Dart> start(next_id, -1);
    for (VertexId v = 0; v < n; ++v)
        for (Dart d : g.rotation(v))
            if (!removed[d] && start[out.vertex_map[v]] < 0) start[out.vertex_map[v]] = d;
    std::vector<std::vector<Dart>> rotation(next_id);
    for (VertexId v = 0; v < next_id; ++v) {
        if (start[v] < 0) continue;
        Dart d = start[v];
        do {
            rotation[v].push_back(d);
            d = next[d];
        } while (d != start[v]);
    }

    DerivedGraph derived = assemble(g, next_id, out.vertex_map, keep_edge, rotation);
    out.graph = std::move(derived.graph);
    out.edge_origin = std::move(derived.edge_origin);
    return out;
}

}  // namespace planar3c
