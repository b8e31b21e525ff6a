#include "planar3c/connectivity.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>
#include <random>
#include <set>
#include <utility>

namespace planar3c {

SimpleView SimpleView::of(const EmbeddedMultigraph& g) {
    return SimpleView{g.vertex_count(), std::vector<Edge>(g.edges().begin(), g.edges().end())};
}

SimpleView SimpleView::of(const EmbeddedMultigraph& g, std::span<const EdgeId> subset) {
    SimpleView view{g.vertex_count(), {}};
    view.edges.reserve(subset.size());
    for (EdgeId e : subset) view.edges.push_back(g.edge(e));
    return view;
}

namespace {

struct Adjacency {
    std::vector<int> offset;
    std::vector<std::pair<VertexId, EdgeId>> entries;

    explicit Adjacency(const SimpleView& g, EdgeId skip = -1) : offset(g.vertex_count + 1, 0) {
        for (EdgeId e = 0; e < static_cast<EdgeId>(g.edges.size()); ++e) {
            if (e == skip) continue;
            ++offset[g.edges[e].a + 1];
            ++offset[g.edges[e].b + 1];
        }
        for (int v = 0; v < g.vertex_count; ++v) offset[v + 1] += offset[v];
        entries.resize(offset.back());
        std::vector<int> fill(offset.begin(), offset.end() - 1);
        for (EdgeId e = 0; e < static_cast<EdgeId>(g.edges.size()); ++e) {
            if (e == skip) continue;
            entries[fill[g.edges[e].a]++] = {g.edges[e].b, e};
            entries[fill[g.edges[e].b]++] = {g.edges[e].a, e};
        }
    }
    std::span<const std::pair<VertexId, EdgeId>> of(VertexId v) const {
        return {entries.data() + offset[v], entries.data() + offset[v + 1]};
    }
};

// Components of g after ignoring the edges flagged in `ignore` and the
// vertex `removed_vertex` (if >= 0).
std::vector<int> components_ignoring(const SimpleView& g, const std::vector<char>* ignore,
                                     VertexId removed_vertex, int* count) {
    const Adjacency adj(g);
    std::vector<int> label(g.vertex_count, -1);
    int c = 0;
    std::vector<VertexId> stack;
    for (VertexId s = 0; s < g.vertex_count; ++s) {
        if (label[s] >= 0 || s == removed_vertex) continue;
        label[s] = c;
        stack.push_back(s);
        while (!stack.empty()) {
            const VertexId u = stack.back();
            stack.pop_back();
            for (auto [w, e] : adj.of(u)) {
                if (label[w] >= 0 || w == removed_vertex || (ignore && (*ignore)[e])) continue;
                label[w] = c;
                stack.push_back(w);
            }
        }
        ++c;
    }
    if (count) *count = c;
    return label;
}

struct DfsResult {
    std::vector<int> order, low, parent_edge;
    std::vector<VertexId> parent;
};

// Iterative lowpoint DFS over all components; parallel edges are
// distinguished by edge id.
DfsResult lowpoint_dfs(const SimpleView& g, const Adjacency& adj, VertexId removed_vertex = -1) {
    const int n = g.vertex_count;
    DfsResult r;
    r.order.assign(n, -1);
    r.low.assign(n, 0);
    r.parent_edge.assign(n, -1);
    r.parent.assign(n, -1);
    std::vector<int> cursor(n, 0);
    int time = 0;
    std::vector<VertexId> stack;
    for (VertexId s = 0; s < n; ++s) {
        if (r.order[s] >= 0 || s == removed_vertex) continue;
        r.order[s] = r.low[s] = time++;
        stack.push_back(s);
        while (!stack.empty()) {
            const VertexId u = stack.back();
            auto nbrs = adj.of(u);
            if (cursor[u] < static_cast<int>(nbrs.size())) {
                auto [w, e] = nbrs[cursor[u]++];
                if (w == removed_vertex || e == r.parent_edge[u]) continue;
                if (r.order[w] < 0) {
                    r.order[w] = r.low[w] = time++;
                    r.parent[w] = u;
                    r.parent_edge[w] = e;
                    stack.push_back(w);
                } else {
                    r.low[u] = std::min(r.low[u], r.order[w]);
                }
            } else {
                stack.pop_back();
                if (r.parent[u] >= 0) r.low[r.parent[u]] = std::min(r.low[r.parent[u]], r.low[u]);
            }
        }
    }
    return r;
}

bool has_articulation(const SimpleView& g, const Adjacency& adj, VertexId removed_vertex) {
    const DfsResult r = lowpoint_dfs(g, adj, removed_vertex);
    std::vector<int> root_children(g.vertex_count, 0);
    for (VertexId v = 0; v < g.vertex_count; ++v) {
        if (v == removed_vertex || r.parent[v] < 0) continue;
        const VertexId p = r.parent[v];
        if (r.parent[p] < 0) {
            if (++root_children[p] > 1) return true;
        } else if (r.low[v] >= r.order[p]) {
            return true;
        }
    }
    return false;
}

// Unit-capacity augmenting-path flow on a small directed network.
class UnitFlow {
public:
    explicit UnitFlow(int nodes) : head_(nodes, -1) {}
    void add_arc(int from, int to, int cap) {
        arcs_.push_back({to, head_[from], cap});
        head_[from] = static_cast<int>(arcs_.size()) - 1;
        arcs_.push_back({from, head_[to], 0});
        head_[to] = static_cast<int>(arcs_.size()) - 1;
    }
    int run(int s, int t, int limit) {
        int flow = 0;
        std::vector<int> via(head_.size());
        while (flow < limit) {
            std::fill(via.begin(), via.end(), -2);
            via[s] = -1;
            std::queue<int> q;
            q.push(s);
            while (!q.empty() && via[t] == -2) {
                const int u = q.front();
                q.pop();
                for (int a = head_[u]; a >= 0; a = arcs_[a].next) {
                    if (arcs_[a].cap > 0 && via[arcs_[a].to] == -2) {
                        via[arcs_[a].to] = a;
                        q.push(arcs_[a].to);
                    }
                }
            }
            if (via[t] == -2) break;
            for (int v = t; v != s; v = arcs_[via[v] ^ 1].to) {
                --arcs_[via[v]].cap;
                ++arcs_[via[v] ^ 1].cap;
            }
            ++flow;
        }
        return flow;
    }

private:
    struct Arc {
        int to, next, cap;
    };
    std::vector<int> head_;
    std::vector<Arc> arcs_;
};

int edge_flow(const SimpleView& g, VertexId u, VertexId v, int cap, EdgeId skip) {
    UnitFlow flow(g.vertex_count);
    for (EdgeId e = 0; e < static_cast<EdgeId>(g.edges.size()); ++e) {
        if (e == skip) continue;
        flow.add_arc(g.edges[e].a, g.edges[e].b, 1);
        flow.add_arc(g.edges[e].b, g.edges[e].a, 1);
    }
    return flow.run(u, v, cap);
}

int vertex_flow(const SimpleView& g, VertexId u, VertexId v, int cap, EdgeId skip) {
    const int n = g.vertex_count;
    // Node x splits into x (in) and n + x (out).
    UnitFlow flow(2 * n);
    for (VertexId x = 0; x < n; ++x) flow.add_arc(x, n + x, (x == u || x == v) ? cap : 1);
    std::set<std::pair<VertexId, VertexId>> seen;
    bool direct = false;
    for (EdgeId e = 0; e < static_cast<EdgeId>(g.edges.size()); ++e) {
        if (e == skip) continue;
        const auto [a, b] = g.edges[e];
        if ((a == u && b == v) || (a == v && b == u)) {
            direct = true;
            continue;
        }
        if (!seen.insert({std::min(a, b), std::max(a, b)}).second) continue;
        flow.add_arc(n + a, b, 1);
        flow.add_arc(n + b, a, 1);
    }
    const int base = direct ? 1 : 0;
    if (base >= cap) return cap;
    return base + flow.run(n + u, v, cap - base);
}

}  // namespace

std::vector<int> connected_components(const SimpleView& g, int* count) {
    return components_ignoring(g, nullptr, -1, count);
}

bool is_connected(const SimpleView& g) {
    int count = 0;
    connected_components(g, &count);
    return count <= 1;
}

ComponentLabeling bridges_and_2ec(const SimpleView& g) {
    const Adjacency adj(g);
    const DfsResult r = lowpoint_dfs(g, adj);
    ComponentLabeling out;
    out.kind = ComponentLabeling::Kind::TwoEdgeConnected;
    std::vector<char> bridge(g.edges.size(), 0);
    for (VertexId v = 0; v < g.vertex_count; ++v) {
        if (r.parent[v] >= 0 && r.low[v] > r.order[r.parent[v]]) {
            bridge[r.parent_edge[v]] = 1;
            out.cut_elements.push_back(r.parent_edge[v]);
        }
    }
    std::sort(out.cut_elements.begin(), out.cut_elements.end());
    out.label = components_ignoring(g, &bridge, -1, &out.component_count);
    return out;
}

ComponentLabeling biconnected(const SimpleView& g) {
    const int n = g.vertex_count;
    const Adjacency adj(g);
    ComponentLabeling out;
    out.kind = ComponentLabeling::Kind::Biconnected;
    out.label.assign(g.edges.size(), -1);
    std::vector<int> order(n, -1), low(n, 0), parent_edge(n, -1), cursor(n, 0);
    std::vector<VertexId> parent(n, -1);
    std::vector<char> articulation(n, 0);
    std::vector<EdgeId> edge_stack;
    std::vector<VertexId> stack;
    int time = 0;
    for (VertexId s = 0; s < n; ++s) {
        if (order[s] >= 0) continue;
        order[s] = low[s] = time++;
        stack.push_back(s);
        int root_children = 0;
        while (!stack.empty()) {
            const VertexId u = stack.back();
            auto nbrs = adj.of(u);
            if (cursor[u] < static_cast<int>(nbrs.size())) {
                auto [w, e] = nbrs[cursor[u]++];
                if (e == parent_edge[u]) continue;
                if (order[w] < 0) {
                    edge_stack.push_back(e);
                    order[w] = low[w] = time++;
                    parent[w] = u;
                    parent_edge[w] = e;
                    stack.push_back(w);
                } else if (order[w] < order[u]) {
                    edge_stack.push_back(e);
                    low[u] = std::min(low[u], order[w]);
                }
            } else {
                stack.pop_back();
                const VertexId p = parent[u];
                if (p < 0) continue;
                low[p] = std::min(low[p], low[u]);
                if (low[u] >= order[p]) {
                    if (parent[p] >= 0) articulation[p] = 1;
                    else ++root_children;
                    const int c = out.component_count++;
                    while (true) {
                        const EdgeId e = edge_stack.back();
                        edge_stack.pop_back();
                        out.label[e] = c;
                        if (e == parent_edge[u]) break;
                    }
                }
            }
        }
        if (root_children > 1) articulation[s] = 1;
    }
    for (VertexId v = 0; v < n; ++v)
        if (articulation[v]) out.cut_elements.push_back(v);
    return out;
}

int edge_connectivity_between(const SimpleView& g, VertexId u, VertexId v, int cap) {
    if (u == v) throw Error(ErrorKind::InvalidArgument, "edge_connectivity_between needs distinct vertices");
    return edge_flow(g, u, v, cap, -1);
}

int vertex_connectivity_between(const SimpleView& g, VertexId u, VertexId v, int cap) {
    if (u == v) throw Error(ErrorKind::InvalidArgument, "vertex_connectivity_between needs distinct vertices");
    return vertex_flow(g, u, v, cap, -1);
}

bool still_3_edge_connected_without(const SimpleView& g, EdgeId removed) {
    return edge_flow(g, g.edges[removed].a, g.edges[removed].b, 3, removed) >= 3;
}

bool still_triconnected_without(const SimpleView& g, EdgeId removed) {
    return vertex_flow(g, g.edges[removed].a, g.edges[removed].b, 3, removed) >= 3;
}

bool is_k_edge_connected(const SimpleView& g, int k) {
    if (k < 1 || k > 3) throw Error(ErrorKind::InvalidArgument, "k must be in 1..3");
    if (g.vertex_count <= 1) return true;
    if (!is_connected(g)) return false;
    if (k == 1) return true;

    // Cut-space labelling: every non-tree edge gets a random 64-bit label and
    // every tree edge the xor of the non-tree edges whose cycles cover it.
    // A bridge has label 0; two edges form a cut iff their labels agree
    // (false positives are confirmed exactly below).
    const Adjacency adj(g);
    const DfsResult r = lowpoint_dfs(g, adj);
    std::mt19937_64 rng(0x9E3779B97F4A7C15ull);
    const EdgeId m = static_cast<EdgeId>(g.edges.size());
    std::vector<std::uint64_t> label(m, 0), acc(g.vertex_count, 0);
    std::vector<char> tree(m, 0);
    for (VertexId v = 0; v < g.vertex_count; ++v)
        if (r.parent_edge[v] >= 0) tree[r.parent_edge[v]] = 1;
    for (EdgeId e = 0; e < m; ++e) {
        if (tree[e]) continue;
        label[e] = rng() | 1ull;
        acc[g.edges[e].a] ^= label[e];
        acc[g.edges[e].b] ^= label[e];
    }
    std::vector<VertexId> by_order(g.vertex_count);
    for (VertexId v = 0; v < g.vertex_count; ++v) by_order[r.order[v]] = v;
    for (int i = g.vertex_count - 1; i > 0; --i) {
        const VertexId v = by_order[i];
        label[r.parent_edge[v]] = acc[v];
        acc[r.parent[v]] ^= acc[v];
    }
    for (EdgeId e = 0; e < m; ++e)
        if (label[e] == 0) return false;
    if (k == 2) return true;

    std::vector<EdgeId> ids(m);
    for (EdgeId e = 0; e < m; ++e) ids[e] = e;
    std::sort(ids.begin(), ids.end(), [&](EdgeId x, EdgeId y) {
        return label[x] != label[y] ? label[x] < label[y] : x < y;
    });
    std::vector<char> ignore(m, 0);
    for (EdgeId i = 0; i + 1 < m; ++i) {
        for (EdgeId j = i + 1; j < m && label[ids[j]] == label[ids[i]]; ++j) {
            ignore[ids[i]] = ignore[ids[j]] = 1;
            int count = 0;
            components_ignoring(g, &ignore, -1, &count);
            ignore[ids[i]] = ignore[ids[j]] = 0;
            if (count > 1) return false;
        }
    }
    return true;
}

bool is_k_vertex_connected(const SimpleView& g, int k) {
    if (k < 1 || k > 3) throw Error(ErrorKind::InvalidArgument, "k must be in 1..3");
    if (g.vertex_count <= k) return false;
    if (!is_connected(g)) return false;
    if (k == 1) return true;
    const Adjacency adj(g);
    if (has_articulation(g, adj, -1)) return false;
    if (k == 2) return true;
    for (VertexId x = 0; x < g.vertex_count; ++x)
        if (has_articulation(g, adj, x)) return false;
    return true;
}

}  // namespace planar3c
