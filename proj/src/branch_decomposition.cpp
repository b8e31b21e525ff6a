#include "planar3c/branch_decomposition.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <utility>

namespace planar3c {

std::vector<int> BranchDecomposition::postorder() const {
    std::vector<int> order;
    if (root < 0) return order;
    std::vector<std::pair<int, bool>> stack{{root, false}};
    while (!stack.empty()) {
        auto [x, expanded] = stack.back();
        stack.pop_back();
        if (expanded || nodes[x].is_leaf()) {
            order.push_back(x);
            continue;
        }
        stack.push_back({x, true});
        stack.push_back({nodes[x].right, false});
        stack.push_back({nodes[x].left, false});
    }
    return order;
}

namespace {

void fill_separators(BranchDecomposition& bd, const EmbeddedMultigraph& g) {
    using Counts = std::vector<std::pair<VertexId, int>>;
    std::vector<Counts> counts(bd.nodes.size());
    bd.separators.assign(bd.nodes.size(), {});
    bd.width = 0;
    for (int x : bd.postorder()) {
        const auto& node = bd.nodes[x];
        Counts c;
        if (node.is_leaf()) {
            const Edge& e = g.edge(node.edge);
            c = {{std::min(e.a, e.b), 1}, {std::max(e.a, e.b), 1}};
        } else {
            const Counts& l = counts[node.left];
            const Counts& r = counts[node.right];
            std::size_t i = 0, j = 0;
            while (i < l.size() || j < r.size()) {
                if (j == r.size() || (i < l.size() && l[i].first < r[j].first)) c.push_back(l[i++]);
                else if (i == l.size() || r[j].first < l[i].first) c.push_back(r[j++]);
                else {
                    c.push_back({l[i].first, l[i].second + r[j].second});
                    ++i, ++j;
                }
            }
            counts[node.left].clear();
            counts[node.right].clear();
        }
        std::erase_if(c, [&](const auto& vc) { return vc.second >= g.degree(vc.first); });
        for (const auto& [v, cnt] : c) bd.separators[x].push_back(v);
        bd.width = std::max(bd.width, static_cast<int>(c.size()));
        counts[x] = std::move(c);
    }
}

}  // namespace

BranchDecomposition decompose(const EmbeddedMultigraph& g, VertexId root) {
    BranchDecomposition bd;
    const int n = g.vertex_count(), m = g.edge_count(), faces = g.face_count();
    if (m == 0) return bd;

    // Star triangulation: one centre per face joined to every corner. Its
    // triangles correspond to darts; star edge m + d joins the centre of
    // face_of(d) to tail(d).
    const int total = n + faces;
    std::vector<std::vector<std::pair<int, int>>> adj(total);
    for (VertexId v = 0; v < n; ++v)
        for (Dart d : g.rotation(v)) {
            adj[v].push_back({g.head(d), dart_edge(d)});
            adj[v].push_back({n + g.face_of(d), m + d});
        }
    for (FaceId f = 0; f < faces; ++f)
        for (Dart d : g.face(f)) adj[n + f].push_back({g.tail(d), m + d});

    // 0-1 BFS: only original vertices count towards depth.
    const int start = root >= 0 ? root : n + g.outer_face();
    const auto cost = [&](int v) { return v < n ? 1 : 0; };
    std::vector<int> dist(total, std::numeric_limits<int>::max()), via(total, -1);
    std::deque<int> queue{start};
    dist[start] = cost(start);
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        for (const auto& [w, e] : adj[v]) {
            const int nd = dist[v] + cost(w);
            if (nd >= dist[w]) continue;
            dist[w] = nd;
            via[w] = e;
            if (cost(w) == 0) queue.push_front(w);
            else queue.push_back(w);
        }
    }
    std::vector<char> in_tree(m + 2 * m, 0);
    for (int v = 0; v < total; ++v) {
        if (v == start) continue;
        if (via[v] < 0) throw Error(ErrorKind::CorruptDecomposition, "graph is disconnected");
        in_tree[via[v]] = 1;
    }
    for (VertexId v = 0; v < n; ++v) bd.tree_depth = std::max(bd.tree_depth, dist[v]);

    std::vector<Dart> face_prev(2 * m);
    for (Dart d = 0; d < 2 * m; ++d) face_prev[g.face_next(d)] = d;

    // Unrooted tree: triangle nodes [0, 2m), leaf nodes [2m, 3m), then one
    // subdivision node per co-tree edge of G.
    std::vector<std::vector<int>> tree(3 * m);
    const auto link = [&](int a, int b) {
        tree[a].push_back(b);
        tree[b].push_back(a);
    };
    for (EdgeId e = 0; e < m; ++e) {
        if (in_tree[e]) {
            link(2 * m + e, 2 * e);
        } else {
            const int x = static_cast<int>(tree.size());
            tree.emplace_back();
            link(x, 2 * e);
            link(x, 2 * e + 1);
            link(x, 2 * m + e);
        }
    }
    for (Dart d = 0; d < 2 * m; ++d)
        if (!in_tree[m + d]) link(face_prev[d], d);

    // Root the tree at leaf 0, drop branches without leaves and suppress
    // nodes of degree two.
    const int tree_root = 2 * m;
    std::vector<int> parent(tree.size(), -2), order;
    parent[tree_root] = -1;
    std::vector<int> stack{tree_root};
    while (!stack.empty()) {
        const int x = stack.back();
        stack.pop_back();
        order.push_back(x);
        for (int y : tree[x])
            if (parent[y] == -2) {
                parent[y] = x;
                stack.push_back(y);
            }
    }
    if (order.size() != tree.size())
        throw Error(ErrorKind::CorruptDecomposition, "dual co-tree is not spanning");

    auto& nodes = bd.nodes;
    const auto make_internal = [&](int a, int b) {
        const int id = static_cast<int>(nodes.size());
        nodes.push_back({a, b, -1, -1});
        nodes[a].parent = id;
        nodes[b].parent = id;
        return id;
    };
    std::vector<int> result(tree.size(), -1);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const int x = *it;
        std::vector<int> kids;
        for (int y : tree[x])
            if (y != parent[x] && result[y] >= 0) kids.push_back(result[y]);
        if (x >= 2 * m && x < 3 * m) {
            const int leaf = static_cast<int>(nodes.size());
            nodes.push_back({-1, -1, -1, x - 2 * m});
            result[x] = kids.empty() ? leaf : make_internal(leaf, kids.size() == 1 ? kids[0] : make_internal(kids[0], kids[1]));
            continue;
        }
        if (kids.empty()) continue;
        int acc = kids[0];
        for (std::size_t i = 1; i < kids.size(); ++i) acc = make_internal(acc, kids[i]);
        result[x] = acc;
    }
    bd.root = result[tree_root];
    nodes[bd.root].parent = -1;
    fill_separators(bd, g);
    return bd;
}

BranchDecomposition decomposition_from_nodes(const EmbeddedMultigraph& g,
                                             std::vector<BranchDecomposition::Node> nodes, int root) {
    BranchDecomposition bd;
    bd.nodes = std::move(nodes);
    bd.root = root;
    const int count = static_cast<int>(bd.nodes.size());
    const auto valid = [&](int x) { return x >= 0 && x < count; };
    if (count > 0 && !valid(root)) throw Error(ErrorKind::CorruptDecomposition, "root out of range");
    for (auto& node : bd.nodes) node.parent = -1;
    for (int x = 0; x < count; ++x) {
        auto& node = bd.nodes[x];
        if (node.is_leaf()) {
            if (node.edge >= g.edge_count() || node.left >= 0 || node.right >= 0)
                throw Error(ErrorKind::CorruptDecomposition, "malformed leaf");
            continue;
        }
        if (!valid(node.left) || !valid(node.right) || bd.nodes[node.left].parent >= 0 ||
            bd.nodes[node.right].parent >= 0 || node.left == node.right)
            throw Error(ErrorKind::CorruptDecomposition, "malformed internal node");
        bd.nodes[node.left].parent = x;
        bd.nodes[node.right].parent = x;
    }
    if (count > 0 && bd.nodes[root].parent >= 0) throw Error(ErrorKind::CorruptDecomposition, "root has a parent");
    if (static_cast<int>(bd.postorder().size()) != count)
        throw Error(ErrorKind::CorruptDecomposition, "nodes do not form one tree");
    fill_separators(bd, g);
    return bd;
}

int verify_width(const BranchDecomposition& bd, const EmbeddedMultigraph& g) {
    const int m = g.edge_count();
    if (bd.root < 0) {
        if (m != 0) throw Error(ErrorKind::CorruptDecomposition, "empty decomposition of a nonempty graph");
        return 0;
    }
    const int count = static_cast<int>(bd.nodes.size());
    if (static_cast<int>(bd.separators.size()) != count)
        throw Error(ErrorKind::CorruptDecomposition, "separator table has the wrong size");
    std::vector<int> seen_edge(m, 0);
    std::vector<int> reached(count, 0);
    for (int x : bd.postorder()) {
        if (x < 0 || x >= count || reached[x]++)
            throw Error(ErrorKind::CorruptDecomposition, "tree structure is not a tree");
        const auto& node = bd.nodes[x];
        if (node.is_leaf()) {
            if (node.edge >= m || seen_edge[node.edge]++)
                throw Error(ErrorKind::CorruptDecomposition, "leaf edges are not a bijection");
        }
    }
    for (EdgeId e = 0; e < m; ++e)
        if (seen_edge[e] != 1) throw Error(ErrorKind::CorruptDecomposition, "edge missing from the leaves");

    int width = 0;
    std::vector<int> incidence(g.vertex_count(), 0);
    for (int x = 0; x < count; ++x) {
        if (!reached[x]) throw Error(ErrorKind::CorruptDecomposition, "unreachable node");
        std::vector<EdgeId> inside;
        std::vector<int> stack{x};
        while (!stack.empty()) {
            const int y = stack.back();
            stack.pop_back();
            if (bd.nodes[y].is_leaf()) inside.push_back(bd.nodes[y].edge);
            else {
                stack.push_back(bd.nodes[y].left);
                stack.push_back(bd.nodes[y].right);
            }
        }
        std::vector<VertexId> touched;
        for (EdgeId e : inside)
            for (VertexId v : {g.edge(e).a, g.edge(e).b})
                if (incidence[v]++ == 0) touched.push_back(v);
        std::vector<VertexId> separator;
        for (VertexId v : touched) {
            if (incidence[v] < g.degree(v)) separator.push_back(v);
            incidence[v] = 0;
        }
        std::sort(separator.begin(), separator.end());
        if (separator != bd.separators[x])
            throw Error(ErrorKind::CorruptDecomposition, "recorded separator disagrees at node " + std::to_string(x));
        width = std::max(width, static_cast<int>(separator.size()));
    }
    return width;
}

}  // namespace planar3c
