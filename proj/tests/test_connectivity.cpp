#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "planar3c/connectivity.hpp"
#include "planar3c/generators.hpp"

using namespace planar3c;

namespace {

SimpleView random_multigraph(std::mt19937& rng, int n, int m) {
    SimpleView g;
    g.vertex_count = n;
    while (static_cast<int>(g.edges.size()) < m) {
        int a = static_cast<int>(rng() % n), b = static_cast<int>(rng() % n);
        if (a != b) g.edges.push_back({a, b});
    }
    return g;
}

int components(int n, const oracle::EdgeList& e, const std::vector<char>& dead_v) {
    std::vector<int> comp(n, -1);
    int count = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0 || (!dead_v.empty() && dead_v[s])) continue;
        std::vector<int> stack{s};
        comp[s] = count;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (auto [a, b] : e) {
                if (!dead_v.empty() && (dead_v[a] || dead_v[b])) continue;
                int w = a == v ? b : b == v ? a : -1;
                if (w >= 0 && comp[w] < 0) {
                    comp[w] = count;
                    stack.push_back(w);
                }
            }
        }
        ++count;
    }
    return count;
}

// Internally disjoint u-v paths by Menger: the direct edge (if any) plus the
// least vertex cut of the rest, found by enumeration.
int vertex_paths_oracle(int n, const oracle::EdgeList& e, int u, int v, int cap) {
    oracle::EdgeList rest;
    bool adjacent = false;
    for (auto [a, b] : e) {
        if ((a == u && b == v) || (a == v && b == u)) adjacent = true;
        else rest.push_back({a, b});
    }
    std::vector<int> others;
    for (int x = 0; x < n; ++x)
        if (x != u && x != v) others.push_back(x);
    auto separated = [&](const std::vector<char>& dead) {
        std::vector<char> seen(n, 0);
        std::vector<int> stack{u};
        seen[u] = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (auto [a, b] : rest) {
                int y = a == x ? b : b == x ? a : -1;
                if (y >= 0 && !seen[y] && !dead[y]) {
                    seen[y] = 1;
                    stack.push_back(y);
                }
            }
        }
        return !seen[v];
    };
    int cut = static_cast<int>(others.size());
    for (int size = 0; size <= static_cast<int>(others.size()) && size < cut; ++size) {
        std::vector<int> pick(size);
        std::function<bool(int, int)> rec = [&](int from, int depth) {
            if (depth == size) {
                std::vector<char> dead(n, 0);
                for (int i : pick) dead[i] = 1;
                return separated(dead);
            }
            for (int i = from; i < static_cast<int>(others.size()); ++i) {
                pick[depth] = others[i];
                if (rec(i + 1, depth + 1)) return true;
            }
            return false;
        };
        if (rec(0, 0)) {
            cut = size;
            break;
        }
    }
    return std::min(cap, cut + (adjacent ? 1 : 0));
}

}  // namespace

TEST_CASE("k-edge and k-vertex connectivity agree with cut enumeration") {
    std::mt19937 rng(7);
    int tested_3ec = 0, tested_3vc = 0;
    for (int round = 0; round < 400; ++round) {
        const int n = 4 + static_cast<int>(rng() % 5);
        const int m = n + static_cast<int>(rng() % (2 * n + 2));
        const SimpleView g = random_multigraph(rng, n, m);
        const auto e = fixtures::edge_list(g);
        for (int k = 1; k <= 3; ++k) {
            CHECK(is_k_edge_connected(g, k) == oracle::k_edge_connected(n, e, k));
            CHECK(is_k_vertex_connected(g, k) == oracle::k_vertex_connected(n, e, k));
        }
        tested_3ec += oracle::k_edge_connected(n, e, 3);
        tested_3vc += oracle::k_vertex_connected(n, e, 3);
        CHECK(is_connected(g) == oracle::connected(n, e, {}, {}));
    }
    // The sample must exercise the positive side too.
    CHECK(tested_3ec > 20);
    CHECK(tested_3vc > 20);
}

TEST_CASE("pairwise connectivity agrees with max flow and vertex cuts") {
    std::mt19937 rng(11);
    for (int round = 0; round < 150; ++round) {
        const int n = 4 + static_cast<int>(rng() % 4);
        const SimpleView g = random_multigraph(rng, n, n + static_cast<int>(rng() % (2 * n)));
        const auto e = fixtures::edge_list(g);
        const int u = static_cast<int>(rng() % n);
        int v = static_cast<int>(rng() % n);
        if (v == u) v = (u + 1) % n;
        CHECK(edge_connectivity_between(g, u, v, 4) == std::min(4, oracle::edge_disjoint_paths(n, e, u, v)));
        CHECK(vertex_connectivity_between(g, u, v, 4) == vertex_paths_oracle(n, e, u, v, 4));
    }
}

TEST_CASE("bridges, 2EC classes and articulation points") {
    std::mt19937 rng(3);
    for (int round = 0; round < 150; ++round) {
        const int n = 4 + static_cast<int>(rng() % 5);
        const SimpleView g = random_multigraph(rng, n, n - 1 + static_cast<int>(rng() % n));
        const auto e = fixtures::edge_list(g);
        const int base = components(n, e, {});

        const auto two = bridges_and_2ec(g);
        std::vector<int> bridges;
        for (int i = 0; i < static_cast<int>(e.size()); ++i) {
            auto rest = e;
            rest.erase(rest.begin() + i);
            if (components(n, rest, {}) > base) bridges.push_back(i);
        }
        CHECK(two.cut_elements == bridges);
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                CHECK((two.label[a] == two.label[b]) == (oracle::edge_disjoint_paths(n, e, a, b) >= 2));

        const auto bic = biconnected(g);
        std::vector<int> cuts;
        for (int v = 0; v < n; ++v) {
            std::vector<char> dead(n, 0);
            dead[v] = 1;
            bool isolated = true;
            for (auto [a, b] : e)
                if (a == v || b == v) isolated = false;
            // Removing v drops one component when v was isolated.
            if (components(n, e, dead) > base - (isolated ? 1 : 0)) cuts.push_back(v);
        }
        CHECK(bic.cut_elements == cuts);
    }
}

TEST_CASE("single-edge removal checks") {
    SUBCASE("3-edge-connected multigraphs") {
        for (const auto& g : {fixtures::multi_cycle(4, 2), fixtures::add_copies(fixtures::k4(), {0, 4}),
                              fixtures::octahedron(), fixtures::prism(4)}) {
            const SimpleView view = SimpleView::of(g);
            const auto e = fixtures::edge_list(g);
            REQUIRE(oracle::k_edge_connected(g.vertex_count(), e, 3));
            for (int i = 0; i < g.edge_count(); ++i) {
                auto rest = e;
                rest.erase(rest.begin() + i);
                CHECK(still_3_edge_connected_without(view, i) == oracle::k_edge_connected(g.vertex_count(), rest, 3));
            }
        }
    }
    SUBCASE("triconnected simple graphs") {
        for (std::uint64_t seed = 1; seed <= 6; ++seed) {
            const auto g = generate({"triangulation", 9, seed, {}, true});
            const SimpleView view = SimpleView::of(g);
            const auto e = fixtures::edge_list(g);
            for (int i = 0; i < g.edge_count(); ++i) {
                auto rest = e;
                rest.erase(rest.begin() + i);
                CHECK(still_triconnected_without(view, i) == oracle::k_vertex_connected(g.vertex_count(), rest, 3));
            }
        }
    }
}

TEST_CASE("subset views") {
    const auto g = fixtures::octahedron();
    const std::vector<EdgeId> square{0, 1, 2, 3};
    const SimpleView v = SimpleView::of(g, square);
    CHECK(v.vertex_count == 6);
    CHECK(v.edges.size() == 4);
    CHECK_FALSE(is_connected(v));
    CHECK(is_k_edge_connected(SimpleView::of(g), 3));
    CHECK(is_k_vertex_connected(SimpleView::of(g), 3));
    // Octahedron edge and vertex connectivity are both 4.
    CHECK(edge_connectivity_between(SimpleView::of(g), 0, 5, 5) == 4);
    CHECK(vertex_connectivity_between(SimpleView::of(g), 0, 5, 5) == 4);
}
