#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "planar3c/graph.hpp"

using namespace planar3c;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an Error");
    return ErrorKind::Format;
}

void check_faces_partition_darts(const EmbeddedMultigraph& g) {
    std::vector<int> seen(2 * g.edge_count(), 0);
    for (FaceId f = 0; f < g.face_count(); ++f) {
        const auto walk = g.face(f);
        for (std::size_t i = 0; i < walk.size(); ++i) {
            ++seen[walk[i]];
            CHECK(g.face_of(walk[i]) == f);
            CHECK(g.face_next(walk[i]) == walk[(i + 1) % walk.size()]);
            CHECK(g.head(walk[i]) == g.tail(walk[(i + 1) % walk.size()]));
        }
    }
    for (int c : seen) CHECK(c == 1);
}

}  // namespace

TEST_CASE("K4 embedding satisfies Euler's formula") {
    const auto g = fixtures::k4();
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 6);
    CHECK(g.face_count() == 4);
    CHECK(g.component_count() == 1);
    check_faces_partition_darts(g);
    for (VertexId v = 0; v < 4; ++v) CHECK(g.degree(v) == 3);
}

TEST_CASE("rotation_next cycles through the darts at a vertex") {
    const auto g = fixtures::octahedron();
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const auto rot = g.rotation(v);
        for (std::size_t i = 0; i < rot.size(); ++i) {
            CHECK(g.tail(rot[i]) == v);
            CHECK(g.rotation_next(rot[i]) == rot[(i + 1) % rot.size()]);
        }
    }
    CHECK(g.face_count() == 8);
    check_faces_partition_darts(g);
}

TEST_CASE("non-planar inputs are rejected") {
    std::vector<Edge> k5;
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b) k5.push_back({a, b});
    CHECK(kind_of([&] { EmbeddedMultigraph::build(5, k5); }) == ErrorKind::NonPlanar);
    std::vector<Edge> k33;
    for (int a = 0; a < 3; ++a)
        for (int b = 3; b < 6; ++b) k33.push_back({a, b});
    CHECK(kind_of([&] { EmbeddedMultigraph::build(6, k33); }) == ErrorKind::NonPlanar);
}

TEST_CASE("malformed edge sets") {
    CHECK(kind_of([] { EmbeddedMultigraph::build(3, {{0, 1}, {1, 1}}); }) == ErrorKind::SelfLoop);
    std::vector<Edge> four(4, Edge{0, 1});
    CHECK(kind_of([&] { EmbeddedMultigraph::build(2, four); }) == ErrorKind::TooManyParallel);
    BuildOptions lax;
    lax.allow_excess_parallel = true;
    CHECK(EmbeddedMultigraph::build(2, four, {}, {}, lax).edge_count() == 4);
}

TEST_CASE("explicit rotations are validated") {
    const auto g = fixtures::k4();
    auto rot = g.rotation_edges();
    const auto same = EmbeddedMultigraph::build(4, {g.edges().begin(), g.edges().end()}, rot, g.outer_face());
    CHECK(same.face_count() == 4);
    CHECK(same.rotation_edges() == rot);

    auto missing = rot;
    missing[0].pop_back();
    CHECK(kind_of([&] { EmbeddedMultigraph::build(4, {g.edges().begin(), g.edges().end()}, missing); }) ==
          ErrorKind::InvalidRotation);

    // Reversing one vertex of K4 yields a toroidal rotation system.
    auto twisted = rot;
    std::reverse(twisted[0].begin(), twisted[0].end());
    CHECK(kind_of([&] { EmbeddedMultigraph::build(4, {g.edges().begin(), g.edges().end()}, twisted); }) ==
          ErrorKind::InvalidRotation);
}

TEST_CASE("parallel edges embed as digons") {
    const auto g = fixtures::multi_cycle(3, 2);
    CHECK(g.edge_count() == 6);
    // V - E + F = 2 with V = 3, E = 6.
    CHECK(g.face_count() == 5);
    check_faces_partition_darts(g);
}

TEST_CASE("outer face selection and boundary") {
    const auto g = fixtures::wheel(5);
    const auto boundary = outer_boundary(g);
    CHECK(boundary == std::vector<EdgeId>{0, 1, 2, 3, 4});
    for (FaceId f = 0; f < g.face_count(); ++f) CHECK(g.with_outer_face(f).outer_face() == f);
}

TEST_CASE("cap_parallel keeps the lowest ids") {
    const auto g = fixtures::multi_cycle(3, 3);
    const auto one = cap_parallel(g, 1);
    CHECK(one.graph.edge_count() == 3);
    CHECK(one.edge_origin == std::vector<EdgeId>{0, 1, 2});
    const auto two = cap_parallel(g, 2);
    CHECK(two.graph.edge_count() == 6);
    CHECK(two.edge_origin == std::vector<EdgeId>{0, 1, 2, 3, 4, 5});
    CHECK(cap_parallel(g, 3).graph.edge_count() == 9);
}

TEST_CASE("contract_components on a wheel") {
    const auto g = fixtures::wheel(5);
    SUBCASE("hub contracted to an inner node") {
        const std::vector<VertexId> keep{0, 1, 2, 3, 4};
        const auto c = contract_components(g, keep);
        CHECK(c.component_count == 1);
        CHECK(c.graph.vertex_count() == 6);
        CHECK(c.graph.edge_count() == 10);
        CHECK(c.kinds[5] == VertexKind{VertexKind::Tag::InnerNode, 0});
        for (int v = 0; v < 5; ++v) CHECK(c.kinds[v] == VertexKind{VertexKind::Tag::Original, v});
        CHECK(c.graph.face_count() == 6);
    }
    SUBCASE("rim contracted to one node") {
        const std::vector<VertexId> keep{5};
        const auto c = contract_components(g, keep);
        CHECK(c.graph.vertex_count() == 2);
        // The five spokes become parallel and are capped at three.
        CHECK(c.graph.edge_count() == 3);
        CHECK(c.vertex_map[5] == 0);
        for (int v = 0; v < 5; ++v) CHECK(c.vertex_map[v] == 1);
        std::vector<EdgeId> origins = c.edge_origin;
        std::sort(origins.begin(), origins.end());
        CHECK(origins == std::vector<EdgeId>{5, 6, 7});
    }
}

TEST_CASE("edge_subgraph keeps vertices and rotation order") {
    const auto g = fixtures::octahedron();
    const std::vector<EdgeId> pick{0, 1, 2, 3};
    const auto sub = edge_subgraph(g, pick);
    CHECK(sub.graph.vertex_count() == 6);
    CHECK(sub.graph.edge_count() == 4);
    CHECK(sub.edge_origin == pick);
    CHECK(sub.graph.degree(0) == 0);
}

TEST_CASE("mode names") {
    CHECK(std::string(to_string(Mode::ECSS)) == "3ecss");
    CHECK(std::string(to_string(Mode::VCSS)) == "3vcss");
    CHECK(parse_mode("3vcss") == Mode::VCSS);
    CHECK(kind_of([] { parse_mode("4ecss"); }) == ErrorKind::InvalidArgument);
}
