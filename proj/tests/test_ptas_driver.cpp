#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "planar3c/generators.hpp"
#include "planar3c/ptas.hpp"

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

}  // namespace

TEST_CASE("epsilon to k") {
    CHECK(plan_epsilon(Mode::ECSS, 0.5).k == 72);
    CHECK(plan_epsilon(Mode::ECSS, 0.9).k == 40);
    CHECK(plan_epsilon(Mode::VCSS, 0.5).k == 24);
    CHECK(plan_epsilon(Mode::VCSS, 0.9).k == 14);
    CHECK(plan_epsilon(Mode::ECSS, 0.7).k == 52);
    CHECK(kind_of([] { plan_epsilon(Mode::ECSS, 1.0); }) == ErrorKind::InvalidArgument);
    CHECK(kind_of([] { plan_epsilon(Mode::VCSS, 0.0); }) == ErrorKind::InvalidArgument);
    CHECK(kind_of([] { plan_epsilon(Mode::ECSS, {}); }) == ErrorKind::InvalidArgument);
    CHECK(kind_of([] { plan_epsilon(Mode::ECSS, 0.5, 1); }) == ErrorKind::InvalidArgument);
    const auto forced = plan_epsilon(Mode::ECSS, 0.5, 3);
    CHECK(forced.k == 3);
    CHECK(forced.forced);
}

TEST_CASE("smallest instances") {
    const auto k4 = solve(fixtures::k4(), Mode::ECSS, plan_epsilon(Mode::ECSS, 0.9));
    CHECK(k4.size() == 6);
    const auto w5 = solve(fixtures::wheel(5), Mode::VCSS, plan_epsilon(Mode::VCSS, 0.9));
    CHECK(w5.size() == 10);
    const auto oct = solve(fixtures::octahedron(), Mode::ECSS, plan_epsilon(Mode::ECSS, 0.5));
    CHECK(oct.size() == 9);
}

TEST_CASE("infeasible inputs") {
    CHECK(kind_of([] { solve(fixtures::multi_cycle(5, 1), Mode::ECSS, plan_epsilon(Mode::ECSS, 0.5)); }) ==
          ErrorKind::InfeasibleInput);
    // Parallel copies do not help vertex connectivity.
    const auto fat = fixtures::multi_cycle(3, 3);
    CHECK(solve(fat, Mode::ECSS, plan_epsilon(Mode::ECSS, 0.5)).size() == oracle::min_size(false, 3, fixtures::edge_list(fat)));
    CHECK(oracle::min_size(false, 3, fixtures::edge_list(fat)) == 5);
    CHECK(kind_of([&] { solve(fat, Mode::VCSS, plan_epsilon(Mode::VCSS, 0.5)); }) == ErrorKind::InfeasibleInput);
}

TEST_CASE("spanner caps parallel classes") {
    BuildOptions lax;
    lax.allow_excess_parallel = true;
    const auto g = EmbeddedMultigraph::build(2, std::vector<Edge>(5, Edge{0, 1}), {}, {}, lax);
    CHECK(spanner(g, Mode::ECSS).graph.edge_count() == 3);
    CHECK(spanner(g, Mode::VCSS).graph.edge_count() == 1);
    CHECK(solve(g, Mode::ECSS, plan_epsilon(Mode::ECSS, 0.5)).edges == std::vector<EdgeId>{0, 1, 2});
}

TEST_CASE("small instances against the oracle") {
    for (const auto& family : generator_families())
        for (std::uint64_t seed = 1; seed <= 3; ++seed) {
            const int n = family == "twin_pocket" ? 12 : family == "triangulation" ? 7 : 8;
            const auto g = generate({family, n, seed, family == "twin_pocket" ? std::optional<int>(1) : std::nullopt, true});
            if (g.edge_count() > 18) continue;
            for (Mode mode : {Mode::ECSS, Mode::VCSS}) {
                CAPTURE(family);
                const long opt = oracle::min_size(mode == Mode::VCSS, g.vertex_count(), fixtures::edge_list(g));
                const auto sol = solve(g, mode, plan_epsilon(mode, 0.5));
                CHECK(sol.size() == opt);
                const auto coarse = solve(g, mode, plan_epsilon(mode, {}, 2));
                CHECK(coarse.size() <= opt + coarse.residual_size);
                const auto acc = accounting(coarse, opt);
                CHECK(acc.residual_bound);
                CHECK(acc.ratio_bound.value());
                CHECK(acc.weight_within_size);
            }
        }
}

TEST_CASE("parallel and serial slice solving agree") {
    const auto g = generate({"triangulation", 300, 4, {}, true});
    for (Mode mode : {Mode::ECSS, Mode::VCSS}) {
        const auto sp = spanner(g, mode);
        const auto levels = compute_levels(sp.graph);
        const auto slices = build_slices(mode, sp.graph, levels, plan_shift(levels, 3));
        SolveOptions serial;
        serial.parallel = false;
        SolveOptions parallel;
        parallel.jobs = 4;
        const auto a = solve_slices(mode, slices, serial);
        const auto b = solve_slices(mode, slices, parallel);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            CHECK(a[i].edges == b[i].edges);
            CHECK(a[i].path == b[i].path);
        }
        CHECK(solve(g, mode, plan_epsilon(mode, {}, 3), serial).edges ==
              solve(g, mode, plan_epsilon(mode, {}, 3), parallel).edges);
    }
}

TEST_CASE("verify reports") {
    const auto g = fixtures::prism(3);
    std::vector<EdgeId> all(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) all[e] = e;
    CHECK(verify(g, all, Mode::ECSS).feasible());
    CHECK(verify(g, all, Mode::ECSS, 9).ratio.value() == doctest::Approx(1.0));
    CHECK_FALSE(verify(g, {0, 0}, Mode::ECSS).edges_valid);
    CHECK_FALSE(verify(g, {99}, Mode::ECSS).edges_valid);
    auto fewer = all;
    fewer.pop_back();
    const auto r = verify(g, fewer, Mode::VCSS);
    CHECK(r.spanning);
    CHECK_FALSE(r.connectivity);
    CHECK_FALSE(verify(g, {0, 1, 2}, Mode::ECSS).spanning);
}

TEST_CASE("solution accounting") {
    const auto g = generate({"nested_rings", 64, 1, {}, true});
    for (int k = 2; k <= 4; ++k) {
        const auto sol = solve(g, Mode::ECSS, plan_epsilon(Mode::ECSS, {}, k));
        const auto acc = accounting(sol);
        CHECK(acc.residual_bound);
        CHECK(acc.weight_within_size);
        CHECK(sol.residual_size * k <= 2 * sol.spanner_edges);
        CHECK(verify(g, sol.edges, Mode::ECSS).feasible());
    }
}
