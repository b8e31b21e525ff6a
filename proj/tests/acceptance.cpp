// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "planar3c/bench.hpp"
#include "planar3c/exact_solver.hpp"
#include "planar3c/generators.hpp"
#include "planar3c/graph_io.hpp"
#include "planar3c/ptas.hpp"
#include "planar3c/slice_solver.hpp"

using namespace planar3c;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
    void fail(const std::string& why) {
        if (pass) detail << "first failure: " << why << "; ";
        pass = false;
    }
};

int failures = 0;

void report(int id, const char* title, const std::function<void(Outcome&)>& body) {
    Outcome out;
    const auto start = Clock::now();
    try {
        body(out);
    } catch (const std::exception& e) {
        out.fail(std::string("exception: ") + e.what());
    }
    if (!out.pass) ++failures;
    std::printf("criterion %d: %s  %s (%.1fs) %s\n", id, out.pass ? "PASS" : "FAIL", title, seconds_since(start),
                out.detail.str().c_str());
    std::fflush(stdout);
}

long exact_size(Mode mode, const EmbeddedMultigraph& g) {
    const DerivedGraph sp = spanner(g, mode);
    return solve_exact(mode, sp.graph, std::vector<int>(sp.graph.edge_count(), 1), 64).weight;
}

// Instances with at most 24 edges from every family.
std::vector<std::pair<std::string, EmbeddedMultigraph>> small_corpus() {
    std::vector<std::pair<std::string, EmbeddedMultigraph>> out;
    for (std::uint64_t seed = 1; seed <= 44; ++seed) {
        const int s = static_cast<int>(seed);
        std::vector<GeneratorSpec> specs{
            {"wheel", 5 + s % 9, seed, {}, true},
            {"triangulation", 5 + s % 6, seed, {}, true},
            {"nested_rings", s % 4 == 3 ? 12 : 8 + 4 * (s % 3), seed, s % 4 == 3 ? std::optional<int>(2) : 1, true},
            {"prism_stack", s % 7 == 6 ? 9 : 6 + 2 * (s % 6), seed, s % 7 == 6 ? std::optional<int>(2) : 1, true},
            {"twin_pocket", 12, seed, 1, true},
        };
        for (const auto& spec : specs) {
            EmbeddedMultigraph g = generate(spec);
            if (g.edge_count() <= 24) out.emplace_back(spec.family, std::move(g));
        }
    }
    return out;
}

std::vector<EmbeddedMultigraph> curated(Mode mode) {
    std::vector<EmbeddedMultigraph> out{fixtures::k4(), fixtures::octahedron(), fixtures::prism(3), fixtures::prism(4)};
    for (int r = 3; r <= 7; ++r) out.push_back(fixtures::wheel(r));
    if (mode == Mode::ECSS) {
        out.push_back(fixtures::multi_cycle(2, 3));
        out.push_back(fixtures::multi_cycle(3, 2));
        out.push_back(fixtures::multi_cycle(3, 3));
        out.push_back(fixtures::multi_cycle(4, 2));
        out.push_back(fixtures::multi_cycle(4, 3));
        out.push_back(fixtures::add_copies(fixtures::k4(), {0, 3}));
        out.push_back(fixtures::add_copies(fixtures::prism(3), {0, 4}));
        out.push_back(fixtures::add_copies(fixtures::wheel(4), {0, 1, 2}));
    }
    return out;
}

}  // namespace

int main() {
    report(1, "K4 (3ecss, eps 0.9) -> 6 edges, W5 (3vcss) -> 10 edges, each under 1s", [](Outcome& out) {
        auto t0 = Clock::now();
        const auto k4 = solve(fixtures::k4(), Mode::ECSS, plan_epsilon(Mode::ECSS, 0.9));
        const double k4_time = seconds_since(t0);
        t0 = Clock::now();
        const auto wheel = generate({"wheel", 6, 1, {}, true});
        const auto w5 = solve(wheel, Mode::VCSS, plan_epsilon(Mode::VCSS, 0.9));
        const double w5_time = seconds_since(t0);
        out.detail << "K4 " << k4.size() << " edges in " << k4_time << "s, W5 " << w5.size() << " edges in "
                   << w5_time << "s";
        if (k4.size() != 6) out.fail("K4 size");
        if (w5.size() != 10) out.fail("W5 size");
        if (k4_time >= 1.0 || w5_time >= 1.0) out.fail("time");
    });

    report(2, "small instances: eps 0.5 exact, force-k 2 within both bounds, under 5 min", [](Outcome& out) {
        const auto start = Clock::now();
        const auto corpus = small_corpus();
        std::map<std::string, int> per_family;
        int runs = 0, exact_hits = 0;
        for (const auto& [family, g] : corpus) {
            ++per_family[family];
            for (Mode mode : {Mode::ECSS, Mode::VCSS}) {
                const long opt = exact_size(mode, g);
                const auto fine = solve(g, mode, plan_epsilon(mode, 0.5));
                const auto coarse = solve(g, mode, plan_epsilon(mode, {}, 2));
                ++runs;
                if (fine.size() == opt) ++exact_hits;
                else out.fail(family + " eps 0.5 size " + std::to_string(fine.size()) + " vs " + std::to_string(opt));
                if (coarse.size() > opt + 3 * coarse.residual_size) out.fail(family + " additive bound");
                if (!accounting(coarse, opt).ratio_bound.value()) out.fail(family + " ratio bound");
            }
        }
        const double elapsed = seconds_since(start);
        out.detail << corpus.size() << " instances (";
        for (auto [f, c] : per_family) out.detail << f << " " << c << ", ";
        out.detail << "), " << runs << " runs, " << exact_hits << " exact at eps 0.5";
        if (corpus.size() < 200) out.fail("fewer than 200 instances");
        if (per_family.size() != generator_families().size()) out.fail("family missing");
        if (elapsed >= 300) out.fail("time");
    });

    // Criteria 3 and 4 share the large runs.
    long residual_violations = 0, large_runs = 0;
    report(3, "feasible solutions up to 2000 vertices, both modes, force-k 2..4, under 10 min", [&](Outcome& out) {
        const auto start = Clock::now();
        for (const auto& family : generator_families())
            for (int n : {500, 2000}) {
                const auto g = generate({family, n, 11, {}, true});
                for (Mode mode : {Mode::ECSS, Mode::VCSS})
                    for (int k = 2; k <= 4; ++k) {
                        const auto sol = solve(g, mode, plan_epsilon(mode, {}, k));
                        ++large_runs;
                        if (!verify(g, sol.edges, mode).feasible()) out.fail(family + " infeasible");
                        if (!accounting(sol).residual_bound) ++residual_violations;
                    }
            }
        const double elapsed = seconds_since(start);
        out.detail << large_runs << " runs, all verified";
        if (elapsed >= 600) out.fail("time");
    });

    report(4, "k |R| <= 2 |E(spanner)|", [&](Outcome& out) {
        out.detail << large_runs << " runs checked, " << residual_violations << " violations";
        if (large_runs == 0 || residual_violations > 0) out.fail("bound violated");
    });

    // Criteria 5 and 6 share the slices.
    struct SliceCase {
        Mode mode;
        int k;
        DerivedGraph sp;
        ShiftPlan plan;
        std::vector<Slice> slices;
    };
    std::vector<SliceCase> cases;
    for (const auto& family : generator_families())
        for (std::uint64_t seed = 1; seed <= 2; ++seed)
            for (Mode mode : {Mode::ECSS, Mode::VCSS})
                for (int k = 2; k <= 4; ++k) {
                    const auto g = generate({family, 160, seed, {}, true});
                    SliceCase c{mode, k, spanner(g, mode), {}, {}};
                    const auto levels = compute_levels(c.sp.graph);
                    c.plan = plan_shift(levels, k);
                    c.slices = build_slices(mode, c.sp.graph, levels, c.plan);
                    cases.push_back(std::move(c));
                }

    report(5, "slices feasible, at most one outer node, sharing only residual strata", [&](Outcome& out) {
        long slices = 0;
        for (const SliceCase& c : cases) {
            std::vector<int> priced(c.sp.graph.edge_count(), 0), copies(c.sp.graph.edge_count(), 0);
            for (const Slice& s : c.slices) {
                ++slices;
                if (!is_feasible(c.mode, SimpleView::of(s.graph))) out.fail("slice not feasible");
                int outer = 0;
                for (const VertexKind& kind : s.kinds) outer += kind.tag == VertexKind::Tag::OuterNode;
                if (outer > 1) out.fail("two outer nodes");
                for (EdgeId x = 0; x < s.graph.edge_count(); ++x) {
                    ++copies[s.origin(x)];
                    priced[s.origin(x)] += s.weight[x];
                }
            }
            for (EdgeId e = 0; e < c.sp.graph.edge_count(); ++e) {
                if (copies[e] > 1 && !c.plan.in_residual[e]) out.fail("shared edge outside the residual strata");
                if (!c.plan.in_residual[e] && priced[e] != 1) out.fail("edge not priced exactly once");
            }
            build_slice_tree(c.slices, c.sp.graph);
        }
        out.detail << cases.size() << " slicings, " << slices << " slices";
    });

    report(6, "decomposition width <= 2(k+4) with leaves in bijection with edges", [&](Outcome& out) {
        int worst_excess = -1000, widest = 0;
        for (const SliceCase& c : cases)
            for (const Slice& s : c.slices) {
                const auto bd = decompose(s.graph, s.outer_node);
                const int w = verify_width(bd, s.graph);  // throws on a broken bijection
                widest = std::max(widest, w);
                worst_excess = std::max(worst_excess, w - 2 * (c.k + 4));
                if (w > 2 * (c.k + 4)) out.fail("width " + std::to_string(w) + " at k " + std::to_string(c.k));
            }
        out.detail << "largest width " << widest << ", tightest margin " << -worst_excess;
    });

    report(7, "DP equals exact on curated graphs (<= 14 edges, width <= 4)", [](Outcome& out) {
        std::mt19937 rng(2024);
        int compared = 0;
        for (Mode mode : {Mode::ECSS, Mode::VCSS})
            for (const auto& g : curated(mode)) {
                if (g.edge_count() > 14) continue;
                const auto bd = decompose(g);
                if (bd.width > 4) continue;
                for (int trial = 0; trial < 3; ++trial) {
                    std::vector<int> w(g.edge_count(), 1);
                    if (trial > 0)
                        for (int& x : w) x = static_cast<int>(rng() % 4);
                    const auto dp = solve_dp(mode, g, w, bd);
                    const auto exact = solve_exact(mode, g, w, 64);
                    ++compared;
                    if (!dp || dp->weight != exact.weight) out.fail("mismatch");
                }
            }
        const auto oct = solve_dp(Mode::ECSS, fixtures::octahedron(), std::vector<int>(12, 1),
                                  decompose(fixtures::octahedron()));
        if (!oct || oct->weight != 9) out.fail("octahedron");
        out.detail << compared << " weighted instances compared, octahedron " << (oct ? oct->weight : -1);
        if (compared < 50) out.fail("fewer than 50 instances");
    });

    report(8, "bench nested_rings 1000..8000 force-k 3: median doubling ratio <= 2.5", [](Outcome& out) {
        const auto r = run_bench("nested_rings", {1000, 2000, 4000, 8000}, Mode::ECSS, 3, 5);
        for (double x : r.ratios) out.detail << x << " ";
        out.detail << "median " << r.median_ratio;
        if (r.median_ratio > 2.5) out.fail("superlinear");
    });

    report(9, "byte-identical JSON across runs, job counts and the serial reference", [](Outcome& out) {
        int checked = 0;
        for (const auto& family : generator_families())
            for (Mode mode : {Mode::ECSS, Mode::VCSS}) {
                const GeneratorSpec spec{family, 300, 5, {}, true};
                const std::string graph = graph_to_json(generate(spec)).dump();
                if (graph != graph_to_json(generate(spec)).dump()) out.fail("generator");
                const auto g = graph_from_json(Json::parse(graph));
                SolveOptions serial;
                serial.parallel = false;
                const std::string ref = solution_to_json(solve(g, mode, plan_epsilon(mode, {}, 3), serial)).dump(2);
                for (int jobs : {0, 1, 2, 4}) {
                    SolveOptions parallel;
                    parallel.jobs = jobs;
                    if (solution_to_json(solve(g, mode, plan_epsilon(mode, {}, 3), parallel)).dump(2) != ref)
                        out.fail(family + " differs at jobs " + std::to_string(jobs));
                    ++checked;
                }
            }
        out.detail << checked << " solutions compared";
    });

    std::printf("%s: %d criteria failed\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
    return failures == 0 ? 0 : 1;
}
