// Serial reference vs OpenMP per-slice solving on pre-built slices.

#include <map>

#include <benchmark/benchmark.h>

#include "planar3c/generators.hpp"
#include "planar3c/ptas.hpp"

using namespace planar3c;

namespace {

struct Prepared {
    Mode mode;
    std::vector<Slice> slices;
};

const Prepared& prepared(int n, Mode mode) {
    static std::map<std::pair<int, int>, Prepared> cache;
    auto key = std::make_pair(n, static_cast<int>(mode));
    auto it = cache.find(key);
    if (it == cache.end()) {
        const auto g = generate({"triangulation", n, 1, {}, false});
        const auto sp = spanner(g, mode);
        const auto levels = compute_levels(sp.graph);
        Prepared p{mode, build_slices(mode, sp.graph, levels, plan_shift(levels, 3))};
        it = cache.emplace(key, std::move(p)).first;
    }
    return it->second;
}

void run(benchmark::State& state, Mode mode, bool parallel) {
    const Prepared& p = prepared(static_cast<int>(state.range(0)), mode);
    SolveOptions options;
    options.parallel = parallel;
    options.jobs = parallel ? static_cast<int>(state.range(1)) : 1;
    for (auto _ : state) benchmark::DoNotOptimize(solve_slices(mode, p.slices, options));
    state.counters["slices"] = static_cast<double>(p.slices.size());
}

void BM_ecss_serial(benchmark::State& s) { run(s, Mode::ECSS, false); }
void BM_ecss_parallel(benchmark::State& s) { run(s, Mode::ECSS, true); }
void BM_vcss_serial(benchmark::State& s) { run(s, Mode::VCSS, false); }
void BM_vcss_parallel(benchmark::State& s) { run(s, Mode::VCSS, true); }

}  // namespace

BENCHMARK(BM_ecss_serial)->Args({1000, 1})->Args({4000, 1})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ecss_parallel)->ArgsProduct({{1000, 4000}, {1, 2, 4}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_vcss_serial)->Args({1000, 1})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_vcss_parallel)->ArgsProduct({{1000}, {1, 2, 4}})->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
