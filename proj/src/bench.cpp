#include "planar3c/bench.hpp"

#include <algorithm>
#include <chrono>

#include "planar3c/generators.hpp"

namespace planar3c {

double median(std::vector<double> values) {
    if (values.empty()) return 0;
    std::sort(values.begin(), values.end());
    const std::size_t mid = values.size() / 2;
    return values.size() % 2 ? values[mid] : (values[mid - 1] + values[mid]) / 2;
}

BenchReport run_bench(const std::string& family, const std::vector<int>& sizes, Mode mode, int k, int repeat,
                      const SolveOptions& options) {
    BenchReport report;
    const EpsilonPlan plan = plan_epsilon(mode, std::nullopt, k);
    for (int n : sizes) {
        GeneratorSpec spec;
        spec.family = family;
        spec.n = n;
        spec.seed = 1;
        spec.verify = false;
        const EmbeddedMultigraph g = generate(spec);
        BenchRow row;
        row.requested = n;
        row.vertices = g.vertex_count();
        row.edges = g.edge_count();
        for (int r = 0; r < std::max(1, repeat); ++r) {
            const auto start = std::chrono::steady_clock::now();
            const Solution sol = solve(g, mode, plan, options);
            const auto stop = std::chrono::steady_clock::now();
            row.samples.push_back(std::chrono::duration<double>(stop - start).count());
            row.slices = static_cast<int>(sol.slices.size());
        }
        row.median_seconds = median(row.samples);
        report.rows.push_back(std::move(row));
    }
    for (std::size_t i = 1; i < report.rows.size(); ++i)
        report.ratios.push_back(report.rows[i].median_seconds / std::max(report.rows[i - 1].median_seconds, 1e-9));
    report.median_ratio = median(report.ratios);
    return report;
}

}  // namespace planar3c
