#pragma once

#include <optional>
#include <string>
#include <vector>

#include "planar3c/layering.hpp"
#include "planar3c/slice_solver.hpp"
#include "planar3c/slicing.hpp"

namespace planar3c {

struct EpsilonPlan {
    double epsilon = 0.5;
    int k = 2;
    bool forced = false;
};

/// ECSS: k = ceil(36/eps), VCSS: k = ceil(12/eps). eps must lie in (0, 1)
/// unless force_k is given, which then overrides k.
EpsilonPlan plan_epsilon(Mode mode, std::optional<double> epsilon, std::optional<int> force_k = {});

/// Parallel edges capped at 3 (ECSS) or 1 (VCSS).
DerivedGraph spanner(const EmbeddedMultigraph& g, Mode mode);

struct SliceReport {
    int window = 0;
    int circuit = 0;
    int vertices = 0;
    int edges = 0;
    long weight = 0;
    int width = 0;
    std::string path;
};

struct Solution {
    Mode mode = Mode::ECSS;
    double epsilon = 0;
    int k = 2;
    int t = 0;
    int max_level = 0;
    std::vector<EdgeId> edges;  // edge ids of the input graph, sorted
    long residual_size = 0;
    long spanner_edges = 0;
    std::vector<SliceReport> slices;

    long size() const { return static_cast<long>(edges.size()); }
};

struct SolveOptions {
    SolverOptions solver;
    /// Threads for the per-slice stage; 0 uses the OpenMP default.
    int jobs = 0;
    /// false runs the serial reference loop.
    bool parallel = true;
};

/// Per-slice minimum-weight solutions. The parallel and the serial variant
/// return identical results.
std::vector<SliceSolution> solve_slices(Mode mode, const std::vector<Slice>& slices, const SolveOptions& options);

/// The full pipeline: spanner, levels and shift, slices, per-slice solve,
/// union with R, verification. Throws InfeasibleInput if g itself is not
/// feasible for the mode.
Solution solve(const EmbeddedMultigraph& g, Mode mode, const EpsilonPlan& plan, const SolveOptions& options = {});

struct VerifyReport {
    bool edges_valid = true;
    bool spanning = false;
    bool connectivity = false;
    long size = 0;
    std::optional<double> ratio;
    std::string message;

    bool feasible() const { return edges_valid && spanning && connectivity; }
};

VerifyReport verify(const EmbeddedMultigraph& g, const std::vector<EdgeId>& edges, Mode mode,
                    std::optional<long> optimum = {});

struct Accounting {
    long residual = 0;
    long spanner_edges = 0;
    int k = 2;
    /// k * |R| <= 2 * |E(spanner)|.
    bool residual_bound = false;
    long slice_weight_sum = 0;
    long size = 0;
    bool weight_within_size = false;
    /// |S| <= (1 + c/k) * optimum with c = 36 (ECSS) or 12 (VCSS).
    std::optional<bool> ratio_bound;
};

Accounting accounting(const Solution& solution, std::optional<long> optimum = {});

}  // namespace planar3c
