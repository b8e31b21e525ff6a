#include "planar3c/slice_solver.hpp"

namespace planar3c {

const char* to_string(SolverChoice choice) {
    switch (choice) {
    case SolverChoice::DP: return "dp";
    case SolverChoice::Exact: return "exact";
    case SolverChoice::Auto: return "auto";
    }
    return "auto";
}

SolverChoice parse_solver(const std::string& text) {
    if (text == "dp") return SolverChoice::DP;
    if (text == "exact") return SolverChoice::Exact;
    if (text == "auto") return SolverChoice::Auto;
    throw Error(ErrorKind::InvalidArgument, "unknown solver '" + text + "'");
}

namespace {

SliceSolution run_dp(Mode mode, const EmbeddedMultigraph& g, std::span<const int> weight,
                     const BranchDecomposition& bd, const DpLimits& limits) {
    auto r = solve_dp(mode, g, weight, bd, limits);
    if (!r) throw Error(ErrorKind::BudgetExceeded, "dynamic program exceeded its state or work limit");
    return {std::move(r->edges), r->weight, "dp", bd.width};
}

}  // namespace

SliceSolution solve_min3ecss(const Slice& slice, const BranchDecomposition& bd, const DpLimits& limits) {
    return run_dp(Mode::ECSS, slice.graph, slice.weight, bd, limits);
}

SliceSolution solve_min3vcss(const Slice& slice, const BranchDecomposition& bd, const DpLimits& limits) {
    return run_dp(Mode::VCSS, slice.graph, slice.weight, bd, limits);
}

SliceSolution solve_weighted(Mode mode, const EmbeddedMultigraph& g, std::span<const int> weight,
                             VertexId decomposition_root, const SolverOptions& options) {
    if (options.choice == SolverChoice::Exact) {
        SubgraphResult r = solve_exact(mode, g, weight, options.exact_budget);
        return {std::move(r.edges), r.weight, "exact", 0};
    }
    const BranchDecomposition bd = decompose(g, decomposition_root);
    if (options.choice == SolverChoice::DP) return run_dp(mode, g, weight, bd, options.dp);

    if (auto r = solve_dp(mode, g, weight, bd, options.dp)) return {std::move(r->edges), r->weight, "dp", bd.width};
    int positive = 0;
    for (int w : weight) positive += w > 0;
    if (positive <= options.exact_budget) {
        SubgraphResult r = solve_exact(mode, g, weight, options.exact_budget);
        return {std::move(r.edges), r.weight, "exact", bd.width};
    }
    SubgraphResult r = solve_greedy(mode, g, weight);
    return {std::move(r.edges), r.weight, "greedy", bd.width};
}

SliceSolution solve_slice(Mode mode, const Slice& slice, const SolverOptions& options) {
    return solve_weighted(mode, slice.graph, slice.weight, slice.outer_node, options);
}

}  // namespace planar3c
