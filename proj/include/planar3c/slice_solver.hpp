#pragma once

#include <span>
#include <string>
#include <vector>

#include "planar3c/branch_decomposition.hpp"
#include "planar3c/characteristic_dp.hpp"
#include "planar3c/exact_solver.hpp"
#include "planar3c/slicing.hpp"

namespace planar3c {

enum class SolverChoice { DP, Exact, Auto };

const char* to_string(SolverChoice choice);
/// "dp" / "exact" / "auto"; throws InvalidArgument otherwise.
SolverChoice parse_solver(const std::string& text);

struct SolverOptions {
    SolverChoice choice = SolverChoice::Auto;
    int exact_budget = 24;
    DpLimits dp;
};

struct SliceSolution {
    std::vector<EdgeId> edges;  // slice edge ids, sorted
    long weight = 0;
    /// "dp", "exact" or "greedy".
    std::string path;
    int width = 0;
};

/// Minimum-weight 3-ECSS of a slice by the decomposition DP. Throws
/// BudgetExceeded when the DP limits are hit, InfeasibleSlice when the
/// slice is not 3-edge-connected.
SliceSolution solve_min3ecss(const Slice& slice, const BranchDecomposition& bd, const DpLimits& limits = {});
/// Same for 3-VCSS on a triconnected slice.
SliceSolution solve_min3vcss(const Slice& slice, const BranchDecomposition& bd, const DpLimits& limits = {});

/// Solver chain for one weighted graph. DP: decomposition DP only. Exact:
/// branch and bound only. Auto: DP, then exact within the budget, then the
/// greedy reverse delete.
SliceSolution solve_weighted(Mode mode, const EmbeddedMultigraph& g, std::span<const int> weight,
                             VertexId decomposition_root, const SolverOptions& options);
SliceSolution solve_slice(Mode mode, const Slice& slice, const SolverOptions& options);

}  // namespace planar3c
