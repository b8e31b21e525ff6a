#pragma once

#include <span>
#include <vector>

#include "planar3c/connectivity.hpp"

namespace planar3c {

struct SubgraphResult {
    std::vector<EdgeId> edges;  // sorted
    long weight = 0;
};

/// 3-edge-connected (ECSS) or triconnected (VCSS), spanning all vertices.
bool is_feasible(Mode mode, const SimpleView& g);

/// Branch and bound over the positive-weight edges, keeping the current
/// superset feasible. Throws BudgetExceeded if there are more than `budget`
/// positive-weight edges and InfeasibleSlice if g itself is infeasible.
SubgraphResult solve_exact(Mode mode, const EmbeddedMultigraph& g, std::span<const int> weight, int budget = 24);

/// Reverse delete: drops positive-weight edges, heaviest and then highest
/// index first, whenever the rest stays feasible. Minimal, not minimum.
SubgraphResult solve_greedy(Mode mode, const EmbeddedMultigraph& g, std::span<const int> weight);

}  // namespace planar3c
