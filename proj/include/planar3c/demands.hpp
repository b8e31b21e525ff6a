#pragma once

#include <span>

#include "planar3c/connectivity.hpp"

namespace planar3c {

/// Request for b paths between x and y.
struct Demand {
    VertexId x = 0;
    VertexId y = 0;
    int b = 1;
};

/// Whether all requested paths can be routed at once. ECSS: the paths are
/// mutually edge-disjoint. VCSS: additionally no path passes through a vertex
/// used by another path or through any demand endpoint. Exhaustive search,
/// meant for graphs with a few dozen edges.
bool solve_demands(const SimpleView& g, std::span<const Demand> demands, Mode mode = Mode::ECSS);

}  // namespace planar3c
