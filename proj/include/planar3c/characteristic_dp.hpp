#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "planar3c/branch_decomposition.hpp"
#include "planar3c/graph.hpp"

namespace planar3c {

/// Connectivity characteristic of a partial solution H on one side of a
/// separator S, in cut form (Menger dual of the path-count form).
///
/// ECSS: values[T] for every T subset of S (bit i = S[i]) is the least number
/// of H-edges leaving a vertex set whose trace on S is T, capped at 3. The
/// traces {} and S are 0 by definition; `internal` is the least cut of a
/// nonempty vertex set that avoids S (or contains all of it and misses an
/// interior vertex).
///
/// VCSS: for every labelling of S with {A, Z, B} (base-3 index, digit i =
/// label of S[i]: 0 = A, 1 = Z, 2 = B) and flags (bit 0: some interior vertex
/// is labelled A, bit 1: some is labelled B), values[4 * labelling + flags]
/// is the least number of interior Z vertices in a labelling with no H-edge
/// between A and B, capped at 3 (3 also stands for "impossible").
struct CutProfile {
    std::vector<std::uint8_t> values;
    std::uint8_t internal = 3;  // ECSS only

    friend bool operator==(const CutProfile&, const CutProfile&) = default;
};

/// Profile of the subgraph `edges` (pairs over the graph's vertex ids) on the
/// vertex set `separator` + `interior`, by exhaustive enumeration.
CutProfile brute_force_profile(Mode mode, std::span<const VertexId> separator,
                               std::span<const VertexId> interior, std::span<const Edge> edges);

/// Whether no completion on the other side of the separator can make the
/// whole graph 3-edge-connected (resp. triconnected).
bool profile_is_dead(Mode mode, const CutProfile& p, int separator_size);

/// p dominates q if it is at least as good everywhere.
bool profile_dominates(const CutProfile& p, const CutProfile& q);

struct DpLimits {
    long max_states = 2'000'000;     // per table
    long max_work = 400'000'000;     // elementary combine steps per run
    int max_union = 0;               // 0: 16 for ECSS, 8 for VCSS
};

struct DpResult {
    std::vector<EdgeId> edges;  // sorted
    long weight = 0;
    long peak_states = 0;
    long work = 0;
};

/// Minimum-weight spanning 3-edge-connected (resp. triconnected) subgraph by
/// dynamic programming over the decomposition. Returns nullopt when a limit
/// is hit. Throws InfeasibleSlice when no subgraph qualifies.
std::optional<DpResult> solve_dp(Mode mode, const EmbeddedMultigraph& g, std::span<const int> weight,
                                 const BranchDecomposition& bd, const DpLimits& limits = {});

}  // namespace planar3c
