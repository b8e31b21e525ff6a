#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "planar3c/graph.hpp"

namespace planar3c {

struct GeneratorSpec {
    /// triangulation, nested_rings, wheel, prism_stack or twin_pocket.
    std::string family;
    int n = 0;
    std::uint64_t seed = 0;
    /// Number of levels below the outer face for the nested families.
    std::optional<int> depth;
    /// Check triconnectivity of the result (quadratic; skip for big benches).
    bool verify = true;
};

const std::vector<std::string>& generator_families();

/// Deterministic for a given spec: randomness comes from std::mt19937_64
/// seeded with `seed`, reduced with plain modulo. Every family is simple,
/// planar and triconnected. The vertex count approximates n. Throws
/// InvalidSpec on unknown families or sizes that are too small.
EmbeddedMultigraph generate(const GeneratorSpec& spec);

}  // namespace planar3c
