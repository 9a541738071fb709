#pragma once

#include <cstdint>
#include <stdexcept>

#include "tds/graph.hpp"

namespace tds {

struct NoSuchRegularGraph : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GeneratorParams {
    int n = 0;
    int r = 0;
    std::uint64_t seed = 0;
    long long mixing_steps = -1;  // -1: default 10 * n * r
};

// Deterministic r-regular seed graph: vertex i is adjacent to i +- 1..r/2
// (mod n), plus the antipode i + n/2 when r is odd (n is then even).
Graph circulant_regular(int n, int r);

// Circulant start randomized by mixing_steps successful random edge
// switchings; deterministic for a fixed seed.
Graph random_regular(const GeneratorParams& params);

}  // namespace tds
