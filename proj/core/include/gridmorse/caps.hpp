#pragma once

#include <cstdint>

namespace gridmorse {

// Resource limits. Defaults keep the full verification suites under minutes.
// The GRIDMORSE_CAPS environment variable overrides defaults with a comma
// list, e.g. "brute=26,frontier=24,cells=500000,nodes=1000000".
struct Caps {
    int brute_vertices = 26;       // exhaustive enumeration refuses larger graphs
    int frontier_width = 24;       // frontier DP refuses wider sweeps
    std::int64_t complex_cells = 500000;   // acyclicity checker cap on |Sigma(G)|
    std::int64_t tree_nodes = 1000000;     // matching tree growth guard
    int matrix_dim = 4096;         // transfer matrix construction guard

    // Defaults merged with any GRIDMORSE_CAPS overrides.
    static Caps from_env();
};

}  // namespace gridmorse
