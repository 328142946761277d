#include "gridmorse/caps.hpp"

#include <cstdlib>
#include <sstream>
#include <string>

namespace gridmorse {

Caps Caps::from_env() {
    Caps caps;
    const char* env = std::getenv("GRIDMORSE_CAPS");
    if (!env) return caps;
    std::istringstream is(env);
    std::string item;
    while (std::getline(is, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) continue;
        std::string key = item.substr(0, eq);
        long long val = std::atoll(item.c_str() + eq + 1);
        if (val <= 0) continue;
        if (key == "brute")
            caps.brute_vertices = static_cast<int>(val);
        else if (key == "frontier")
            caps.frontier_width = static_cast<int>(val);
        else if (key == "cells")
            caps.complex_cells = val;
        else if (key == "nodes")
            caps.tree_nodes = val;
        else if (key == "matrix")
            caps.matrix_dim = static_cast<int>(val);
    }
    return caps;
}

}  // namespace gridmorse
