#pragma once

#include <string>
#include <vector>

#include "gridmorse/bigint.hpp"
#include "gridmorse/caps.hpp"
#include "gridmorse/lattice.hpp"

namespace gridmorse {

// Z_G(u) = sum over independent sets I of u^|I|, stored by exact
// coefficients: coeffs[k] = number of independent sets of size k.
struct PartitionPolynomial {
    std::vector<BigInt> coeffs;

    BigInt eval(long long u) const;
    BigInt at_minus_one() const { return eval(-1); }
    BigInt total() const { return eval(1); }  // |Sigma(G)|
    int max_size() const { return static_cast<int>(coeffs.size()) - 1; }

    std::string to_string() const;  // "poly c0 c1 ..."
    bool operator==(const PartitionPolynomial&) const = default;
};

bool is_independent(const GridGraph& g, const VertexSet& s);

// Exhaustive enumeration with adjacency pruning. Refuses graphs larger
// than caps.brute_vertices (use the frontier method instead).
PartitionPolynomial partition_function_brute(const GridGraph& g, const Caps& caps = {});

// Frontier dynamic programming along a vertex order (default: the
// canonical (x+y, x) order, whose frontier is one diagonal).
PartitionPolynomial partition_function_frontier(const GridGraph& g,
                                                const std::vector<int>& order = {},
                                                const Caps& caps = {});

// Z_G(-1), the alternating number of independent sets; equals minus the
// reduced Euler characteristic of the independence complex.
BigInt alternating_number(const GridGraph& g, const Caps& caps = {});

struct FoldStep {
    LatticePoint kept;     // v with N(v) subseteq N(w)
    LatticePoint removed;  // w
};

struct FoldResult {
    GridGraph graph;
    std::vector<FoldStep> steps;
};

// Repeatedly finds v != w with N(v) subseteq N(w) and deletes w, until no
// such pair exists. Pairs are scanned in ascending (v, w) id order and the
// first valid pair is taken. The alternating number is invariant across
// every step.
FoldResult fold_reduce(const GridGraph& g);

}  // namespace gridmorse
