#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gridmorse/bigint.hpp"
#include "gridmorse/caps.hpp"
#include "gridmorse/lattice.hpp"

namespace gridmorse {

// Pivot strategies for the matching-tree construction.
//
// DiagLex: the tentative pivot minimizes (x+y, x) over the unprescribed
// vertices V', except that a free vertex (one with no V'-neighbor) on the
// next diagonal x+y = pivot+1 takes precedence (least x wins). Splits are
// on the East neighbor (x+1, y), resolved through identifications.
//
// Block(K): for Parallelogram(K,.) graphs. Vertices are partitioned into
// triangles (K = 2 mod 3) or trapezoids (K = 0 mod 3); pivots exhaust
// blocks in order, odd blocks scanned by diagonals of slope -1 as in
// DiagLex, even blocks by diagonals of slope 1 from bottom left to top
// right, with the free-vertex override applied to the next diagonal of
// the active block. K = 1 mod 3 falls back to DiagLex.
//
// SlopeLex(a,b): the tentative pivot minimizes (b*x + y, x), i.e. lies as
// high as possible on the leftmost line of slope -b; exercised for (2,2).
struct PivotStrategy {
    enum class Kind { DiagLex, Block, SlopeLex };
    Kind kind = Kind::DiagLex;
    int block_k = 0;
    int a = 0, b = 0;

    std::string name() const;

    // Tentative pivot in V' = V \ (A u B), or -1 if V' is empty.
    int tentative_pivot(const GridGraph& g, const VertexSet& a_set, const VertexSet& b_set) const;
    // Split vertex among the V'-neighbors of pivot (>= 2 of them).
    int split_vertex(const GridGraph& g, const VertexSet& a_set, const VertexSet& b_set, int pivot) const;

    // Block(K) demands Parallelogram(K,.) input.
    void check_compatible(const GridGraph& g) const;
};

PivotStrategy make_diag_lex();
PivotStrategy make_block(int k);
PivotStrategy make_slope_lex(int a, int b);

enum class NodeKind { MatchingSite, SplittingSite, LeafEmpty, LeafSingleton };

struct TreeNode {
    VertexSet a, b;
    NodeKind kind;
    int vertex = -1;      // pivot (matching site) or splitting vertex
    int child[2] = {-1, -1};  // left = "v excluded", right = "v included"
    int parent = -1;
};

struct MatchingTree {
    std::vector<TreeNode> nodes;  // nodes[0] is the root
    int matching_sites = 0;
    int splitting_sites = 0;
    int empty_leaves = 0;
    int singleton_leaves = 0;

    const TreeNode& root() const { return nodes[0]; }
    std::string dump() const;  // indented debug text, one node per line
};

// Grows the matching tree of Sigma(g) under the strategy. Every leaf is
// LeafEmpty or LeafSingleton; aborts via CapExceeded when the node guard
// is hit.
MatchingTree grow_tree(const GridGraph& g, const PivotStrategy& strat, const Caps& caps = {});

struct ClassifyResult {
    bool matched = false;
    VertexSet partner;  // differs from the input by exactly the site pivot
    int site = -1;      // node index: matching site, or critical leaf
};

// Descends the tree: at a matching site (A,B,p), I is matched with
// I ^ {p} iff I misses N(p); at a splitting site on v the branch follows
// membership of v; reaching a leaf means I is critical.
ClassifyResult classify(const GridGraph& g, const MatchingTree& tree, const VertexSet& is);

// A-sets of all LeafSingleton leaves, in depth-first tree order.
std::vector<VertexSet> critical_cells(const MatchingTree& tree);

// Sum of (-1)^|cell| over critical cells; equals the alternating number
// whenever the matching is Morse.
BigInt morse_euler_sum(const MatchingTree& tree);

struct AcyclicityCertificate {
    bool ok = false;
    std::string reason;       // on failure
    std::int64_t cells = 0;
    std::int64_t matched_pairs = 0;
    std::int64_t critical = 0;
};

// Core checker: given the full complex of g and an explicit matching
// (lower cell, upper cell = lower u {x}), verifies the pairs are disjoint
// covering edges and that reversing exactly those edges in the Hasse
// diagram (edges pointing down) leaves an acyclic digraph.
AcyclicityCertificate check_acyclic_matching(const GridGraph& g,
                                             const std::vector<std::pair<VertexSet, VertexSet>>& pairs,
                                             const Caps& caps = {});

// Enumerates Sigma(g) (cap: caps.complex_cells), classifies every cell,
// re-checks that the pairing is a genuine involution off the critical
// cells and that the critical cells are exactly the singleton-leaf A-sets,
// then runs the cycle check above.
AcyclicityCertificate verify_acyclic(const GridGraph& g, const MatchingTree& tree, const Caps& caps = {});

// All independent sets of g, in enumeration order. Guarded by the cap.
std::vector<VertexSet> all_independent_sets(const GridGraph& g, std::int64_t cap);

}  // namespace gridmorse
