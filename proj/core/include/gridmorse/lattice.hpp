#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gridmorse/vertex_set.hpp"

namespace gridmorse {

struct LatticePoint {
    int x = 0;
    int y = 0;
    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

enum class Family {
    TiltedRect,        // points with y <= x <= y+M-1 and -y <= x <= -y+N-1
    TiltedRectSmooth,  // y <= x <= y+M-1 and -y+1 <= x <= -y+N
    CylindricRect,     // TiltedRect(M+1,N) with the two extreme diagonals glued; M even
    Parallelogram,     // 0 <= y <= K-1 and -y <= x <= -y+N-1
    Quadrangle,        // a*y <= x <= a*y+M-1 and -b*x <= y <= -b*x+N-1
    OrdinaryRect,      // 0 <= x <= K-1, 0 <= y <= N-1
    OrdinaryCylinder,  // OrdinaryRect(K,N+1) with columns y=0 and y=N glued
    Custom,
};

struct FamilySpec {
    Family kind = Family::Custom;
    int m = 0;  // M (or K for Parallelogram / OrdinaryRect / OrdinaryCylinder)
    int n = 0;  // N
    int a = 0;  // Quadrangle only
    int b = 0;

    static FamilySpec tilted_rect(int m, int n) { return {Family::TiltedRect, m, n, 0, 0}; }
    static FamilySpec tilted_rect_smooth(int m, int n) { return {Family::TiltedRectSmooth, m, n, 0, 0}; }
    static FamilySpec cylindric_rect(int m, int n) { return {Family::CylindricRect, m, n, 0, 0}; }
    static FamilySpec parallelogram(int k, int n) { return {Family::Parallelogram, k, n, 0, 0}; }
    static FamilySpec quadrangle(int m, int n, int a, int b) { return {Family::Quadrangle, m, n, a, b}; }
    static FamilySpec ordinary_rect(int k, int n) { return {Family::OrdinaryRect, k, n, 0, 0}; }
    static FamilySpec ordinary_cylinder(int k, int n) { return {Family::OrdinaryCylinder, k, n, 0, 0}; }

    std::string to_string() const;
};

// A finite induced subgraph of the square lattice, possibly with vertex
// identifications (cylinders). Vertex ids are canonical: sorted by
// (x+y, x) ascending. Adjacency lists are sorted, symmetric, loop-free.
struct GridGraph {
    std::vector<LatticePoint> pts;
    std::vector<std::vector<int>> adj;
    // merged point pairs: (kept representative, removed alias)
    std::vector<std::pair<LatticePoint, LatticePoint>> identifications;
    FamilySpec family;

    int size() const { return static_cast<int>(pts.size()); }
    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    bool adjacent(int u, int v) const;

    // id of the vertex at p; identified aliases resolve to their representative
    std::optional<int> id_at(LatticePoint p) const;

    VertexSet empty_set() const { return VertexSet(size()); }
    VertexSet neighborhood(int v) const;              // open neighborhood N(v)
    VertexSet neighborhood(const VertexSet& s) const;  // N(A) = union of N(a)

    // Structural equality: points, adjacency and identifications
    // (the family tag is ignored; loaded graphs are tagged Custom).
    bool operator==(const GridGraph& o) const {
        return pts == o.pts && adj == o.adj && identifications == o.identifications;
    }
};

GridGraph build_graph(const FamilySpec& spec);

// Induced subgraph on the complement of s, ids re-canonicalized.
// Returns the graph and the old-id -> new-id map (-1 for deleted).
std::pair<GridGraph, std::vector<int>> delete_vertices(const GridGraph& g, const VertexSet& s);

// Assemble a graph directly from points and edges (test plumbing; points
// need not be canonical on input, edges refer to the input order).
GridGraph make_graph(std::vector<LatticePoint> pts, const std::vector<std::pair<int, int>>& edges);

// Text document format:
//   gridgraph v1
//   v <id> <x> <y>          one line per vertex, ids dense from 0
//   e <id1> <id2>           id1 < id2
//   # merged (x1,y1)=(x2,y2)
std::string dump_graph(const GridGraph& g);
GridGraph load_graph(const std::string& text);

}  // namespace gridmorse
