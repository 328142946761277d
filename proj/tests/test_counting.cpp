#include <doctest.h>

#include <cstdlib>
#include <random>

#include "gridmorse/counting.hpp"
#include "gridmorse/errors.hpp"

using namespace gridmorse;

namespace {

GridGraph path_graph(int n) {
    std::vector<LatticePoint> pts;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        pts.push_back({i, 0});
        if (i) edges.push_back({i - 1, i});
    }
    return make_graph(pts, edges);
}

}  // namespace

TEST_CASE("is_independent") {
    GridGraph g = build_graph(FamilySpec::ordinary_rect(2, 2));  // 4-cycle
    CHECK(is_independent(g, g.empty_set()));
    // the two diagonal vertices are non-adjacent
    int a = *g.id_at({0, 0}), b = *g.id_at({1, 1});
    VertexSet diag(g.size(), {a, b});
    CHECK(is_independent(g, diag));
    VertexSet edge(g.size(), {*g.id_at({0, 0}), *g.id_at({0, 1})});
    CHECK_FALSE(is_independent(g, edge));
}

TEST_CASE("brute-force partition function") {
    GridGraph one = build_graph(FamilySpec::tilted_rect(1, 1));
    CHECK(partition_function_brute(one).coeffs == std::vector<BigInt>{1, 1});

    GridGraph square = build_graph(FamilySpec::ordinary_rect(2, 2));
    CHECK(partition_function_brute(square).coeffs == std::vector<BigInt>{1, 4, 2});

    CHECK(partition_function_brute(path_graph(3)).coeffs == std::vector<BigInt>{1, 3, 1});

    Caps tight;
    tight.brute_vertices = 4;
    CHECK_THROWS_AS(partition_function_brute(path_graph(5), tight), CapExceeded);
}

TEST_CASE("frontier equals brute force on every family instance up to 24 vertices") {
    std::vector<FamilySpec> specs;
    for (int m = 1; m <= 8; ++m)
        for (int n = 1; n <= 8; ++n) {
            specs.push_back(FamilySpec::tilted_rect(m, n));
            specs.push_back(FamilySpec::tilted_rect_smooth(m, n));
            specs.push_back(FamilySpec::parallelogram(m, n));
            specs.push_back(FamilySpec::ordinary_rect(m, n));
            specs.push_back(FamilySpec::quadrangle(m, n, 2, 2));
            if (m % 2 == 0) specs.push_back(FamilySpec::cylindric_rect(m, n));
            if (n >= 2) specs.push_back(FamilySpec::ordinary_cylinder(m, n));
        }
    int checked = 0;
    for (const auto& f : specs) {
        GridGraph g = build_graph(f);
        if (g.size() > 24) continue;
        CHECK(partition_function_frontier(g) == partition_function_brute(g));
        ++checked;
    }
    CHECK(checked > 100);
}

TEST_CASE("frontier with an explicit order and width cap") {
    GridGraph g = build_graph(FamilySpec::ordinary_rect(3, 4));
    std::vector<int> order;
    for (int i = g.size() - 1; i >= 0; --i) order.push_back(i);
    CHECK(partition_function_frontier(g, order) == partition_function_brute(g));

    Caps tight;
    tight.frontier_width = 1;
    CHECK_THROWS_AS(partition_function_frontier(g, {}, tight), CapExceeded);
    CHECK_THROWS_AS(partition_function_frontier(g, {0, 0, 1}), InvalidSpec);
}

TEST_CASE("c0 = 1 and c1 = |V|") {
    for (const auto& f : {FamilySpec::tilted_rect(5, 7), FamilySpec::cylindric_rect(4, 6),
                          FamilySpec::quadrangle(6, 8, 2, 2)}) {
        GridGraph g = build_graph(f);
        auto p = partition_function_frontier(g);
        CHECK(p.coeffs[0] == 1);
        CHECK(p.coeffs[1] == g.size());
    }
}

TEST_CASE("alternating numbers from the theorems' small cases") {
    CHECK(alternating_number(build_graph(FamilySpec::ordinary_rect(2, 2))) == -1);
    // the Swiss cross
    CHECK(alternating_number(build_graph(FamilySpec::tilted_rect_smooth(5, 5))) == 1);
    for (int n = 1; n <= 9; ++n)
        CHECK(alternating_number(build_graph(FamilySpec::tilted_rect(4, n))) == 0);
    // tilted_rect(8,6): M=8, N=6, m=3, n=2, so Z = (-1)^6 = 1
    CHECK(partition_function_frontier(build_graph(FamilySpec::tilted_rect(8, 6))).at_minus_one() ==
          1);
}

TEST_CASE("disjoint unions multiply partition polynomials") {
    GridGraph p3 = path_graph(3);
    // two far-apart copies of a path, one document
    std::vector<LatticePoint> pts;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 3; ++i) pts.push_back({i, 0});
    for (int i = 0; i < 3; ++i) pts.push_back({i, 10});
    edges = {{0, 1}, {1, 2}, {3, 4}, {4, 5}};
    GridGraph two = make_graph(pts, edges);
    auto p = partition_function_brute(p3);
    auto q = partition_function_brute(two);
    std::vector<BigInt> prod(p.coeffs.size() * 2 - 1, 0);
    for (std::size_t i = 0; i < p.coeffs.size(); ++i)
        for (std::size_t j = 0; j < p.coeffs.size(); ++j) prod[i + j] += p.coeffs[i] * p.coeffs[j];
    CHECK(q.coeffs == prod);
}

TEST_CASE("fold reduce examples") {
    // path of 3 reduces to a single edge
    auto r = fold_reduce(path_graph(3));
    CHECK(r.graph.size() == 2);
    CHECK(r.graph.adjacent(0, 1));
    CHECK(r.steps.size() == 1);
    CHECK(alternating_number(r.graph) == -1);

    // graph with an isolated vertex reduces to a single vertex
    GridGraph iso = make_graph({{0, 0}, {2, 0}, {3, 0}}, {{1, 2}});
    auto r2 = fold_reduce(iso);
    CHECK(r2.graph.size() == 1);
    CHECK(alternating_number(r2.graph) == 0);

    // the 5-vertex star reduces to one edge
    auto r3 = fold_reduce(build_graph(FamilySpec::tilted_rect(3, 3)));
    CHECK(r3.graph.size() == 2);
    CHECK(alternating_number(r3.graph) == -1);
}

TEST_CASE("fold reduce preserves the alternating number at every step") {
    std::mt19937 rng(20240901);
    std::vector<GridGraph> inputs;
    for (int m = 1; m <= 7; ++m)
        for (int n = 1; n <= 7; ++n) {
            for (const auto& f : {FamilySpec::tilted_rect(m, n), FamilySpec::parallelogram(m, n)}) {
                GridGraph g = build_graph(f);
                if (g.size() <= 24) inputs.push_back(g);
            }
        }
    // seeded random induced subgraphs
    for (int t = 0; t < 50; ++t) {
        GridGraph g = build_graph(FamilySpec::tilted_rect(4 + t % 5, 5 + t % 4));
        VertexSet del(g.size());
        for (int v = 0; v < g.size(); ++v)
            if (rng() % 3 == 0) del.set(v);
        GridGraph h = delete_vertices(g, del).first;
        if (h.size() <= 24) inputs.push_back(h);
    }
    for (const auto& g : inputs) {
        BigInt z = alternating_number(g);
        GridGraph cur = g;
        auto folded = fold_reduce(g);
        // replay the fold one step at a time, checking invariance
        for (const auto& step : folded.steps) {
            auto id = cur.id_at(step.removed);
            REQUIRE(id.has_value());
            VertexSet s(cur.size());
            s.set(*id);
            cur = delete_vertices(cur, s).first;
            CHECK(alternating_number(cur) == z);
        }
        CHECK(cur == folded.graph);
    }
}

TEST_CASE("tilted rectangles fold to max degree <= 1") {
    for (int m = 1; m <= 9; ++m)
        for (int n = 1; n <= 9; ++n) {
            GridGraph g = build_graph(FamilySpec::tilted_rect(m, n));
            if (g.size() > 24) continue;
            GridGraph r = fold_reduce(g).graph;
            for (int v = 0; v < r.size(); ++v) CHECK(r.degree(v) <= 1);
        }
}

TEST_CASE("caps parse the GRIDMORSE_CAPS environment variable") {
    setenv("GRIDMORSE_CAPS", "brute=10,frontier=5,cells=100,nodes=50,matrix=64", 1);
    Caps c = Caps::from_env();
    CHECK(c.brute_vertices == 10);
    CHECK(c.frontier_width == 5);
    CHECK(c.complex_cells == 100);
    CHECK(c.tree_nodes == 50);
    CHECK(c.matrix_dim == 64);
    unsetenv("GRIDMORSE_CAPS");
    Caps d = Caps::from_env();
    CHECK(d.brute_vertices == 26);
    CHECK(d.frontier_width == 24);
}
