#include <doctest.h>

#include <random>

#include "gridmorse/counting.hpp"
#include "gridmorse/errors.hpp"
#include "gridmorse/morse.hpp"

using namespace gridmorse;

namespace {

// every non-empty node satisfies A n B = {} and N(A) subseteq B; splitting
// vertices are V'-neighbors of the tentative pivot
void check_tree_invariants(const GridGraph& g, const MatchingTree& tree,
                           const PivotStrategy& strat) {
    for (const TreeNode& n : tree.nodes) {
        if (n.kind == NodeKind::LeafEmpty) continue;
        CHECK_FALSE(n.a.intersects(n.b));
        CHECK(g.neighborhood(n.a).is_subset_of(n.b));
        if (n.kind == NodeKind::MatchingSite) {
            VertexSet vp = (n.a | n.b).complement();
            CHECK(vp.test(n.vertex));
            // neighbors of the pivot lie in B u V'
            for (int u : g.adj[n.vertex]) CHECK((n.b.test(u) || vp.test(u)));
        }
        if (n.kind == NodeKind::SplittingSite) {
            VertexSet vp = (n.a | n.b).complement();
            int p = strat.tentative_pivot(g, n.a, n.b);
            CHECK(vp.test(n.vertex));
            CHECK(g.adjacent(p, n.vertex));
        }
    }
}

}  // namespace

TEST_CASE("diag-lex on the 5-vertex star") {
    GridGraph g = build_graph(FamilySpec::tilted_rect(3, 3));
    PivotStrategy s = make_diag_lex();

    // the root pivot is (0,0): it minimizes (x+y, x) and no free vertex
    // sits on diagonal 1
    int p = s.tentative_pivot(g, g.empty_set(), g.empty_set());
    CHECK(g.pts[p] == LatticePoint{0, 0});

    MatchingTree t = grow_tree(g, s);
    CHECK(t.matching_sites == 1);
    CHECK(t.splitting_sites == 0);
    CHECK(t.singleton_leaves == 1);
    auto cells = critical_cells(t);
    REQUIRE(cells.size() == 1);
    CHECK(cells[0].count() == 1);
    CHECK(cells[0].test(*g.id_at({1, 0})));  // the center vertex
    CHECK(morse_euler_sum(t) == -1);
    check_tree_invariants(g, t, s);
}

TEST_CASE("diag-lex splits on the East neighbor") {
    GridGraph g = build_graph(FamilySpec::tilted_rect(8, 6));
    MatchingTree t = grow_tree(g, make_diag_lex());
    // find the first splitting site on the leftmost branch
    int idx = 0;
    while (t.nodes[idx].kind == NodeKind::MatchingSite) idx = t.nodes[idx].child[0];
    REQUIRE(t.nodes[idx].kind == NodeKind::SplittingSite);
    const TreeNode& site = t.nodes[idx];
    int p = make_diag_lex().tentative_pivot(g, site.a, site.b);
    CHECK(g.pts[site.vertex] == LatticePoint{g.pts[p].x + 1, g.pts[p].y});
    check_tree_invariants(g, t, make_diag_lex());

    // at open-rectangle splitting sites the pivot has exactly its North
    // and East neighbors unprescribed
    for (const TreeNode& n : t.nodes) {
        if (n.kind != NodeKind::SplittingSite) continue;
        VertexSet vp = (n.a | n.b).complement();
        int piv = make_diag_lex().tentative_pivot(g, n.a, n.b);
        std::vector<LatticePoint> live;
        for (int u : g.adj[piv])
            if (vp.test(u)) live.push_back(g.pts[u]);
        REQUIRE(live.size() == 2);
        CHECK(((live[0] == LatticePoint{g.pts[piv].x, g.pts[piv].y + 1} &&
                live[1] == LatticePoint{g.pts[piv].x + 1, g.pts[piv].y}) ||
               (live[1] == LatticePoint{g.pts[piv].x, g.pts[piv].y + 1} &&
                live[0] == LatticePoint{g.pts[piv].x + 1, g.pts[piv].y})));
    }
}

TEST_CASE("M=4 rectangles are perfectly matched") {
    GridGraph g = build_graph(FamilySpec::tilted_rect(4, 5));
    MatchingTree t = grow_tree(g, make_diag_lex());
    CHECK(t.singleton_leaves == 0);
    CHECK(critical_cells(t).empty());
    CHECK(morse_euler_sum(t) == 0);
}

TEST_CASE("tilted_rect(8,6) has one critical cell of size 6") {
    MatchingTree t = grow_tree(build_graph(FamilySpec::tilted_rect(8, 6)), make_diag_lex());
    auto cells = critical_cells(t);
    REQUIRE(cells.size() == 1);
    CHECK(cells[0].count() == 6);
    CHECK(morse_euler_sum(t) == 1);
}

TEST_CASE("cylindric rectangle (6,5): 2^n singleton leaves of cardinality mn") {
    GridGraph g = build_graph(FamilySpec::cylindric_rect(6, 5));
    MatchingTree t = grow_tree(g, make_diag_lex());
    auto cells = critical_cells(t);
    REQUIRE(cells.size() == 4);
    for (const auto& c : cells) CHECK(c.count() == 4);
    CHECK(morse_euler_sum(t) == 4);
    CHECK(morse_euler_sum(t) == alternating_number(g));
    check_tree_invariants(g, t, make_diag_lex());
}

TEST_CASE("block strategy on parallelograms") {
    CHECK_THROWS_AS(grow_tree(build_graph(FamilySpec::tilted_rect(5, 5)), make_block(5)),
                    InvalidSpec);
    GridGraph g = build_graph(FamilySpec::parallelogram(5, 10));
    MatchingTree t = grow_tree(g, make_block(5));
    auto cells = critical_cells(t);
    REQUIRE(cells.size() == 1);
    CHECK(cells[0].count() == 12);
    CHECK(morse_euler_sum(t) == 1);
    check_tree_invariants(g, t, make_block(5));
}

TEST_CASE("classify") {
    GridGraph g = build_graph(FamilySpec::tilted_rect(3, 3));
    MatchingTree t = grow_tree(g, make_diag_lex());
    const int center = *g.id_at({1, 0});

    // the empty set is matched at the first matching site with {p0}
    ClassifyResult r = classify(g, t, g.empty_set());
    CHECK(r.matched);
    CHECK(r.site == 0);
    CHECK(r.partner == VertexSet(g.size(), {*g.id_at({0, 0})}));

    // the center alone is the critical cell
    ClassifyResult rc = classify(g, t, VertexSet(g.size(), {center}));
    CHECK_FALSE(rc.matched);

    // {(0,0),(1,1)} is matched down to {(1,1)} via pivot (0,0)
    VertexSet two(g.size(), {*g.id_at({0, 0}), *g.id_at({1, 1})});
    ClassifyResult rm = classify(g, t, two);
    CHECK(rm.matched);
    CHECK(rm.partner == VertexSet(g.size(), {*g.id_at({1, 1})}));

    VertexSet dep(g.size(), {center, *g.id_at({0, 0})});
    CHECK_THROWS_AS(classify(g, t, dep), InvalidSpec);
}

TEST_CASE("classify is a total involution off the critical cells") {
    for (const auto& f : {FamilySpec::tilted_rect(5, 5), FamilySpec::cylindric_rect(4, 5),
                          FamilySpec::parallelogram(5, 6), FamilySpec::quadrangle(7, 7, 2, 2)}) {
        GridGraph g = build_graph(f);
        auto strat = f.kind == Family::Parallelogram ? make_block(f.m)
                     : f.kind == Family::Quadrangle  ? make_slope_lex(2, 2)
                                                     : make_diag_lex();
        MatchingTree t = grow_tree(g, strat);
        auto cells = all_independent_sets(g, 1 << 20);
        int critical = 0;
        for (const auto& c : cells) {
            ClassifyResult r = classify(g, t, c);
            if (!r.matched) {
                ++critical;
                continue;
            }
            // partner differs by exactly the site pivot, the larger member
            // contains it, and classify(partner) returns the original
            const int p = t.nodes[r.site].vertex;
            VertexSet diff = c;
            diff.flip(p);
            CHECK(diff == r.partner);
            CHECK((c.test(p) ? c : r.partner).test(p));
            ClassifyResult rr = classify(g, t, r.partner);
            REQUIRE(rr.matched);
            CHECK(rr.site == r.site);
            CHECK(rr.partner == c);
        }
        CHECK(critical == static_cast<int>(critical_cells(t).size()));
    }
}

TEST_CASE("verify_acyclic on grown trees") {
    GridGraph g = build_graph(FamilySpec::tilted_rect(3, 3));
    MatchingTree t = grow_tree(g, make_diag_lex());
    auto cert = verify_acyclic(g, t);
    CHECK(cert.ok);
    CHECK(cert.cells == 17);
    CHECK(cert.critical == 1);
    CHECK(cert.matched_pairs == 8);

    GridGraph big = build_graph(FamilySpec::tilted_rect(6, 7));
    auto cert2 = verify_acyclic(big, grow_tree(big, make_diag_lex()));
    CHECK(cert2.ok);

    Caps tight;
    tight.complex_cells = 5;
    CHECK_THROWS_AS(verify_acyclic(big, grow_tree(big, make_diag_lex()), tight), CapExceeded);
}

TEST_CASE("the checker rejects a cyclic hand-built pairing") {
    // three isolated vertices; pair {1}<->{1,2}, {2}<->{2,3}, {3}<->{1,3}
    GridGraph g = make_graph({{0, 0}, {2, 0}, {4, 0}}, {});
    auto vs = [&](std::initializer_list<int> ids) { return VertexSet(3, ids); };
    std::vector<std::pair<VertexSet, VertexSet>> pairs = {
        {vs({0}), vs({0, 1})},
        {vs({1}), vs({1, 2})},
        {vs({2}), vs({0, 2})},
    };
    auto cert = check_acyclic_matching(g, pairs);
    CHECK_FALSE(cert.ok);
    CHECK(cert.reason == "directed cycle through the reversed matching edges");

    // overlapping pairs are rejected as a non-matching
    std::vector<std::pair<VertexSet, VertexSet>> overlap = {
        {vs({0}), vs({0, 1})},
        {vs({0}), vs({0, 2})},
    };
    CHECK_FALSE(check_acyclic_matching(g, overlap).ok);

    // a legal acyclic pairing passes
    std::vector<std::pair<VertexSet, VertexSet>> good = {
        {vs({}), vs({0})},
        {vs({1}), vs({0, 1})},
        {vs({2}), vs({0, 2})},
        {vs({1, 2}), vs({0, 1, 2})},
    };
    CHECK(check_acyclic_matching(g, good).ok);
}

TEST_CASE("euler sums agree with direct counting across strategies") {
    for (const auto& f : {FamilySpec::tilted_rect(7, 8), FamilySpec::tilted_rect_smooth(6, 6),
                          FamilySpec::cylindric_rect(8, 7), FamilySpec::parallelogram(6, 9),
                          FamilySpec::quadrangle(9, 8, 2, 2)}) {
        GridGraph g = build_graph(f);
        auto strat = f.kind == Family::Parallelogram ? make_block(f.m)
                     : f.kind == Family::Quadrangle  ? make_slope_lex(2, 2)
                                                     : make_diag_lex();
        MatchingTree t = grow_tree(g, strat);
        CHECK(morse_euler_sum(t) == alternating_number(g));
    }
}

TEST_CASE("tree dump shape") {
    GridGraph g = build_graph(FamilySpec::tilted_rect(3, 3));
    MatchingTree t = grow_tree(g, make_diag_lex());
    CHECK(t.dump() == "M p=0 A={} B={}\n  leaf A={2}\n");
}

TEST_CASE("node guard aborts runaway growth") {
    Caps tight;
    tight.tree_nodes = 3;
    GridGraph g = build_graph(FamilySpec::tilted_rect(8, 8));
    CHECK_THROWS_AS(grow_tree(g, make_diag_lex(), tight), CapExceeded);
}

TEST_CASE("diag-lex yields a Morse matching on arbitrary induced subgraphs") {
    // the matching-tree construction is Morse for any graph and any pivot
    // choices; random subgraphs exercise the East-neighbor fallback paths
    std::mt19937 rng(7777);
    int verified = 0;
    for (int t = 0; t < 24; ++t) {
        GridGraph base = build_graph(t % 2 ? FamilySpec::tilted_rect(4 + t % 4, 4 + (t / 4) % 4)
                                           : FamilySpec::ordinary_rect(3 + t % 3, 4 + (t / 3) % 4));
        VertexSet del(base.size());
        for (int v = 0; v < base.size(); ++v)
            if (rng() % 4 == 0) del.set(v);
        GridGraph g = delete_vertices(base, del).first;
        MatchingTree tree = grow_tree(g, make_diag_lex());
        CHECK(morse_euler_sum(tree) == alternating_number(g));
        AcyclicityCertificate cert = verify_acyclic(g, tree);
        CHECK(cert.ok);
        ++verified;
    }
    CHECK(verified == 24);

    // ordinary cylinders have no closed form, but the Morse machinery
    // still applies end to end
    for (int k = 2; k <= 4; ++k)
        for (int n = 2; n <= 5; ++n) {
            GridGraph g = build_graph(FamilySpec::ordinary_cylinder(k, n));
            MatchingTree tree = grow_tree(g, make_diag_lex());
            CHECK(morse_euler_sum(tree) == alternating_number(g));
            CHECK(verify_acyclic(g, tree).ok);
        }
}
