#include "gridmorse/morse.hpp"

#include <algorithm>
#include <cstdlib>
#include <queue>
#include <sstream>
#include <unordered_map>

#include "gridmorse/counting.hpp"
#include "gridmorse/errors.hpp"

namespace gridmorse {

namespace {

int vprime_degree(const GridGraph& g, const VertexSet& vprime, int v) {
    int d = 0;
    for (int u : g.adj[v]) d += vprime.test(u);
    return d;
}

// Block partition of the parallelogram P(K, .): triangles for K = 2 mod 3,
// trapezoids for K = 0 mod 3. Odd blocks are scanned along x+y, even
// blocks along x-y.
struct BlockGeometry {
    int period;  // 2K or 2(K+1)
    int width;   // 1 (triangles) or 2 (trapezoids)

    explicit BlockGeometry(int k) {
        if (k % 3 == 2) {
            period = 2 * k;
            width = 1;
        } else {
            period = 2 * (k + 1);
            width = 2;
        }
    }

    int block_of(LatticePoint p) const {
        for (int b = 1;; ++b) {
            if (b % 2 == 1) {
                int l = (b - 1) / 2;
                if (l * period <= p.x + p.y && p.x - p.y < l * period + width) return b;
            } else {
                int l = b / 2;
                if ((l - 1) * period + width <= p.x - p.y && p.x + p.y < l * period) return b;
            }
            if (b > (std::abs(p.x) + std::abs(p.y)) + 4)
                throw Error("point outside the block partition");
        }
    }

    static int scan_diag(LatticePoint p, int block) {
        return block % 2 == 1 ? p.x + p.y : p.x - p.y;
    }
};

}  // namespace

std::string PivotStrategy::name() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::DiagLex: os << "diag-lex"; break;
        case Kind::Block: os << "block(" << block_k << ")"; break;
        case Kind::SlopeLex: os << "slope-lex(" << a << "," << b << ")"; break;
    }
    return os.str();
}

PivotStrategy make_diag_lex() { return {PivotStrategy::Kind::DiagLex, 0, 0, 0}; }

PivotStrategy make_block(int k) {
    if (k < 1) throw InvalidSpec("block strategy needs K >= 1");
    return {PivotStrategy::Kind::Block, k, 0, 0};
}

PivotStrategy make_slope_lex(int a, int b) {
    if (b < 1) throw InvalidSpec("slope-lex strategy needs b >= 1");
    return {PivotStrategy::Kind::SlopeLex, 0, a, b};
}

void PivotStrategy::check_compatible(const GridGraph& g) const {
    if (kind == Kind::Block) {
        if (g.family.kind != Family::Parallelogram || g.family.m != block_k)
            throw InvalidSpec("block(" + std::to_string(block_k) +
                              ") strategy requires a Parallelogram(" + std::to_string(block_k) +
                              ",.) graph");
    }
}

int PivotStrategy::tentative_pivot(const GridGraph& g, const VertexSet& a_set,
                                   const VertexSet& b_set) const {
    VertexSet vprime = (a_set | b_set).complement();
    if (vprime.empty()) return -1;

    if (kind == Kind::DiagLex || (kind == Kind::Block && block_k % 3 == 1)) {
        int p0 = vprime.next();  // canonical id order is the (x+y, x) order
        int d0 = g.pts[p0].x + g.pts[p0].y;
        int best = -1;
        for (int v = vprime.next(); v != -1; v = vprime.next(v + 1)) {
            int d = g.pts[v].x + g.pts[v].y;
            if (d <= d0) continue;
            if (d > d0 + 1) break;
            if (vprime_degree(g, vprime, v) == 0 &&
                (best == -1 || g.pts[v].x < g.pts[best].x))
                best = v;
        }
        return best != -1 ? best : p0;
    }

    if (kind == Kind::Block) {
        BlockGeometry geo(block_k);
        int active = -1, p0 = -1;
        std::pair<int, int> best_key{0, 0};
        for (int v = vprime.next(); v != -1; v = vprime.next(v + 1)) {
            int blk = geo.block_of(g.pts[v]);
            std::pair<int, int> key{BlockGeometry::scan_diag(g.pts[v], blk), g.pts[v].x};
            if (active == -1 || blk < active || (blk == active && key < best_key)) {
                active = blk;
                best_key = key;
                p0 = v;
            }
        }
        int d0 = BlockGeometry::scan_diag(g.pts[p0], active);
        int best = -1;
        for (int v = vprime.next(); v != -1; v = vprime.next(v + 1)) {
            if (geo.block_of(g.pts[v]) != active) continue;
            if (BlockGeometry::scan_diag(g.pts[v], active) != d0 + 1) continue;
            if (vprime_degree(g, vprime, v) == 0 &&
                (best == -1 || g.pts[v].x < g.pts[best].x))
                best = v;
        }
        return best != -1 ? best : p0;
    }

    // SlopeLex: minimize (b*x + y, x); free-vertex override on the next
    // b lines (the pivot's live neighbors lie on lines c0+1 .. c0+b).
    auto line = [&](int v) { return b * g.pts[v].x + g.pts[v].y; };
    int p0 = -1;
    for (int v = vprime.next(); v != -1; v = vprime.next(v + 1)) {
        if (p0 == -1 || line(v) < line(p0) || (line(v) == line(p0) && g.pts[v].x < g.pts[p0].x))
            p0 = v;
    }
    int c0 = line(p0);
    int best = -1;
    for (int v = vprime.next(); v != -1; v = vprime.next(v + 1)) {
        int c = line(v);
        if (c <= c0 || c > c0 + b) continue;
        if (vprime_degree(g, vprime, v) != 0) continue;
        if (best == -1 || c < line(best) || (c == line(best) && g.pts[v].x < g.pts[best].x))
            best = v;
    }
    return best != -1 ? best : p0;
}

int PivotStrategy::split_vertex(const GridGraph& g, const VertexSet& a_set,
                                const VertexSet& b_set, int pivot) const {
    VertexSet vprime = (a_set | b_set).complement();
    auto east = g.id_at({g.pts[pivot].x + 1, g.pts[pivot].y});
    if (east && vprime.test(*east) && g.adjacent(pivot, *east)) return *east;
    for (int u : g.adj[pivot])
        if (vprime.test(u)) return u;
    throw Error("split requested at a pivot without V'-neighbors");
}

MatchingTree grow_tree(const GridGraph& g, const PivotStrategy& strat, const Caps& caps) {
    strat.check_compatible(g);
    MatchingTree tree;
    const VertexSet none(g.size());
    tree.nodes.push_back({none, none, NodeKind::MatchingSite, -1, {-1, -1}, -1});

    std::vector<int> todo = {0};
    auto new_node = [&](VertexSet a, VertexSet b, int parent) {
        if (static_cast<std::int64_t>(tree.nodes.size()) >= caps.tree_nodes) {
            std::ostringstream os;
            os << "matching tree node guard " << caps.tree_nodes << " exceeded ("
               << strat.name() << " on " << g.family.to_string() << ")";
            throw CapExceeded(os.str());
        }
        tree.nodes.push_back({std::move(a), std::move(b), NodeKind::MatchingSite, -1, {-1, -1}, parent});
        return static_cast<int>(tree.nodes.size()) - 1;
    };

    while (!todo.empty()) {
        int idx = todo.back();
        todo.pop_back();
        VertexSet prescribed = tree.nodes[idx].a | tree.nodes[idx].b;
        if (prescribed.full()) {
            tree.nodes[idx].kind = NodeKind::LeafSingleton;
            ++tree.singleton_leaves;
            continue;
        }
        const int p = strat.tentative_pivot(g, tree.nodes[idx].a, tree.nodes[idx].b);
        VertexSet vprime = prescribed.complement();
        int live = vprime_degree(g, vprime, p);
        if (live <= 1) {
            tree.nodes[idx].kind = NodeKind::MatchingSite;
            tree.nodes[idx].vertex = p;
            ++tree.matching_sites;
            if (live == 0) {
                int child = new_node(tree.nodes[idx].a, tree.nodes[idx].b, idx);
                tree.nodes[child].kind = NodeKind::LeafEmpty;
                tree.nodes[idx].child[0] = child;
                ++tree.empty_leaves;
            } else {
                int v = -1;
                for (int u : g.adj[p])
                    if (vprime.test(u)) v = u;
                VertexSet a2 = tree.nodes[idx].a;
                a2.set(v);
                VertexSet b2 = tree.nodes[idx].b | g.neighborhood(v);
                int child = new_node(std::move(a2), std::move(b2), idx);
                tree.nodes[idx].child[0] = child;
                todo.push_back(child);
            }
        } else {
            const int v = strat.split_vertex(g, tree.nodes[idx].a, tree.nodes[idx].b, p);
            tree.nodes[idx].kind = NodeKind::SplittingSite;
            tree.nodes[idx].vertex = v;
            ++tree.splitting_sites;
            VertexSet bl = tree.nodes[idx].b;
            bl.set(v);
            int left = new_node(tree.nodes[idx].a, std::move(bl), idx);
            VertexSet a2 = tree.nodes[idx].a;
            a2.set(v);
            VertexSet b2 = tree.nodes[idx].b | g.neighborhood(v);
            int right = new_node(std::move(a2), std::move(b2), idx);
            tree.nodes[idx].child[0] = left;
            tree.nodes[idx].child[1] = right;
            todo.push_back(right);
            todo.push_back(left);
        }
    }
    return tree;
}

std::string MatchingTree::dump() const {
    std::ostringstream os;
    // depth-first, children left to right
    std::vector<std::pair<int, int>> stack = {{0, 0}};
    while (!stack.empty()) {
        auto [idx, depth] = stack.back();
        stack.pop_back();
        const TreeNode& n = nodes[idx];
        for (int i = 0; i < depth; ++i) os << "  ";
        switch (n.kind) {
            case NodeKind::MatchingSite:
                os << "M p=" << n.vertex << " A=" << n.a.to_string() << " B=" << n.b.to_string();
                break;
            case NodeKind::SplittingSite:
                os << "S v=" << n.vertex << " A=" << n.a.to_string() << " B=" << n.b.to_string();
                break;
            case NodeKind::LeafEmpty:
                os << "leaf empty";
                break;
            case NodeKind::LeafSingleton:
                os << "leaf A=" << n.a.to_string();
                break;
        }
        os << "\n";
        if (n.child[1] != -1) stack.push_back({n.child[1], depth + 1});
        if (n.child[0] != -1) stack.push_back({n.child[0], depth + 1});
    }
    return os.str();
}

ClassifyResult classify(const GridGraph& g, const MatchingTree& tree, const VertexSet& is) {
    if (!is_independent(g, is)) throw InvalidSpec("classify requires an independent set");
    int idx = 0;
    while (true) {
        const TreeNode& node = tree.nodes[idx];
        switch (node.kind) {
            case NodeKind::MatchingSite: {
                const int p = node.vertex;
                bool hits = false;
                for (int u : g.adj[p])
                    if (is.test(u)) {
                        hits = true;
                        break;
                    }
                if (!hits) {
                    ClassifyResult r;
                    r.matched = true;
                    r.partner = is;
                    r.partner.flip(p);
                    r.site = idx;
                    return r;
                }
                idx = node.child[0];
                break;
            }
            case NodeKind::SplittingSite:
                idx = is.test(node.vertex) ? node.child[1] : node.child[0];
                break;
            case NodeKind::LeafSingleton: {
                ClassifyResult r;
                r.matched = false;
                r.site = idx;
                return r;
            }
            case NodeKind::LeafEmpty:
                throw Error("classify reached an empty leaf; tree inconsistent");
        }
    }
}

std::vector<VertexSet> critical_cells(const MatchingTree& tree) {
    std::vector<VertexSet> cells;
    std::vector<int> stack = {0};
    while (!stack.empty()) {
        int idx = stack.back();
        stack.pop_back();
        const TreeNode& n = tree.nodes[idx];
        if (n.kind == NodeKind::LeafSingleton) cells.push_back(n.a);
        if (n.child[1] != -1) stack.push_back(n.child[1]);
        if (n.child[0] != -1) stack.push_back(n.child[0]);
    }
    return cells;
}

BigInt morse_euler_sum(const MatchingTree& tree) {
    BigInt sum = 0;
    for (const TreeNode& n : tree.nodes)
        if (n.kind == NodeKind::LeafSingleton) sum += n.a.count() % 2 == 0 ? 1 : -1;
    return sum;
}

namespace {

void enumerate_rec(const GridGraph& g, int v, VertexSet& cur, VertexSet& blocked,
                   std::vector<VertexSet>& out, std::int64_t cap) {
    if (v == g.size()) {
        if (static_cast<std::int64_t>(out.size()) >= cap)
            throw CapExceeded("complex-size cap " + std::to_string(cap) + " exceeded");
        out.push_back(cur);
        return;
    }
    enumerate_rec(g, v + 1, cur, blocked, out, cap);
    if (!blocked.test(v)) {
        std::vector<int> newly;
        for (int u : g.adj[v])
            if (u > v && !blocked.test(u)) {
                blocked.set(u);
                newly.push_back(u);
            }
        cur.set(v);
        enumerate_rec(g, v + 1, cur, blocked, out, cap);
        cur.reset(v);
        for (int u : newly) blocked.reset(u);
    }
}

using CellIndex = std::unordered_map<VertexSet, int, VertexSetHash>;

// Shared digraph check: edges of the Hasse diagram point down, except the
// matched covering pairs which are reversed; acyclic iff Kahn's algorithm
// consumes every cell.
AcyclicityCertificate run_cycle_check(const std::vector<VertexSet>& cells,
                                      const CellIndex& index, const std::vector<int>& partner_up,
                                      std::int64_t matched_pairs, std::int64_t critical) {
    AcyclicityCertificate cert;
    cert.cells = static_cast<std::int64_t>(cells.size());
    cert.matched_pairs = matched_pairs;
    cert.critical = critical;

    std::vector<std::vector<int>> out(cells.size());
    std::vector<int> indeg(cells.size(), 0);
    for (std::size_t i = 0; i < cells.size(); ++i) {
        VertexSet low = cells[i];
        for (int v = cells[i].next(); v != -1; v = cells[i].next(v + 1)) {
            low.reset(v);
            int j = index.at(low);
            low.set(v);
            if (partner_up[j] == static_cast<int>(i)) {
                out[j].push_back(static_cast<int>(i));  // matched edge, reversed
                ++indeg[i];
            } else {
                out[i].push_back(j);
                ++indeg[j];
            }
        }
    }
    std::queue<int> q;
    for (std::size_t i = 0; i < cells.size(); ++i)
        if (indeg[i] == 0) q.push(static_cast<int>(i));
    std::int64_t seen = 0;
    while (!q.empty()) {
        int i = q.front();
        q.pop();
        ++seen;
        for (int j : out[i])
            if (--indeg[j] == 0) q.push(j);
    }
    cert.ok = seen == cert.cells;
    if (!cert.ok) cert.reason = "directed cycle through the reversed matching edges";
    return cert;
}

}  // namespace

std::vector<VertexSet> all_independent_sets(const GridGraph& g, std::int64_t cap) {
    std::vector<VertexSet> out;
    VertexSet cur(g.size()), blocked(g.size());
    enumerate_rec(g, 0, cur, blocked, out, cap);
    return out;
}

AcyclicityCertificate check_acyclic_matching(const GridGraph& g,
                                             const std::vector<std::pair<VertexSet, VertexSet>>& pairs,
                                             const Caps& caps) {
    std::vector<VertexSet> cells = all_independent_sets(g, caps.complex_cells);
    CellIndex index;
    index.reserve(cells.size() * 2);
    for (std::size_t i = 0; i < cells.size(); ++i) index[cells[i]] = static_cast<int>(i);

    AcyclicityCertificate cert;
    cert.cells = static_cast<std::int64_t>(cells.size());
    std::vector<int> partner_up(cells.size(), -1);
    std::vector<char> used(cells.size(), 0);
    for (auto& [low, high] : pairs) {
        auto li = index.find(low), hi = index.find(high);
        if (li == index.end() || hi == index.end()) {
            cert.reason = "pair member is not an independent set of the graph";
            return cert;
        }
        if (high.count() != low.count() + 1 || !low.is_subset_of(high)) {
            cert.reason = "pair is not a covering edge";
            return cert;
        }
        if (used[li->second] || used[hi->second]) {
            cert.reason = "matching edges are not pairwise disjoint";
            return cert;
        }
        used[li->second] = used[hi->second] = 1;
        partner_up[li->second] = hi->second;
    }
    cert = run_cycle_check(cells, index, partner_up, static_cast<std::int64_t>(pairs.size()),
                           cert.cells - 2 * static_cast<std::int64_t>(pairs.size()));
    return cert;
}

AcyclicityCertificate verify_acyclic(const GridGraph& g, const MatchingTree& tree, const Caps& caps) {
    std::vector<VertexSet> cells = all_independent_sets(g, caps.complex_cells);
    CellIndex index;
    index.reserve(cells.size() * 2);
    for (std::size_t i = 0; i < cells.size(); ++i) index[cells[i]] = static_cast<int>(i);

    AcyclicityCertificate cert;
    cert.cells = static_cast<std::int64_t>(cells.size());

    std::vector<int> partner(cells.size(), -1);   // both directions
    std::vector<int> site(cells.size(), -1);
    std::vector<int> partner_up(cells.size(), -1);
    std::int64_t critical = 0, matched = 0;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        ClassifyResult r = classify(g, tree, cells[i]);
        if (!r.matched) {
            ++critical;
            if (tree.nodes[r.site].kind != NodeKind::LeafSingleton ||
                !(tree.nodes[r.site].a == cells[i])) {
                cert.reason = "critical cell does not coincide with a singleton-leaf A-set";
                return cert;
            }
            continue;
        }
        const int p = tree.nodes[r.site].vertex;
        VertexSet expect = cells[i];
        expect.flip(p);
        if (!(expect == r.partner)) {
            cert.reason = "matched partner does not differ by the site pivot";
            return cert;
        }
        auto it = index.find(r.partner);
        if (it == index.end()) {
            cert.reason = "matched partner is not an independent set";
            return cert;
        }
        int j = it->second;
        if (partner[i] != -1 && partner[i] != j) {
            cert.reason = "cell matched twice";
            return cert;
        }
        partner[i] = j;
        site[i] = r.site;
        if (partner[j] != -1 && (partner[j] != static_cast<int>(i) || site[j] != r.site)) {
            cert.reason = "matching is not an involution";
            return cert;
        }
        if (cells[i].test(p))
            partner_up[j] = static_cast<int>(i);
        ++matched;
    }
    if (matched % 2 != 0) {
        cert.reason = "odd number of matched cells";
        return cert;
    }
    // involutivity: every matched cell's partner points back
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (partner[i] != -1 && (partner[partner[i]] != static_cast<int>(i) ||
                                 site[partner[i]] != site[i])) {
            cert.reason = "matching is not an involution";
            return cert;
        }
    }
    // critical cells = singleton leaves of the tree, as sets
    std::int64_t leaves = 0;
    for (const TreeNode& n : tree.nodes)
        if (n.kind == NodeKind::LeafSingleton) {
            ++leaves;
            auto it = index.find(n.a);
            if (it == index.end() || partner[it->second] != -1) {
                cert.reason = "singleton-leaf A-set is matched or missing";
                return cert;
            }
        }
    if (leaves != critical) {
        cert.reason = "critical cell count differs from singleton leaf count";
        return cert;
    }
    cert = run_cycle_check(cells, index, partner_up, matched / 2, critical);
    return cert;
}

}  // namespace gridmorse
