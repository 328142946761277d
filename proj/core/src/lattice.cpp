#include "gridmorse/lattice.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "gridmorse/errors.hpp"

namespace gridmorse {

namespace {

// canonical vertex order: ascending (x+y, x)
bool canon_less(const LatticePoint& a, const LatticePoint& b) {
    if (a.x + a.y != b.x + b.y) return a.x + a.y < b.x + b.y;
    return a.x < b.x;
}

std::string family_name(Family f) {
    switch (f) {
        case Family::TiltedRect: return "tilted-rect";
        case Family::TiltedRectSmooth: return "tilted-rect-smooth";
        case Family::CylindricRect: return "cyl-rect";
        case Family::Parallelogram: return "parallelogram";
        case Family::Quadrangle: return "quad";
        case Family::OrdinaryRect: return "ord-rect";
        case Family::OrdinaryCylinder: return "ord-cyl";
        case Family::Custom: return "custom";
    }
    return "?";
}

// Graph on the given points, edges = all unit-distance pairs.
GridGraph from_points(std::vector<LatticePoint> pts, FamilySpec family) {
    std::sort(pts.begin(), pts.end(), canon_less);
    GridGraph g;
    g.family = family;
    g.pts = std::move(pts);
    std::map<LatticePoint, int> index;
    for (int i = 0; i < g.size(); ++i) {
        if (!index.emplace(g.pts[i], i).second)
            throw InvalidSpec("duplicate lattice point in family construction");
    }
    g.adj.assign(g.size(), {});
    for (int i = 0; i < g.size(); ++i) {
        for (LatticePoint q : {LatticePoint{g.pts[i].x + 1, g.pts[i].y},
                               LatticePoint{g.pts[i].x, g.pts[i].y + 1}}) {
            auto it = index.find(q);
            if (it != index.end()) {
                g.adj[i].push_back(it->second);
                g.adj[it->second].push_back(i);
            }
        }
    }
    for (auto& nbrs : g.adj) std::sort(nbrs.begin(), nbrs.end());
    return g;
}

// Merge vertices: each pair (keep, drop) identifies drop's point with
// keep's. Ids are re-canonicalized, adjacency deduplicated, self-loops
// (if any arise) removed.
GridGraph merge_vertices(const GridGraph& base,
                         const std::vector<std::pair<LatticePoint, LatticePoint>>& pairs,
                         FamilySpec family) {
    std::vector<int> target(base.size());
    for (int i = 0; i < base.size(); ++i) target[i] = i;
    for (auto& [keep, drop] : pairs) {
        auto ki = base.id_at(keep), di = base.id_at(drop);
        if (!ki || !di) throw InvalidSpec("identification references a missing vertex");
        target[*di] = *ki;
    }
    std::vector<int> newid(base.size(), -1);
    GridGraph g;
    g.family = family;
    for (int i = 0; i < base.size(); ++i) {
        if (target[i] == i) {
            newid[i] = g.size();
            g.pts.push_back(base.pts[i]);
        }
    }
    g.adj.assign(g.size(), {});
    for (int i = 0; i < base.size(); ++i) {
        int u = newid[target[i]];
        for (int j : base.adj[i]) {
            int v = newid[target[j]];
            if (u != v) g.adj[u].push_back(v);
        }
    }
    for (auto& nbrs : g.adj) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    }
    g.identifications = pairs;
    return g;
}

void require(bool ok, const std::string& what) {
    if (!ok) throw InvalidSpec(what);
}

}  // namespace

std::string FamilySpec::to_string() const {
    std::ostringstream os;
    os << family_name(kind);
    switch (kind) {
        case Family::Quadrangle:
            os << "(" << m << "," << n << "," << a << "," << b << ")";
            break;
        case Family::Custom:
            break;
        default:
            os << "(" << m << "," << n << ")";
    }
    return os.str();
}

bool GridGraph::adjacent(int u, int v) const {
    return std::binary_search(adj[u].begin(), adj[u].end(), v);
}

std::optional<int> GridGraph::id_at(LatticePoint p) const {
    // points are sorted canonically, so direct hits are a binary search;
    // merged aliases resolve through the identification list
    auto it = std::lower_bound(pts.begin(), pts.end(), p,
                               [](const LatticePoint& a, const LatticePoint& b) {
                                   return canon_less(a, b);
                               });
    if (it != pts.end() && *it == p) return static_cast<int>(it - pts.begin());
    for (auto& [keep, drop] : identifications)
        if (drop == p) return id_at(keep);
    return std::nullopt;
}

VertexSet GridGraph::neighborhood(int v) const {
    VertexSet s(size());
    for (int u : adj[v]) s.set(u);
    return s;
}

VertexSet GridGraph::neighborhood(const VertexSet& a) const {
    VertexSet s(size());
    for (int v = a.next(); v != -1; v = a.next(v + 1))
        for (int u : adj[v]) s.set(u);
    return s;
}

GridGraph build_graph(const FamilySpec& spec) {
    switch (spec.kind) {
        case Family::TiltedRect: {
            require(spec.m >= 1 && spec.n >= 1, "tilted-rect parameters must be >= 1");
            std::vector<LatticePoint> pts;
            for (int d1 = 0; d1 < spec.m; ++d1)
                for (int d2 = (d1 & 1); d2 < spec.n; d2 += 2)
                    pts.push_back({(d1 + d2) / 2, (d2 - d1) / 2});
            return from_points(std::move(pts), spec);
        }
        case Family::TiltedRectSmooth: {
            require(spec.m >= 1 && spec.n >= 1, "tilted-rect-smooth parameters must be >= 1");
            std::vector<LatticePoint> pts;
            for (int d1 = 0; d1 < spec.m; ++d1)
                for (int d2 = 2 - (d1 & 1); d2 <= spec.n; d2 += 2)
                    pts.push_back({(d1 + d2) / 2, (d2 - d1) / 2});
            return from_points(std::move(pts), spec);
        }
        case Family::CylindricRect: {
            require(spec.m >= 1 && spec.n >= 1, "cyl-rect parameters must be >= 1");
            require(spec.m % 2 == 0, "cyl-rect requires even M");
            GridGraph base = build_graph(FamilySpec::tilted_rect(spec.m + 1, spec.n));
            std::vector<std::pair<LatticePoint, LatticePoint>> pairs;
            for (int i = 0; i <= (spec.n - 1) / 2; ++i)
                pairs.push_back({{i, i}, {spec.m / 2 + i, -spec.m / 2 + i}});
            return merge_vertices(base, pairs, spec);
        }
        case Family::Parallelogram: {
            require(spec.m >= 1 && spec.n >= 1, "parallelogram parameters must be >= 1");
            std::vector<LatticePoint> pts;
            for (int y = 0; y < spec.m; ++y)
                for (int x = -y; x < -y + spec.n; ++x) pts.push_back({x, y});
            return from_points(std::move(pts), spec);
        }
        case Family::Quadrangle: {
            require(spec.m >= 1 && spec.n >= 1, "quad parameters must be >= 1");
            const long long det = 1LL + static_cast<long long>(spec.a) * spec.b;
            require(det >= 1, "quad requires 1 + a*b >= 1");
            // u = x - a*y in [0, M-1], v = b*x + y in [0, N-1];
            // x = (u + a*v)/(1+ab) must be integral (y then follows).
            std::vector<LatticePoint> pts;
            for (long long u = 0; u < spec.m; ++u)
                for (long long v = 0; v < spec.n; ++v) {
                    long long num = u + static_cast<long long>(spec.a) * v;
                    if (num % det) continue;
                    long long x = num / det;
                    long long y = v - static_cast<long long>(spec.b) * x;
                    pts.push_back({static_cast<int>(x), static_cast<int>(y)});
                }
            return from_points(std::move(pts), spec);
        }
        case Family::OrdinaryRect: {
            require(spec.m >= 1 && spec.n >= 1, "ord-rect parameters must be >= 1");
            std::vector<LatticePoint> pts;
            for (int x = 0; x < spec.m; ++x)
                for (int y = 0; y < spec.n; ++y) pts.push_back({x, y});
            return from_points(std::move(pts), spec);
        }
        case Family::OrdinaryCylinder: {
            require(spec.m >= 1 && spec.n >= 1, "ord-cyl parameters must be >= 1");
            GridGraph base = build_graph(FamilySpec::ordinary_rect(spec.m, spec.n + 1));
            std::vector<std::pair<LatticePoint, LatticePoint>> pairs;
            for (int i = 0; i < spec.m; ++i) pairs.push_back({{i, 0}, {i, spec.n}});
            return merge_vertices(base, pairs, spec);
        }
        case Family::Custom:
            throw InvalidSpec("cannot build a custom family");
    }
    throw InvalidSpec("unknown family");
}

std::pair<GridGraph, std::vector<int>> delete_vertices(const GridGraph& g, const VertexSet& s) {
    if (s.universe() != g.size()) throw InvalidSpec("vertex set universe mismatch");
    std::vector<int> old_to_new(g.size(), -1);
    GridGraph out;
    out.family.kind = Family::Custom;
    for (int i = 0; i < g.size(); ++i) {
        if (s.test(i)) continue;
        old_to_new[i] = out.size();
        out.pts.push_back(g.pts[i]);
    }
    out.adj.assign(out.size(), {});
    for (int i = 0; i < g.size(); ++i) {
        if (old_to_new[i] < 0) continue;
        for (int j : g.adj[i])
            if (old_to_new[j] >= 0) out.adj[old_to_new[i]].push_back(old_to_new[j]);
    }
    for (auto& [keep, drop] : g.identifications) {
        auto ki = g.id_at(keep);
        if (ki && old_to_new[*ki] >= 0) out.identifications.push_back({keep, drop});
    }
    return {std::move(out), std::move(old_to_new)};
}

GridGraph make_graph(std::vector<LatticePoint> pts, const std::vector<std::pair<int, int>>& edges) {
    std::vector<int> order(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return canon_less(pts[a], pts[b]); });
    std::vector<int> rank(pts.size());
    GridGraph g;
    g.family.kind = Family::Custom;
    for (std::size_t i = 0; i < order.size(); ++i) {
        rank[order[i]] = static_cast<int>(i);
        g.pts.push_back(pts[order[i]]);
    }
    g.adj.assign(g.size(), {});
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= g.size() || v >= g.size() || u == v)
            throw InvalidSpec("bad edge in make_graph");
        g.adj[rank[u]].push_back(rank[v]);
        g.adj[rank[v]].push_back(rank[u]);
    }
    for (auto& nbrs : g.adj) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    }
    return g;
}

std::string dump_graph(const GridGraph& g) {
    std::ostringstream os;
    os << "gridgraph v1\n";
    for (auto& [keep, drop] : g.identifications)
        os << "# merged (" << keep.x << "," << keep.y << ")=(" << drop.x << "," << drop.y << ")\n";
    for (int i = 0; i < g.size(); ++i)
        os << "v " << i << " " << g.pts[i].x << " " << g.pts[i].y << "\n";
    for (int i = 0; i < g.size(); ++i)
        for (int j : g.adj[i])
            if (i < j) os << "e " << i << " " << j << "\n";
    return os.str();
}

GridGraph load_graph(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line) || line != "gridgraph v1")
        throw ParseError("missing 'gridgraph v1' header");
    GridGraph g;
    g.family.kind = Family::Custom;
    std::vector<std::pair<int, int>> edges;
    std::set<std::pair<int, int>> seen_edges;
    std::set<LatticePoint> seen_points;
    int expect_id = 0;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            LatticePoint a, b;
            if (std::sscanf(line.c_str(), "# merged (%d,%d)=(%d,%d)", &a.x, &a.y, &b.x, &b.y) == 4)
                g.identifications.push_back({a, b});
            continue;
        }
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "v") {
            int id;
            LatticePoint p;
            if (!(ls >> id >> p.x >> p.y)) throw ParseError("malformed vertex line: " + line);
            if (id != expect_id++) throw ParseError("vertex ids must be dense from 0");
            if (!seen_points.insert(p).second)
                throw ParseError("duplicate coordinates among vertices");
            g.pts.push_back(p);
        } else if (tag == "e") {
            int u, v;
            if (!(ls >> u >> v)) throw ParseError("malformed edge line: " + line);
            if (u >= v) throw ParseError("edge endpoints must satisfy id1 < id2");
            if (!seen_edges.insert({u, v}).second) throw ParseError("duplicate edge");
            edges.push_back({u, v});
        } else {
            throw ParseError("unknown record: " + line);
        }
    }
    g.adj.assign(g.size(), {});
    for (auto [u, v] : edges) {
        if (v >= g.size()) throw ParseError("edge references a nonexistent vertex id");
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (auto& nbrs : g.adj) std::sort(nbrs.begin(), nbrs.end());
    return g;
}

}  // namespace gridmorse
