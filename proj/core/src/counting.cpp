#include "gridmorse/counting.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <unordered_map>

#include "gridmorse/errors.hpp"

namespace gridmorse {

BigInt PartitionPolynomial::eval(long long u) const {
    BigInt acc = 0, p = 1;
    for (const auto& c : coeffs) {
        acc += c * p;
        p *= u;
    }
    return acc;
}

std::string PartitionPolynomial::to_string() const {
    std::ostringstream os;
    os << "poly";
    for (const auto& c : coeffs) os << ' ' << c;
    return os.str();
}

bool is_independent(const GridGraph& g, const VertexSet& s) {
    if (s.universe() != g.size()) throw InvalidSpec("vertex set universe mismatch");
    for (int v = s.next(); v != -1; v = s.next(v + 1))
        for (int u : g.adj[v])
            if (u > v && s.test(u)) return false;
    return true;
}

namespace {

void brute_rec(const GridGraph& g, int v, std::uint64_t blocked, int size,
               std::vector<BigInt>& counts) {
    if (v == g.size()) {
        if (size >= static_cast<int>(counts.size())) counts.resize(size + 1);
        counts[size] += 1;
        return;
    }
    brute_rec(g, v + 1, blocked, size, counts);
    if (!(blocked >> v & 1)) {
        std::uint64_t b = blocked;
        for (int u : g.adj[v])
            if (u > v) b |= std::uint64_t(1) << u;
        brute_rec(g, v + 1, b, size + 1, counts);
    }
}

}  // namespace

PartitionPolynomial partition_function_brute(const GridGraph& g, const Caps& caps) {
    if (g.size() > caps.brute_vertices || g.size() > 64) {
        std::ostringstream os;
        os << "brute-force cap " << std::min<long long>(caps.brute_vertices, 64)
           << " exceeded by " << g.size() << " vertices; use frontier method";
        throw CapExceeded(os.str());
    }
    PartitionPolynomial p;
    brute_rec(g, 0, 0, 0, p.coeffs);
    return p;
}

PartitionPolynomial partition_function_frontier(const GridGraph& g,
                                                const std::vector<int>& order,
                                                const Caps& caps) {
    const int n = g.size();
    std::vector<int> ord = order;
    if (ord.empty()) {
        ord.resize(n);
        for (int i = 0; i < n; ++i) ord[i] = i;
    }
    if (static_cast<int>(ord.size()) != n) throw InvalidSpec("order must be a permutation");
    std::vector<int> pos(n, -1);
    for (int t = 0; t < n; ++t) {
        if (ord[t] < 0 || ord[t] >= n || pos[ord[t]] != -1)
            throw InvalidSpec("order must be a permutation");
        pos[ord[t]] = t;
    }

    // last_pos[v]: time after which v can leave the frontier
    std::vector<int> last_pos(n);
    for (int v = 0; v < n; ++v) {
        int last = pos[v];
        for (int u : g.adj[v]) last = std::max(last, pos[u]);
        last_pos[v] = last;
    }

    std::vector<int> slot(n, -1);      // frontier slot per vertex
    std::vector<int> slot_vertex;      // vertex per slot (-1 = free)
    std::vector<int> free_slots;
    using Poly = std::vector<BigInt>;
    std::unordered_map<std::uint64_t, Poly> states;
    states[0] = {BigInt(1)};

    auto add_into = [](Poly& dst, const Poly& src, int shift) {
        if (dst.size() < src.size() + shift) dst.resize(src.size() + shift);
        for (std::size_t i = 0; i < src.size(); ++i) dst[i + shift] += src[i];
    };

    for (int t = 0; t < n; ++t) {
        const int v = ord[t];
        // assign a slot if v will still have unprocessed neighbors
        int vslot = -1;
        if (last_pos[v] > t) {
            if (free_slots.empty()) {
                vslot = static_cast<int>(slot_vertex.size());
                slot_vertex.push_back(v);
            } else {
                vslot = free_slots.back();
                free_slots.pop_back();
                slot_vertex[vslot] = v;
            }
            slot[v] = vslot;
            int width = static_cast<int>(slot_vertex.size() - free_slots.size());
            if (width > caps.frontier_width || vslot >= 63) {
                std::ostringstream os;
                os << "frontier width " << width << " exceeds cap " << caps.frontier_width
                   << " at vertex " << v;
                throw CapExceeded(os.str());
            }
        }

        std::uint64_t nbr_mask = 0;  // processed neighbors (all still in frontier)
        for (int u : g.adj[v])
            if (pos[u] < t) nbr_mask |= std::uint64_t(1) << slot[u];

        std::uint64_t leave_mask = 0;  // slots released after this step
        for (int u : g.adj[v])
            if (pos[u] < t && last_pos[u] == t) leave_mask |= std::uint64_t(1) << slot[u];

        std::unordered_map<std::uint64_t, Poly> next;
        next.reserve(states.size() * 2);
        for (auto& [mask, poly] : states) {
            // v unoccupied
            add_into(next[mask & ~leave_mask], poly, 0);
            // v occupied: requires no occupied processed neighbor
            if (!(mask & nbr_mask)) {
                std::uint64_t m2 = mask;
                if (vslot >= 0) m2 |= std::uint64_t(1) << vslot;
                add_into(next[m2 & ~leave_mask], poly, 1);
            }
        }
        states = std::move(next);

        for (int u : g.adj[v])
            if (pos[u] < t && last_pos[u] == t) {
                slot_vertex[slot[u]] = -1;
                free_slots.push_back(slot[u]);
                slot[u] = -1;
            }
        if (vslot >= 0 && last_pos[v] == t) {
            slot_vertex[vslot] = -1;
            free_slots.push_back(vslot);
            slot[v] = -1;
        }
    }

    PartitionPolynomial result;
    for (auto& [mask, poly] : states) {
        if (result.coeffs.size() < poly.size()) result.coeffs.resize(poly.size());
        for (std::size_t i = 0; i < poly.size(); ++i) result.coeffs[i] += poly[i];
    }
    if (result.coeffs.empty()) result.coeffs = {BigInt(1)};  // empty graph
    while (result.coeffs.size() > 1 && result.coeffs.back() == 0) result.coeffs.pop_back();
    return result;
}

BigInt alternating_number(const GridGraph& g, const Caps& caps) {
    try {
        return partition_function_frontier(g, {}, caps).at_minus_one();
    } catch (const CapExceeded&) {
        return partition_function_brute(g, caps).at_minus_one();
    }
}

FoldResult fold_reduce(const GridGraph& g) {
    FoldResult result{g, {}};
    bool progress = true;
    while (progress) {
        progress = false;
        const GridGraph& cur = result.graph;
        for (int v = 0; v < cur.size() && !progress; ++v) {
            for (int w = 0; w < cur.size() && !progress; ++w) {
                if (v == w) continue;
                if (std::includes(cur.adj[w].begin(), cur.adj[w].end(),
                                  cur.adj[v].begin(), cur.adj[v].end())) {
                    result.steps.push_back({cur.pts[v], cur.pts[w]});
                    VertexSet del(cur.size());
                    del.set(w);
                    result.graph = delete_vertices(cur, del).first;
                    progress = true;
                }
            }
        }
    }
    return result;
}

}  // namespace gridmorse
