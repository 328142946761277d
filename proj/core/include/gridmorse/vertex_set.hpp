#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace gridmorse {

// A subset of the canonical vertex ids {0,...,n-1} of an implied graph.
// The universal currency for independent sets, A/B prescriptions and
// critical cells. Fixed universe size, packed into 64-bit words.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe) : n_(universe), w_((universe + 63) / 64, 0) {}
    VertexSet(int universe, std::initializer_list<int> ids) : VertexSet(universe) {
        for (int v : ids) set(v);
    }

    int universe() const { return n_; }
    bool test(int v) const { return (w_[v >> 6] >> (v & 63)) & 1; }
    void set(int v) { w_[v >> 6] |= std::uint64_t(1) << (v & 63); }
    void reset(int v) { w_[v >> 6] &= ~(std::uint64_t(1) << (v & 63)); }
    void flip(int v) { w_[v >> 6] ^= std::uint64_t(1) << (v & 63); }

    bool empty() const {
        for (auto w : w_)
            if (w) return false;
        return true;
    }
    int count() const;
    bool intersects(const VertexSet& o) const;
    bool is_subset_of(const VertexSet& o) const;
    bool full() const { return count() == n_; }

    VertexSet& operator|=(const VertexSet& o);
    VertexSet& operator&=(const VertexSet& o);
    VertexSet& subtract(const VertexSet& o);
    VertexSet complement() const;

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }

    bool operator==(const VertexSet& o) const { return n_ == o.n_ && w_ == o.w_; }

    // Smallest member >= from, or -1.
    int next(int from = 0) const;

    std::vector<int> to_vector() const;
    std::string to_string() const;  // "{0,3,7}"

    std::size_t hash() const {
        std::size_t h = std::hash<int>()(n_);
        for (auto w : w_) h ^= std::hash<std::uint64_t>()(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }

private:
    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace gridmorse
