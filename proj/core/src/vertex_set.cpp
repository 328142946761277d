#include "gridmorse/vertex_set.hpp"

#include <bit>
#include <sstream>

namespace gridmorse {

int VertexSet::count() const {
    int c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
}

bool VertexSet::intersects(const VertexSet& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
        if (w_[i] & o.w_[i]) return true;
    return false;
}

bool VertexSet::is_subset_of(const VertexSet& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
        if (w_[i] & ~o.w_[i]) return false;
    return true;
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
}

VertexSet& VertexSet::subtract(const VertexSet& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
}

VertexSet VertexSet::complement() const {
    VertexSet r(n_);
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = ~w_[i];
    if (n_ & 63) r.w_.back() &= (std::uint64_t(1) << (n_ & 63)) - 1;
    return r;
}

int VertexSet::next(int from) const {
    if (from >= n_) return -1;
    std::size_t wi = static_cast<std::size_t>(from) >> 6;
    std::uint64_t cur = w_[wi] & (~std::uint64_t(0) << (from & 63));
    while (true) {
        if (cur) return static_cast<int>((wi << 6) + std::countr_zero(cur));
        if (++wi >= w_.size()) return -1;
        cur = w_[wi];
    }
}

std::vector<int> VertexSet::to_vector() const {
    std::vector<int> out;
    for (int v = next(); v != -1; v = next(v + 1)) out.push_back(v);
    return out;
}

std::string VertexSet::to_string() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int v = next(); v != -1; v = next(v + 1)) {
        if (!first) os << ',';
        os << v;
        first = false;
    }
    os << '}';
    return os.str();
}

}  // namespace gridmorse
