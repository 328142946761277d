#include "gridmorse/transfer.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "gridmorse/errors.hpp"

namespace gridmorse {

std::string label_to_string(SubsetLabel s) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int b = 0; b < 32; ++b)
        if (s >> b & 1) {
            if (!first) os << ',';
            os << (b + 1);
            first = false;
        }
    os << '}';
    return os.str();
}

SubsetLabel parse_label(const std::string& text) {
    std::string t = text;
    if (t.size() < 2 || t.front() != '{' || t.back() != '}')
        throw ParseError("subset literal must look like {2,3} or {}");
    t = t.substr(1, t.size() - 2);
    SubsetLabel s = 0;
    std::istringstream is(t);
    std::string item;
    while (std::getline(is, item, ',')) {
        if (item.empty()) continue;
        int e = std::atoi(item.c_str());
        if (e < 1 || e > 31) throw ParseError("subset element out of range: " + item);
        s |= SubsetLabel(1) << (e - 1);
    }
    return s;
}

SubsetLabel mirror_label(SubsetLabel s, int ground_size) {
    SubsetLabel out = 0;
    for (int b = 0; b < ground_size; ++b)
        if (s >> b & 1) out |= SubsetLabel(1) << (ground_size - 1 - b);
    return out;
}

int GaussMatrix::row_index(SubsetLabel s) const {
    auto it = std::lower_bound(row_labels.begin(), row_labels.end(), s);
    if (it == row_labels.end() || *it != s)
        throw InvalidSpec("unknown row label " + label_to_string(s));
    return static_cast<int>(it - row_labels.begin());
}

int GaussMatrix::col_index(SubsetLabel s) const {
    auto it = std::lower_bound(col_labels.begin(), col_labels.end(), s);
    if (it == col_labels.end() || *it != s)
        throw InvalidSpec("unknown column label " + label_to_string(s));
    return static_cast<int>(it - col_labels.begin());
}

GaussMatrix GaussMatrix::transpose() const {
    GaussMatrix t;
    t.row_labels = col_labels;
    t.col_labels = row_labels;
    t.row_ground = col_ground;
    t.col_ground = row_ground;
    t.a.resize(a.size());
    for (int r = 0; r < rows(); ++r)
        for (int c = 0; c < cols(); ++c) t.a[static_cast<std::size_t>(c) * rows() + r] = at(r, c);
    return t;
}

GaussMatrix GaussMatrix::operator*(const GaussMatrix& o) const {
    if (cols() != o.rows() || col_labels != o.row_labels)
        throw InvalidSpec("matrix product: label mismatch");
    GaussMatrix r;
    r.row_labels = row_labels;
    r.col_labels = o.col_labels;
    r.row_ground = row_ground;
    r.col_ground = o.col_ground;
    r.a.assign(static_cast<std::size_t>(rows()) * o.cols(), GaussInt{});
    for (int i = 0; i < rows(); ++i)
        for (int k = 0; k < cols(); ++k) {
            const GaussInt& m = at(i, k);
            if (m.is_zero()) continue;
            for (int j = 0; j < o.cols(); ++j) {
                const GaussInt& x = o.at(k, j);
                if (!x.is_zero()) r.at(i, j) += m * x;
            }
        }
    return r;
}

std::string GaussMatrix::dump() const {
    std::ostringstream os;
    os << "gaussmat v1\n";
    os << "rows:";
    for (auto s : row_labels) os << ' ' << label_to_string(s);
    os << "\ncols:";
    for (auto s : col_labels) os << ' ' << label_to_string(s);
    os << "\n";
    for (int r = 0; r < rows(); ++r) {
        for (int c = 0; c < cols(); ++c) {
            if (c) os << ' ';
            os << at(r, c).to_string();
        }
        os << "\n";
    }
    return os.str();
}

std::int64_t fibonacci(int n) {
    std::int64_t a = 1, b = 1;  // F(0) = F(1) = 1
    for (int i = 0; i < n; ++i) {
        std::int64_t c = a + b;
        a = b;
        b = c;
    }
    return a;
}

namespace {

std::vector<SubsetLabel> all_subsets(int ground) {
    std::vector<SubsetLabel> out(std::size_t(1) << ground);
    for (std::size_t s = 0; s < out.size(); ++s) out[s] = static_cast<SubsetLabel>(s);
    return out;
}

// independent sets of the path 1-2-...-ground, ascending binary order
std::vector<SubsetLabel> path_independent_sets(int ground) {
    std::vector<SubsetLabel> out;
    for (SubsetLabel s = 0; s < (SubsetLabel(1) << ground); ++s)
        if ((s & (s >> 1)) == 0) out.push_back(s);
    return out;
}

void guard_dim(std::int64_t dim, const Caps& caps) {
    if (dim > caps.matrix_dim)
        throw CapExceeded("transfer matrix size " + std::to_string(dim) + " exceeds guard " +
                          std::to_string(caps.matrix_dim));
}

}  // namespace

GaussMatrix build_transfer(TransferKind kind, int n, const Caps& caps) {
    if (n < 1) throw InvalidSpec("transfer matrix parameter must be >= 1");
    GaussMatrix m;
    switch (kind) {
        case TransferKind::P: {
            const int rg = (n + 1) / 2, cg = n / 2;
            guard_dim(std::int64_t(1) << rg, caps);
            m.row_ground = rg;
            m.col_ground = cg;
            m.row_labels = all_subsets(rg);
            m.col_labels = all_subsets(cg);
            m.a.assign(static_cast<std::size_t>(m.rows()) * m.cols(), GaussInt{});
            for (int r = 0; r < m.rows(); ++r)
                for (int c = 0; c < m.cols(); ++c) {
                    SubsetLabel cs = m.row_labels[r], ds = m.col_labels[c];
                    if ((cs & ds) == 0 && (cs & (ds << 1)) == 0)
                        m.at(r, c) = GaussInt::i_power(std::popcount(cs) + std::popcount(ds));
                }
            return m;
        }
        case TransferKind::R: {
            const int rg = (n + 1) / 2, low = n / 2;
            guard_dim(std::int64_t(1) << rg, caps);
            m.row_ground = m.col_ground = rg;
            m.row_labels = m.col_labels = all_subsets(rg);
            m.a.assign(static_cast<std::size_t>(m.rows()) * m.cols(), GaussInt{});
            const SubsetLabel cover = low == 0 ? 0 : (SubsetLabel(1) << low) - 1;
            for (int r = 0; r < m.rows(); ++r)
                for (int c = 0; c < m.cols(); ++c) {
                    SubsetLabel cs = m.row_labels[r], ds = m.col_labels[c];
                    SubsetLabel u = cs | ds | (cs >> 1) | (ds >> 1);
                    if ((cover & ~u) == 0)
                        m.at(r, c) = GaussInt::i_power(std::popcount(cs) + std::popcount(ds));
                }
            return m;
        }
        case TransferKind::L:
        case TransferKind::O: {
            guard_dim(fibonacci(n + 1), caps);
            m.row_ground = m.col_ground = n;
            m.row_labels = m.col_labels = path_independent_sets(n);
            m.a.assign(static_cast<std::size_t>(m.rows()) * m.cols(), GaussInt{});
            for (int r = 0; r < m.rows(); ++r)
                for (int c = 0; c < m.cols(); ++c) {
                    SubsetLabel cs = m.row_labels[r], ds = m.col_labels[c];
                    bool ok = kind == TransferKind::L ? (cs & (ds << 1)) == 0 : (cs & ds) == 0;
                    if (ok) m.at(r, c) = GaussInt::i_power(std::popcount(cs) + std::popcount(ds));
                }
            return m;
        }
    }
    throw InvalidSpec("unknown transfer kind");
}

bool check_R_consistency(int n, const Caps& caps) {
    GaussMatrix p = build_transfer(TransferKind::P, n, caps);
    GaussMatrix direct = build_transfer(TransferKind::R, n, caps);
    return p * p.transpose() == direct;
}

namespace {

// Sparse unit-entry view: all transfer matrices have entries in
// {0, +-1, +-i}, so multiplying by them needs no bigint multiplication.
struct UnitSparse {
    bool usable = true;
    int dim = 0;
    // per row: (col, code) with code = k for entry i^k
    std::vector<std::vector<std::pair<int, int>>> rows;

    static UnitSparse from(const GaussMatrix& m) {
        UnitSparse s;
        s.dim = m.rows();
        s.rows.resize(s.dim);
        for (int r = 0; r < s.dim; ++r)
            for (int c = 0; c < s.dim; ++c) {
                const GaussInt& e = m.at(r, c);
                if (e.is_zero()) continue;
                int code;
                if (e == GaussInt(1))
                    code = 0;
                else if (e == GaussInt{0, 1})
                    code = 1;
                else if (e == GaussInt(-1))
                    code = 2;
                else if (e == GaussInt{0, -1})
                    code = 3;
                else {
                    s.usable = false;
                    return s;
                }
                s.rows[r].push_back({c, code});
            }
        return s;
    }
};

void accumulate(GaussInt& acc, const GaussInt& x, int code) {
    switch (code) {
        case 0: acc += x; break;
        case 1: acc += x.times_i(); break;
        case 2: acc -= x; break;
        default: acc -= x.times_i(); break;
    }
}

// Power sums p_k = tr(m^k) for k = 1..kmax.
std::vector<GaussInt> power_sums(const GaussMatrix& m, int kmax) {
    if (!m.square()) throw InvalidSpec("power sums require a square matrix");
    const int d = m.rows();
    UnitSparse sparse = UnitSparse::from(m);
    std::vector<GaussInt> sums(kmax + 1);
    sums[0] = GaussInt(d);
    std::vector<GaussInt> power(m.a);  // m^1
    std::vector<GaussInt> next(power.size());
    for (int k = 1; k <= kmax; ++k) {
        GaussInt tr;
        for (int i = 0; i < d; ++i) tr += power[static_cast<std::size_t>(i) * d + i];
        sums[k] = tr;
        if (k == kmax) break;
        std::fill(next.begin(), next.end(), GaussInt{});
        if (sparse.usable) {
            for (int i = 0; i < d; ++i)
                for (auto [j, code] : sparse.rows[i]) {
                    const GaussInt* src = &power[static_cast<std::size_t>(j) * d];
                    GaussInt* dst = &next[static_cast<std::size_t>(i) * d];
                    for (int c = 0; c < d; ++c) accumulate(dst[c], src[c], code);
                }
        } else {
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) {
                    const GaussInt& e = m.at(i, j);
                    if (e.is_zero()) continue;
                    const GaussInt* src = &power[static_cast<std::size_t>(j) * d];
                    GaussInt* dst = &next[static_cast<std::size_t>(i) * d];
                    for (int c = 0; c < d; ++c)
                        if (!src[c].is_zero()) dst[c] += e * src[c];
                }
        }
        power.swap(next);
    }
    return sums;
}

// e_k from Newton's identities: k e_k = sum_{j=1..k} (-1)^(j-1) e_{k-j} p_j.
std::vector<GaussInt> elementary_from_power_sums(const std::vector<GaussInt>& p, int d) {
    std::vector<GaussInt> e(d + 1);
    e[0] = GaussInt(1);
    for (int k = 1; k <= d; ++k) {
        GaussInt acc;
        for (int j = 1; j <= k; ++j) {
            GaussInt term = e[k - j] * p[j];
            if (j % 2 == 0)
                acc -= term;
            else
                acc += term;
        }
        e[k] = acc.div_exact(k);
    }
    return e;
}

std::vector<GaussInt> char_poly_elementaries(const GaussMatrix& m) {
    const int d = m.rows();
    auto p = power_sums(m, d);
    return elementary_from_power_sums(p, d);
}

BigInt real_part_checked(const GaussInt& g, int k) {
    if (!g.is_real())
        throw Error("characteristic polynomial coefficient e_" + std::to_string(k) +
                    " has nonzero imaginary part " + g.to_string());
    return g.re;
}

}  // namespace

std::vector<GaussInt> mat_pow_trace(const GaussMatrix& m, int kmax) {
    return power_sums(m, kmax);
}

std::vector<GaussInt> resolvent_series(const GaussMatrix& m, SubsetLabel row, SubsetLabel col,
                                       int order) {
    if (!m.square()) throw InvalidSpec("resolvent series requires a square matrix");
    const int d = m.rows();
    const int ri = m.row_index(row), ci = m.col_index(col);
    std::vector<GaussInt> v(d);
    v[ci] = GaussInt(1);
    std::vector<GaussInt> out;
    out.reserve(order + 1);
    out.push_back(v[ri]);
    std::vector<GaussInt> next(d);
    for (int n = 1; n <= order; ++n) {
        std::fill(next.begin(), next.end(), GaussInt{});
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                const GaussInt& e = m.at(i, j);
                if (!e.is_zero() && !v[j].is_zero()) next[i] += e * v[j];
            }
        v.swap(next);
        out.push_back(v[ri]);
    }
    return out;
}

IntPoly char_poly(const GaussMatrix& m) {
    const int d = m.rows();
    auto e = char_poly_elementaries(m);
    IntPoly p;
    p.c.assign(d + 1, 0);
    for (int k = 0; k <= d; ++k) {
        BigInt v = real_part_checked(e[k], k);
        p.c[d - k] = (k % 2 == 0) ? v : -v;
    }
    p.trim();
    return p;
}

IntPoly char_poly_rev(const GaussMatrix& m) {
    const int d = m.rows();
    auto e = char_poly_elementaries(m);
    IntPoly p;
    p.c.assign(d + 1, 0);
    for (int k = 0; k <= d; ++k) {
        BigInt v = real_part_checked(e[k], k);
        p.c[k] = (k % 2 == 0) ? v : -v;
    }
    p.trim();
    return p;
}

IntPoly predicted_charpoly(TransferKind kind, int n) {
    if (kind != TransferKind::R && kind != TransferKind::L)
        throw InvalidSpec("spectrum prediction exists only for R and L");
    if (n < 1) throw InvalidSpec("N must be >= 1");
    const std::int64_t d =
        kind == TransferKind::R ? (std::int64_t(1) << ((n + 1) / 2)) : fibonacci(n + 1);
    if (n % 3 == 1) return IntPoly::monomial(static_cast<int>(d));
    const int nn = (n + 2) / 3;  // ceil(N/3)
    const std::int64_t two_n = std::int64_t(1) << nn;
    const std::int64_t sign = nn % 2 == 0 ? 1 : -1;
    const std::int64_t a = (two_n + 2 * sign) / 3;
    const std::int64_t b = (two_n - sign) / 3;
    const std::int64_t z = d - two_n;
    IntPoly p = IntPoly::monomial(static_cast<int>(z));
    p = p * IntPoly{-1, 1}.pow(static_cast<int>(a));      // (x - 1)^a
    p = p * IntPoly{1, 1, 1}.pow(static_cast<int>(b));    // (x^2 + x + 1)^b
    return p;
}

}  // namespace gridmorse
