#include "gridmorse/intpoly.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <unordered_map>

#include "gridmorse/errors.hpp"

namespace gridmorse {

IntPoly::IntPoly(std::initializer_list<long long> v) {
    for (long long x : v) c.emplace_back(x);
    trim();
}

IntPoly IntPoly::constant(BigInt v) {
    IntPoly p;
    if (v != 0) p.c.push_back(std::move(v));
    return p;
}

IntPoly IntPoly::monomial(int deg, BigInt coeff) {
    IntPoly p;
    if (coeff != 0) {
        p.c.assign(deg + 1, 0);
        p.c[deg] = std::move(coeff);
    }
    return p;
}

IntPoly IntPoly::one_minus_power(int n) {
    IntPoly p;
    p.c.assign(n + 1, 0);
    p.c[0] = 1;
    p.c[n] -= 1;
    p.trim();
    return p;
}

IntPoly IntPoly::one_plus_power(int n) {
    IntPoly p;
    p.c.assign(n + 1, 0);
    p.c[0] = 1;
    p.c[n] += 1;
    return p;
}

void IntPoly::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

BigInt IntPoly::eval(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    IntPoly r;
    r.c.resize(std::max(c.size(), o.c.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) r.c[i] += c[i];
    for (std::size_t i = 0; i < o.c.size(); ++i) r.c[i] += o.c[i];
    r.trim();
    return r;
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    IntPoly r;
    r.c.resize(std::max(c.size(), o.c.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) r.c[i] += c[i];
    for (std::size_t i = 0; i < o.c.size(); ++i) r.c[i] -= o.c[i];
    r.trim();
    return r;
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    IntPoly r;
    r.c.assign(c.size() + o.c.size() - 1, 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        for (std::size_t j = 0; j < o.c.size(); ++j) r.c[i + j] += c[i] * o.c[j];
    }
    r.trim();
    return r;
}

IntPoly IntPoly::pow(int e) const {
    IntPoly r = IntPoly::constant(1);
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
}

std::optional<IntPoly> IntPoly::divide_exact(const IntPoly& d) const {
    if (d.is_zero()) return std::nullopt;
    if (is_zero()) return IntPoly{};
    if (degree() < d.degree()) return std::nullopt;
    IntPoly rem = *this;
    IntPoly quo;
    quo.c.assign(degree() - d.degree() + 1, 0);
    while (!rem.is_zero() && rem.degree() >= d.degree()) {
        const int k = rem.degree() - d.degree();
        if (rem.c.back() % d.leading() != 0) return std::nullopt;
        BigInt q = rem.c.back() / d.leading();
        quo.c[k] = q;
        for (int i = 0; i <= d.degree(); ++i) rem.c[k + i] -= q * d.c[i];
        rem.trim();
    }
    if (!rem.is_zero()) return std::nullopt;
    quo.trim();
    return quo;
}

std::string IntPoly::to_string(const std::string& var, bool ascending) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    auto emit = [&](int k) {
        const BigInt& v = c[k];
        if (v == 0) return;
        BigInt mag = v < 0 ? BigInt(-v) : v;
        if (first) {
            if (v < 0) os << '-';
            first = false;
        } else {
            os << (v < 0 ? " - " : " + ");
        }
        if (k == 0 || mag != 1) os << mag;
        if (k > 0) {
            os << var;
            if (k > 1) os << '^' << k;
        }
    };
    if (ascending)
        for (int k = 0; k <= degree(); ++k) emit(k);
    else
        for (int k = degree(); k >= 0; --k) emit(k);
    return os.str();
}

// Phi_n via exact recursive division of t^n - 1, normalized to constant
// term 1 (so Phi_1 is represented as 1 - t).
const IntPoly& cyclotomic(int n) {
    static std::unordered_map<int, IntPoly> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    std::vector<int> pending = {n};
    while (!pending.empty()) {
        int m = pending.back();
        if (cache.count(m)) {
            pending.pop_back();
            continue;
        }
        bool ready = true;
        for (int d = 1; d < m; ++d)
            if (m % d == 0 && !cache.count(d)) {
                pending.push_back(d);
                ready = false;
            }
        if (!ready) continue;
        pending.pop_back();
        // (1 - t^m) / prod_{d|m, d<m} phi_d  keeps constant term 1 throughout
        IntPoly p = IntPoly::one_minus_power(m);
        if (m == 1) {
            cache.emplace(1, p);
            continue;
        }
        for (int d = 1; d < m; ++d)
            if (m % d == 0) {
                auto q = p.divide_exact(cache.at(d));
                if (!q) throw Error("cyclotomic recursion failed");
                p = std::move(*q);
            }
        cache.emplace(m, std::move(p));
    }
    return cache.at(n);
}

std::string CyclotomicFactorization::to_string() const {
    std::ostringstream os;
    bool first = true;
    auto sep = [&] {
        if (!first) os << " * ";
        first = false;
    };
    if (t_power > 0) {
        sep();
        os << "t";
        if (t_power > 1) os << '^' << t_power;
    }
    for (auto& [n, mult] : phi_multiplicity) {
        sep();
        os << "Phi" << n;
        if (mult > 1) os << '^' << mult;
    }
    if (!(remainder == IntPoly::constant(1))) {
        sep();
        os << "rem(" << remainder.to_string("t", true) << ")";
    }
    if (first) os << "1";
    return os.str();
}

CyclotomicFactorization cyclotomic_factorize(const IntPoly& p, int nmax) {
    if (p.is_zero()) throw InvalidSpec("cannot factorize the zero polynomial");
    CyclotomicFactorization f;
    IntPoly rest = p;
    while (rest.coeff(0) == 0) {
        ++f.t_power;
        rest.c.erase(rest.c.begin());
    }
    if (nmax < 0) nmax = std::max(2 * rest.degree(), 6);
    for (int n = 1; n <= nmax && rest.degree() > 0; ++n) {
        const IntPoly& phi = cyclotomic(n);
        if (phi.degree() > rest.degree()) continue;
        while (true) {
            auto q = rest.divide_exact(phi);
            if (!q) break;
            ++f.phi_multiplicity[n];
            rest = std::move(*q);
        }
    }
    f.remainder = std::move(rest);
    return f;
}

RationalGF::RationalGF(IntPoly n, IntPoly d) : num(std::move(n)), den(std::move(d)) {
    if (den.coeff(0) != 1) throw InvalidSpec("generating function denominator must have den(0) = 1");
}

namespace {

BigInt content_of(const IntPoly& p) {
    BigInt c = 0;
    for (const auto& x : p.c) c = boost::multiprecision::gcd(c, x);
    return c;
}

IntPoly primitive_part(IntPoly p) {
    BigInt c = content_of(p);
    if (c > 1)
        for (auto& x : p.c) x /= c;
    return p;
}

// primitive pseudo-remainder sequence
IntPoly poly_gcd(IntPoly a, IntPoly b) {
    a = primitive_part(std::move(a));
    b = primitive_part(std::move(b));
    while (!b.is_zero()) {
        if (a.degree() < b.degree()) std::swap(a, b);
        // pseudo-remainder: lc(b)^(da-db+1) * a mod b
        IntPoly r = a;
        const BigInt lead = b.leading();
        for (int k = r.degree(); k >= b.degree() && !r.is_zero(); k = r.degree()) {
            BigInt q = r.c.back();
            for (auto& x : r.c) x *= lead;
            for (int i = 0; i <= b.degree(); ++i)
                r.c[k - b.degree() + i] -= q * b.c[i];
            r.trim();
        }
        a = std::move(b);
        b = primitive_part(std::move(r));
    }
    return a;
}

}  // namespace

RationalGF RationalGF::reduced() const {
    IntPoly g = poly_gcd(num, den);
    if (g.degree() < 1) return *this;  // den(0) = 1 already precludes shared content
    IntPoly n2 = *num.divide_exact(g);
    IntPoly d2 = *den.divide_exact(g);
    if (d2.coeff(0) < 0) {
        n2 = IntPoly{} - n2;
        d2 = IntPoly{} - d2;
    }
    return RationalGF(std::move(n2), std::move(d2));
}

std::string RationalGF::to_string() const {
    return "(" + num.to_string("t", true) + ") / (" + den.to_string("t", true) + ")";
}

std::vector<BigInt> series_of_rational(const RationalGF& gf, int order) {
    std::vector<BigInt> out(order + 1, 0);
    for (int n = 0; n <= order; ++n) {
        BigInt acc = gf.num.coeff(n);
        for (int i = 1; i <= std::min(n, gf.den.degree()); ++i) acc -= gf.den.coeff(i) * out[n - i];
        out[n] = acc;  // den(0) = 1
    }
    return out;
}

std::optional<RationalGF> fit_linear_recurrence(const std::vector<BigInt>& series, int maxdeg) {
    if (static_cast<int>(series.size()) < 2 * maxdeg + 2)
        throw InvalidSpec("fit needs series length >= 2*maxdeg+2");

    // Berlekamp-Massey over the rationals.
    const int nlen = static_cast<int>(series.size());
    std::vector<BigRat> s(series.begin(), series.end());
    std::vector<BigRat> conn(nlen + 1, BigRat(0)), back(nlen + 1, BigRat(0));
    conn[0] = back[0] = 1;
    int l = 0, m = 1;
    BigRat b = 1;
    for (int n = 0; n < nlen; ++n) {
        BigRat d = s[n];
        for (int i = 1; i <= l; ++i) d += conn[i] * s[n - i];
        if (d == 0) {
            ++m;
        } else if (2 * l <= n) {
            std::vector<BigRat> t = conn;
            BigRat coef = d / b;
            for (int i = 0; i + m <= nlen; ++i) conn[i + m] -= coef * back[i];
            l = n + 1 - l;
            back = std::move(t);
            b = d;
            m = 1;
        } else {
            BigRat coef = d / b;
            for (int i = 0; i + m <= nlen; ++i) conn[i + m] -= coef * back[i];
            ++m;
        }
    }
    if (l > maxdeg) return std::nullopt;
    conn.resize(l + 1);

    // clear denominators; reduced integer form has den(0) = +-1 for
    // integer rational series
    BigInt lcm = 1;
    for (auto& x : conn) lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(x));
    IntPoly den;
    den.c.resize(conn.size());
    for (std::size_t i = 0; i < conn.size(); ++i)
        den.c[i] = boost::multiprecision::numerator(conn[i]) * (lcm / boost::multiprecision::denominator(conn[i]));
    den.trim();
    IntPoly ser;
    ser.c = series;
    ser.trim();
    IntPoly num = den * ser;
    num.c.resize(std::max(l, 1));
    num.trim();
    BigInt content = 0;
    for (auto& x : den.c) content = boost::multiprecision::gcd(content, x);
    for (auto& x : num.c) content = boost::multiprecision::gcd(content, x);
    if (content > 1) {
        for (auto& x : den.c) x /= content;
        for (auto& x : num.c) x /= content;
    }
    if (den.coeff(0) == -1) {
        den = IntPoly{} - den;
        num = IntPoly{} - num;
    }
    if (den.coeff(0) != 1) return std::nullopt;

    RationalGF gf(num, den);
    auto check = series_of_rational(gf, static_cast<int>(series.size()) - 1);
    for (std::size_t i = 0; i < series.size(); ++i)
        if (check[i] != series[i]) return std::nullopt;
    return gf;
}

}  // namespace gridmorse
