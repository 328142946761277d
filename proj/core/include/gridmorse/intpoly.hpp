#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gridmorse/bigint.hpp"

namespace gridmorse {

// Exact integer polynomial, coefficients ascending by degree, trailing
// zeros trimmed. The zero polynomial has an empty coefficient list.
struct IntPoly {
    std::vector<BigInt> c;

    IntPoly() = default;
    IntPoly(std::initializer_list<long long> v);
    static IntPoly constant(BigInt v);
    static IntPoly monomial(int deg, BigInt coeff = 1);
    static IntPoly one_minus_power(int n);  // 1 - t^n
    static IntPoly one_plus_power(int n);   // 1 + t^n

    void trim();
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
    BigInt coeff(int k) const { return k >= 0 && k < (int)c.size() ? c[k] : BigInt(0); }
    BigInt leading() const { return c.empty() ? BigInt(0) : c.back(); }
    BigInt eval(const BigInt& x) const;

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly pow(int e) const;

    // Exact long division; nullopt if the division leaves a remainder or a
    // non-integer quotient step.
    std::optional<IntPoly> divide_exact(const IntPoly& d) const;
    bool divisible_by(const IntPoly& d) const { return divide_exact(d).has_value(); }

    bool operator==(const IntPoly&) const = default;

    // "x^2 - x + 1" (descending) or "1 - t + t^2" (ascending).
    std::string to_string(const std::string& var = "x", bool ascending = false) const;
};

// Cyclotomic factors are normalized with constant term 1: for n >= 2 this
// is the standard (palindromic) Phi_n, for n = 1 it is 1 - t.
const IntPoly& cyclotomic(int n);

struct CyclotomicFactorization {
    int t_power = 0;
    std::map<int, int> phi_multiplicity;  // n -> multiplicity of Phi_n
    IntPoly remainder;                    // non-cyclotomic residue

    std::string to_string() const;  // "t^3 * Phi2 * Phi6^2 * rem(...)"
};

// Extracts t^k, then divides out cyclotomic factors Phi_n, n <= nmax
// (default 2*deg), smallest n first.
CyclotomicFactorization cyclotomic_factorize(const IntPoly& p, int nmax = -1);

// Rational generating function num/den with den(0) = 1.
struct RationalGF {
    IntPoly num, den;

    RationalGF() : den(IntPoly::constant(1)) {}
    RationalGF(IntPoly n, IntPoly d);

    RationalGF reduced() const;  // divide by polynomial gcd (content included)
    bool operator==(const RationalGF&) const = default;
    std::string to_string() const;
};

// Exact power-series expansion of gf to the given order (inclusive).
std::vector<BigInt> series_of_rational(const RationalGF& gf, int order);

// Minimal rational function reproducing the whole series (shortest linear
// recurrence, Berlekamp-Massey over the rationals). Requires
// series.size() >= 2*maxdeg+2; returns nullopt when the recurrence does
// not stabilize within maxdeg.
std::optional<RationalGF> fit_linear_recurrence(const std::vector<BigInt>& series, int maxdeg);

}  // namespace gridmorse
