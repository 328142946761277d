#pragma once

#include <string>

#include "gridmorse/bigint.hpp"

namespace gridmorse {

// Exact Gaussian integer re + im*i. No rounding anywhere.
struct GaussInt {
    BigInt re, im;

    GaussInt() = default;
    GaussInt(long long r) : re(r) {}
    GaussInt(BigInt r, BigInt i) : re(std::move(r)), im(std::move(i)) {}

    static GaussInt i_power(int k) {  // i^k
        switch (((k % 4) + 4) % 4) {
            case 0: return {1, 0};
            case 1: return {0, 1};
            case 2: return {-1, 0};
            default: return {0, -1};
        }
    }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussInt& operator+=(const GaussInt& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussInt& operator-=(const GaussInt& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    friend GaussInt operator+(GaussInt a, const GaussInt& b) { return a += b; }
    friend GaussInt operator-(GaussInt a, const GaussInt& b) { return a -= b; }
    friend GaussInt operator*(const GaussInt& a, const GaussInt& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    GaussInt times_i() const { return {-im, re}; }
    GaussInt conj() const { return {re, -im}; }

    // Exact division by a positive integer; both parts must divide.
    GaussInt div_exact(long long k) const;

    bool operator==(const GaussInt&) const = default;

    std::string to_string() const;  // "0", "1", "-i", "1-2i", ...
};

}  // namespace gridmorse
