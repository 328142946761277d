#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gridmorse/caps.hpp"
#include "gridmorse/gaussint.hpp"
#include "gridmorse/intpoly.hpp"

namespace gridmorse {

// Row/column label: a subset of {1..r} packed as a bitmask, bit b meaning
// element b+1. Labels are listed in ascending binary order.
using SubsetLabel = std::uint32_t;

std::string label_to_string(SubsetLabel s);               // "{1,3}" or "{}"
SubsetLabel parse_label(const std::string& text);          // accepts "{2,3}", "{}"
SubsetLabel mirror_label(SubsetLabel s, int ground_size);  // element e -> ground_size+1-e

// Dense matrix over exact Gaussian integers with labeled rows/columns.
struct GaussMatrix {
    std::vector<SubsetLabel> row_labels, col_labels;
    int row_ground = 0, col_ground = 0;  // ground set sizes {1..r}
    std::vector<GaussInt> a;             // row-major

    int rows() const { return static_cast<int>(row_labels.size()); }
    int cols() const { return static_cast<int>(col_labels.size()); }
    bool square() const { return rows() == cols(); }
    GaussInt& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols() + c]; }
    const GaussInt& at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols() + c]; }

    int row_index(SubsetLabel s) const;  // throws on unknown label
    int col_index(SubsetLabel s) const;

    GaussMatrix transpose() const;
    GaussMatrix operator*(const GaussMatrix& o) const;
    bool operator==(const GaussMatrix&) const = default;

    std::string dump() const;  // "gaussmat v1" document
};

enum class TransferKind { P, R, L, O };

// The four transfer matrices:
//   P(N): rows = subsets of {1..ceil(N/2)}, cols = subsets of {1..floor(N/2)},
//         entry i^(|C|+|D|) iff C n D = C n (D+1) = empty.
//   R(N): square on subsets of {1..ceil(N/2)},
//         entry i^(|C|+|D|) iff {1..floor(N/2)} is covered by C u D u (C-1) u (D-1).
//   L(N): square on independent sets of the N-point segment,
//         entry i^(|C|+|D|) iff C n (D+1) = empty.
//   O(K): square on independent sets of the K-point segment,
//         entry i^(|C|+|D|) iff C n D = empty.
GaussMatrix build_transfer(TransferKind kind, int n, const Caps& caps = {});

// Fibonacci with F(0) = F(1) = 1; F(N+1) is the size of L(N) and O(N).
std::int64_t fibonacci(int n);

// R_N == P_N * transpose(P_N), entrywise.
bool check_R_consistency(int n, const Caps& caps = {});

// Exact traces tr(m^0), ..., tr(m^kmax).
std::vector<GaussInt> mat_pow_trace(const GaussMatrix& m, int kmax);

// Coefficients of t^0..t^order of (1 - t m)^{-1}(row, col).
std::vector<GaussInt> resolvent_series(const GaussMatrix& m, SubsetLabel row, SubsetLabel col, int order);

// Monic characteristic polynomial det(xI - m), computed exactly from power
// sums and Newton's identities. Throws if any coefficient has a nonzero
// imaginary part (all matrices here are real-spectral; asserted, not
// assumed).
IntPoly char_poly(const GaussMatrix& m);

// det(I - t m), the degree-d reversal with matching sign convention:
// det(I - t m) = sum_k (-1)^k e_k(lambda) t^k.
IntPoly char_poly_rev(const GaussMatrix& m);

// Spectrum predictions: x^z (x-1)^a (x^2+x+1)^b with z = d - 2^n,
// a = (2^n + 2(-1)^n)/3, b = (2^n - (-1)^n)/3, n = ceil(N/3); plain x^d
// when N = 1 mod 3 (nilpotent). d = 2^ceil(N/2) for R, F(N+1) for L.
IntPoly predicted_charpoly(TransferKind kind, int n);

}  // namespace gridmorse
