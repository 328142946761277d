#include <doctest.h>

#include "gridmorse/counting.hpp"
#include "gridmorse/errors.hpp"
#include "gridmorse/transfer.hpp"

using namespace gridmorse;

namespace {

GaussInt I(long long re, long long im) { return GaussInt{BigInt(re), BigInt(im)}; }

}  // namespace

TEST_CASE("subset labels") {
    CHECK(label_to_string(0) == "{}");
    CHECK(label_to_string(parse_label("{2,3}")) == "{2,3}");
    CHECK(parse_label("{}") == 0);
    CHECK(mirror_label(parse_label("{3,4}"), 5) == parse_label("{2,3}"));
    CHECK(mirror_label(parse_label("{2,3}"), 4) == parse_label("{2,3}"));
    CHECK_THROWS_AS(parse_label("2,3"), ParseError);
}

TEST_CASE("transfer matrix instances") {
    GaussMatrix o1 = build_transfer(TransferKind::O, 1);
    REQUIRE(o1.rows() == 2);
    CHECK(o1.row_labels == std::vector<SubsetLabel>{0, 1});
    CHECK(o1.at(0, 0) == I(1, 0));
    CHECK(o1.at(0, 1) == I(0, 1));
    CHECK(o1.at(1, 0) == I(0, 1));
    CHECK(o1.at(1, 1) == I(0, 0));

    GaussMatrix p2 = build_transfer(TransferKind::P, 2);
    REQUIRE(p2.rows() == 2);
    REQUIRE(p2.cols() == 2);
    CHECK(p2.at(0, 0) == I(1, 0));
    CHECK(p2.at(0, 1) == I(0, 1));
    CHECK(p2.at(1, 0) == I(0, 1));
    CHECK(p2.at(1, 1) == I(0, 0));

    GaussMatrix r2 = build_transfer(TransferKind::R, 2);
    CHECK(r2.at(0, 0) == I(0, 0));
    CHECK(r2.at(0, 1) == I(0, 1));
    CHECK(r2.at(1, 0) == I(0, 1));
    CHECK(r2.at(1, 1) == I(-1, 0));

    // L(3) and O(3) act on the independent sets of the 3-point segment
    GaussMatrix l3 = build_transfer(TransferKind::L, 3);
    CHECK(l3.rows() == 5);
    CHECK(l3.rows() == fibonacci(4));

    Caps tight;
    tight.matrix_dim = 4;
    CHECK_THROWS_AS(build_transfer(TransferKind::R, 7, tight), CapExceeded);
}

TEST_CASE("R_N = P_N * P_N^T") {
    for (int n = 1; n <= 12; ++n) CHECK(check_R_consistency(n));
}

TEST_CASE("traces") {
    GaussMatrix o2 = build_transfer(TransferKind::O, 2);
    auto t = mat_pow_trace(o2, 3);
    CHECK(t[0] == I(3, 0));  // tr(m^0) = d
    CHECK(t[3] == I(1, 0));  // triangular prism: 1 - 6 + 6

    auto tr5 = mat_pow_trace(build_transfer(TransferKind::R, 5), 4);
    CHECK(tr5[0] == I(8, 0));
    CHECK(tr5[1] == I(1, 0));
    CHECK(tr5[2] == I(1, 0));
    CHECK(tr5[3] == I(4, 0));
    CHECK(tr5[4] == I(1, 0));
}

TEST_CASE("resolvent series") {
    GaussMatrix o1 = build_transfer(TransferKind::O, 1);
    auto s0 = resolvent_series(o1, 0, 1, 0);
    CHECK(s0 == std::vector<GaussInt>{I(0, 0)});  // delta_{C,D}
    auto s1 = resolvent_series(o1, 0, 0, 0);
    CHECK(s1 == std::vector<GaussInt>{I(1, 0)});

    // K=4 (K = 1 mod 3) open generating function: 1/(1-t+t^2)
    GaussMatrix p8 = build_transfer(TransferKind::P, 8);
    auto s = resolvent_series(p8, 0, 0, 7);
    std::vector<long long> expect = {1, 1, 0, -1, -1, 0, 1, 1};
    REQUIRE(s.size() == expect.size());
    for (std::size_t i = 0; i < s.size(); ++i) CHECK(s[i] == I(expect[i], 0));

    // the resolvent entries are alternating parallelogram counts:
    // coefficient n equals Z_P(K, n-1) for n >= 1
    for (int n = 2; n <= 6; ++n) {
        BigInt z = alternating_number(build_graph(FamilySpec::parallelogram(4, n - 1)));
        CHECK(s[n].re == z);
    }

    // R_4 is nilpotent: every diagonal resolvent entry is a polynomial of
    // degree at most 3
    GaussMatrix r4 = build_transfer(TransferKind::R, 4);
    for (SubsetLabel c : r4.row_labels) {
        auto sr = resolvent_series(r4, c, c, 10);
        for (int k = 4; k <= 10; ++k) CHECK(sr[k].is_zero());
    }

    CHECK_THROWS_AS(resolvent_series(o1, 2, 0, 3), InvalidSpec);
}

TEST_CASE("resolvent diagonal sums equal traces") {
    for (auto [kind, n] : {std::pair{TransferKind::O, 3}, {TransferKind::R, 4},
                           {TransferKind::L, 4}}) {
        GaussMatrix m = build_transfer(kind, n);
        auto tr = mat_pow_trace(m, 5);
        std::vector<GaussInt> sums(6);
        for (SubsetLabel c : m.row_labels) {
            auto s = resolvent_series(m, c, c, 5);
            for (int k = 0; k <= 5; ++k) sums[k] += s[k];
        }
        for (int k = 0; k <= 5; ++k) CHECK(sums[k] == tr[k]);
    }
}

TEST_CASE("characteristic polynomials") {
    CHECK(char_poly(build_transfer(TransferKind::O, 1)) == IntPoly{1, -1, 1});
    CHECK(char_poly_rev(build_transfer(TransferKind::O, 1)) == IntPoly{1, -1, 1});
    CHECK(char_poly(build_transfer(TransferKind::R, 2)) == IntPoly{1, 1, 1});

    GaussMatrix zero;
    zero.row_labels = zero.col_labels = {0, 1, 2};
    zero.row_ground = zero.col_ground = 2;
    zero.a.assign(9, GaussInt{});
    CHECK(char_poly(zero) == IntPoly::monomial(3));
    CHECK(char_poly_rev(zero) == IntPoly{1});

    CHECK(char_poly(build_transfer(TransferKind::O, 1)).to_string() == "x^2 - x + 1");
    CHECK(char_poly_rev(build_transfer(TransferKind::O, 1)).to_string("t", true) == "1 - t + t^2");
}

TEST_CASE("predicted spectra") {
    CHECK(predicted_charpoly(TransferKind::R, 4) == IntPoly::monomial(4));
    CHECK(predicted_charpoly(TransferKind::R, 2) == IntPoly{1, 1, 1});
    // L(2): d = F(3) = 3, n = 1 -> x (x^2+x+1)
    CHECK(predicted_charpoly(TransferKind::L, 2) == IntPoly{0, 1, 1, 1});
    CHECK_THROWS_AS(predicted_charpoly(TransferKind::O, 2), InvalidSpec);
}

TEST_CASE("matrix dump format") {
    GaussMatrix o1 = build_transfer(TransferKind::O, 1);
    CHECK(o1.dump() == "gaussmat v1\nrows: {} {1}\ncols: {} {1}\n1 i\ni 0\n");
}

TEST_CASE("char_poly surfaces non-real coefficients") {
    GaussMatrix m;
    m.row_labels = m.col_labels = {0};
    m.row_ground = m.col_ground = 1;
    m.a = {GaussInt{0, 1}};  // the 1x1 matrix [i] has char poly x - i
    CHECK_THROWS_AS(char_poly(m), Error);
    CHECK_THROWS_AS(char_poly_rev(m), Error);
}

namespace {

// test-only oracle: fraction-free Bareiss determinant over the Gaussian
// integers (all divisions are exact by previous pivots)
GaussInt bareiss_det(std::vector<GaussInt> m, int d) {
    if (d == 0) return GaussInt(1);
    auto at = [&](int r, int c) -> GaussInt& { return m[r * d + c]; };
    auto div_exact = [](const GaussInt& a, const GaussInt& b) {
        BigInt norm = b.re * b.re + b.im * b.im;
        GaussInt num = a * b.conj();
        REQUIRE(norm != 0);
        REQUIRE(num.re % norm == 0);
        REQUIRE(num.im % norm == 0);
        return GaussInt{num.re / norm, num.im / norm};
    };
    GaussInt prev(1);
    int sign = 1;
    for (int k = 0; k < d - 1; ++k) {
        if (at(k, k).is_zero()) {
            int piv = -1;
            for (int r = k + 1; r < d; ++r)
                if (!at(r, k).is_zero()) {
                    piv = r;
                    break;
                }
            if (piv == -1) return GaussInt(0);
            for (int c = 0; c < d; ++c) std::swap(at(k, c), at(piv, c));
            sign = -sign;
        }
        for (int i = k + 1; i < d; ++i)
            for (int j = k + 1; j < d; ++j)
                at(i, j) = div_exact(at(i, j) * at(k, k) - at(i, k) * at(k, j), prev);
        prev = at(k, k);
    }
    GaussInt det = at(d - 1, d - 1);
    return sign == 1 ? det : GaussInt(0) - det;
}

}  // namespace

TEST_CASE("char_poly agrees with a Bareiss determinant oracle") {
    for (auto [kind, n] : {std::pair{TransferKind::O, 3}, {TransferKind::O, 4},
                           {TransferKind::R, 4}, {TransferKind::R, 5}, {TransferKind::L, 3}}) {
        GaussMatrix m = build_transfer(kind, n);
        IntPoly p = char_poly(m);
        const int d = m.rows();
        for (long long c = -2; c <= 3; ++c) {
            // det(cI - m) evaluated directly
            std::vector<GaussInt> shifted = m.a;
            for (auto& e : shifted) e = GaussInt(0) - e;
            for (int i = 0; i < d; ++i) shifted[i * d + i] += GaussInt(c);
            GaussInt det = bareiss_det(std::move(shifted), d);
            REQUIRE(det.is_real());
            CHECK(det.re == p.eval(c));
        }
    }
}
