#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gridmorse/bigint.hpp"
#include "gridmorse/caps.hpp"
#include "gridmorse/lattice.hpp"

namespace gridmorse {

// Closed-form prediction for one family instance: the alternating number,
// contractibility, and the Morse critical-cell data (count and common
// cardinality), together with the derived parameters.
struct TheoremPrediction {
    BigInt z = 0;
    bool contractible = false;
    std::int64_t critical_count = 0;
    int critical_cardinality = 0;  // meaningful iff critical_count > 0
    int m = 0, n = 0, q = 0, r = 0;
};

// Exact case analysis for TiltedRect, TiltedRectSmooth, CylindricRect,
// Parallelogram and Quadrangle(.,.,2,2). Other families have no closed
// form and raise InvalidSpec.
TheoremPrediction predict_alternating(const FamilySpec& spec);

enum class RowStatus { Pass, Fail, Skipped, Report };

struct CheckRow {
    std::string family;  // family or identity name
    std::string params;
    std::string method;
    std::string value;  // on FAIL carries both values verbatim
    RowStatus status = RowStatus::Pass;

    std::string status_string() const;
};

struct CheckReport {
    std::vector<CheckRow> rows;
    int passed = 0, failed = 0, skipped = 0;

    void add(CheckRow row);
    void merge(const CheckReport& o);
    bool all_pass() const { return failed == 0; }

    std::string to_tsv() const;   // family  params  method  value  status
    std::string to_text() const;  // aligned summary
};

enum class Method { Predict, Brute, Frontier, Morse, Trace };

struct SuiteConfig {
    Family family = Family::TiltedRect;
    int max_m = 7;
    int max_n = 7;
    std::vector<Method> methods = {Method::Predict, Method::Frontier};
    Caps caps = Caps::from_env();
    int trace_max_k = 6;  // CylindricRect: also check tr(R_N^k) = Z
};

// Per-instance cross-checks: every requested method is computed and
// compared (exact integer equality) against the predictor when available,
// otherwise against the frontier DP. Morse rows also compare critical-cell
// count and cardinality against the prediction. Rows a cap removes are
// SKIPPED, never silently dropped.
CheckReport run_suite(const SuiteConfig& config);

struct IdentityConfig {
    int spectrum_max_n = 10;       // char_poly(R_N), char_poly(L_N) vs prediction
    int consistency_max_n = 12;    // R_N == P_N * P_N^T
    int table_max_k = 7;           // published char_poly_rev(O_K) products
    bool extended_table = false;   // adds K = 8..10
    std::vector<int> roots_k = {2, 3, 4, 5, 6, 7, 8, 9};  // root-of-unity membership
    int trace_cyl_max_n = 8;       // tr(R_N^k) = Z^c(2k, N)
    int trace_cyl_max_k = 6;
    int trace_ident_max_k = 5;     // tr(P_2K^N) = tr(O_K^N) = Z on OrdinaryCylinder
    int trace_ident_max_n = 10;
    std::vector<int> gf_k = {4, 5, 6, 7};  // resolvent (P_2K, {}, {}) closed forms
    int gf_order = 40;
    int ord_rect_series_max = 20;  // Z(4,N) vs (1+t^4)/((1-t^2)(1+t^3))
    Caps caps = Caps::from_env();
};

// Spectral and generating-function identities; see IdentityConfig.
CheckReport check_identities(const IdentityConfig& config);

// The individual identity groups behind check_identities.
CheckReport check_spectra(int spectrum_max_n, int consistency_max_n, const Caps& caps);
CheckReport check_table(int k_min, int k_max, const Caps& caps);
CheckReport check_roots(const std::vector<int>& ks, const Caps& caps);
CheckReport check_gf(const std::vector<int>& open_k, int order, int ord_rect_max, const Caps& caps);
CheckReport check_trace_cylindric(int max_n, int max_k, const Caps& caps);
CheckReport check_trace_ordcyl(int max_k, int max_n, const Caps& caps);

// Grows the family's default matching tree on every instance and runs the
// full acyclicity certificate; instances whose complex exceeds the cell
// cap are SKIPPED rows.
CheckReport check_acyclicity(const std::vector<FamilySpec>& instances, const Caps& caps);

// Fold reduction: replays every fold step, checking the alternating
// number is invariant; tilted-rectangle inputs must end with max degree
// <= 1. Covers all family instances up to max_vertices vertices plus
// seeded random induced subgraphs.
CheckReport check_fold(int max_mn, int max_vertices, int random_subgraphs, const Caps& caps);

// Exploratory report (no PASS/FAIL semantics): alternating number on
// OrdinaryCylinder(K, N) for odd N against the conjectured 1 / -2 pattern.
CheckReport fendley_report(int max_k, int max_n, const Caps& caps = Caps::from_env());

}  // namespace gridmorse
