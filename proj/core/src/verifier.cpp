#include "gridmorse/verifier.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "gridmorse/counting.hpp"
#include "gridmorse/errors.hpp"
#include "gridmorse/morse.hpp"
#include "gridmorse/transfer.hpp"

namespace gridmorse {

namespace {

std::string big_str(const BigInt& v) { return v.str(); }

std::int64_t pow2(int n) { return std::int64_t(1) << n; }

}  // namespace

TheoremPrediction predict_alternating(const FamilySpec& spec) {
    TheoremPrediction p;
    switch (spec.kind) {
        case Family::TiltedRect:
        case Family::TiltedRectSmooth: {
            const int M = spec.m, N = spec.n;
            p.m = (M + 2) / 3;
            p.n = (N + 2) / 3;
            if (spec.kind == Family::TiltedRectSmooth && M == 1 && N == 1) {
                // the (1,1) smooth rectangle has no lattice points at all;
                // its complex is the single empty face, Z = 1
                p.critical_count = 1;
                p.critical_cardinality = 0;
                p.z = 1;
                return p;
            }
            if (M % 3 == 1 || N % 3 == 1) {
                p.contractible = true;
                return p;
            }
            p.critical_count = 1;
            p.critical_cardinality = p.m * p.n;
            p.z = (p.m * p.n) % 2 == 0 ? 1 : -1;
            return p;
        }
        case Family::CylindricRect: {
            const int M = spec.m, N = spec.n;
            if (M % 2) throw InvalidSpec("cyl-rect requires even M");
            p.m = (M + 1) / 3;
            p.n = (N + 2) / 3;
            if (N % 3 == 1) {
                p.contractible = true;
                return p;
            }
            p.critical_cardinality = p.m * p.n;
            if (M % 3 == 0) {
                p.critical_count = pow2(p.n);
                p.z = p.critical_count;
            } else {
                p.critical_count = 1;
                p.z = p.n % 2 == 0 ? 1 : -1;
            }
            return p;
        }
        case Family::Parallelogram: {
            const int K = spec.m, N = spec.n;
            p.m = (2 * K + 2) / 3;
            if (K % 3 == 1) {
                p.n = (N + 2) / 3;
                if (N % 3 == 1) {
                    p.contractible = true;
                    return p;
                }
                p.critical_count = 1;
                p.critical_cardinality = p.m * p.n;
                p.z = p.n % 2 == 0 ? 1 : -1;
                return p;
            }
            if (K % 3 == 2) {
                p.q = N / (2 * K);
                p.r = N % (2 * K);
                if (p.r % 3 != 0) {
                    p.contractible = true;
                    return p;
                }
                p.critical_count = 1;
                p.critical_cardinality = p.q * p.m * (p.m - 1) + p.m * (p.r / 3);
                p.n = p.critical_cardinality / p.m;
                p.z = 1;
                return p;
            }
            // K = 0 mod 3
            p.q = N / (2 * K + 2);
            p.r = N % (2 * K + 2);
            if ((p.r % 3 == 0 && p.r >= 1) || (p.r % 3 == 1 && p.r <= 2 * K)) {
                p.contractible = true;
                return p;
            }
            p.critical_count = 1;
            p.critical_cardinality = p.q * p.m * (p.m + 1) + p.m * ((p.r + 2) / 3);
            p.n = p.critical_cardinality / p.m;
            p.z = 1;
            return p;
        }
        case Family::Quadrangle: {
            if (spec.a != 2 || spec.b != 2)
                throw InvalidSpec("closed form exists only for quadrangles with a = b = 2");
            const int M = spec.m, N = spec.n;
            p.m = (M + 4) / 5;
            p.n = (N + 4) / 5;
            if ((M % 5 == 0 && N != 3) || M % 5 == 1 || N % 5 == 1 || N % 5 == 2) {
                p.contractible = true;
                return p;
            }
            p.critical_count = 1;
            p.critical_cardinality = p.m * p.n;
            p.z = (p.m * p.n) % 2 == 0 ? 1 : -1;
            return p;
        }
        default:
            throw InvalidSpec("no closed-form prediction for " + spec.to_string());
    }
}

std::string CheckRow::status_string() const {
    switch (status) {
        case RowStatus::Pass: return "PASS";
        case RowStatus::Fail: return "FAIL";
        case RowStatus::Skipped: return "SKIPPED";
        case RowStatus::Report: return "REPORT";
    }
    return "?";
}

void CheckReport::add(CheckRow row) {
    switch (row.status) {
        case RowStatus::Pass: ++passed; break;
        case RowStatus::Fail: ++failed; break;
        case RowStatus::Skipped: ++skipped; break;
        case RowStatus::Report: break;
    }
    rows.push_back(std::move(row));
}

void CheckReport::merge(const CheckReport& o) {
    for (const auto& r : o.rows) add(r);
}

std::string CheckReport::to_tsv() const {
    std::ostringstream os;
    os << "family\tparams\tmethod\tvalue\tstatus\n";
    for (const auto& r : rows)
        os << r.family << '\t' << r.params << '\t' << r.method << '\t' << r.value << '\t'
           << r.status_string() << '\n';
    return os.str();
}

std::string CheckReport::to_text() const {
    std::ostringstream os;
    for (const auto& r : rows)
        os << "[" << r.status_string() << "] " << r.family << " " << r.params << " " << r.method
           << " = " << r.value << "\n";
    os << "passed " << passed << ", failed " << failed << ", skipped " << skipped << "\n";
    return os.str();
}

namespace {

struct RowSink {
    CheckReport& report;
    std::string family, params;

    void pass(const std::string& method, const std::string& value) {
        report.add({family, params, method, value, RowStatus::Pass});
    }
    void skip(const std::string& method, const std::string& reason) {
        report.add({family, params, method, reason, RowStatus::Skipped});
    }
    void fail(const std::string& method, const std::string& got, const std::string& expected) {
        report.add({family, params, method, "got=" + got + ";expected=" + expected, RowStatus::Fail});
    }
    void compare(const std::string& method, const std::string& got, const std::string& expected) {
        if (got == expected)
            pass(method, got);
        else
            fail(method, got, expected);
    }
    // wraps a row computation; CapExceeded becomes SKIPPED, Error becomes FAIL
    void guarded(const std::string& method, const std::function<void()>& body) {
        try {
            body();
        } catch (const CapExceeded& e) {
            skip(method, e.what());
        } catch (const Error& e) {
            fail(method, std::string("error: ") + e.what(), "-");
        }
    }
};

std::string spec_params(const FamilySpec& f) {
    std::ostringstream os;
    const char* mk = (f.kind == Family::Parallelogram || f.kind == Family::OrdinaryRect ||
                      f.kind == Family::OrdinaryCylinder)
                         ? "K"
                         : "M";
    os << mk << "=" << f.m << ",N=" << f.n;
    if (f.kind == Family::Quadrangle) os << ",a=" << f.a << ",b=" << f.b;
    return os.str();
}

std::optional<PivotStrategy> default_strategy(const FamilySpec& f) {
    switch (f.kind) {
        case Family::TiltedRect:
        case Family::TiltedRectSmooth:
        case Family::CylindricRect:
            return make_diag_lex();
        case Family::Parallelogram:
            return make_block(f.m);
        case Family::Quadrangle:
            if (f.a == 2 && f.b == 2) return make_slope_lex(2, 2);
            return std::nullopt;
        default:
            return std::nullopt;
    }
}

bool has_method(const SuiteConfig& cfg, Method m) {
    return std::find(cfg.methods.begin(), cfg.methods.end(), m) != cfg.methods.end();
}

void run_instance(const SuiteConfig& cfg, const FamilySpec& fspec, CheckReport& report) {
    RowSink sink{report, fspec.to_string(), spec_params(fspec)};
    GridGraph g = build_graph(fspec);

    std::optional<TheoremPrediction> pred;
    if (has_method(cfg, Method::Predict)) {
        try {
            pred = predict_alternating(fspec);
        } catch (const InvalidSpec&) {
        }
    }

    std::optional<BigInt> frontier;
    if (has_method(cfg, Method::Frontier)) {
        sink.guarded("frontier", [&] {
            frontier = partition_function_frontier(g, {}, cfg.caps).at_minus_one();
        });
    }

    std::optional<BigInt> reference = pred ? std::optional<BigInt>(pred->z) : frontier;
    const std::string ref_str = reference ? big_str(*reference) : std::string("-");

    if (pred) sink.compare("predict", big_str(pred->z), ref_str);
    if (frontier) {
        if (reference)
            sink.compare("frontier", big_str(*frontier), ref_str);
    }
    if (has_method(cfg, Method::Brute)) {
        sink.guarded("brute", [&] {
            BigInt v = partition_function_brute(g, cfg.caps).at_minus_one();
            sink.compare("brute", big_str(v), ref_str);
        });
    }

    if (has_method(cfg, Method::Morse)) {
        auto strat = default_strategy(fspec);
        if (strat) {
            sink.guarded("morse", [&] {
                MatchingTree tree = grow_tree(g, *strat, cfg.caps);
                sink.compare("morse-euler", big_str(morse_euler_sum(tree)), ref_str);
                auto cells = critical_cells(tree);
                if (pred) {
                    sink.compare("morse-cells", std::to_string(cells.size()),
                                 std::to_string(pred->critical_count));
                    if (pred->critical_count > 0) {
                        bool uniform = true;
                        int card = cells.empty() ? -1 : cells.front().count();
                        for (auto& c : cells)
                            if (c.count() != card) uniform = false;
                        sink.compare("morse-card",
                                     uniform ? std::to_string(card) : "nonuniform",
                                     std::to_string(pred->critical_cardinality));
                    }
                }
            });
        }
    }

    // cylinders: tr(R_N^k) must equal the alternating number for M = 2k
    if (has_method(cfg, Method::Trace) && fspec.kind == Family::CylindricRect &&
        fspec.m % 2 == 0 && fspec.m / 2 <= cfg.trace_max_k) {
        sink.guarded("trace", [&] {
            GaussMatrix r = build_transfer(TransferKind::R, fspec.n, cfg.caps);
            auto traces = mat_pow_trace(r, fspec.m / 2);
            const GaussInt& t = traces[fspec.m / 2];
            if (!t.is_real()) {
                sink.fail("trace", t.to_string(), ref_str);
                return;
            }
            sink.compare("trace", big_str(t.re), ref_str);
        });
    }
}

}  // namespace

CheckReport run_suite(const SuiteConfig& cfg) {
    CheckReport report;
    const int mstep = cfg.family == Family::CylindricRect ? 2 : 1;
    const int mstart = cfg.family == Family::CylindricRect ? 2 : 1;
    for (int m = mstart; m <= cfg.max_m; m += mstep)
        for (int n = 1; n <= cfg.max_n; ++n) {
            FamilySpec f;
            switch (cfg.family) {
                case Family::TiltedRect: f = FamilySpec::tilted_rect(m, n); break;
                case Family::TiltedRectSmooth: f = FamilySpec::tilted_rect_smooth(m, n); break;
                case Family::CylindricRect: f = FamilySpec::cylindric_rect(m, n); break;
                case Family::Parallelogram: f = FamilySpec::parallelogram(m, n); break;
                case Family::Quadrangle: f = FamilySpec::quadrangle(m, n, 2, 2); break;
                case Family::OrdinaryRect: f = FamilySpec::ordinary_rect(m, n); break;
                case Family::OrdinaryCylinder: f = FamilySpec::ordinary_cylinder(m, n); break;
                default: throw InvalidSpec("run_suite: unsupported family");
            }
            run_instance(cfg, f, report);
        }
    return report;
}

namespace {

// Reversed characteristic polynomials det(I - t O_K) for K = 1..10.
IntPoly published_table_poly(int k) {
    auto om = IntPoly::one_minus_power;
    auto op = IntPoly::one_plus_power;
    IntPoly num;
    std::vector<IntPoly> den;
    switch (k) {
        case 1: num = op(3); den = {op(1)}; break;
        case 2: num = om(4); den = {op(1)}; break;
        case 3: num = om(8); den = {op(1), op(2)}; break;
        case 4: num = op(3) * om(2) * om(4); den = {op(1)}; break;
        case 5: num = om(10) * op(4); den = {op(1)}; break;
        case 6: num = om(14) * om(4) * om(4); den = {op(1)}; break;
        case 7: num = op(3) * op(4) * om(12) * om(18); den = {op(1), op(2)}; break;
        case 8: num = om(16) * om(2) * om(4) * om(4) * op(8) * om(22); den = {op(1)}; break;
        case 9:
            num = om(20) * op(4) * om(14) * op(10) * om(20) * om(26);
            den = {op(1), op(2), om(2)};
            break;
        case 10:
            num = op(3) * om(4) * om(4) * om(18) * om(18) * om(24) * om(24) * om(24) * om(30);
            den = {op(1), op(4)};
            break;
        default:
            throw InvalidSpec("published table covers K = 1..10");
    }
    IntPoly p = num;
    for (const auto& d : den) {
        auto q = p.divide_exact(d);
        if (!q) throw Error("published table row K=" + std::to_string(k) + " is not exact");
        p = std::move(*q);
    }
    return p;
}

// G_{empty,empty}(t) of P_2K, the three closed forms.
RationalGF open_gf_closed_form(int k) {
    auto om = IntPoly::one_minus_power;
    auto op = IntPoly::one_plus_power;
    if (k % 3 == 1) return {IntPoly{1}, IntPoly{1, -1, 1}};
    if (k % 3 == 2) {
        IntPoly den = om(2 * k) * om(3);
        IntPoly num = den + IntPoly::monomial(1) * om(2 * k + 2);
        return {num, den};
    }
    IntPoly den = om(3) * om(2 * k + 2);
    IntPoly num = op(1) * om(3) + IntPoly::monomial(3) * om(2 * k);
    return {num, den};
}

// Root-of-unity membership, expressed as an exact polynomial divisor of
// the monic characteristic polynomial of O_K.
IntPoly roots_divisor(int k) {
    auto xn_minus_1 = [](int n) {
        IntPoly p = IntPoly::monomial(n);
        p.c[0] -= 1;
        return p;
    };
    const IntPoly x_plus_1{1, 1};
    if (k % 3 == 2) return *xn_minus_1(2 * k).divide_exact(x_plus_1);
    if (k % 3 == 0) {
        IntPoly p = *xn_minus_1(2 * k + 2).divide_exact(x_plus_1);
        if (k % 2 == 1) p = *p.divide_exact(IntPoly{1, 0, 1});
        return p;
    }
    return IntPoly{1, -1, 1};  // Phi_6, roots e^{+-i pi/3}
}

std::string gauss_series_str(const std::vector<GaussInt>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i].to_string();
    }
    return os.str();
}

std::string bigint_series_str(const std::vector<BigInt>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i];
    }
    return os.str();
}

}  // namespace

CheckReport check_spectra(int spectrum_max_n, int consistency_max_n, const Caps& caps) {
    CheckReport report;
    for (int n = 1; n <= spectrum_max_n; ++n) {
        for (auto kind : {TransferKind::R, TransferKind::L}) {
            const std::string fam = kind == TransferKind::R ? "charpoly-R" : "charpoly-L";
            RowSink sink{report, fam, "N=" + std::to_string(n)};
            sink.guarded("charpoly", [&] {
                GaussMatrix m = build_transfer(kind, n, caps);
                IntPoly got = char_poly(m);
                IntPoly want = predicted_charpoly(kind, n);
                sink.compare("charpoly", got.to_string(), want.to_string());
                if (n % 3 == 1)
                    sink.compare("nilpotent", got.to_string(),
                                 IntPoly::monomial(m.rows()).to_string());
            });
        }
    }
    for (int n = 1; n <= consistency_max_n; ++n) {
        RowSink sink{report, "R-consistency", "N=" + std::to_string(n)};
        sink.guarded("P*P^T", [&] {
            sink.compare("P*P^T", check_R_consistency(n, caps) ? "true" : "false", "true");
        });
    }
    return report;
}

CheckReport check_trace_cylindric(int max_n, int max_k, const Caps& caps) {
    CheckReport report;
    for (int n = 1; n <= max_n; ++n) {
        RowSink sink{report, "trace-cylindric", "N=" + std::to_string(n)};
        sink.guarded("traces", [&] {
            GaussMatrix r = build_transfer(TransferKind::R, n, caps);
            GaussMatrix l = build_transfer(TransferKind::L, n, caps);
            auto tr = mat_pow_trace(r, max_k);
            auto tl = mat_pow_trace(l, max_k);
            for (int k = 1; k <= max_k; ++k) {
                BigInt z = partition_function_frontier(
                               build_graph(FamilySpec::cylindric_rect(2 * k, n)), {}, caps)
                               .at_minus_one();
                sink.compare("tr(R^" + std::to_string(k) + ")", tr[k].to_string(), z.str());
                sink.compare("tr(L^" + std::to_string(k) + ")", tl[k].to_string(), z.str());
            }
        });
    }
    return report;
}

CheckReport check_table(int k_min, int k_max, const Caps& caps) {
    CheckReport report;
    for (int k = k_min; k <= k_max; ++k) {
        RowSink sink{report, "table-O", "K=" + std::to_string(k)};
        sink.guarded("charpoly-rev", [&] {
            GaussMatrix o = build_transfer(TransferKind::O, k, caps);
            IntPoly got = char_poly_rev(o);
            IntPoly want = published_table_poly(k);
            sink.compare("charpoly-rev", got.to_string("t", true), want.to_string("t", true));
            auto f = cyclotomic_factorize(got);
            sink.compare("cyclotomic-remainder", f.remainder.to_string("t", true), "1");
        });
    }
    return report;
}

CheckReport check_roots(const std::vector<int>& ks, const Caps& caps) {
    CheckReport report;
    for (int k : ks) {
        RowSink sink{report, "roots-O", "K=" + std::to_string(k)};
        sink.guarded("divides", [&] {
            GaussMatrix o = build_transfer(TransferKind::O, k, caps);
            IntPoly cp = char_poly(o);
            IntPoly div = roots_divisor(k);
            sink.compare("divides:" + div.to_string(),
                         cp.divisible_by(div) ? "true" : "false", "true");
        });
    }
    return report;
}

CheckReport check_gf(const std::vector<int>& open_k, int order, int ord_rect_max,
                     const Caps& caps) {
    CheckReport report;
    for (int k : open_k) {
        RowSink sink{report, "gf-open", "K=" + std::to_string(k)};
        sink.guarded("resolvent", [&] {
            GaussMatrix p = build_transfer(TransferKind::P, 2 * k, caps);
            auto got = resolvent_series(p, 0, 0, order);
            auto want = series_of_rational(open_gf_closed_form(k), order);
            sink.compare("resolvent({},{})", gauss_series_str(got), bigint_series_str(want));
        });
    }

    // border rows: published G_{C,C} for K=4, C={2,3} and K=5, C={3,4};
    // checked under both diagonal orientations, at least one must match
    struct BorderCase {
        int k;
        SubsetLabel c;
        RationalGF gf;
    };
    auto om = IntPoly::one_minus_power;
    auto op = IntPoly::one_plus_power;
    const std::vector<BorderCase> border_cases = {
        {4, parse_label("{2,3}"), RationalGF(IntPoly{1, 0, 1, 1}, op(1) * om(4) * IntPoly{1, -1, 1})},
        {5, parse_label("{3,4}"), RationalGF(IntPoly{1}, om(5) * op(4))},
    };
    for (const auto& bc : border_cases) {
        RowSink sink{report, "gf-border",
                     "K=" + std::to_string(bc.k) + ",C=" + label_to_string(bc.c)};
        sink.guarded("resolvent", [&] {
            GaussMatrix p = build_transfer(TransferKind::P, 2 * bc.k, caps);
            auto want = series_of_rational(bc.gf, order);
            auto direct = resolvent_series(p, bc.c, bc.c, order);
            SubsetLabel mc = mirror_label(bc.c, bc.k);
            auto mirrored = resolvent_series(p, mc, mc, order);
            bool ok_direct = gauss_series_str(direct) == bigint_series_str(want);
            bool ok_mirror = gauss_series_str(mirrored) == bigint_series_str(want);
            if (ok_direct || ok_mirror)
                sink.pass("resolvent(C,C)", std::string(ok_direct ? "direct" : "mirrored") +
                                                " orientation matches");
            else
                sink.fail("resolvent(C,C)", gauss_series_str(direct), bigint_series_str(want));
        });
    }

    {
        RowSink sink{report, "gf-ordrect", "K=4"};
        sink.guarded("series", [&] {
            RationalGF gf(IntPoly::one_plus_power(4),
                          IntPoly::one_minus_power(2) * IntPoly::one_plus_power(3));
            auto want = series_of_rational(gf, ord_rect_max);
            std::vector<BigInt> got;
            got.push_back(1);  // Z(4,0): empty graph
            for (int n = 1; n <= ord_rect_max; ++n)
                got.push_back(partition_function_frontier(
                                  build_graph(FamilySpec::ordinary_rect(4, n)), {}, caps)
                                  .at_minus_one());
            sink.compare("Z(4,.)", bigint_series_str(got), bigint_series_str(want));
        });
    }
    return report;
}

CheckReport check_trace_ordcyl(int max_k, int max_n, const Caps& caps) {
    CheckReport report;
    for (int k = 1; k <= max_k; ++k) {
        RowSink sink{report, "trace-ordcyl", "K=" + std::to_string(k)};
        sink.guarded("traces", [&] {
            GaussMatrix p = build_transfer(TransferKind::P, 2 * k, caps);
            GaussMatrix o = build_transfer(TransferKind::O, k, caps);
            auto tp = mat_pow_trace(p, max_n);
            auto to = mat_pow_trace(o, max_n);
            for (int n = 1; n <= max_n; ++n) {
                sink.compare("tr(P^" + std::to_string(n) + ")=tr(O^" + std::to_string(n) + ")",
                             tp[n].to_string(), to[n].to_string());
                if (n == 1) {
                    // the circumference-1 quotient has self-loops; as a simple
                    // graph it is a path and the trace identity does not apply
                    sink.skip("Z(ord-cyl)", "N=1 quotient graph has self-loop semantics");
                    continue;
                }
                BigInt z = partition_function_frontier(
                               build_graph(FamilySpec::ordinary_cylinder(k, n)), {}, caps)
                               .at_minus_one();
                sink.compare("Z(ord-cyl,N=" + std::to_string(n) + ")", z.str(),
                             to[n].to_string());
            }
        });
    }
    return report;
}

CheckReport check_acyclicity(const std::vector<FamilySpec>& instances, const Caps& caps) {
    CheckReport report;
    for (const FamilySpec& f : instances) {
        GridGraph g = build_graph(f);
        auto strat = default_strategy(f);
        CheckRow row{f.to_string(), spec_params(f), "verify-acyclic", "", RowStatus::Pass};
        if (!strat) {
            row.status = RowStatus::Skipped;
            row.value = "no default strategy for this family";
            report.add(std::move(row));
            continue;
        }
        try {
            MatchingTree tree = grow_tree(g, *strat, caps);
            AcyclicityCertificate cert = verify_acyclic(g, tree, caps);
            if (cert.ok) {
                row.value = "acyclic; cells=" + std::to_string(cert.cells) +
                            ",pairs=" + std::to_string(cert.matched_pairs) +
                            ",critical=" + std::to_string(cert.critical);
            } else {
                row.value = cert.reason;
                row.status = RowStatus::Fail;
            }
        } catch (const CapExceeded& e) {
            row.value = e.what();
            row.status = RowStatus::Skipped;
        }
        report.add(std::move(row));
    }
    return report;
}

CheckReport check_fold(int max_mn, int max_vertices, int random_subgraphs, const Caps& caps) {
    CheckReport report;
    std::vector<GridGraph> inputs;
    std::vector<std::string> names;
    for (int m = 1; m <= max_mn; ++m)
        for (int n = 1; n <= max_mn; ++n)
            for (const auto& f :
                 {FamilySpec::tilted_rect(m, n), FamilySpec::tilted_rect_smooth(m, n),
                  FamilySpec::parallelogram(m, n), FamilySpec::quadrangle(m, n, 2, 2)}) {
                GridGraph g = build_graph(f);
                if (g.size() <= max_vertices) {
                    inputs.push_back(std::move(g));
                    names.push_back(f.to_string() + " " + spec_params(f));
                }
            }
    // seeded xorshift; runs are reproducible
    std::uint64_t state = 0x9e3779b97f4a7c15ULL;
    auto rnd = [&state] {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    };
    for (int t = 0; t < random_subgraphs; ++t) {
        GridGraph g = build_graph(FamilySpec::tilted_rect(5 + t % 5, 5 + (t / 5) % 5));
        VertexSet del(g.size());
        for (int v = 0; v < g.size(); ++v)
            if (rnd() % 3 == 0) del.set(v);
        GridGraph h = delete_vertices(g, del).first;
        if (h.size() <= max_vertices) {
            inputs.push_back(std::move(h));
            names.push_back("random-subgraph seed=" + std::to_string(t));
        }
    }
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        const GridGraph& g = inputs[i];
        CheckRow row{names[i], "n=" + std::to_string(g.size()), "fold-invariance", "",
                     RowStatus::Pass};
        BigInt z = alternating_number(g, caps);
        GridGraph cur = g;
        FoldResult folded = fold_reduce(g);
        bool ok = true;
        for (const auto& step : folded.steps) {
            auto id = cur.id_at(step.removed);
            if (!id) {
                ok = false;
                break;
            }
            VertexSet s(cur.size());
            s.set(*id);
            cur = delete_vertices(cur, s).first;
            if (alternating_number(cur, caps) != z) {
                ok = false;
                break;
            }
        }
        if (ok && names[i].rfind("tilted-rect(", 0) == 0) {
            for (int v = 0; v < folded.graph.size(); ++v)
                if (folded.graph.degree(v) > 1) ok = false;
            row.method = "fold-invariance+maxdeg";
        }
        row.value = ok ? "steps=" + std::to_string(folded.steps.size()) : "invariance violated";
        row.status = ok ? RowStatus::Pass : RowStatus::Fail;
        report.add(std::move(row));
    }
    return report;
}

CheckReport check_identities(const IdentityConfig& cfg) {
    CheckReport report;
    report.merge(check_spectra(cfg.spectrum_max_n, cfg.consistency_max_n, cfg.caps));
    report.merge(check_trace_cylindric(cfg.trace_cyl_max_n, cfg.trace_cyl_max_k, cfg.caps));
    report.merge(check_table(1, cfg.extended_table ? 10 : cfg.table_max_k, cfg.caps));
    report.merge(check_roots(cfg.roots_k, cfg.caps));
    report.merge(check_gf(cfg.gf_k, cfg.gf_order, cfg.ord_rect_series_max, cfg.caps));
    report.merge(check_trace_ordcyl(cfg.trace_ident_max_k, cfg.trace_ident_max_n, cfg.caps));
    return report;
}

CheckReport fendley_report(int max_k, int max_n, const Caps& caps) {
    CheckReport report;
    for (int k = 1; k <= max_k; ++k)
        for (int n = 3; n <= max_n; n += 2) {
            RowSink sink{report, "fendley", "K=" + std::to_string(k) + ",N=" + std::to_string(n)};
            try {
                BigInt z = partition_function_frontier(
                               build_graph(FamilySpec::ordinary_cylinder(k, n)), {}, caps)
                               .at_minus_one();
                long long conjectured = (n % 6 == 3 && k % 3 == 1) ? -2 : 1;
                report.add({"fendley", sink.params, "Z",
                            z.str() + " (conjectured " + std::to_string(conjectured) + ")",
                            RowStatus::Report});
            } catch (const CapExceeded& e) {
                sink.skip("Z", e.what());
            }
        }
    return report;
}

}  // namespace gridmorse
