// gridmorse: exact enumeration, Morse matchings and transfer-matrix
// spectra for independence complexes of grid graphs.
//
// Verbs: build, count, morse, spectrum, series, verify.
// Machine output goes to stdout, diagnostics to stderr.
// Exit status: 0 on success, 1 on verification FAIL, 2 on usage errors.

#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <string>

#include "gridmorse/counting.hpp"
#include "gridmorse/errors.hpp"
#include "gridmorse/intpoly.hpp"
#include "gridmorse/morse.hpp"
#include "gridmorse/transfer.hpp"
#include "gridmorse/verifier.hpp"

using namespace gridmorse;

namespace {

struct FamilyFlags {
    std::string family;
    int m = 0, n = 0, k = 0, a = 0, b = 0;

    void attach(CLI::App* cmd) {
        cmd->add_option("--family", family,
                        "tilted-rect|tilted-rect-smooth|cyl-rect|parallelogram|"
                        "quad|ord-rect|ord-cyl")
            ->required();
        cmd->add_option("--m", m, "first parameter (M)");
        cmd->add_option("--n", n, "second parameter (N)");
        cmd->add_option("--k", k, "first parameter (K); alias of --m");
        cmd->add_option("--a", a, "quadrangle slope a");
        cmd->add_option("--b", b, "quadrangle slope b");
    }

    FamilySpec to_spec() const {
        const int first = m ? m : k;
        if (family == "tilted-rect") return FamilySpec::tilted_rect(first, n);
        if (family == "tilted-rect-smooth") return FamilySpec::tilted_rect_smooth(first, n);
        if (family == "cyl-rect") return FamilySpec::cylindric_rect(first, n);
        if (family == "parallelogram") return FamilySpec::parallelogram(first, n);
        if (family == "quad") return FamilySpec::quadrangle(first, n, a, b);
        if (family == "ord-rect") return FamilySpec::ordinary_rect(first, n);
        if (family == "ord-cyl") return FamilySpec::ordinary_cylinder(first, n);
        throw InvalidSpec("unknown family '" + family + "'");
    }
};

PivotStrategy strategy_for(const std::string& name, const FamilySpec& spec) {
    if (name == "diag-lex") return make_diag_lex();
    if (name == "block") return make_block(spec.m);
    if (name == "slope-lex") return make_slope_lex(spec.a ? spec.a : 2, spec.b ? spec.b : 2);
    if (name.empty()) {
        switch (spec.kind) {
            case Family::Parallelogram: return make_block(spec.m);
            case Family::Quadrangle: return make_slope_lex(spec.a, spec.b);
            default: return make_diag_lex();
        }
    }
    throw InvalidSpec("unknown strategy '" + name + "'");
}

TransferKind matrix_kind(const std::string& name) {
    if (name == "P") return TransferKind::P;
    if (name == "R") return TransferKind::R;
    if (name == "L") return TransferKind::L;
    if (name == "O") return TransferKind::O;
    throw InvalidSpec("unknown matrix '" + name + "' (P|R|L|O)");
}

int emit_report(const CheckReport& report, const std::string& format) {
    if (format == "tsv")
        std::cout << report.to_tsv();
    else
        std::cout << report.to_text();
    return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact independence-complex toolkit for grid graphs"};
    app.require_subcommand(1);
    Caps caps = Caps::from_env();
    app.add_option("--max-cells", caps.complex_cells, "acyclicity checker cell cap");
    app.add_option("--max-nodes", caps.tree_nodes, "matching tree node guard");

    auto* build = app.add_subcommand("build", "construct a grid graph and print its document");
    FamilyFlags build_family;
    build_family.attach(build);

    auto* count = app.add_subcommand("count", "exact independent-set counts");
    FamilyFlags count_family;
    count_family.attach(count);
    std::optional<long long> activity;
    std::string count_method = "auto";
    count->add_option("--activity", activity, "evaluate the partition function at this integer");
    count->add_option("--method", count_method, "auto|brute|frontier");

    auto* morse = app.add_subcommand("morse", "grow a matching tree and report critical cells");
    FamilyFlags morse_family;
    morse_family.attach(morse);
    std::string strategy_name;
    bool do_verify = false, dump_tree = false;
    morse->add_option("--strategy", strategy_name, "diag-lex|block|slope-lex");
    morse->add_flag("--verify", do_verify, "machine-check acyclicity of the matching");
    morse->add_flag("--dump-tree", dump_tree, "print the tree, one node per line");

    auto* spectrum =
        app.add_subcommand("spectrum", "characteristic polynomials of the transfer matrices");
    std::string matrix_name;
    int spec_n = 0, spec_k = 0;
    bool rev = false, factor = false, predicted = false, dump_matrix = false;
    spectrum->add_option("--matrix", matrix_name, "P|R|L|O")->required();
    spectrum->add_option("--n", spec_n, "matrix parameter N");
    spectrum->add_option("--k", spec_k, "matrix parameter K (alias of --n)");
    spectrum->add_flag("--rev", rev, "print det(I - tM) instead of det(xI - M)");
    spectrum->add_flag("--factor", factor, "also print the cyclotomic factorization");
    spectrum->add_flag("--predicted", predicted, "print the closed-form predicted polynomial (R or L)");
    spectrum->add_flag("--dump", dump_matrix, "print the matrix document instead");

    auto* series = app.add_subcommand("series", "resolvent series of (1 - tM)^{-1} at (row, col)");
    std::string series_matrix, row_label = "{}", col_label = "{}";
    int series_n = 0, series_k = 0, order = 20;
    series->add_option("--matrix", series_matrix, "P|R|L|O")->required();
    series->add_option("--n", series_n, "matrix parameter N");
    series->add_option("--k", series_k, "matrix parameter K (alias of --n)");
    series->add_option("--row", row_label, "row label, e.g. {2,3} or {}");
    series->add_option("--col", col_label, "column label");
    series->add_option("--order", order, "series order (inclusive)");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite, format = "text";
    int max_m = 7, max_n = -1;
    verify
        ->add_option("--suite", suite,
                     "rect|smooth|cyl|paral|quad|acyclic|spectra|table|table-ext|roots|gf|"
                     "trace|trace-ordcyl|fold|fendley|all")
        ->required();
    verify->add_option("--max", max_m, "parameter range bound (default 7)");
    verify->add_option("--max-n", max_n, "second parameter bound (defaults to --max)");
    verify->add_option("--format", format, "tsv|text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*build) {
            std::cout << dump_graph(build_graph(build_family.to_spec()));
            return 0;
        }

        if (*count) {
            GridGraph g = build_graph(count_family.to_spec());
            PartitionPolynomial poly;
            if (count_method == "brute")
                poly = partition_function_brute(g, caps);
            else if (count_method == "frontier")
                poly = partition_function_frontier(g, {}, caps);
            else {
                try {
                    poly = partition_function_frontier(g, {}, caps);
                } catch (const CapExceeded&) {
                    poly = partition_function_brute(g, caps);
                }
            }
            if (activity)
                std::cout << poly.eval(*activity) << "\n";
            else
                std::cout << poly.to_string() << "\n";
            return 0;
        }

        if (*morse) {
            FamilySpec spec = morse_family.to_spec();
            GridGraph g = build_graph(spec);
            PivotStrategy strat = strategy_for(strategy_name, spec);
            MatchingTree tree = grow_tree(g, strat, caps);
            if (dump_tree) std::cout << tree.dump();
            std::cout << "strategy " << strat.name() << "\n";
            std::cout << "nodes " << tree.nodes.size() << " matching " << tree.matching_sites
                      << " splitting " << tree.splitting_sites << " leaves-empty "
                      << tree.empty_leaves << " leaves-singleton " << tree.singleton_leaves
                      << "\n";
            auto cells = critical_cells(tree);
            std::cout << "critical " << cells.size() << "\n";
            for (const auto& c : cells)
                std::cout << "cell size " << c.count() << " " << c.to_string() << "\n";
            std::cout << "euler " << morse_euler_sum(tree) << "\n";
            if (do_verify) {
                AcyclicityCertificate cert = verify_acyclic(g, tree, caps);
                std::cout << "acyclic " << (cert.ok ? "true" : "false");
                if (!cert.ok) std::cout << " (" << cert.reason << ")";
                std::cout << " cells " << cert.cells << " pairs " << cert.matched_pairs << "\n";
                return cert.ok ? 0 : 1;
            }
            return 0;
        }

        if (*spectrum) {
            TransferKind kind = matrix_kind(matrix_name);
            const int n = spec_n ? spec_n : spec_k;
            if (predicted) {
                std::cout << predicted_charpoly(kind, n).to_string() << "\n";
                return 0;
            }
            GaussMatrix m = build_transfer(kind, n, caps);
            if (dump_matrix) {
                std::cout << m.dump();
                return 0;
            }
            IntPoly p = rev ? char_poly_rev(m) : char_poly(m);
            std::cout << (rev ? p.to_string("t", true) : p.to_string()) << "\n";
            if (factor) std::cout << cyclotomic_factorize(p).to_string() << "\n";
            return 0;
        }

        if (*series) {
            TransferKind kind = matrix_kind(series_matrix);
            const int n = series_n ? series_n : series_k;
            GaussMatrix m = build_transfer(kind, n, caps);
            auto s = resolvent_series(m, parse_label(row_label), parse_label(col_label), order);
            for (std::size_t i = 0; i < s.size(); ++i)
                std::cout << (i ? " " : "") << s[i].to_string();
            std::cout << "\n";
            return 0;
        }

        if (*verify) {
            if (max_n < 0) max_n = max_m;
            auto family_cfg = [&](Family fam) {
                SuiteConfig cfg;
                cfg.family = fam;
                cfg.max_m = max_m;
                cfg.max_n = max_n;
                cfg.methods = {Method::Predict, Method::Brute, Method::Frontier, Method::Morse};
                if (fam == Family::CylindricRect) cfg.methods.push_back(Method::Trace);
                cfg.caps = caps;
                return cfg;
            };
            auto morse_instances = [&] {
                std::vector<FamilySpec> out;
                for (int m = 1; m <= max_m; ++m)
                    for (int n = 1; n <= max_n; ++n) {
                        out.push_back(FamilySpec::tilted_rect(m, n));
                        out.push_back(FamilySpec::tilted_rect_smooth(m, n));
                        out.push_back(FamilySpec::quadrangle(m, n, 2, 2));
                        out.push_back(FamilySpec::parallelogram(m, n));
                        if (m % 2 == 0) out.push_back(FamilySpec::cylindric_rect(m, n));
                    }
                return out;
            };
            CheckReport report;
            if (suite == "rect")
                report = run_suite(family_cfg(Family::TiltedRect));
            else if (suite == "smooth")
                report = run_suite(family_cfg(Family::TiltedRectSmooth));
            else if (suite == "cyl")
                report = run_suite(family_cfg(Family::CylindricRect));
            else if (suite == "paral")
                report = run_suite(family_cfg(Family::Parallelogram));
            else if (suite == "quad")
                report = run_suite(family_cfg(Family::Quadrangle));
            else if (suite == "acyclic")
                report = check_acyclicity(morse_instances(), caps);
            else if (suite == "spectra")
                report = check_spectra(10, 12, caps);
            else if (suite == "table")
                report = check_table(1, 7, caps);
            else if (suite == "table-ext")
                report = check_table(8, 10, caps);
            else if (suite == "roots")
                report = check_roots({2, 3, 4, 5, 6, 7, 8, 9}, caps);
            else if (suite == "gf")
                report = check_gf({4, 5, 6, 7}, 40, 20, caps);
            else if (suite == "trace")
                report = check_trace_cylindric(8, 6, caps);
            else if (suite == "trace-ordcyl")
                report = check_trace_ordcyl(5, 10, caps);
            else if (suite == "fold")
                report = check_fold(std::min(max_m, 10), 24, 50, caps);
            else if (suite == "fendley")
                report = fendley_report(max_m, 2 * max_n + 1, caps);
            else if (suite == "all") {
                for (auto fam : {Family::TiltedRect, Family::TiltedRectSmooth,
                                 Family::CylindricRect, Family::Parallelogram, Family::Quadrangle})
                    report.merge(run_suite(family_cfg(fam)));
                IdentityConfig icfg;
                icfg.caps = caps;
                report.merge(check_identities(icfg));
                report.merge(check_fold(std::min(max_m, 10), 24, 50, caps));
            } else {
                std::cerr << "unknown suite '" << suite << "'\n";
                return 2;
            }
            return emit_report(report, format);
        }
    } catch (const CapExceeded& e) {
        // resource guards are configuration, not verification failures;
        // raise them with --max-cells/--max-nodes or GRIDMORSE_CAPS
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InvalidSpec& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
