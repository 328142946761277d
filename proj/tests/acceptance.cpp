// Acceptance suite: one pass/fail line per criterion, exact comparisons
// throughout. Run all criteria, or a single one with --criterion <n>.

#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "gridmorse/verifier.hpp"

using namespace gridmorse;

namespace {

struct Criterion {
    std::string id;
    std::string description;
    std::function<CheckReport()> run;
};

SuiteConfig family_suite(Family fam, int max_m, int max_n, std::vector<Method> methods) {
    SuiteConfig cfg;
    cfg.family = fam;
    cfg.max_m = max_m;
    cfg.max_n = max_n;
    cfg.methods = std::move(methods);
    return cfg;
}

// instances covered by criteria 1-4, used again by the acyclicity gate
std::vector<FamilySpec> morse_suite_instances() {
    std::vector<FamilySpec> all;
    for (int m = 1; m <= 12; ++m)
        for (int n = 1; n <= 12; ++n) {
            all.push_back(FamilySpec::tilted_rect(m, n));
            all.push_back(FamilySpec::tilted_rect_smooth(m, n));
            all.push_back(FamilySpec::quadrangle(m, n, 2, 2));
        }
    for (int m = 2; m <= 10; m += 2)
        for (int n = 1; n <= 8; ++n) all.push_back(FamilySpec::cylindric_rect(m, n));
    for (int k = 1; k <= 7; ++k)
        for (int n = 1; n <= 16; ++n) all.push_back(FamilySpec::parallelogram(k, n));
    return all;
}

std::vector<Criterion> make_criteria() {
    const Caps caps = Caps::from_env();
    std::vector<Criterion> cs;

    cs.push_back({"1", "tilted rectangles: brute/frontier/Morse/predictor agree, critical cells match", [caps] {
        CheckReport r;
        for (auto fam : {Family::TiltedRect, Family::TiltedRectSmooth}) {
            r.merge(run_suite(family_suite(
                fam, 7, 7, {Method::Predict, Method::Brute, Method::Frontier, Method::Morse})));
            r.merge(run_suite(
                family_suite(fam, 12, 12, {Method::Predict, Method::Frontier, Method::Morse})));
        }
        return r;
    }});

    cs.push_back({"2", "cylindric rectangles: DP/Morse/predictor agree, cells match, traces match", [caps] {
        CheckReport r = run_suite(family_suite(
            Family::CylindricRect, 10, 8, {Method::Predict, Method::Frontier, Method::Morse}));
        r.merge(check_trace_cylindric(8, 6, caps));
        return r;
    }});

    cs.push_back({"3", "parallelograms: DP/predictor agree, block Morse data matches", [] {
        return run_suite(family_suite(Family::Parallelogram, 7, 16,
                                      {Method::Predict, Method::Frontier, Method::Morse}));
    }});

    cs.push_back({"4", "quadrangles a=b=2: DP/predictor agree, slope-lex Morse data matches", [] {
        return run_suite(family_suite(Family::Quadrangle, 12, 12,
                                      {Method::Predict, Method::Frontier, Method::Morse}));
    }});

    cs.push_back({"5", "acyclicity verified for every grown tree within the cell cap", [caps] {
        return check_acyclicity(morse_suite_instances(), caps);
    }});

    cs.push_back({"6", "spectra of R_N and L_N equal the predicted polynomials, N <= 10", [caps] {
        return check_spectra(10, 12, caps);
    }});

    cs.push_back({"7", "characteristic polynomial table for O_K, K = 1..7", [caps] {
        return check_table(1, 7, caps);
    }});

    cs.push_back({"7x", "extended table check, K = 8..10", [caps] {
        return check_table(8, 10, caps);
    }});

    cs.push_back({"8", "root-of-unity membership in the O_K spectra", [caps] {
        return check_roots({2, 3, 4, 5, 6, 7, 8, 9}, caps);
    }});

    cs.push_back({"9", "generating-function identities to order 40", [caps] {
        return check_gf({4, 5, 6, 7}, 40, 20, caps);
    }});

    cs.push_back({"10", "trace identity on ordinary cylinders, K <= 5, N <= 10", [caps] {
        return check_trace_ordcyl(5, 10, caps);
    }});

    cs.push_back({"11", "fold reduction: invariance and final max degree", [caps] {
        return check_fold(10, 24, 50, caps);
    }});

    return cs;
}

}  // namespace

int main(int argc, char** argv) {
    std::string only;
    bool verbose = false;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc)
            only = argv[++i];
        else if (std::strcmp(argv[i], "--verbose") == 0)
            verbose = true;
        else {
            std::cerr << "usage: acceptance [--criterion <1..11|7x>] [--verbose]\n";
            return 2;
        }
    }

    int failures = 0;
    bool matched = false;
    for (const Criterion& c : make_criteria()) {
        if (!only.empty() && c.id != only) continue;
        matched = true;
        auto start = std::chrono::steady_clock::now();
        CheckReport report = c.run();
        auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool ok = report.all_pass();
        if (!ok) ++failures;
        std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << c.id << ": " << c.description
                  << " (" << report.passed << " passed, " << report.failed << " failed, "
                  << report.skipped << " skipped; " << static_cast<int>(secs * 1000) / 1000.0
                  << "s)\n";
        if (verbose || !ok) {
            for (const auto& row : report.rows)
                if (verbose || row.status == RowStatus::Fail)
                    std::cout << "    " << (row.status == RowStatus::Fail ? "FAIL " : "     ")
                              << row.family << " " << row.params << " " << row.method << " "
                              << row.value << "\n";
        }
    }
    if (!matched) {
        std::cerr << "unknown criterion: " << only << "\n";
        return 2;
    }
    return failures;
}
