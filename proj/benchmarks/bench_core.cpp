#include <benchmark/benchmark.h>

#include "gridmorse/counting.hpp"
#include "gridmorse/morse.hpp"
#include "gridmorse/transfer.hpp"

using namespace gridmorse;

static void BM_FrontierTiltedRect(benchmark::State& state) {
    const int mn = static_cast<int>(state.range(0));
    GridGraph g = build_graph(FamilySpec::tilted_rect(mn, mn));
    for (auto _ : state)
        benchmark::DoNotOptimize(partition_function_frontier(g));
}
BENCHMARK(BM_FrontierTiltedRect)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_FrontierCylindricRect(benchmark::State& state) {
    GridGraph g = build_graph(FamilySpec::cylindric_rect(static_cast<int>(state.range(0)), 8));
    for (auto _ : state)
        benchmark::DoNotOptimize(partition_function_frontier(g));
}
BENCHMARK(BM_FrontierCylindricRect)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_GrowTree(benchmark::State& state) {
    const int mn = static_cast<int>(state.range(0));
    GridGraph g = build_graph(FamilySpec::tilted_rect(mn, mn));
    for (auto _ : state)
        benchmark::DoNotOptimize(grow_tree(g, make_diag_lex()));
}
BENCHMARK(BM_GrowTree)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_VerifyAcyclic(benchmark::State& state) {
    const int mn = static_cast<int>(state.range(0));
    GridGraph g = build_graph(FamilySpec::tilted_rect(mn, mn));
    MatchingTree tree = grow_tree(g, make_diag_lex());
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_acyclic(g, tree));
}
BENCHMARK(BM_VerifyAcyclic)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_CharPolyO(benchmark::State& state) {
    GaussMatrix m = build_transfer(TransferKind::O, static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(char_poly_rev(m));
}
BENCHMARK(BM_CharPolyO)->Arg(7)->Arg(9)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_ResolventSeries(benchmark::State& state) {
    GaussMatrix m = build_transfer(TransferKind::P, 14);
    for (auto _ : state)
        benchmark::DoNotOptimize(resolvent_series(m, 0, 0, 40));
}
BENCHMARK(BM_ResolventSeries)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
