#include <benchmark/benchmark.h>

#include "grunsky/functionals.hpp"
#include "grunsky/grunsky_table.hpp"
#include "grunsky/optimizer.hpp"
#include "grunsky/series.hpp"

using namespace grunsky;

namespace {

void BM_PsMul(benchmark::State& state) {
    const auto f = catalogue_series(Catalogue::koebe, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(ps_mul(f, f));
}
BENCHMARK(BM_PsMul)->Arg(10)->Arg(20)->Arg(40);

void BM_SqrtTransform(benchmark::State& state) {
    const auto f = catalogue_series(Catalogue::geometric, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(sqrt_transform(f));
}
BENCHMARK(BM_SqrtTransform)->Arg(10)->Arg(20);

void BM_OddGrunskyTable(benchmark::State& state) {
    const auto f = catalogue_series(Catalogue::geometric, 10);
    for (auto _ : state) benchmark::DoNotOptimize(compute_odd_grunsky(f, 8));
}
BENCHMARK(BM_OddGrunskyTable);

void BM_LebedevVerify(benchmark::State& state) {
    const auto f = catalogue_series(Catalogue::koebe, 10);
    for (auto _ : state) benchmark::DoNotOptimize(verify_lebedev_identities(f));
}
BENCHMARK(BM_LebedevVerify);

void BM_GlobalMax(benchmark::State& state) {
    const BoundFunction fn(static_cast<Objective>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(global_max(fn, 1e-10));
}
BENCHMARK(BM_GlobalMax)->DenseRange(0, 5);

void BM_CertifiedMax(benchmark::State& state) {
    const BoundFunction fn(Objective::f1);
    const double eps = 1.0 / static_cast<double>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(certified_max(fn, eps));
}
BENCHMARK(BM_CertifiedMax)->Arg(1000)->Arg(1000000);

void BM_GridOracle(benchmark::State& state) {
    const BoundFunction fn(Objective::f4);
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(grid_oracle(fn, n, n));
}
BENCHMARK(BM_GridOracle)->Arg(101)->Arg(501);

}  // namespace

BENCHMARK_MAIN();
