#include <benchmark/benchmark.h>

#include <cstdint>

#include "mockeis/completion.hpp"
#include "mockeis/eisenstein.hpp"
#include "mockeis/numtheory.hpp"
#include "mockeis/qseries.hpp"

using namespace mockeis;

// Bernoulli numbers are memoized process-wide; clear before each iteration so
// the benchmark measures the actual recurrence.
static void BM_BernoulliTable(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        clear_number_caches();
        benchmark::DoNotOptimize(bernoulli(n));
    }
}
BENCHMARK(BM_BernoulliTable)->Arg(64)->Arg(128)->Arg(256);

static void BM_GeneralizedBernoulli(benchmark::State& state) {
    const QuadraticCharacter chi(static_cast<std::int64_t>(state.range(0)));
    for (auto _ : state) {
        clear_number_caches();
        benchmark::DoNotOptimize(generalized_bernoulli(22, chi));
    }
}
BENCHMARK(BM_GeneralizedBernoulli)->Arg(23)->Arg(59)->Arg(104);

static void BM_CohenSeries(benchmark::State& state) {
    const HalfIntWeight k(7);
    const std::int64_t N = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(cohen_series(k, N));
}
BENCHMARK(BM_CohenSeries)->Arg(100)->Arg(400);

static void BM_HurwitzForms(benchmark::State& state) {
    const std::int64_t n = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(hurwitz_forms(n));
}
BENCHMARK(BM_HurwitzForms)->Arg(403)->Arg(4000)->Arg(39999);

static void BM_HurwitzL(benchmark::State& state) {
    const std::int64_t n = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(hurwitz_L(n));
}
BENCHMARK(BM_HurwitzL)->Arg(403)->Arg(4000)->Arg(39999);

static void BM_ZagierSeries(benchmark::State& state) {
    const std::int64_t N = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(zagier_series(N));
}
BENCHMARK(BM_ZagierSeries)->Arg(200)->Arg(1000);

static void BM_ReduceMod(benchmark::State& state) {
    const QExpansion E = cohen_series(HalfIntWeight(15), 500);
    for (auto _ : state) benchmark::DoNotOptimize(reduce_mod(E, 7, 2));
}
BENCHMARK(BM_ReduceMod);

static void BM_VerifyCompletion(benchmark::State& state) {
    const std::int64_t N = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(verify_completion(7, 1, N));
}
BENCHMARK(BM_VerifyCompletion)->Arg(50)->Arg(150);

BENCHMARK_MAIN();
