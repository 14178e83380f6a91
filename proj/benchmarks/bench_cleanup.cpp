#include <benchmark/benchmark.h>

#include "cleanup/analytic.hpp"
#include "cleanup/approx.hpp"
#include "cleanup/distribution.hpp"
#include "cleanup/montecarlo.hpp"
#include "cleanup/occupancy.hpp"

using namespace cleanup;

static void BM_RecipLen(benchmark::State& state)
{
    long const n = state.range(0);
    for (auto _ : state)
        benchmark::DoNotOptimize(recip_len(n, n / 2).value);
}
BENCHMARK(BM_RecipLen)->Arg(20)->Arg(60)->Arg(200);

static void BM_RecipLenRow(benchmark::State& state)
{
    long const n = state.range(0);
    for (auto _ : state)
        benchmark::DoNotOptimize(recip_len_row(n));
}
BENCHMARK(BM_RecipLenRow)->Arg(60)->Arg(200);

static void BM_Moments(benchmark::State& state)
{
    long const n = state.range(0);
    for (auto _ : state)
        benchmark::DoNotOptimize(moments(n, n / 2));
}
BENCHMARK(BM_Moments)->Arg(20)->Arg(35);

static void BM_MOpt(benchmark::State& state)
{
    long const n = state.range(0);
    for (auto _ : state)
        benchmark::DoNotOptimize(m_opt(n, Model::m4(), {}, 1).m_opt);
}
BENCHMARK(BM_MOpt)->Arg(20)->Arg(35)->Unit(benchmark::kMillisecond);

static void BM_MOptApprox(benchmark::State& state)
{
    long const n = state.range(0);
    for (auto _ : state)
        benchmark::DoNotOptimize(m_opt_approx(n).m_opt_approx);
}
BENCHMARK(BM_MOptApprox)->Arg(100)->Arg(2000);

static void BM_EstimateF(benchmark::State& state)
{
    Distribution const dist = Distribution::uniform(20);
    for (auto _ : state)
        benchmark::DoNotOptimize(estimate_f(20, 10, Model::m4(), dist, state.range(0), 42, 1).mean);
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_EstimateF)->Arg(100'000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
