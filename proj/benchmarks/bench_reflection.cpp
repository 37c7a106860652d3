#include <benchmark/benchmark.h>

#include "prodlog/analytic.hpp"
#include "prodlog/oracle.hpp"

using namespace prodlog;

static void BM_ClosedForm(benchmark::State& state)
{
    const ScatterParams p = scatter_params(2.0, LambertBarrier{1.0, 1.0, 0.0});
    for (auto _ : state) benchmark::DoNotOptimize(reflection_closed_form(p).r);
}
BENCHMARK(BM_ClosedForm);

static void BM_Wavefunction(benchmark::State& state)
{
    const LambertSolution psi(2.0, LambertBarrier{1.0, 1.0, 0.0}, {1.0, 0.0});
    double x = -15.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(psi(x));
        x = x < 15.0 ? x + 0.01 : -15.0;
    }
}
BENCHMARK(BM_Wavefunction);

// sigma = range(0)/100
static void BM_OracleLambert(benchmark::State& state)
{
    const LambertBarrier b{1.0, double(state.range(0)) / 100.0, 0.0};
    for (auto _ : state) benchmark::DoNotOptimize(oracle::oracle_reflection(2.0, b).r);
}
BENCHMARK(BM_OracleLambert)->Arg(15)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

static void BM_OracleStep(benchmark::State& state)
{
    for (auto _ : state) benchmark::DoNotOptimize(oracle::oracle_reflection(1.5, StepBarrier{1.0}).r);
}
BENCHMARK(BM_OracleStep)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
