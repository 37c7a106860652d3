#include <benchmark/benchmark.h>

#include "prodlog/specfun.hpp"

using namespace prodlog;

static void BM_LambertW(benchmark::State& state)
{
    double t = 1e-6;
    for (auto _ : state) {
        benchmark::DoNotOptimize(specfun::lambert_w(t));
        t = t < 1e6 ? t * 1.37 : 1e-6;
    }
}
BENCHMARK(BM_LambertW);

static void BM_LogGamma(benchmark::State& state)
{
    const Complex z(0.3, 2.7);
    for (auto _ : state) benchmark::DoNotOptimize(specfun::log_gamma(z));
}
BENCHMARK(BM_LogGamma);

// |z| = range(0): series, continuation and asymptotic regimes.
static void BM_KummerM(benchmark::State& state)
{
    const Complex a(1.0, 0.06), b(2.0, -2.0), z(0.0, double(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(specfun::kummer_m(a, b, z));
}
BENCHMARK(BM_KummerM)->Arg(1)->Arg(10)->Arg(40)->Arg(200);

static void BM_TricomiU(benchmark::State& state)
{
    const Complex a(0.0, 2.06), b(0.0, 2.0), z(0.0, double(state.range(0)) * 0.1);
    for (auto _ : state) benchmark::DoNotOptimize(specfun::tricomi_u(a, b, z));
}
BENCHMARK(BM_TricomiU)->Arg(1)->Arg(10)->Arg(100)->Arg(1000);
