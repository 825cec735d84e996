#include <benchmark/benchmark.h>

#include "spectral_bounds/special.hpp"

using namespace spectral_bounds;

static void BM_BesselJ(benchmark::State& state) {
  const double x = static_cast<double>(state.range(0)) / 10.0;
  for (auto _ : state) benchmark::DoNotOptimize(bessel_j(1.0, x));
}
BENCHMARK(BM_BesselJ)->Arg(5)->Arg(50)->Arg(500);

static void BM_BesselJFractional(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(bessel_j(2.5, 17.0));
}
BENCHMARK(BM_BesselJFractional);

static void BM_BesselY0(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(bessel_y(0, 7.5));
}
BENCHMARK(BM_BesselY0);

static void BM_FirstZero(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(first_zero(1.5));
}
BENCHMARK(BM_FirstZero);

static void BM_PwRoot(benchmark::State& state) {
  const double p = static_cast<double>(state.range(0)) / 100.0;
  for (auto _ : state) benchmark::DoNotOptimize(pw_root(p));
}
BENCHMARK(BM_PwRoot)->Arg(10)->Arg(50)->Arg(95);

BENCHMARK_MAIN();
