#include <benchmark/benchmark.h>

#include "spectral_bounds/oracle.hpp"

using namespace spectral_bounds;

static void BM_AssembleDisc(benchmark::State& state) {
  const ShapeSpec disc = ShapeSpec::ball(1.0, 2);
  const double h = 2.0 / state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(assemble_dirichlet_laplacian(disc, h));
}
BENCHMARK(BM_AssembleDisc)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

static void BM_EigsSquare(benchmark::State& state) {
  const ShapeSpec sq = ShapeSpec::parallelepiped({1.0, 1.0});
  const double h = 2.0 / state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(fd_eigs(sq, h, 2));
}
BENCHMARK(BM_EigsSquare)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

// nonsymmetric (Shortley-Weller) path
static void BM_EigsDisc(benchmark::State& state) {
  const ShapeSpec disc = ShapeSpec::ball(1.0, 2);
  const double h = 2.0 / state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(fd_eigs(disc, h, 2));
}
BENCHMARK(BM_EigsDisc)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

static void BM_TorsionDisc(benchmark::State& state) {
  const ShapeSpec disc = ShapeSpec::ball(1.0, 2);
  for (auto _ : state) benchmark::DoNotOptimize(fd_torsion(disc, 2.0 / 128));
}
BENCHMARK(BM_TorsionDisc)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
