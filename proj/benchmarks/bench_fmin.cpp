#include <benchmark/benchmark.h>

#include "spectral_bounds/fmin.hpp"
#include "spectral_bounds/geometry.hpp"

using namespace spectral_bounds;

static void BM_MeshStadium(benchmark::State& state) {
  const ShapeSpec s = ShapeSpec::stadium(1.0, 2.0);
  for (auto _ : state) benchmark::DoNotOptimize(boundary_mesh(s, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_MeshStadium)->Arg(128)->Arg(512)->Arg(2048);

static void BM_MinimizeEllipse(benchmark::State& state) {
  const ShapeSpec s = ShapeSpec::ellipsoid({0.3, 1.0});
  const BoundaryMesh mesh = boundary_mesh(s, static_cast<int>(state.range(0)));
  Point start(2);
  start << 0.1, -0.4;
  for (auto _ : state) benchmark::DoNotOptimize(minimize_F(mesh, start));
}
BENCHMARK(BM_MinimizeEllipse)->Arg(128)->Arg(512)->Arg(2048);

static void BM_MinimizeEllipsoid3D(benchmark::State& state) {
  const ShapeSpec s = ShapeSpec::ellipsoid({0.5, 1.0, 2.0});
  const BoundaryMesh mesh = boundary_mesh(s, 512);
  Point start(3);
  start << 0.1, 0.2, -0.3;
  for (auto _ : state) benchmark::DoNotOptimize(minimize_F(mesh, start));
}
BENCHMARK(BM_MinimizeEllipsoid3D);

BENCHMARK_MAIN();
