// Serial reference vs OpenMP kernels. The Exec argument is 0 for serial, 1 for parallel.

#include <benchmark/benchmark.h>

#include "minsurf/families.hpp"
#include "minsurf/level_curve.hpp"
#include "minsurf/measures.hpp"

using namespace minsurf;

namespace {

const WeierstrassData& fig8() {
  static const WeierstrassData d = figure_eight(1.0, 1.0);
  return d;
}

NumericConfig config(const benchmark::State& state) {
  NumericConfig cfg;
  cfg.exec = state.range(0) ? Exec::Parallel : Exec::Serial;
  cfg.theta_nodes = static_cast<int>(state.range(1));
  return cfg;
}

void BM_TraceLevel(benchmark::State& state) {
  const NumericConfig cfg = config(state);
  for (auto _ : state) benchmark::DoNotOptimize(trace_level(fig8(), 0.02, cfg).length);
  state.SetLabel(cfg.exec == Exec::Parallel ? "parallel" : "serial");
}

void BM_SlabArea(benchmark::State& state) {
  const NumericConfig cfg = config(state);
  const Slab slab = thin_slab(fig8());
  for (auto _ : state) benchmark::DoNotOptimize(slab_area(fig8(), slab, cfg));
  state.SetLabel(cfg.exec == Exec::Parallel ? "parallel" : "serial");
}

void BM_TotalCurvature(benchmark::State& state) {
  const NumericConfig cfg = config(state);
  const AnnulusWindow w(1e-3, 1e3);
  for (auto _ : state) benchmark::DoNotOptimize(total_curvature(fig8(), w, cfg));
  state.SetLabel(cfg.exec == Exec::Parallel ? "parallel" : "serial");
}

void BM_CircleLength(benchmark::State& state) {
  const NumericConfig cfg = config(state);
  for (auto _ : state) benchmark::DoNotOptimize(circle_length(fig8(), 1.1, cfg));
  state.SetLabel(cfg.exec == Exec::Parallel ? "parallel" : "serial");
}

}  // namespace

BENCHMARK(BM_TraceLevel)->ArgsProduct({{0, 1}, {1024, 4096, 16384}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SlabArea)->ArgsProduct({{0, 1}, {1024, 4096}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_TotalCurvature)->ArgsProduct({{0, 1}, {512, 2048}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_CircleLength)->ArgsProduct({{0, 1}, {4096, 65536}})->Unit(benchmark::kMicrosecond)->UseRealTime();

BENCHMARK_MAIN();
