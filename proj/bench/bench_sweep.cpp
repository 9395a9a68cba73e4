// Serial vs OpenMP timings for the two sweep kernels. Both paths produce
// bit-identical results (tested in test_sweep); this target only measures the
// speedup.

#include <benchmark/benchmark.h>

#include <vector>

#include "theta_gauss/sweep.hpp"

using namespace theta_gauss;

namespace {

void BM_remainder_sups(benchmark::State& state, Exec exec) {
  const std::vector<double> ts = {0.05, 0.1, 0.2, 0.3};
  const std::int64_t x_count = state.range(0);
  for (auto _ : state) {
    auto sups = remainder_sups(ThetaKind::Theta3, 0.25, ts, x_count, exec);
    benchmark::DoNotOptimize(sups);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(ts.size()) *
                          x_count);
}

void BM_table_grid(benchmark::State& state, Exec exec) {
  const std::int64_t steps = state.range(0);
  for (auto _ : state) {
    auto rows = table_grid(ThetaKind::Theta2, -2.0, 2.0, 0.05, 5.0, steps, 1e-12, exec);
    benchmark::DoNotOptimize(rows);
  }
  state.SetItemsProcessed(state.iterations() * steps * steps);
}

}  // namespace

BENCHMARK_CAPTURE(BM_remainder_sups, serial, Exec::Serial)->Arg(20001);
BENCHMARK_CAPTURE(BM_remainder_sups, parallel, Exec::Parallel)->Arg(20001);
BENCHMARK_CAPTURE(BM_table_grid, serial, Exec::Serial)->Arg(64);
BENCHMARK_CAPTURE(BM_table_grid, parallel, Exec::Parallel)->Arg(64);

BENCHMARK_MAIN();
