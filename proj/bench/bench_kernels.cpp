// Serial reference vs OpenMP kernels.

#include <benchmark/benchmark.h>

#include "planepart/condition_iv.hpp"
#include "planepart/divisor_sieve.hpp"
#include "planepart/exact_series.hpp"
#include "planepart/kernels.hpp"

using namespace planepart;

namespace {

Execution exec_of(const benchmark::State& state) {
  return state.range(1) == 0 ? Execution::serial : Execution::parallel;
}

void label(benchmark::State& state) { state.SetLabel(state.range(1) == 0 ? "serial" : "omp"); }

void BM_Convolve(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const CoefficientTable q = plane_partition_table(n);
  const SieveTable beta2 = sigma_power_table(2, n);
  for (auto _ : state) {
    BigInt s = state.range(1) == 0 ? kernels::serial::convolve(q.coeffs(), beta2.storage(), n)
                                   : kernels::omp::convolve(q.coeffs(), beta2.storage(), n);
    benchmark::DoNotOptimize(s);
  }
  label(state);
}

void BM_DivisorSieve(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sigma_power_table(2, n, exec_of(state)));
  label(state);
}

void BM_Recurrence(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(plane_partition_table(n, exec_of(state)));
  label(state);
}

void BM_ScanIV(benchmark::State& state) {
  const auto steps = static_cast<std::size_t>(state.range(0));
  const GridSpec grid = GridSpec::log_spaced(1e-3, 1e-1, steps, 2 * steps, 2, 1);
  for (auto _ : state) benchmark::DoNotOptimize(scan_condition_iv(grid, exec_of(state)));
  label(state);
}

}  // namespace

BENCHMARK(BM_Convolve)->ArgsProduct({{1000, 10000}, {0, 1}});
BENCHMARK(BM_DivisorSieve)->ArgsProduct({{10000, 100000}, {0, 1}});
BENCHMARK(BM_Recurrence)->ArgsProduct({{2000}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScanIV)->ArgsProduct({{30, 120}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
