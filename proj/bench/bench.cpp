// Serial reference vs OpenMP kernels. Arguments: ground-set size, and for the
// parallel runs the worker count.

#include "doorlab/kernels.hpp"
#include "doorlab/set_core.hpp"

#include <benchmark/benchmark.h>

using namespace doorlab;

namespace {

void raw_serial(benchmark::State& st) {
  GroundSet g(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(kernels::serial::raw_scan(g));
}

void raw_omp(benchmark::State& st) {
  GroundSet g(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(kernels::omp::raw_scan(g, static_cast<int>(st.range(1))));
}

void dfs_serial(benchmark::State& st) {
  GroundSet g(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(kernels::serial::closure_dfs(g));
}

void dfs_omp(benchmark::State& st) {
  GroundSet g(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(kernels::omp::closure_dfs(g, static_cast<int>(st.range(1))));
}

// {-1, 0, 1} valuations on P(X): the heaviest brute solve.
kernels::ValueTable three_values() { return kernels::ValueTable({-1, 0, 1}); }

void solve_serial(benchmark::State& st) {
  GroundSet g(static_cast<int>(st.range(0)));
  auto table = three_values();
  auto domain = powerset(g);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::serial::solve_backtrack(domain, kernels::Equation::Eq2, table));
}

void solve_omp(benchmark::State& st) {
  GroundSet g(static_cast<int>(st.range(0)));
  auto table = three_values();
  auto domain = powerset(g);
  for (auto _ : st)
    benchmark::DoNotOptimize(
        kernels::omp::solve_backtrack(domain, kernels::Equation::Eq2, table, static_cast<int>(st.range(1))));
}

} // namespace

BENCHMARK(raw_serial)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(raw_omp)->ArgsProduct({{4}, {1, 2, 4}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(dfs_serial)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(dfs_omp)->ArgsProduct({{4, 5, 6}, {1, 2, 4}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(solve_serial)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(solve_omp)->ArgsProduct({{3, 4}, {1, 2, 4}})->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
