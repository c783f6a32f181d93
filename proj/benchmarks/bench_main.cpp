#include <benchmark/benchmark.h>

#include "crankstat/enumerate.hpp"
#include "crankstat/identities.hpp"
#include "crankstat/tables.hpp"

using namespace crankstat;

static void BM_SeriesMultiply(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  const auto a = partition_series(order);
  const auto b = euler_function(order);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
  state.SetComplexityN(order);
}
BENCHMARK(BM_SeriesMultiply)->RangeMultiplier(2)->Range(64, 1024)->Complexity();

static void BM_PochhammerInverse(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(poch_inf_inverse(1, 2, Sign::plus, order));
}
BENCHMARK(BM_PochhammerInverse)->Arg(200)->Arg(1000);

static void BM_CrankGf(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(crank_gf(order));
}
BENCHMARK(BM_CrankGf)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);

static void BM_OverlineTable(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_table(Statistic::ocrank(), order, Provenance::gf));
  }
}
BENCHMARK(BM_OverlineTable)->Arg(300)->Unit(benchmark::kMillisecond);

static void BM_CrankOracle(benchmark::State& state) {
  const int n_max = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(oracle_table(Statistic::crank(), n_max));
}
BENCHMARK(BM_CrankOracle)->Arg(30)->Arg(40)->Unit(benchmark::kMillisecond);

static void BM_KColoredOracle(benchmark::State& state) {
  const int n_max = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(oracle_table(Statistic::kcrank(4), n_max));
}
BENCHMARK(BM_KColoredOracle)->Arg(15)->Arg(20)->Unit(benchmark::kMillisecond);

static void BM_IdentityCatalog(benchmark::State& state) {
  for (auto _ : state) {
    TableCache cache;
    for (const auto& entry : identity_catalog()) {
      benchmark::DoNotOptimize(check_identity(entry, entry.default_order, cache));
    }
  }
}
BENCHMARK(BM_IdentityCatalog)->Unit(benchmark::kMillisecond)->Iterations(3);
BENCHMARK_MAIN();
