#include <benchmark/benchmark.h>

#include "symwalk/analysis.hpp"
#include "symwalk/characters.hpp"
#include "symwalk/walks.hpp"

using namespace symwalk;

// Full character table from a cold cache; dominated by the border-strip memo.
static void BM_CharacterTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    clear_character_cache();
    benchmark::DoNotOptimize(build_table(n));
  }
}
BENCHMARK(BM_CharacterTable)->DenseRange(8, 14, 2)->Unit(benchmark::kMillisecond);

static void BM_Distribution(benchmark::State& state) {
  auto walk = builtin_walk(WalkKind::Transposition, static_cast<int>(state.range(0)));
  const long t = state.range(1);
  build_table(walk.degree());  // warm the character cache
  for (auto _ : state) benchmark::DoNotOptimize(distribution(walk, t));
}
BENCHMARK(BM_Distribution)
    ->Args({8, 10})
    ->Args({8, 200})
    ->Args({12, 50})
    ->Unit(benchmark::kMillisecond);

static void BM_ClassAlgebraOracle(benchmark::State& state) {
  auto walk = builtin_walk(WalkKind::Transposition, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(convolve_oracle(walk, 30));
}
BENCHMARK(BM_ClassAlgebraOracle)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

static void BM_StabilizationReport(benchmark::State& state) {
  auto walk = builtin_walk(WalkKind::Transposition, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(stabilization_report(walk, TimeParity::Even));
}
BENCHMARK(BM_StabilizationReport)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

static void BM_TvCurve(benchmark::State& state) {
  auto walk = builtin_walk(WalkKind::LazyTransposition, 8, BigRational(1, 2));
  for (auto _ : state) {
    for (long t = 0; t <= state.range(0); ++t) benchmark::DoNotOptimize(tv_distance(walk, t));
  }
}
BENCHMARK(BM_TvCurve)->Arg(50)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
