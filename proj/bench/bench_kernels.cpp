// Serial reference kernels against their OpenMP counterparts, plus the three
// closed routes for y(n, r) at growing n.

#include <benchmark/benchmark.h>

#include "runprob/distribution.hpp"
#include "runprob/methods.hpp"
#include "runprob/oracle.hpp"

using namespace runprob;

static void BM_EnumerateSerial(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_outcomes_serial(n));
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}
BENCHMARK(BM_EnumerateSerial)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

static void BM_EnumerateParallel(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const auto workers = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_outcomes(n, workers));
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}
BENCHMARK(BM_EnumerateParallel)->Args({16, 1})->Args({20, 1})->Args({20, 2})->Args({20, 8})->Unit(benchmark::kMillisecond);

static void BM_PmfSerial(benchmark::State& state) {
  const TrialSpec spec(static_cast<std::uint64_t>(state.range(0)), Rational(3, 10));
  for (auto _ : state) benchmark::DoNotOptimize(pmf_of_longest_run_serial(spec));
}
BENCHMARK(BM_PmfSerial)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);

static void BM_PmfParallel(benchmark::State& state) {
  const TrialSpec spec(static_cast<std::uint64_t>(state.range(0)), Rational(3, 10));
  const auto workers = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(pmf_of_longest_run(spec, workers));
}
BENCHMARK(BM_PmfParallel)->Args({100, 1})->Args({400, 1})->Args({400, 2})->Args({400, 8})->Unit(benchmark::kMillisecond);

static void BM_MonteCarloSerial(benchmark::State& state) {
  const FloatTrialSpec spec(50, 0.5);
  const McConfig cfg{static_cast<std::uint64_t>(state.range(0)), 1, 1U << 16, 1};
  for (auto _ : state) benchmark::DoNotOptimize(monte_carlo_y_serial(spec, 5, cfg));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_MonteCarloSerial)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

static void BM_MonteCarloParallel(benchmark::State& state) {
  const FloatTrialSpec spec(50, 0.5);
  const McConfig cfg{static_cast<std::uint64_t>(state.range(0)), 1, 1U << 16, static_cast<int>(state.range(1))};
  for (auto _ : state) benchmark::DoNotOptimize(monte_carlo_y(spec, 5, cfg));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_MonteCarloParallel)->Args({1'000'000, 1})->Args({1'000'000, 2})->Args({1'000'000, 8})
    ->Unit(benchmark::kMillisecond);

static void BM_ExactRecurrence(benchmark::State& state) {
  const TrialSpec spec(static_cast<std::uint64_t>(state.range(0)), Rational(1, 2));
  for (auto _ : state) benchmark::DoNotOptimize(y_recurrence(spec, 10));
}
BENCHMARK(BM_ExactRecurrence)->RangeMultiplier(10)->Range(100, 100'000)->Unit(benchmark::kMicrosecond);

static void BM_ExactUspensky(benchmark::State& state) {
  const TrialSpec spec(static_cast<std::uint64_t>(state.range(0)), Rational(1, 2));
  for (auto _ : state) benchmark::DoNotOptimize(y_uspensky(spec, 10));
}
BENCHMARK(BM_ExactUspensky)->RangeMultiplier(10)->Range(100, 100'000)->Unit(benchmark::kMicrosecond);

static void BM_ExactCorollary(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const TrialSpec spec(n, Rational(1, 2));
  for (auto _ : state) benchmark::DoNotOptimize(y_corollary(spec, (n + 1) / 2));
}
BENCHMARK(BM_ExactCorollary)->RangeMultiplier(10)->Range(100, 1'000'000)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
