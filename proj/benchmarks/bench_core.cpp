#include <benchmark/benchmark.h>

#include "eccensus/arith.hpp"
#include "eccensus/constants.hpp"
#include "eccensus/curves.hpp"
#include "eccensus/local_counts.hpp"
#include "eccensus/quadforms.hpp"

using namespace eccensus;

static void BM_CurveOrder(benchmark::State& state) {
  const auto p = static_cast<std::uint64_t>(state.range(0));
  const auto c = curves::PrimeFieldCurve::make(p, 2, 3);
  for (auto _ : state) benchmark::DoNotOptimize(curves::curve_order(c));
}
BENCHMARK(BM_CurveOrder)->Arg(101)->Arg(1009)->Arg(10007);

static void BM_GroupShape(benchmark::State& state) {
  const auto p = static_cast<std::uint64_t>(state.range(0));
  const auto c = curves::PrimeFieldCurve::make(p, 2, 3);
  for (auto _ : state) benchmark::DoNotOptimize(curves::group_shape(c));
}
BENCHMARK(BM_GroupShape)->Arg(101)->Arg(1009)->Arg(10007);

static void BM_SweepPrime(benchmark::State& state) {
  const auto p = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(curves::sweep_prime(p));
}
BENCHMARK(BM_SweepPrime)->Arg(31)->Arg(101)->Unit(benchmark::kMillisecond);

static void BM_KroneckerClassNumber(benchmark::State& state) {
  const std::int64_t D = -state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(quadforms::kronecker_class_number(D));
}
BENCHMARK(BM_KroneckerClassNumber)->Arg(1'000'003)->Arg(4 * 250'000);

static void BM_Factorize(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(arith::factorize(1'000'000'007ULL * 998'244'353ULL));
}
BENCHMARK(BM_Factorize);

static void BM_CharSum(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(constants::c_char_sum(9, 3, n));
}
BENCHMARK(BM_CharSum)->Arg(27)->Arg(243);

static void BM_K0Truncated(benchmark::State& state) {
  const auto U = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(constants::K0_truncated(9, 3, {U, 10, 1000}));
}
BENCHMARK(BM_K0Truncated)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
