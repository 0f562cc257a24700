#include <benchmark/benchmark.h>

#include "cr/cr.hpp"

namespace {

using cr::Integer;

// Prime moduli near 10^k where 2 has large order.
const Integer kModuli[] = {Integer(1009), Integer(100003), Integer(1000003), Integer(10000019)};

void BM_OrderBrute(benchmark::State& state) {
  const Integer& m = kModuli[state.range(0)];
  for (auto _ : state) {
    benchmark::DoNotOptimize(cr::mult_order_bruteforce(2, m));
  }
}
BENCHMARK(BM_OrderBrute)->DenseRange(0, 3);

void BM_OrderFast(benchmark::State& state) {
  const Integer& m = kModuli[state.range(0)];
  for (auto _ : state) {
    benchmark::DoNotOptimize(cr::mult_order(2, m));
  }
}
BENCHMARK(BM_OrderFast)->DenseRange(0, 3);

void BM_OrderFormula(benchmark::State& state) {
  const auto profile = cr::build_profile(2, {Integer(3), Integer(5), Integer(7)});
  const std::vector<cr::PrimePower> d = {{Integer(3), 40}, {Integer(5), 30}, {Integer(7), 20}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(cr::order_via_formula(profile, d));
  }
}
BENCHMARK(BM_OrderFormula);

void BM_Factorize(benchmark::State& state) {
  // (2^61 - 1) * (10^9 + 7) and 2^64 + 1.
  const Integer values[] = {Integer("2305843025354595015495857657"), Integer("18446744073709551617")};
  const Integer& n = values[state.range(0)];
  for (auto _ : state) {
    benchmark::DoNotOptimize(cr::factorize(n));
  }
}
BENCHMARK(BM_Factorize)->DenseRange(0, 1);

// Whole-range count by hull descent against one coset scan per denominator.
void BM_CountDescent(benchmark::State& state) {
  const cr::DigitSet cantor(3, {0, 2});
  for (auto _ : state) {
    benchmark::DoNotOptimize(cr::count_members(cantor, state.range(0), true));
  }
}
BENCHMARK(BM_CountDescent)->RangeMultiplier(10)->Range(1000, 100000)->Unit(benchmark::kMillisecond);

void BM_CountPerDenominator(benchmark::State& state) {
  const cr::DigitSet cantor(3, {0, 2});
  const std::uint64_t T = state.range(0);
  for (auto _ : state) {
    std::uint64_t n = 0;
    for (std::uint64_t d = 1; d <= T; ++d) {
      if (d % 3 != 0) {
        n += cr::count_reduced_members(cantor, d);
      }
    }
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(BM_CountPerDenominator)->RangeMultiplier(10)->Range(1000, 100000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
