#include <benchmark/benchmark.h>

#include "sunitcount/counting.hpp"
#include "sunitcount/ntcore.hpp"
#include "sunitcount/solver.hpp"
#include "sunitcount/sunits.hpp"

using namespace sunit;

static void BM_SievePrimes(benchmark::State& state) {
  const uint64_t bound = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sieve_primes(bound));
  }
}
BENCHMARK(BM_SievePrimes)->Arg(10000)->Arg(100000)->Arg(1000000);

static void BM_EnumerateSUnits(benchmark::State& state) {
  const auto S = PrimeSet::make({2, 3, 5, 7, 11});
  const Integer cap = pow_ui(Integer(10), state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_sunits(S, cap));
  }
}
BENCHMARK(BM_EnumerateSUnits)->Arg(4)->Arg(6)->Arg(8);

static void BM_Solve(benchmark::State& state) {
  const auto t = Triple::make(1, 1, 1);
  const auto S = PrimeSet::make({2, 3, 5});
  SolveConfig cfg;
  cfg.height_cap = pow_ui(Integer(10), state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve(t, S, cfg));
  }
}
BENCHMARK(BM_Solve)->Arg(3)->Arg(4)->Arg(5);

static void BM_SolveParallel(benchmark::State& state) {
  const auto t = Triple::make(1, 1, 1);
  const auto S = PrimeSet::make({2, 3, 5, 7});
  SolveConfig cfg;
  cfg.height_cap = 100000;
  const unsigned jobs = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve(t, S, cfg, jobs));
  }
}
BENCHMARK(BM_SolveParallel)->Arg(1)->Arg(2)->Arg(4);

static void BM_DeltaLe(benchmark::State& state) {
  const Integer v = pow_ui(Integer(3), state.range(0));
  const Integer u = pow_ui(Integer(2), 2 * state.range(0));
  const auto delta = DeltaBound::parse("2/3");
  for (auto _ : state) {
    benchmark::DoNotOptimize(delta_le(v, u, delta));
  }
}
BENCHMARK(BM_DeltaLe)->Arg(10)->Arg(100)->Arg(1000);

static void BM_CountBySupports(benchmark::State& state) {
  CountQuery q;
  q.triple = Triple::make(1, 1, 1);
  q.s = 2;
  q.H = state.range(0);
  q.variant = Variant::N;
  q.cfg.height_cap = 10000;
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_by_supports(q));
  }
}
BENCHMARK(BM_CountBySupports)->Arg(20)->Arg(40)->Arg(60);

static void BM_CountNaive(benchmark::State& state) {
  CountQuery q;
  q.triple = Triple::make(1, 1, 1);
  q.s = 2;
  q.H = state.range(0);
  q.variant = Variant::N;
  q.cfg.height_cap = 10000;
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_naive(q));
  }
}
BENCHMARK(BM_CountNaive)->Arg(20)->Arg(40);

BENCHMARK_MAIN();
