// Serial versus OpenMP routes on seeded instances.
#include <benchmark/benchmark.h>

#include "gixsat/dpll.hpp"
#include "gixsat/generator.hpp"
#include "gixsat/mitm.hpp"
#include "gixsat/oracle.hpp"

using namespace gixsat;

namespace {

Formula instance(Var n, int target) {
  GenSpec g;
  g.n = n;
  g.m = n / 2 + 2;
  g.k_min = 3;
  g.k_max = 8;
  g.max_target = target;
  g.seed = 42;
  return generate(g).formula;
}

void BM_BruteSerial(benchmark::State& st) {
  const Formula f = instance(static_cast<Var>(st.range(0)), 2);
  for (auto _ : st) benchmark::DoNotOptimize(brute_solve_serial(f, kHardOracleLimit).model_count);
}

void BM_BruteParallel(benchmark::State& st) {
  const Formula f = instance(static_cast<Var>(st.range(0)), 2);
  for (auto _ : st) benchmark::DoNotOptimize(brute_solve(f, kHardOracleLimit).model_count);
}

void BM_MitmSerial(benchmark::State& st) {
  const Formula f = instance(static_cast<Var>(st.range(0)), 3);
  for (auto _ : st) benchmark::DoNotOptimize(solve_mitm(f, std::nullopt, {}, Sweep::Serial).status);
}

void BM_MitmParallel(benchmark::State& st) {
  const Formula f = instance(static_cast<Var>(st.range(0)), 3);
  for (auto _ : st) benchmark::DoNotOptimize(solve_mitm(f, std::nullopt, {}, Sweep::Parallel).status);
}

void BM_Auto(benchmark::State& st) {
  const Formula f = instance(static_cast<Var>(st.range(0)), 3);
  for (auto _ : st) benchmark::DoNotOptimize(solve_auto(f).status);
}

}  // namespace

BENCHMARK(BM_BruteSerial)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BruteParallel)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MitmSerial)->Arg(20)->Arg(28)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MitmParallel)->Arg(20)->Arg(28)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Auto)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
