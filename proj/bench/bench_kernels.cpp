#include <benchmark/benchmark.h>

#include "osprings/frobenius.hpp"
#include "osprings/oracle.hpp"
#include "osprings/parallel.hpp"

using namespace osprings;

static void BM_frob_fund_serial(benchmark::State& st) {
  int n = st.range(0);
  for (auto _ : st) benchmark::DoNotOptimize(frob_fund(n, {2, 1}, 4, Statistic::Inv));
}
BENCHMARK(BM_frob_fund_serial)->Arg(5)->Arg(6)->Arg(7);

static void BM_frob_fund_omp(benchmark::State& st) {
  int n = st.range(0);
  for (auto _ : st) benchmark::DoNotOptimize(frob_fund_omp(n, {2, 1}, 4, Statistic::Inv, thread_budget()));
}
BENCHMARK(BM_frob_fund_omp)->Arg(5)->Arg(6)->Arg(7);

static void BM_eci_tally_serial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(eci_tally(5, {1, 0, 1}, 3, Statistic::Dinv, 5));
}
BENCHMARK(BM_eci_tally_serial);

static void BM_eci_tally_omp(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(eci_tally_omp(5, {1, 0, 1}, 3, Statistic::Dinv, 5, thread_budget()));
}
BENCHMARK(BM_eci_tally_omp);

static void BM_oracle_quotient(benchmark::State& st) {
  int n = st.range(0);
  for (auto _ : st) benchmark::DoNotOptimize(GradedQuotient(n, {2, 1}, 4).hilbert());
}
BENCHMARK(BM_oracle_quotient)->Arg(4)->Arg(5)->Arg(6);

BENCHMARK_MAIN();
