#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "osprings/fillings.hpp"
#include "osprings/frobenius.hpp"

namespace osprings {

// OSPRINGS_THREADS overrides the OpenMP default; set_thread_budget overrides both
int thread_budget();
void set_thread_budget(int threads);

FundExpansion frob_fund_omp(int n, const Partition& la, int s, Statistic st, int threads);

// sum of q^stat x^phi over ECI_{n,shape,s} with labels <= max_label
MonomialTally eci_tally(int n, const Composition& shape, int s, Statistic st, int max_label);
MonomialTally eci_tally_omp(int n, const Composition& shape, int s, Statistic st, int max_label, int threads);

// runs f(0..count-1) across threads; results come back in index order
template <class R>
std::vector<R> parallel_map(std::size_t count, const std::function<R(std::size_t)>& f, int threads) {
  std::vector<R> out(count);
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads > 0 ? threads : 1)
  for (long i = 0; i < static_cast<long>(count); ++i) out[i] = f(i);
  return out;
}

}  // namespace osprings
