#include "osprings/parallel.hpp"

#include <omp.h>

#include <atomic>
#include <cstdlib>

namespace osprings {

static std::atomic<int> g_budget{0};

int thread_budget() {
  int b = g_budget.load();
  if (b > 0) return b;
  if (const char* env = std::getenv("OSPRINGS_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return omp_get_max_threads();
}

void set_thread_budget(int threads) { g_budget.store(threads); }

static int stat_of(const ExtendedFilling& f, int s, Statistic st) { return st == Statistic::Inv ? inv(f) : dinv(f, s); }

FundExpansion frob_fund_omp(int n, const Partition& la, int s, Statistic st, int threads) {
  FundExpansion out;
  out.n = n;
  if (static_cast<int>(la.size()) > s || size_of(la) > n) return out;
  Composition shape = la;
  shape.resize(s, 0);
  auto fillings = enumerate_seci(n, shape, s);
  int T = threads > 0 ? threads : 1;
  std::vector<std::map<DescentSet, std::vector<long>>> local(T);
#pragma omp parallel num_threads(T)
  {
    auto& mine = local[omp_get_thread_num()];
#pragma omp for schedule(static)
    for (long i = 0; i < static_cast<long>(fillings.size()); ++i) {
      const auto& f = fillings[i];
      int q = stat_of(f, s, st);
      auto& v = mine[inverse_descents(reading_word(f))];
      if (static_cast<int>(v.size()) <= q) v.resize(q + 1, 0);
      ++v[q];
    }
  }
  std::map<DescentSet, std::vector<long>> merged;
  for (auto& m : local)
    for (auto& [d, v] : m) {
      auto& w = merged[d];
      if (w.size() < v.size()) w.resize(v.size(), 0);
      for (size_t k = 0; k < v.size(); ++k) w[k] += v[k];
    }
  for (auto& [d, v] : merged) {
    std::vector<mpz_class> c(v.begin(), v.end());
    out.add(d, QPoly(std::move(c)));
  }
  return out;
}

MonomialTally eci_tally(int n, const Composition& shape, int s, Statistic st, int max_label) {
  MonomialTally out;
  for (auto& f : enumerate_eci_bounded(n, shape, s, max_label))
    out[f.content(max_label)] += QPoly::monomial(stat_of(f, s, st));
  return out;
}

MonomialTally eci_tally_omp(int n, const Composition& shape, int s, Statistic st, int max_label, int threads) {
  auto fillings = enumerate_eci_bounded(n, shape, s, max_label);
  int T = threads > 0 ? threads : 1;
  std::vector<std::map<Composition, std::vector<long>>> local(T);
#pragma omp parallel num_threads(T)
  {
    auto& mine = local[omp_get_thread_num()];
#pragma omp for schedule(static)
    for (long i = 0; i < static_cast<long>(fillings.size()); ++i) {
      int q = stat_of(fillings[i], s, st);
      auto& v = mine[fillings[i].content(max_label)];
      if (static_cast<int>(v.size()) <= q) v.resize(q + 1, 0);
      ++v[q];
    }
  }
  MonomialTally out;
  for (auto& m : local)
    for (auto& [x, v] : m) {
      std::vector<mpz_class> c(v.begin(), v.end());
      out[x] += QPoly(std::move(c));
    }
  return out;
}

}  // namespace osprings
