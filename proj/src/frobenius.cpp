#include "osprings/frobenius.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "osprings/fillings.hpp"
#include "osprings/parallel.hpp"

namespace osprings {

static void check_shape(const Partition& la, int s) {
  if (!is_partition(la)) throw std::invalid_argument("lambda is not a partition");
  if (s < 0 || static_cast<int>(la.size()) > s) throw std::invalid_argument("s < length of lambda");
}

FundExpansion frob_fund(int n, const Partition& la, int s, Statistic st) {
  check_shape(la, s);
  FundExpansion out;
  out.n = n;
  if (size_of(la) > n) return out;
  Composition shape = la;
  shape.resize(s, 0);
  for (auto& f : enumerate_seci(n, shape, s)) {
    int q = st == Statistic::Inv ? inv(f) : dinv(f, s);
    out.add(inverse_descents(reading_word(f)), QPoly::monomial(q));
  }
  return out;
}

namespace {
std::mutex cache_mtx;
std::map<std::tuple<int, Partition, int, Statistic>, GradedModuleSeries> cache;
}  // namespace

void clear_frob_cache() {
  std::lock_guard<std::mutex> g(cache_mtx);
  cache.clear();
}

GradedModuleSeries frob(int n, const Partition& la, int s, Statistic st) {
  check_shape(la, s);
  auto key = std::make_tuple(n, la, s, st);
  {
    std::lock_guard<std::mutex> g(cache_mtx);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  GradedModuleSeries r;
  r.n = n;
  r.fund = frob_fund_omp(n, la, s, st, thread_budget());
  r.schur = fund_to_schur(r.fund);
  r.hilbert = hilbert_coefficient(r.fund);
  std::lock_guard<std::mutex> g(cache_mtx);
  cache.emplace(key, r);
  return r;
}

QPoly hilb(int n, const Partition& la, int s, Statistic method) { return frob(n, la, s, method).hilbert; }

static Composition conj_at(const Partition& p, int width) {
  Composition c = conjugate(p, width);
  c.resize(width, 0);
  return c;
}

std::map<Partition, mpz_class> ungraded_frob_h(int n, const Partition& la, int s) {
  check_shape(la, s);
  std::map<Partition, mpz_class> out;
  for (auto& mu : partitions_of(n, s)) {
    if (!contained_in(la, mu)) continue;
    int w = n + 2;
    Composition mc = conj_at(mu, w), lc = conj_at(la, w);
    mpz_class coeff = 1;
    for (int i = 0; i + 1 < w; ++i) {
      int top = (i == 0 ? s : mc[i - 1]);
      int next = mc[i];
      // factor binom(mu'_i - la'_{i+1}, mu'_i - mu'_{i+1}) with mu'_0 = s
      long long b = binomial(top - lc[i], top - next);
      coeff *= mpz_class(static_cast<long>(b));
    }
    if (coeff != 0) out[mu] += coeff;
  }
  return out;
}

SchurExpansion ungraded_frob(int n, const Partition& la, int s) {
  SchurExpansion out;
  out.n = n;
  for (auto& [mu, c] : ungraded_frob_h(n, la, s)) {
    SchurExpansion h = h_to_schur(mu);
    for (auto& [nu, x] : h.terms) out.add(nu, x * c);
  }
  return out;
}

SchurExpansion at_q_one(const SchurExpansion& f) {
  SchurExpansion out;
  out.n = f.n;
  for (auto& [la, c] : f.terms) out.add(la, QPoly(std::vector<mpz_class>{c.at_one()}));
  return out;
}

bool skew_recursion_check(int n, const Partition& la, int s, int j) {
  if (j < 1 || j > n) throw std::invalid_argument("skew_recursion_check: need 1 <= j <= n");
  SchurExpansion lhs = e_perp(j, frob(n, la, s).schur);
  SchurExpansion rhs;
  rhs.n = n - j;
  for (auto& I : increasing_sequences(s, j)) {
    int sum = 0;
    for (int i : I) sum += i;
    rhs += frob(n - j, multi_reduction(la, I, s), s).schur.times(QPoly::monomial(sum));
  }
  lhs.n = rhs.n;
  return lhs == rhs;
}

bool exact_sequence_check(int n, const Partition& la, int s) {
  check_shape(la, s);
  int k = size_of(la), ell = la.size();
  if (ell >= s || k >= n) throw std::invalid_argument("exact_sequence_check: need l(la) < s and |la| < n");
  SchurExpansion rhs = frob(n, concat_ones(la, 1), s).schur;
  rhs += frob(n, la, s - 1).schur.times(QPoly::monomial(n - k));
  return frob(n, la, s).schur == rhs;
}

bool removing_zeros_check(int n, const Partition& la, int s) {
  check_shape(la, s);
  int k = size_of(la), ell = la.size();
  if (ell >= s) throw std::invalid_argument("removing_zeros_check: need l(la) < s");
  SchurExpansion rhs;
  rhs.n = n;
  for (int m = 0; m <= std::min(s - ell, n - k); ++m) {
    QPoly c = q_binomial(s - ell, m).shifted((s - ell - m) * (n - k - m));
    rhs += frob(n, concat_ones(la, m), ell + m).schur.times(c);
  }
  return frob(n, la, s).schur == rhs;
}

bool monotonicity_check(int n, const Partition& la, const Partition& mu, int s) {
  check_shape(la, s);
  check_shape(mu, s);
  bool comparable = (size_of(la) == size_of(mu) && dominance_leq(la, mu)) ||
                    (size_of(la) < size_of(mu) && contained_in(la, mu));
  if (!comparable || size_of(mu) > n) throw std::invalid_argument("monotonicity_check: shapes are not comparable");
  auto big = frob(n, la, s).schur;
  auto small = frob(n, mu, s).schur;
  for (auto& [nu, c] : small.terms)
    if (!(big.coeff(nu) - c).nonnegative()) return false;
  return true;
}

int rank_stable_s(const Partition& la, int d) { return std::max<int>(d + 1, la.size()); }

QPoly rank_hilb(int n, const Partition& la, int max_degree) {
  std::vector<mpz_class> c;
  for (int d = 0; d <= max_degree; ++d) c.push_back(hilb(n, la, rank_stable_s(la, d), Statistic::Inv).coeff(d));
  return QPoly(std::move(c));
}

static QPoly single_degree(const QPoly& f, int d) {
  mpz_class c = f.coeff(d);
  return c == 0 ? QPoly() : QPoly::monomial(d, c);
}

GradedModuleSeries rank_frob(int n, const Partition& la, int max_degree) {
  GradedModuleSeries out;
  out.n = n;
  out.schur.n = n;
  out.fund.n = n;
  for (int d = 0; d <= max_degree; ++d) {
    auto g = frob(n, la, rank_stable_s(la, d));
    for (auto& [nu, c] : g.schur.terms) out.schur.add(nu, single_degree(c, d));
    for (auto& [D, c] : g.fund.terms) out.fund.add(D, single_degree(c, d));
    out.hilbert += single_degree(g.hilbert, d);
  }
  return out;
}

SchurExpansion hl_expansion(int n, const Partition& la, int s) {
  check_shape(la, s);
  SchurExpansion sum;
  sum.n = n;
  int w = n + 2;
  Composition lc = conj_at(la, w);
  for (auto& mu : partitions_of(n, s)) {
    if (!contained_in(la, mu)) continue;
    Composition mc = conj_at(mu, w);
    int shift = 0;
    for (int i = 0; i < w; ++i) shift += binomial(mc[i] - lc[i], 2);
    QPoly c = QPoly::monomial(shift);
    for (int i = 0; i + 1 < w; ++i) {
      int top = (i == 0 ? s : mc[i - 1]);
      c *= q_binomial(top - lc[i], top - mc[i]);
    }
    if (!c.is_zero()) sum += hl_qprime(mu).times(c);
  }
  return rev_q_at(sum, std::max(sum.max_degree(), 0));
}

bool hl_expansion_check(int n, const Partition& la, int s) {
  auto lhs = frob(n, la, s).schur;
  auto rhs = hl_expansion(n, la, s);
  return lhs == rhs;
}

int basement_gap_pairs(const Composition& beta) {
  int s = beta.size();
  int m = 0;
  for (int ip = 0; ip < s; ++ip) {
    for (int jp = 0; jp > -beta[ip]; --jp) {
      for (int i = 0; i < ip; ++i)
        if (beta[i] <= -jp) ++m;
      for (int i = ip + 1; i < s; ++i)
        if (jp + 1 <= 0 && beta[i] <= -(jp + 1)) ++m;
    }
  }
  return m;
}

bool llt_summand_check(int n, const Partition& la, int s) {
  check_shape(la, s);
  int k = size_of(la);
  if (k > n) return true;
  Composition shape = la;
  shape.resize(s, 0);
  std::map<Composition, MonomialTally> by_beta;
  for (auto& f : enumerate_eci_bounded(n, shape, s, n))
    by_beta[f.basement_sizes()][f.content(n)] += QPoly::monomial(dinv(f, s));
  for (auto& beta : weak_compositions(n - k, s)) {
    std::vector<LLTRow> rows;
    for (int i = 0; i < s; ++i)
      if (shape[i] + beta[i] > 0) rows.push_back({shape[i] + beta[i], shape[i]});
    MonomialTally expected;
    int m = basement_gap_pairs(beta);
    for (auto& [x, c] : llt_rows(rows, n)) expected[x] = c.shifted(m);
    if (expected != by_beta[beta]) return false;
  }
  return true;
}

}  // namespace osprings
