#include "osprings/oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace osprings {

void ExponentPolynomial::add(const Exponent& e, const mpq_class& c) {
  if (c == 0) return;
  auto it = terms.find(e);
  if (it == terms.end()) {
    terms.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms.erase(it);
}

static void check_params(int n, const Partition& la, int s) {
  if (n < 0 || s < 0) throw std::invalid_argument("negative n or s");
  if (!is_partition(la)) throw std::invalid_argument("lambda is not a partition");
  if (static_cast<int>(la.size()) > s) throw std::invalid_argument("s < length of lambda");
  if (size_of(la) > n) throw std::invalid_argument("|lambda| > n");
}

// (subset mask, degree) pairs for the partial elementary generators
static std::vector<std::pair<unsigned, int>> elementary_generators(int n, const Partition& la) {
  std::vector<std::pair<unsigned, int>> out;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    int m = __builtin_popcount(mask);
    int p = p_stat(n, m, la);
    for (int d = std::max(1, m - p + 1); d <= m; ++d) out.push_back({mask, d});
  }
  return out;
}

static std::vector<Exponent> squarefree_terms(int n, unsigned mask, int d) {
  std::vector<Exponent> out;
  std::vector<int> idx;
  for (int i = 0; i < n; ++i)
    if (mask >> i & 1) idx.push_back(i);
  std::vector<int> pick;
  std::function<void(size_t)> rec = [&](size_t start) {
    if (static_cast<int>(pick.size()) == d) {
      Exponent e(n, 0);
      for (int i : pick) e[i] = 1;
      out.push_back(e);
      return;
    }
    for (size_t t = start; t < idx.size(); ++t) {
      pick.push_back(idx[t]);
      rec(t + 1);
      pick.pop_back();
    }
  };
  rec(0);
  return out;
}

std::vector<ExponentPolynomial> ideal_generators(int n, const Partition& la, int s) {
  check_params(n, la, s);
  std::vector<ExponentPolynomial> out;
  for (int i = 0; i < n; ++i) {
    ExponentPolynomial g;
    g.n = n;
    Exponent e(n, 0);
    e[i] = s;
    g.add(e, 1);
    out.push_back(g);
  }
  for (auto [mask, d] : elementary_generators(n, la)) {
    ExponentPolynomial g;
    g.n = n;
    for (auto& e : squarefree_terms(n, mask, d)) g.add(e, 1);
    out.push_back(g);
  }
  return out;
}

namespace {

struct Overflow {};

struct CheckedInt {
  using T = long long;
  static T mul(T a, T b) {
    T r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static T sub(T a, T b) {
    T r;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static T gcd(T a, T b) { return std::gcd(a, b); }
  static T div(T a, T b) { return a / b; }
  static bool zero(const T& a) { return a == 0; }
  static mpz_class big(T a) { return mpz_class(static_cast<long>(a)); }
};

struct BigInt {
  using T = mpz_class;
  static T mul(const T& a, const T& b) { return a * b; }
  static T sub(const T& a, const T& b) { return a - b; }
  static T gcd(const T& a, const T& b) {
    T r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
  }
  static T div(const T& a, const T& b) {
    T r;
    mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
  }
  static bool zero(const T& a) { return a == 0; }
  static mpz_class big(const T& a) { return a; }
};

template <class A>
using Row = std::vector<std::pair<int, typename A::T>>;

template <class A>
const typename A::T* entry(const Row<A>& r, int col) {
  auto it = std::lower_bound(r.begin(), r.end(), col, [](const auto& p, int c) { return p.first < c; });
  if (it == r.end() || it->first != col) return nullptr;
  return &it->second;
}

// a*x - b*y
template <class A>
Row<A> combine(const typename A::T& a, const Row<A>& x, const typename A::T& b, const Row<A>& y) {
  Row<A> out;
  out.reserve(x.size() + y.size());
  size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.push_back({x[i].first, A::mul(a, x[i].second)});
      ++i;
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.push_back({y[j].first, A::sub(typename A::T(0), A::mul(b, y[j].second))});
      ++j;
    } else {
      auto v = A::sub(A::mul(a, x[i].second), A::mul(b, y[j].second));
      if (!A::zero(v)) out.push_back({x[i].first, v});
      ++i;
      ++j;
    }
  }
  return out;
}

template <class A>
void make_primitive(Row<A>& r) {
  if (r.empty()) return;
  typename A::T g = 0;
  for (auto& [c, v] : r) g = A::gcd(g, v);
  if (g < 0) g = A::sub(typename A::T(0), g);
  if (g != 1)
    for (auto& [c, v] : r) v = A::div(v, g);
}

std::vector<Exponent> monomials_of_degree(int n, int d, int s) {
  std::vector<Exponent> out;
  Exponent e(n, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == n) {
      if (left == 0) out.push_back(e);
      return;
    }
    if (left > (n - i) * (s - 1)) return;
    for (int x = std::min(left, s - 1); x >= 0; --x) {
      e[i] = x;
      rec(i + 1, left - x);
    }
    e[i] = 0;
  };
  if (s >= 1) rec(0, d);
  return out;
}

}  // namespace

GradedQuotient::GradedQuotient(int n, const Partition& la, int s, bool force_bigint) : n_(n), s_(s), la_(la) {
  check_params(n, la, s);
  if (force_bigint) {
    bigint_ = true;
    build<BigInt>();
    return;
  }
  try {
    build<CheckedInt>();
  } catch (const Overflow&) {
    bigint_ = true;
    deg_.clear();
    build<BigInt>();
  }
}

template <class A>
void GradedQuotient::build() {
  using T = typename A::T;
  auto gens = elementary_generators(n_, la_);
  std::vector<Row<A>> prev_rows;  // pivot rows of the previous degree, in its columns
  const Degree* prev = nullptr;
  for (int d = 0;; ++d) {
    Degree D;
    D.monomials = monomials_of_degree(n_, d, s_);
    if (D.monomials.empty()) break;
    int cols = D.monomials.size();
    for (int c = 0; c < cols; ++c) D.column[D.monomials[c]] = c;

    std::vector<int> pivot_row(cols, -1);
    std::vector<Row<A>> rows;
    auto insert = [&](Row<A> r) {
      // one pass suffices: pivot rows carry no other pivot columns
      std::vector<int> hits;
      for (auto& [c, v] : r)
        if (pivot_row[c] >= 0) hits.push_back(c);
      for (int c : hits) {
        const Row<A>& P = rows[pivot_row[c]];
        const T* rc = entry<A>(r, c);
        if (!rc) continue;
        T a = *entry<A>(P, c);
        T b = *rc;
        T g = A::gcd(a, b);
        r = combine<A>(A::div(a, g), r, A::div(b, g), P);
      }
      make_primitive<A>(r);
      if (r.empty()) return;
      int c0 = r.front().first;
      if (r.front().second < 0)
        for (auto& [c, v] : r) v = A::sub(T(0), v);
      const T& p0 = r.front().second;
      for (auto& other : rows) {
        const T* oc = entry<A>(other, c0);
        if (!oc) continue;
        T g = A::gcd(p0, *oc);
        other = combine<A>(A::div(p0, g), other, A::div(*oc, g), r);
        make_primitive<A>(other);
      }
      pivot_row[c0] = rows.size();
      rows.push_back(std::move(r));
    };

    if (d >= 1 && prev) {
      for (const auto& pr : prev_rows) {
        for (int i = 0; i < n_ && static_cast<int>(rows.size()) < cols; ++i) {
          Row<A> r;
          for (auto& [c, v] : pr) {
            Exponent e = prev->monomials[c];
            if (++e[i] >= s_) continue;
            r.push_back({D.column.at(e), v});
          }
          std::sort(r.begin(), r.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
          if (!r.empty()) insert(std::move(r));
        }
      }
    }
    for (auto [mask, gd] : gens) {
      if (gd != d || static_cast<int>(rows.size()) == cols) continue;
      Row<A> r;
      for (auto& e : squarefree_terms(n_, mask, gd)) {
        if (s_ <= 1) continue;
        r.push_back({D.column.at(e), T(1)});
      }
      std::sort(r.begin(), r.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
      if (!r.empty()) insert(std::move(r));
    }
    if (static_cast<int>(rows.size()) == cols) break;  // this degree and all above vanish

    D.basis_pos.assign(cols, -1);
    for (int c = 0; c < cols; ++c) {
      if (pivot_row[c] < 0) {
        D.basis_pos[c] = D.basis.size();
        D.basis.push_back(D.monomials[c]);
      }
    }
    for (int c = 0; c < cols; ++c) {
      if (pivot_row[c] < 0) continue;
      const Row<A>& r = rows[pivot_row[c]];
      std::pair<mpz_class, std::vector<std::pair<int, mpz_class>>> red;
      for (auto& [cc, v] : r) {
        if (cc == c)
          red.first = A::big(v);
        else
          red.second.push_back({D.basis_pos[cc], A::big(v)});
      }
      D.pivots.emplace(c, std::move(red));
    }
    deg_.push_back(std::move(D));
    prev = &deg_.back();
    prev_rows = std::move(rows);
  }
}

const std::vector<Exponent>& GradedQuotient::basis(int d) const {
  static const std::vector<Exponent> empty;
  if (d < 0 || d > top_degree()) return empty;
  return deg_[d].basis;
}

QPoly GradedQuotient::hilbert() const {
  std::vector<mpz_class> c;
  for (auto& D : deg_) c.push_back(static_cast<unsigned long>(D.basis.size()));
  return QPoly(std::move(c));
}

ExponentPolynomial GradedQuotient::normal_form(const Exponent& m) const {
  if (static_cast<int>(m.size()) != n_) throw std::invalid_argument("normal_form: exponent length differs from n");
  ExponentPolynomial out;
  out.n = n_;
  int d = 0;
  for (int x : m) {
    if (x < 0) throw std::invalid_argument("normal_form: negative exponent");
    if (x >= s_) return out;
    d += x;
  }
  if (d > top_degree()) return out;
  const Degree& D = deg_[d];
  int c = D.column.at(m);
  if (D.basis_pos[c] >= 0) {
    out.add(m, 1);
    return out;
  }
  const auto& [p, entries] = D.pivots.at(c);
  for (auto& [b, v] : entries) out.add(D.basis[b], mpq_class(-v, p));
  for (auto& [e, v] : out.terms) v.canonicalize();
  return out;
}

ExponentPolynomial GradedQuotient::normal_form(const ExponentPolynomial& f) const {
  ExponentPolynomial out;
  out.n = n_;
  for (auto& [e, c] : f.terms)
    for (auto& [b, v] : normal_form(e).terms) out.add(b, c * v);
  return out;
}

ExponentPolynomial normal_form(const Exponent& m, const GradedQuotient& gq) { return gq.normal_form(m); }

QPoly hilbert_function(int n, const Partition& la, int s) { return GradedQuotient(n, la, s).hilbert(); }

// rank of sparse rational vectors by incremental echelon form
static int rational_rank(const std::vector<std::map<int, mpq_class>>& vecs) {
  std::map<int, std::map<int, mpq_class>> piv;
  int rank = 0;
  for (auto v : vecs) {
    while (!v.empty()) {
      auto lead = v.begin();
      auto it = piv.find(lead->first);
      if (it == piv.end()) {
        mpq_class inv = 1 / lead->second;
        for (auto& [c, x] : v) x *= inv;
        piv.emplace(lead->first, v);
        ++rank;
        break;
      }
      mpq_class f = lead->second;
      for (auto& [c, x] : it->second) {
        mpq_class& y = v[c];
        y -= f * x;
        if (y == 0) v.erase(c);
      }
    }
  }
  return rank;
}

bool verify_basis(const GradedQuotient& gq, int max_degree) {
  return is_monomial_basis(gq, enumerate_staircase_set(gq.n(), gq.shape(), gq.s()), max_degree);
}

bool is_monomial_basis(const GradedQuotient& gq, const std::vector<Exponent>& monomials, int max_degree) {
  std::map<int, std::vector<Composition>> by_degree;
  for (auto& a : monomials) {
    int d = size_of(a);
    if (max_degree < 0 || d <= max_degree) by_degree[d].push_back(a);
  }
  int top = max_degree < 0 ? std::max(gq.top_degree(), by_degree.empty() ? -1 : by_degree.rbegin()->first)
                           : max_degree;
  for (int d = 0; d <= top; ++d) {
    const auto& B = gq.basis(d);
    auto& A = by_degree[d];
    if (A.size() != B.size()) return false;
    std::map<Exponent, int> pos;
    for (size_t i = 0; i < B.size(); ++i) pos[B[i]] = i;
    std::vector<std::map<int, mpq_class>> vecs;
    for (auto& a : A) {
      std::map<int, mpq_class> v;
      for (auto& [e, c] : gq.normal_form(a).terms) v[pos.at(e)] = c;
      vecs.push_back(std::move(v));
    }
    if (rational_rank(vecs) != static_cast<int>(A.size())) return false;
  }
  return true;
}

bool verify_basis(int n, const Partition& la, int s, int max_degree) {
  return verify_basis(GradedQuotient(n, la, s), max_degree);
}

static std::vector<int> permutation_of_type(const Partition& mu) {
  std::vector<int> w;
  int start = 0;
  for (int len : mu) {
    for (int t = 0; t < len; ++t) w.push_back(start + (t + 1) % len);
    start += len;
  }
  return w;
}

QPoly graded_character(const GradedQuotient& gq, const Partition& cycle_type) {
  int n = gq.n();
  if (size_of(cycle_type) != n || !is_partition(cycle_type)) throw std::invalid_argument("cycle type is not a partition of n");
  auto w = permutation_of_type(cycle_type);
  std::vector<mpz_class> out;
  for (int d = 0; d <= gq.top_degree(); ++d) {
    mpq_class tr = 0;
    for (auto& b : gq.basis(d)) {
      Exponent img(n, 0);
      for (int i = 0; i < n; ++i) img[w[i]] = b[i];
      auto nf = gq.normal_form(img);
      auto it = nf.terms.find(b);
      if (it != nf.terms.end()) tr += it->second;
    }
    tr.canonicalize();
    if (tr.get_den() != 1) throw std::logic_error("non-integral trace");
    out.push_back(tr.get_num());
  }
  return QPoly(std::move(out));
}

QPoly graded_character(int n, const Partition& la, int s, const Partition& cycle_type) {
  return graded_character(GradedQuotient(n, la, s), cycle_type);
}

mpz_class centralizer_size(const Partition& mu) {
  mpz_class z = 1;
  std::map<int, int> mult;
  for (int p : mu) ++mult[p];
  for (auto [p, m] : mult) {
    for (int t = 0; t < m; ++t) z *= p;
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), m);
    z *= f;
  }
  return z;
}

long murnaghan_nakayama(const Partition& nu, const Partition& mu) {
  if (size_of(nu) != size_of(mu)) throw std::invalid_argument("murnaghan_nakayama: size mismatch");
  int L = nu.size();
  std::vector<int> beta;
  for (int i = 0; i < L; ++i) beta.push_back(nu[i] + L - 1 - i);
  std::map<std::pair<std::vector<int>, size_t>, long> memo;
  // strip the parts of mu one at a time as rim hooks, moving a bead down by the part size
  std::function<long(const std::vector<int>&, size_t)> rec = [&](const std::vector<int>& b, size_t k) -> long {
    if (k == mu.size()) return 1;
    auto key = std::make_pair(b, k);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    int r = mu[k];
    long total = 0;
    for (size_t i = 0; i < b.size(); ++i) {
      int to = b[i] - r;
      if (to < 0 || std::find(b.begin(), b.end(), to) != b.end()) continue;
      int between = 0;
      for (int x : b)
        if (x > to && x < b[i]) ++between;
      std::vector<int> nb = b;
      nb[i] = to;
      std::sort(nb.begin(), nb.end(), std::greater<int>());
      total += (between % 2 ? -1 : 1) * rec(nb, k + 1);
    }
    memo[key] = total;
    return total;
  };
  return rec(beta, 0);
}

SchurExpansion graded_frobenius_oracle(const GradedQuotient& gq) {
  int n = gq.n();
  auto classes = partitions_of(n);
  mpz_class nfact;
  mpz_fac_ui(nfact.get_mpz_t(), n);
  std::vector<QPoly> weighted;  // class size times character
  for (auto& mu : classes) {
    mpz_class size = nfact / centralizer_size(mu);
    weighted.push_back(graded_character(gq, mu) * size);
  }
  SchurExpansion out;
  out.n = n;
  for (auto& nu : classes) {
    QPoly acc;
    for (size_t k = 0; k < classes.size(); ++k) {
      long chi = murnaghan_nakayama(nu, classes[k]);
      if (chi) acc += weighted[k] * mpz_class(chi);
    }
    std::vector<mpz_class> c = acc.coeffs();
    for (auto& x : c) {
      if (x % nfact != 0) throw std::logic_error("non-integral Frobenius coefficient");
      x /= nfact;
    }
    out.add(nu, QPoly(std::move(c)));
  }
  return out;
}

SchurExpansion graded_frobenius_oracle(int n, const Partition& la, int s) {
  return graded_frobenius_oracle(GradedQuotient(n, la, s));
}

}  // namespace osprings
