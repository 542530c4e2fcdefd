#include "osprings/symfunc.hpp"

#include <algorithm>
#include <functional>
#include <mutex>

#include "osprings/fillings.hpp"

namespace osprings {

static std::string bracket(const std::vector<int>& v) {
  std::string s = "[";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

void SchurExpansion::add(const Partition& la, const QPoly& c) {
  if (c.is_zero()) return;
  auto it = terms.find(la);
  if (it == terms.end()) {
    terms.emplace(la, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms.erase(it);
}

QPoly SchurExpansion::coeff(const Partition& la) const {
  auto it = terms.find(la);
  return it == terms.end() ? QPoly() : it->second;
}

SchurExpansion& SchurExpansion::operator+=(const SchurExpansion& o) {
  for (auto& [la, c] : o.terms) add(la, c);
  return *this;
}

SchurExpansion SchurExpansion::times(const QPoly& c) const {
  SchurExpansion r;
  r.n = n;
  for (auto& [la, x] : terms) r.add(la, x * c);
  return r;
}

int SchurExpansion::max_degree() const {
  int d = -1;
  for (auto& [la, c] : terms) d = std::max(d, c.degree());
  return d;
}

static std::string coefficient_prefix(const mpz_class& k) {
  if (k == 1) return "";
  if (k == -1) return "-";
  return k.get_str();
}

std::string SchurExpansion::str() const {
  if (terms.empty()) return "0";
  int top = max_degree();
  std::vector<std::string> groups;
  for (int d = 0; d <= top; ++d) {
    std::vector<std::string> parts;
    // larger partitions first
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
      mpz_class k = it->second.coeff(d);
      if (k != 0) parts.push_back(coefficient_prefix(k) + "s" + bracket(it->first));
    }
    if (parts.empty()) continue;
    if (d == 0) {
      for (auto& p : parts) groups.push_back(p);
    } else {
      std::string inner;
      for (size_t i = 0; i < parts.size(); ++i) inner += (i && parts[i][0] != '-' ? "+" : "") + parts[i];
      groups.push_back((d == 1 ? std::string("q") : "q^" + std::to_string(d)) + "(" + inner + ")");
    }
  }
  std::string out;
  for (size_t i = 0; i < groups.size(); ++i) {
    if (i == 0)
      out = groups[i];
    else if (groups[i][0] == '-')
      out += " - " + groups[i].substr(1);
    else
      out += " + " + groups[i];
  }
  return out;
}

void FundExpansion::add(const DescentSet& d, const QPoly& c) {
  if (c.is_zero()) return;
  auto it = terms.find(d);
  if (it == terms.end()) {
    terms.emplace(d, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms.erase(it);
}

std::string FundExpansion::str() const {
  if (terms.empty()) return "0";
  std::string out;
  for (auto& [d, c] : terms) {
    if (!out.empty()) out += " + ";
    out += "(" + c.str() + ")F" + bracket(d);
  }
  return out;
}

long kostka(const Partition& la, const Partition& mu) {
  if (size_of(la) != size_of(mu)) throw std::invalid_argument("kostka: size mismatch");
  static std::map<std::pair<Partition, Partition>, long> memo;
  static std::mutex mtx;
  {
    std::lock_guard<std::mutex> g(mtx);
    auto it = memo.find({la, mu});
    if (it != memo.end()) return it->second;
  }
  long r = 0;
  if (mu.empty()) {
    r = la.empty() ? 1 : 0;
  } else {
    // remove a horizontal strip of size mu.back() carrying the largest label
    int m = mu.back();
    Partition rest(mu.begin(), mu.end() - 1);
    Partition nu = la;
    std::function<void(size_t, int)> rec = [&](size_t row, int left) {
      if (row == la.size()) {
        if (left == 0) r += kostka(sorted_partition(nu), rest);
        return;
      }
      int below = row + 1 < la.size() ? la[row + 1] : 0;
      for (int take = 0; take <= std::min(left, la[row] - below); ++take) {
        nu[row] = la[row] - take;
        rec(row + 1, left - take);
      }
      nu[row] = la[row];
    };
    rec(0, m);
  }
  std::lock_guard<std::mutex> g(mtx);
  memo[{la, mu}] = r;
  return r;
}

std::vector<std::vector<std::vector<int>>> standard_tableaux(const Partition& la) {
  std::vector<std::vector<std::vector<int>>> out;
  int n = size_of(la);
  std::vector<std::vector<int>> t(la.size());
  std::function<void(int)> rec = [&](int v) {
    if (v > n) {
      out.push_back(t);
      return;
    }
    for (size_t r = 0; r < la.size(); ++r) {
      int len = t[r].size();
      if (len == la[r]) continue;
      if (r > 0 && static_cast<int>(t[r - 1].size()) <= len) continue;
      t[r].push_back(v);
      rec(v + 1);
      t[r].pop_back();
    }
  };
  rec(1);
  return out;
}

DescentSet tableau_descents(const std::vector<std::vector<int>>& t) {
  int n = 0;
  for (auto& row : t) n += row.size();
  std::vector<int> row_of(n + 1);
  for (size_t r = 0; r < t.size(); ++r)
    for (int v : t[r]) row_of[v] = r;
  DescentSet d;
  for (int i = 1; i < n; ++i)
    if (row_of[i + 1] > row_of[i]) d.push_back(i);
  return d;
}

FundExpansion schur_to_fund(const Partition& la) {
  FundExpansion f;
  f.n = size_of(la);
  for (auto& t : standard_tableaux(la)) f.add(tableau_descents(t), 1);
  return f;
}

SchurExpansion fund_to_schur(const FundExpansion& f) {
  int n = f.n;
  SchurExpansion out;
  out.n = n;
  // monomial coefficient of x^alpha: F_D contributes iff D is inside the partial sums of alpha
  std::map<Partition, QPoly> mono;
  for (auto& alpha : strong_compositions(n)) {
    std::vector<int> sums;
    int acc = 0;
    for (size_t i = 0; i + 1 < alpha.size(); ++i) sums.push_back(acc += alpha[i]);
    QPoly c;
    for (auto& [d, x] : f.terms) {
      if (std::includes(sums.begin(), sums.end(), d.begin(), d.end())) c += x;
    }
    Partition key = sorted_partition(alpha);
    auto it = mono.find(key);
    if (it == mono.end()) {
      mono.emplace(key, c);
    } else if (it->second != c) {
      throw NotSymmetricError("fundamental expansion is not symmetric at monomial " + bracket(alpha));
    }
  }
  auto parts = partitions_of(n);  // reverse lexicographic, so dominance-larger first
  for (auto& mu : parts) {
    QPoly c = mono[mu];
    for (auto& [la, x] : out.terms) {
      long k = kostka(la, mu);
      if (k != 0) c -= x * mpz_class(k);
    }
    out.add(mu, c);
  }
  return out;
}

SchurExpansion h_to_schur(const Partition& mu) {
  SchurExpansion out;
  out.n = size_of(mu);
  Partition m = sorted_partition(mu);
  for (auto& la : partitions_of(out.n)) {
    long k = kostka(la, m);
    if (k) out.add(la, QPoly(k));
  }
  return out;
}

SchurExpansion e_perp(int j, const SchurExpansion& f) {
  if (j < 0) throw std::invalid_argument("e_perp: negative degree");
  SchurExpansion out;
  out.n = f.n - j;
  if (out.n < 0) {
    out.n = 0;
    return out;
  }
  for (auto& [la, c] : f.terms) {
    // remove one box from each of j distinct rows, keeping a partition
    int L = la.size();
    for (int mask = 0; mask < (1 << L); ++mask) {
      if (__builtin_popcount(mask) != j) continue;
      Partition nu = la;
      for (int r = 0; r < L; ++r)
        if (mask >> r & 1) --nu[r];
      bool ok = true;
      for (int r = 0; r + 1 < L; ++r)
        if (nu[r] < nu[r + 1]) ok = false;
      if (ok) out.add(sorted_partition(nu), c);
    }
  }
  return out;
}

SchurExpansion e_times(int j, const SchurExpansion& f) {
  SchurExpansion out;
  out.n = f.n + j;
  for (auto& [mu, c] : f.terms) {
    int L = mu.size() + j;
    for (int mask = 0; mask < (1 << L); ++mask) {
      if (__builtin_popcount(mask) != j) continue;
      Partition nu = mu;
      nu.resize(L, 0);
      for (int r = 0; r < L; ++r)
        if (mask >> r & 1) ++nu[r];
      bool ok = true;
      for (int r = 0; r + 1 < L; ++r)
        if (nu[r] < nu[r + 1]) ok = false;
      if (ok) out.add(sorted_partition(nu), c);
    }
  }
  return out;
}

QPoly hall_inner(const SchurExpansion& a, const SchurExpansion& b) {
  QPoly r;
  if (a.n != b.n) return r;
  for (auto& [la, c] : a.terms) r += c * b.coeff(la);
  return r;
}

QPoly hilbert_coefficient(const FundExpansion& f) {
  QPoly r;
  for (auto& [d, c] : f.terms) r += c;
  return r;
}

int n_stat(const Partition& la) {
  int s = 0;
  for (size_t i = 0; i < la.size(); ++i) s += static_cast<int>(i) * la[i];
  return s;
}

SchurExpansion hl_qprime_rev(const Partition& la) {
  int n = size_of(la);
  int ell = la.size();
  FundExpansion f;
  f.n = n;
  for (auto& phi : enumerate_seci(n, la, ell)) f.add(inverse_descents(reading_word(phi)), QPoly::monomial(dinv(phi, ell)));
  return fund_to_schur(f);
}

SchurExpansion rev_q_at(const SchurExpansion& f, int d) {
  SchurExpansion r;
  r.n = f.n;
  for (auto& [la, c] : f.terms) r.add(la, rev_q_at(c, d));
  return r;
}

SchurExpansion hl_qprime(const Partition& la) { return rev_q_at(hl_qprime_rev(la), n_stat(la)); }

MonomialTally llt_rows(const std::vector<LLTRow>& rows, int max_label) {
  MonomialTally out;
  struct Placed {
    int row;
    int content;
  };
  std::vector<Placed> cells;
  for (size_t a = 0; a < rows.size(); ++a)
    for (int t = 0; t < rows[a].length; ++t) cells.push_back({static_cast<int>(a), rows[a].first_content - t});
  std::vector<int> lab(cells.size());
  std::function<void(size_t)> rec = [&](size_t p) {
    if (p == cells.size()) {
      int inversions = 0;
      for (size_t u = 0; u < cells.size(); ++u)
        for (size_t v = 0; v < cells.size(); ++v) {
          if (lab[u] <= lab[v]) continue;
          const auto& cu = cells[u];
          const auto& cv = cells[v];
          if ((cu.row < cv.row && cu.content == cv.content) || (cu.row > cv.row && cu.content == cv.content + 1))
            ++inversions;
        }
      Composition x(max_label, 0);
      for (int l : lab) ++x[l - 1];
      out[x] += QPoly::monomial(inversions);
      return;
    }
    // rows weakly increase left to right
    int lo = (p > 0 && cells[p - 1].row == cells[p].row) ? lab[p - 1] : 1;
    for (int l = lo; l <= max_label; ++l) {
      lab[p] = l;
      rec(p + 1);
    }
  };
  rec(0);
  return out;
}

}  // namespace osprings
