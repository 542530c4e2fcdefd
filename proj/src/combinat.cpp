#include "osprings/combinat.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace osprings {

int size_of(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

bool is_partition(const std::vector<int>& v) {
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] <= 0) return false;
    if (i > 0 && v[i] > v[i - 1]) return false;
  }
  return true;
}

Partition sorted_partition(std::vector<int> v) {
  std::sort(v.begin(), v.end(), std::greater<int>());
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

Composition conjugate(const Partition& la, int pad_to) {
  int width = la.empty() ? 0 : la[0];
  Composition c(std::max(width, pad_to), 0);
  for (int part : la)
    for (int i = 0; i < part; ++i) ++c[i];
  return c;
}

int p_stat(int n, int m, const Partition& la) {
  if (m < 0 || m > n) throw std::invalid_argument("p_stat: m out of range");
  Composition c = conjugate(la, n);
  if (static_cast<int>(c.size()) > n) throw std::invalid_argument("p_stat: la_1 exceeds n");
  int s = 0;
  for (int i = n - m; i < n; ++i) s += c[i];
  return s;
}

bool dominance_leq(const Partition& la, const Partition& mu) {
  if (size_of(la) != size_of(mu)) return false;
  int a = 0, b = 0;
  size_t len = std::max(la.size(), mu.size());
  for (size_t i = 0; i < len; ++i) {
    a += i < la.size() ? la[i] : 0;
    b += i < mu.size() ? mu[i] : 0;
    if (a > b) return false;
  }
  return true;
}

bool contained_in(const Partition& la, const Partition& mu) {
  if (la.size() > mu.size()) return false;
  for (size_t i = 0; i < la.size(); ++i)
    if (la[i] > mu[i]) return false;
  return true;
}

Partition reduction(const Partition& la, int i) {
  if (i < 0 || i >= static_cast<int>(la.size())) throw std::invalid_argument("reduction: index out of range");
  Partition r = la;
  --r[i];
  return sorted_partition(std::move(r));
}

Partition multi_reduction(const Partition& la, const std::vector<int>& I, int s) {
  Partition cur = la;
  for (auto it = I.rbegin(); it != I.rend(); ++it) {
    if (*it < 0 || *it >= s) throw std::invalid_argument("multi_reduction: index outside [0,s-1]");
    if (*it < static_cast<int>(cur.size())) cur = reduction(cur, *it);
  }
  return cur;
}

std::vector<std::vector<int>> increasing_sequences(int s, int j) {
  std::vector<std::vector<int>> out;
  if (j < 0 || j > s) return out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == j) {
      out.push_back(cur);
      return;
    }
    for (int x = start; x < s; ++x) {
      cur.push_back(x);
      rec(x + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

std::vector<Partition> partitions_of(int n, int max_parts) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int left, int maxpart) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    if (max_parts >= 0 && static_cast<int>(cur.size()) >= max_parts) return;
    for (int p = std::min(left, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<Partition> partitions_up_to(int n, int max_parts) {
  std::vector<Partition> out;
  for (int k = 0; k <= n; ++k)
    for (auto& p : partitions_of(k, max_parts)) out.push_back(p);
  return out;
}

std::vector<Composition> weak_compositions(int total, int parts) {
  std::vector<Composition> out;
  if (parts == 0) {
    if (total == 0) out.push_back({});
    return out;
  }
  Composition cur(parts, 0);
  std::function<void(int, int)> rec = [&](int idx, int left) {
    if (idx == parts - 1) {
      cur[idx] = left;
      out.push_back(cur);
      return;
    }
    for (int x = 0; x <= left; ++x) {
      cur[idx] = x;
      rec(idx + 1, left - x);
    }
  };
  rec(0, total);
  return out;
}

std::vector<Composition> strong_compositions(int total) {
  std::vector<Composition> out;
  if (total == 0) {
    out.push_back({});
    return out;
  }
  for (int mask = 0; mask < (1 << (total - 1)); ++mask) {
    Composition c;
    int run = 1;
    for (int i = 0; i < total - 1; ++i) {
      if (mask >> i & 1) {
        c.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    c.push_back(run);
    out.push_back(c);
  }
  return out;
}

Partition concat_ones(const Partition& la, int m) {
  Partition r = la;
  r.insert(r.end(), m, 1);
  return r;
}

long long binomial(int a, int b) {
  if (b < 0 || a < 0 || b > a) return 0;
  b = std::min(b, a - b);
  long long r = 1;
  for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

bool in_staircase_set(const Composition& a, int n, const Partition& la, int s) {
  if (static_cast<int>(a.size()) != n) throw std::invalid_argument("in_staircase_set: length differs from n");
  if (static_cast<int>(la.size()) > s) throw std::invalid_argument("in_staircase_set: s < length of lambda");
  Partition cur = la;
  // peel the last coordinate: below ℓ it reduces λ, otherwise it needs a spare slot
  for (int m = n; m >= 1; --m) {
    int i = a[m - 1];
    if (i < 0 || i >= s) return false;
    if (i < static_cast<int>(cur.size())) {
      cur = reduction(cur, i);
    } else if (size_of(cur) >= m) {
      return false;
    }
  }
  return cur.empty();
}

std::vector<Composition> enumerate_staircase_set(int n, const Partition& la, int s) {
  std::map<std::pair<int, Partition>, std::vector<Composition>> memo;
  std::function<const std::vector<Composition>&(int, const Partition&)> rec =
      [&](int m, const Partition& mu) -> const std::vector<Composition>& {
    auto key = std::make_pair(m, mu);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    std::vector<Composition> out;
    if (m == 0) {
      if (mu.empty()) out.push_back({});
    } else if (size_of(mu) <= m) {
      for (int i = 0; i < s; ++i) {
        bool reduces = i < static_cast<int>(mu.size());
        if (!reduces && size_of(mu) == m) continue;
        const auto& sub = rec(m - 1, reduces ? reduction(mu, i) : mu);
        for (const auto& c : sub) {
          Composition e = c;
          e.push_back(i);
          out.push_back(std::move(e));
        }
      }
    }
    return memo.emplace(key, std::move(out)).first->second;
  };
  if (static_cast<int>(la.size()) > s) throw std::invalid_argument("enumerate_staircase_set: s < length of lambda");
  return rec(n, la);
}

bool in_rank_staircase_set(const Composition& a, int n, const Partition& la) {
  return in_staircase_set(a, n, la, std::max<int>(size_of(a) + 1, la.size()));
}

bool in_staircase_set_by_shuffles(const Composition& a, int n, const Partition& la, int s) {
  if (static_cast<int>(a.size()) != n || size_of(la) > n || static_cast<int>(la.size()) > s) return false;
  std::vector<std::vector<int>> seqs;
  for (int len : conjugate(la)) {
    std::vector<int> col(len);
    std::iota(col.begin(), col.end(), 0);
    seqs.push_back(col);
  }
  for (int t = 0; t < n - size_of(la); ++t) seqs.push_back({s - 1});
  std::vector<size_t> pos(seqs.size(), 0);
  std::function<bool(int)> rec = [&](int p) {
    if (p == n) return true;
    for (size_t q = 0; q < seqs.size(); ++q) {
      if (pos[q] == seqs[q].size()) continue;
      if (seqs[q][pos[q]] < a[p]) continue;
      ++pos[q];
      bool ok = rec(p + 1);
      --pos[q];
      if (ok) return true;
    }
    return false;
  };
  return rec(0);
}

}  // namespace osprings
