#pragma once

// Slow, independent references used only by the tests.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

#include "osprings/qpoly.hpp"
#include "osprings/symfunc.hpp"

namespace oracles {

using osprings::Partition;
using osprings::QPoly;
using osprings::SchurExpansion;

// q-binomial as the inversion generating function of 0/1 words with b ones
inline QPoly qbinom_by_words(int a, int b) {
  QPoly out;
  if (b < 0 || b > a) return out;
  for (int mask = 0; mask < (1 << a); ++mask) {
    if (__builtin_popcount(mask) != b) continue;
    int inv = 0, ones = 0;
    for (int i = 0; i < a; ++i) {
      if (mask >> i & 1)
        ++ones;
      else
        inv += ones;
    }
    out += QPoly::monomial(inv);
  }
  return out;
}

// all SSYT of shape la with content mu, rows listed top to bottom
inline std::vector<std::vector<std::vector<int>>> ssyt(const Partition& la, const std::vector<int>& mu) {
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<std::vector<int>> t;
  for (int r : la) t.push_back(std::vector<int>(r, 0));
  std::vector<int> left = mu;
  std::vector<std::pair<int, int>> cells;
  for (size_t r = 0; r < la.size(); ++r)
    for (int c = 0; c < la[r]; ++c) cells.push_back({static_cast<int>(r), c});
  std::function<void(size_t)> rec = [&](size_t k) {
    if (k == cells.size()) {
      out.push_back(t);
      return;
    }
    auto [r, c] = cells[k];
    for (int v = 1; v <= static_cast<int>(mu.size()); ++v) {
      if (!left[v - 1]) continue;
      if (c > 0 && t[r][c - 1] > v) continue;
      if (r > 0 && t[r - 1][c] >= v) continue;
      --left[v - 1];
      t[r][c] = v;
      rec(k + 1);
      t[r][c] = 0;
      ++left[v - 1];
    }
  };
  if (std::accumulate(la.begin(), la.end(), 0) == std::accumulate(mu.begin(), mu.end(), 0)) rec(0);
  return out;
}

inline long kostka_by_tableaux(const Partition& la, const Partition& mu) { return ssyt(la, mu).size(); }

// charge of a word whose content is a partition, via standard subword extraction
inline int charge(const std::vector<int>& w) {
  int n = w.size(), total = 0;
  std::vector<bool> used(n, false);
  int remaining = n;
  while (remaining > 0) {
    int top = 0;
    for (int i = 0; i < n; ++i)
      if (!used[i]) top = std::max(top, w[i]);
    int pos = n, index = 0;
    for (int k = 1; k <= top; ++k) {
      int found = -1;
      for (int p = pos - 1; p >= 0; --p)
        if (!used[p] && w[p] == k) {
          found = p;
          break;
        }
      if (found < 0) {
        for (int p = n - 1; p >= pos; --p)
          if (!used[p] && w[p] == k) {
            found = p;
            break;
          }
        if (k > 1) ++index;
      }
      used[found] = true;
      --remaining;
      total += index;
      pos = found;
    }
  }
  return total;
}

inline int n_of(const Partition& mu) {
  int s = 0;
  for (size_t i = 0; i < mu.size(); ++i) s += i * mu[i];
  return s;
}

// Kostka-Foulkes K_{la,mu}(q) by charge over SSYT (reading word: rows bottom to top)
inline QPoly kostka_foulkes(const Partition& la, const Partition& mu) {
  QPoly out;
  for (auto& t : ssyt(la, mu)) {
    std::vector<int> w;
    for (auto it = t.rbegin(); it != t.rend(); ++it) w.insert(w.end(), it->begin(), it->end());
    out += QPoly::monomial(charge(w));
  }
  return out;
}

// sum over la of q^{n(mu)} K_{la,mu}(1/q) s_la
inline SchurExpansion cocharge_expansion(const Partition& mu) {
  SchurExpansion out;
  out.n = std::accumulate(mu.begin(), mu.end(), 0);
  for (auto& la : osprings::partitions_of(out.n)) {
    QPoly k = kostka_foulkes(la, mu);
    if (!k.is_zero()) out.add(la, osprings::rev_q_at(k, n_of(mu)));
  }
  return out;
}

// Stir_q(n,k) = Stir_q(n-1,k-1) + [k]_q Stir_q(n-1,k)
inline QPoly stirling_q(int n, int k) {
  if (n == 0) return k == 0 ? QPoly(1) : QPoly();
  if (k <= 0) return QPoly();
  return stirling_q(n - 1, k - 1) + osprings::q_int(k) * stirling_q(n - 1, k);
}

// |OSP_{n,la,s}| by brute force over all maps [n] -> [s]
inline long count_osp_brute(int n, const Partition& la, int s) {
  long total = 0, maps = 1;
  for (int i = 0; i < n; ++i) maps *= s;
  for (long m = 0; m < maps; ++m) {
    std::vector<int> sizes(s, 0);
    long x = m;
    for (int i = 0; i < n; ++i, x /= s) ++sizes[x % s];
    bool ok = true;
    for (size_t i = 0; i < la.size(); ++i) ok = ok && sizes[i] >= la[i];
    total += ok;
  }
  return total;
}

}  // namespace oracles
