#include "osprings/osp.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "osprings/fillings.hpp"

namespace osprings {

static Composition padded(const Partition& la, int s) {
  if (static_cast<int>(la.size()) > s) throw std::invalid_argument("partition longer than s");
  Composition c = la;
  c.resize(s, 0);
  return c;
}

std::vector<OrderedSetPartition> enumerate_osp(int n, const Partition& la, int s) {
  std::vector<OrderedSetPartition> out;
  if (static_cast<int>(la.size()) > s) throw std::invalid_argument("s < length of lambda");
  if (size_of(la) > n) return out;
  for (auto& f : enumerate_seci(n, padded(la, s), s)) out.push_back(seci_to_osp(f));
  return out;
}

mpz_class count_osp(int n, const Partition& la, int s) {
  if (static_cast<int>(la.size()) > s) throw std::invalid_argument("s < length of lambda");
  if (size_of(la) > n) return 0;
  Composition lo = padded(la, s);
  mpz_class total = 0;
  // block sizes a >= lo summing to n, each weighted by n!/(a_1!...a_s!)
  Composition a(s, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == s) {
      if (left != 0) return;
      mpz_class m = 1;
      int used = 0;
      for (int x : a) {
        mpz_class b;
        mpz_bin_uiui(b.get_mpz_t(), used + x, x);
        m *= b;
        used += x;
      }
      total += m;
      return;
    }
    for (int x = lo[i]; x <= left; ++x) {
      a[i] = x;
      rec(i + 1, left - x);
    }
  };
  rec(0, n);
  return total;
}

OrderedSetPartition permute_osp(const std::vector<int>& sigma, const OrderedSetPartition& osp) {
  OrderedSetPartition out;
  for (auto& b : osp) {
    std::vector<int> nb;
    for (int e : b) {
      if (e < 1 || e > static_cast<int>(sigma.size())) throw std::invalid_argument("permute_osp: element outside permutation");
      nb.push_back(sigma[e - 1]);
    }
    std::sort(nb.begin(), nb.end());
    out.push_back(nb);
  }
  return out;
}

ExtendedFilling osp_to_seci(const OrderedSetPartition& osp, const Partition& la, int s) {
  if (static_cast<int>(osp.size()) != s) throw std::invalid_argument("osp_to_seci: wrong number of blocks");
  Composition lo = padded(la, s);
  ExtendedFilling f;
  f.shape = lo;
  for (int i = 0; i < s; ++i) {
    std::vector<int> b = osp[i];
    std::sort(b.begin(), b.end());
    if (static_cast<int>(b.size()) < lo[i]) throw std::invalid_argument("osp_to_seci: block smaller than its bound");
    f.diagram.emplace_back(b.begin(), b.begin() + lo[i]);
    f.basement.emplace_back(b.begin() + lo[i], b.end());
  }
  return f;
}

OrderedSetPartition seci_to_osp(const ExtendedFilling& phi) {
  OrderedSetPartition out;
  for (int i = 0; i < phi.columns(); ++i) {
    std::vector<int> b = phi.diagram[i];
    b.insert(b.end(), phi.basement[i].begin(), phi.basement[i].end());
    std::sort(b.begin(), b.end());
    out.push_back(b);
  }
  return out;
}

}  // namespace osprings
