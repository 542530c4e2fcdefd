#include "osprings/verify.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "osprings/fillings.hpp"
#include "osprings/frobenius.hpp"
#include "osprings/oracle.hpp"
#include "osprings/osp.hpp"
#include "osprings/parallel.hpp"

namespace osprings {

std::string partition_str(const Partition& la) {
  std::string out;
  for (size_t i = 0; i < la.size(); ++i) out += (i ? "," : "") + std::to_string(la[i]);
  return out;
}

QPoly q_stirling2(int n, int k) {
  if (n == 0 && k == 0) return QPoly(1);
  if (n <= 0 || k <= 0 || k > n) return QPoly();
  return q_stirling2(n - 1, k - 1) + q_int(k) * q_stirling2(n - 1, k);
}

std::vector<std::string> suite_names() {
  return {"basis",  "osp",  "equidistribution", "skewing", "exact-sequence", "monotonicity",
          "oracle", "rank", "hl-expansion",     "llt",     "ungraded",       "specializations"};
}

bool is_experimental_suite(const std::string& name) { return name == "hl-expansion"; }

namespace {

struct Cell {
  int n;
  Partition la;
  int s;
};

std::vector<Cell> grid(int max_n, int max_s) {
  std::vector<Cell> out;
  for (int n = 1; n <= max_n; ++n)
    for (int s = 1; s <= max_s; ++s)
      for (auto& la : partitions_up_to(n, s)) out.push_back({n, la, s});
  return out;
}

CheckRecord rec(const std::string& suite, const Cell& c, bool pass, std::string detail = "", std::string extra = "") {
  return {suite, c.n, c.la, c.s, std::move(extra), pass, std::move(detail)};
}

using Checker = std::function<std::vector<CheckRecord>(const Cell&)>;

std::vector<CheckRecord> fan_out(const std::vector<Cell>& cells, const Checker& check, int threads) {
  auto parts = parallel_map<std::vector<CheckRecord>>(
      cells.size(), [&](std::size_t i) { return check(cells[i]); }, threads);
  std::vector<CheckRecord> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

std::string mismatch(const std::string& what, const std::string& a, const std::string& b) {
  return what + ": " + a + " vs " + b;
}

std::vector<CheckRecord> basis_suite(int max_n, int max_s, int threads) {
  return fan_out(grid(max_n, max_s), [](const Cell& c) {
    GradedQuotient gq(c.n, c.la, c.s);
    mpz_class a = enumerate_staircase_set(c.n, c.la, c.s).size();
    mpz_class o = count_osp(c.n, c.la, c.s);
    mpz_class h = gq.hilbert().at_one();
    bool ok = a == o && o == h;
    std::string detail = "dim " + a.get_str();
    if (!ok) detail = "staircase " + a.get_str() + ", osp " + o.get_str() + ", oracle " + h.get_str();
    bool vb = verify_basis(gq);
    if (!vb) detail += ", staircase monomials are not a basis";
    return std::vector<CheckRecord>{rec("basis", c, ok && vb, detail)};
  }, threads);
}

std::vector<CheckRecord> osp_suite(int max_n, int max_s, int threads) {
  return fan_out(grid(max_n, max_s), [](const Cell& c) {
    auto osps = enumerate_osp(c.n, c.la, c.s);
    std::string detail;
    if (mpz_class(osps.size()) != count_osp(c.n, c.la, c.s)) detail = "enumeration size differs from the count";
    std::set<OrderedSetPartition> seen(osps.begin(), osps.end());
    if (seen.size() != osps.size()) detail = "duplicate ordered set partitions";
    for (auto& p : osps)
      if (seci_to_osp(osp_to_seci(p, c.la, c.s)) != p) {
        detail = "filling round trip failed";
        break;
      }
    // brute force membership over [0,s)^n
    auto A = enumerate_staircase_set(c.n, c.la, c.s);
    std::set<Composition> inA(A.begin(), A.end());
    Composition a(c.n, 0);
    while (detail.empty()) {
      bool m1 = in_staircase_set(a, c.n, c.la, c.s);
      bool m2 = in_staircase_set_by_shuffles(a, c.n, c.la, c.s);
      if (m1 != m2 || m1 != (inA.count(a) > 0)) detail = "membership disagrees at a staircase vector";
      int i = 0;
      while (i < c.n && ++a[i] == c.s) a[i++] = 0;
      if (i == c.n) break;
    }
    return std::vector<CheckRecord>{rec("osp", c, detail.empty(), detail)};
  }, threads);
}

std::vector<Composition> distinct_rearrangements(const Partition& la, int s) {
  Composition v = la;
  v.resize(s, 0);
  std::sort(v.begin(), v.end());
  std::vector<Composition> out;
  do out.push_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

std::string comp_str(const Composition& a) { return partition_str(a); }

std::vector<CheckRecord> equidistribution_suite(int max_n, int max_s, int threads) {
  std::vector<Cell> cells;
  for (auto& c : grid(std::min(max_n, 5), std::min(max_s, 3))) cells.push_back(c);
  return fan_out(cells, [](const Cell& c) {
    std::vector<CheckRecord> out;
    for (auto& shape : distinct_rearrangements(c.la, c.s)) {
      std::string extra = "shape=" + comp_str(shape);
      auto ti = eci_tally(c.n, shape, c.s, Statistic::Inv, c.n);
      auto td = eci_tally(c.n, shape, c.s, Statistic::Dinv, c.n);
      out.push_back(rec("equidistribution", c, ti == td, ti == td ? "" : "inv and dinv tallies differ", extra));

      auto fillings = enumerate_eci_bounded(c.n, shape, c.s, c.n);
      std::string detail;
      std::map<Composition, long> per_content;
      for (auto& f : fillings) {
        Composition content = f.content(c.n);
        ++per_content[content];
        Composition ic = invcode(f), dc = dinvcode(f, c.s);
        if (!is_valid_code(ic, shape, c.s, content) || insert_inv(ic, shape, c.s, content) != f) {
          detail = "inv insertion does not invert invcode";
          break;
        }
        if (!is_valid_code(dc, shape, c.s, content) || insert_dinv(dc, shape, c.s, content) != f) {
          detail = "dinv insertion does not invert dinvcode";
          break;
        }
      }
      if (detail.empty()) {
        auto codes = enumerate_staircase_set(c.n, c.la, c.s);
        for (auto& content : weak_compositions(c.n, c.n)) {
          long valid = 0;
          for (auto& code : codes) {
            if (!is_valid_code(code, shape, c.s, content)) continue;
            ++valid;
            auto fi = insert_inv(code, shape, c.s, content);
            auto fd = insert_dinv(code, shape, c.s, content);
            if (invcode(fi) != code || dinvcode(fd, c.s) != code || fi.content(c.n) != content ||
                fd.content(c.n) != content) {
              detail = "code does not survive insertion";
              break;
            }
          }
          auto it = per_content.find(content);
          if (detail.empty() && valid != (it == per_content.end() ? 0 : it->second))
            detail = "valid code count differs from filling count";
          if (!detail.empty()) break;
        }
      }
      out.push_back(rec("equidistribution", c, detail.empty(), detail, extra + " insertion"));
    }
    return out;
  }, threads);
}

std::vector<CheckRecord> skewing_suite(int max_n, int max_s, int threads) {
  return fan_out(grid(max_n, max_s), [](const Cell& c) {
    std::vector<CheckRecord> out;
    for (int j = 1; j <= c.n; ++j) {
      bool ok = skew_recursion_check(c.n, c.la, c.s, j);
      out.push_back(rec("skewing", c, ok, ok ? "" : "skewed series differs from the reduction sum", "j=" + std::to_string(j)));
    }
    return out;
  }, threads);
}

std::vector<CheckRecord> exact_sequence_suite(int max_n, int max_s, int threads) {
  return fan_out(grid(max_n, max_s), [](const Cell& c) {
    std::vector<CheckRecord> out;
    if (static_cast<int>(c.la.size()) >= c.s) return out;
    if (size_of(c.la) < c.n) {
      bool ok = exact_sequence_check(c.n, c.la, c.s);
      out.push_back(rec("exact-sequence", c, ok, ok ? "" : "one-zero identity fails", "one-zero"));
    }
    bool ok = removing_zeros_check(c.n, c.la, c.s);
    out.push_back(rec("exact-sequence", c, ok, ok ? "" : "removing-zeros identity fails", "all-zeros"));
    return out;
  }, threads);
}

bool comparable(const Partition& la, const Partition& mu) {
  if (la == mu) return false;
  if (size_of(la) == size_of(mu)) return dominance_leq(la, mu);
  return size_of(la) < size_of(mu) && contained_in(la, mu);
}

std::vector<CheckRecord> monotonicity_suite(int max_n, int max_s, int threads) {
  std::vector<Cell> cells;
  for (int n = 1; n <= max_n; ++n)
    for (int s = 1; s <= std::min(max_s, 3); ++s)
      for (auto& la : partitions_up_to(n, s)) cells.push_back({n, la, s});
  return fan_out(cells, [](const Cell& c) {
    std::vector<CheckRecord> out;
    for (auto& mu : partitions_up_to(c.n, c.s)) {
      if (!comparable(c.la, mu)) continue;
      bool ok = monotonicity_check(c.n, c.la, mu, c.s);
      out.push_back(rec("monotonicity", c, ok, ok ? "" : "coefficient inequality fails", "mu=" + partition_str(mu)));
    }
    return out;
  }, threads);
}

std::vector<CheckRecord> oracle_suite(int max_n, int max_s, int threads) {
  return fan_out(grid(max_n, max_s), [](const Cell& c) {
    std::vector<CheckRecord> out;
    GradedQuotient gq(c.n, c.la, c.s);
    QPoly h = gq.hilbert();
    QPoly hi = hilb(c.n, c.la, c.s, Statistic::Inv);
    QPoly hd = hilb(c.n, c.la, c.s, Statistic::Dinv);
    bool ok = h == hi && hi == hd;
    out.push_back(rec("oracle", c, ok, ok ? h.str() : "oracle " + h.str() + ", inv " + hi.str() + ", dinv " + hd.str(),
                      "hilbert"));
    if (c.n <= 5 && c.s <= 3) {
      auto fo = graded_frobenius_oracle(gq);
      auto fr = frob(c.n, c.la, c.s).schur;
      out.push_back(rec("oracle", c, fo == fr, fo == fr ? "" : mismatch("frob", fr.str(), fo.str()), "frobenius"));
    }
    return out;
  }, threads);
}

QPoly degree_slice(const QPoly& f, int d) {
  mpz_class c = f.coeff(d);
  return c == 0 ? QPoly() : QPoly::monomial(d, c);
}

SchurExpansion degree_slice(const SchurExpansion& f, int d) {
  SchurExpansion out;
  out.n = f.n;
  for (auto& [nu, c] : f.terms) out.add(nu, degree_slice(c, d));
  return out;
}

std::vector<CheckRecord> rank_suite(int max_n, int max_s, int threads) {
  (void)max_s;  // s is driven by the degree here
  std::vector<CheckRecord> out;
  Cell spot{3, {1}, 0};
  QPoly rh = rank_hilb(3, {1}, 4);
  QPoly want(std::vector<mpz_class>{1, 3, 6, 9, 12});
  out.push_back(rec("rank", spot, rh == want, rh.str(), "spot"));

  std::vector<Cell> cells;
  for (int n = 1; n <= std::min(max_n, 5); ++n)
    for (auto& la : partitions_up_to(n, n)) cells.push_back({n, la, 0});
  auto more = fan_out(cells, [](const Cell& c) {
    std::vector<CheckRecord> res;
    for (int d = 0; d <= 6; ++d) {
      int s0 = rank_stable_s(c.la, d);
      auto base = degree_slice(frob(c.n, c.la, s0).schur, d);
      std::string detail;
      for (int s = s0 + 1; s <= s0 + 2 && detail.empty(); ++s)
        if (degree_slice(frob(c.n, c.la, s).schur, d) != base) detail = "degree slice moves at s=" + std::to_string(s);
      Cell cc = c;
      cc.s = s0;
      res.push_back(rec("rank", cc, detail.empty(), detail, "stable d=" + std::to_string(d)));
    }
    if (c.n <= 4) {
      for (int d = 0; d <= 4; ++d) {
        int s0 = rank_stable_s(c.la, d);
        long members = 0;
        for (auto& a : weak_compositions(d, c.n))
          if (in_rank_staircase_set(a, c.n, c.la)) ++members;
        bool ok = mpz_class(members) == rank_hilb(c.n, c.la, d).coeff(d) && verify_basis(c.n, c.la, s0, d);
        Cell cc = c;
        cc.s = s0;
        res.push_back(rec("rank", cc, ok, ok ? "" : "rank staircase monomials do not give a basis", "basis d=" + std::to_string(d)));
      }
    }
    return res;
  }, threads);
  out.insert(out.end(), more.begin(), more.end());
  return out;
}

std::vector<CheckRecord> hl_suite(int max_n, int max_s, int threads) {
  return fan_out(grid(std::min(max_n, 5), std::min(max_s, 3)), [](const Cell& c) {
    auto lhs = frob(c.n, c.la, c.s).schur;
    auto rhs = hl_expansion(c.n, c.la, c.s);
    bool ok = lhs == rhs;
    return std::vector<CheckRecord>{rec("hl-expansion", c, ok, ok ? "" : mismatch("frob vs expansion", lhs.str(), rhs.str()))};
  }, threads);
}

std::vector<CheckRecord> llt_suite(int max_n, int max_s, int threads) {
  return fan_out(grid(std::min(max_n, 4), max_s), [](const Cell& c) {
    bool ok = llt_summand_check(c.n, c.la, c.s);
    return std::vector<CheckRecord>{rec("llt", c, ok, ok ? "" : "a basement summand differs from its row tally")};
  }, threads);
}

std::vector<CheckRecord> ungraded_suite(int max_n, int max_s, int threads) {
  return fan_out(grid(max_n, max_s), [](const Cell& c) {
    auto a = at_q_one(frob(c.n, c.la, c.s).schur);
    auto b = ungraded_frob(c.n, c.la, c.s);
    return std::vector<CheckRecord>{rec("ungraded", c, a == b, a == b ? "" : mismatch("q=1", a.str(), b.str()))};
  }, threads);
}

std::vector<CheckRecord> specializations_suite(int max_n, int max_s, int threads) {
  std::vector<Cell> cells;
  for (int n = 1; n <= max_n; ++n)
    for (auto& la : partitions_of(n)) {
      int l = la.size();
      for (int s = l; s <= std::max(l + 1, max_s); ++s) cells.push_back({n, la, s});
    }
  auto out = fan_out(cells, [](const Cell& c) {
    auto a = frob(c.n, c.la, c.s).schur;
    auto b = hl_qprime_rev(c.la);
    return std::vector<CheckRecord>{rec("specializations", c, a == b, a == b ? "" : mismatch("hall-littlewood", a.str(), b.str()), "full size")};
  }, threads);
  for (int n = 1; n <= max_n; ++n)
    for (int k = 1; k <= n; ++k) {
      Partition ones(k, 1);
      QPoly want = rev_q(q_factorial(k) * q_stirling2(n, k));
      QPoly got = hilb(n, ones, k, Statistic::Inv);
      out.push_back(rec("specializations", {n, ones, k}, got == want, got == want ? "" : mismatch("hilbert", got.str(), want.str()), "ones"));
    }
  return out;
}

}  // namespace

std::vector<CheckRecord> run_suite(const std::string& name, int max_n, int max_s, int threads) {
  if (name == "all") {
    std::vector<CheckRecord> out;
    for (auto& s : suite_names()) {
      if (is_experimental_suite(s)) continue;
      auto part = run_suite(s, max_n, max_s, threads);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  if (name == "basis") return basis_suite(max_n, max_s, threads);
  if (name == "osp") return osp_suite(max_n, max_s, threads);
  if (name == "equidistribution") return equidistribution_suite(max_n, max_s, threads);
  if (name == "skewing") return skewing_suite(max_n, max_s, threads);
  if (name == "exact-sequence") return exact_sequence_suite(max_n, max_s, threads);
  if (name == "monotonicity") return monotonicity_suite(max_n, max_s, threads);
  if (name == "oracle") return oracle_suite(max_n, max_s, threads);
  if (name == "rank") return rank_suite(max_n, max_s, threads);
  if (name == "hl-expansion") return hl_suite(max_n, max_s, threads);
  if (name == "llt") return llt_suite(max_n, max_s, threads);
  if (name == "ungraded") return ungraded_suite(max_n, max_s, threads);
  if (name == "specializations") return specializations_suite(max_n, max_s, threads);
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace osprings
