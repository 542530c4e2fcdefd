#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "osprings/combinat.hpp"
#include "osprings/qpoly.hpp"

namespace osprings {

using DescentSet = std::vector<int>;  // sorted subset of {1..n-1}

struct SchurExpansion {
  int n = 0;
  std::map<Partition, QPoly> terms;  // zero coefficients never stored

  void add(const Partition& la, const QPoly& c);
  QPoly coeff(const Partition& la) const;
  SchurExpansion& operator+=(const SchurExpansion& o);
  SchurExpansion times(const QPoly& c) const;
  bool is_zero() const { return terms.empty(); }
  int max_degree() const;
  bool operator==(const SchurExpansion& o) const { return n == o.n && terms == o.terms; }
  bool operator!=(const SchurExpansion& o) const { return !(*this == o); }
  std::string str() const;  // "s[2] + q(s[2]+s[1,1])"
};

struct FundExpansion {
  int n = 0;
  std::map<DescentSet, QPoly> terms;

  void add(const DescentSet& d, const QPoly& c);
  bool operator==(const FundExpansion& o) const { return n == o.n && terms == o.terms; }
  std::string str() const;
};

class NotSymmetricError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

long kostka(const Partition& la, const Partition& mu);
std::vector<std::vector<std::vector<int>>> standard_tableaux(const Partition& la);  // rows of entries
DescentSet tableau_descents(const std::vector<std::vector<int>>& t);

FundExpansion schur_to_fund(const Partition& la);
SchurExpansion fund_to_schur(const FundExpansion& f);
SchurExpansion h_to_schur(const Partition& mu);
SchurExpansion e_perp(int j, const SchurExpansion& f);
SchurExpansion e_times(int j, const SchurExpansion& f);
QPoly hall_inner(const SchurExpansion& a, const SchurExpansion& b);
QPoly hilbert_coefficient(const FundExpansion& f);

int n_stat(const Partition& la);  // sum (i-1) la_i
SchurExpansion hl_qprime_rev(const Partition& la);
// q^{n(la)} Q'_la(1/q), i.e. Q'_la itself
SchurExpansion hl_qprime(const Partition& la);
// global reversal of every coefficient at degree d
SchurExpansion rev_q_at(const SchurExpansion& f, int d);

// one row of cells whose contents run first_content, first_content-1, ...
struct LLTRow {
  int length;
  int first_content;
};
using MonomialTally = std::map<Composition, QPoly>;  // content vector -> coefficient
MonomialTally llt_rows(const std::vector<LLTRow>& rows, int max_label);

}  // namespace osprings
