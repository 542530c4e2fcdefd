#pragma once

#include <gmpxx.h>

#include <map>
#include <vector>

#include "osprings/combinat.hpp"
#include "osprings/qpoly.hpp"
#include "osprings/symfunc.hpp"

namespace osprings {

using Exponent = std::vector<int>;

struct ExponentPolynomial {
  int n = 0;
  std::map<Exponent, mpq_class> terms;  // no zero coefficients

  void add(const Exponent& e, const mpq_class& c);
  bool is_zero() const { return terms.empty(); }
  bool operator==(const ExponentPolynomial& o) const { return n == o.n && terms == o.terms; }
};

std::vector<ExponentPolynomial> ideal_generators(int n, const Partition& la, int s);

// Graded pieces of Q[x_1..x_n]/I_{n,la,s}, built degree by degree. Columns in
// each degree are the monomials with all exponents < s, in decreasing lex
// order; eliminating left to right makes lex-large monomials the pivots, and
// the remaining columns form the chosen basis.
class GradedQuotient {
 public:
  // arithmetic starts in checked int64 and restarts in GMP on overflow;
  // force_bigint skips the int64 attempt
  GradedQuotient(int n, const Partition& la, int s, bool force_bigint = false);

  int n() const { return n_; }
  int s() const { return s_; }
  const Partition& shape() const { return la_; }
  int top_degree() const { return static_cast<int>(deg_.size()) - 1; }
  const std::vector<Exponent>& basis(int d) const;
  QPoly hilbert() const;
  bool used_bigint() const { return bigint_; }

  // expression of a monomial in the chosen basis of its degree
  ExponentPolynomial normal_form(const Exponent& m) const;
  ExponentPolynomial normal_form(const ExponentPolynomial& f) const;

 private:
  struct Degree {
    std::vector<Exponent> monomials;
    std::map<Exponent, int> column;
    std::vector<Exponent> basis;
    std::vector<int> basis_pos;  // column -> index in basis, or -1 for pivots
    // pivot column -> (pivot coefficient, entries on basis columns)
    std::map<int, std::pair<mpz_class, std::vector<std::pair<int, mpz_class>>>> pivots;
  };
  template <class T>
  void build();

  int n_, s_;
  Partition la_;
  bool bigint_ = false;
  std::vector<Degree> deg_;
};

QPoly hilbert_function(int n, const Partition& la, int s);
bool verify_basis(int n, const Partition& la, int s, int max_degree = -1);
bool verify_basis(const GradedQuotient& gq, int max_degree = -1);
// images of the given monomials form a basis of every degree up to max_degree (all degrees if negative)
bool is_monomial_basis(const GradedQuotient& gq, const std::vector<Exponent>& monomials, int max_degree = -1);
ExponentPolynomial normal_form(const Exponent& m, const GradedQuotient& gq);
QPoly graded_character(const GradedQuotient& gq, const Partition& cycle_type);
QPoly graded_character(int n, const Partition& la, int s, const Partition& cycle_type);
SchurExpansion graded_frobenius_oracle(int n, const Partition& la, int s);
SchurExpansion graded_frobenius_oracle(const GradedQuotient& gq);
long murnaghan_nakayama(const Partition& nu, const Partition& mu);
mpz_class centralizer_size(const Partition& mu);

constexpr int kOracleDefaultMaxN = 6;

}  // namespace osprings
