#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace osprings {

// Polynomial in q with big integer coefficients. coeffs[d] is the q^d
// coefficient; trailing zeros are never stored, so zero is the empty vector.
class QPoly {
 public:
  QPoly() = default;
  QPoly(long c);
  explicit QPoly(std::vector<mpz_class> coeffs);

  static QPoly monomial(int degree, const mpz_class& c = 1);

  const std::vector<mpz_class>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  mpz_class coeff(int d) const;
  mpz_class at_one() const;
  bool nonnegative() const;

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const QPoly& o);
  QPoly& operator*=(const mpz_class& k);
  QPoly shifted(int k) const;  // times q^k, k >= 0
  QPoly truncated(int max_degree) const;

  bool operator==(const QPoly& o) const { return c_ == o.c_; }
  bool operator!=(const QPoly& o) const { return !(*this == o); }

  // "1 + 2q + 3q^2"; zero prints as "0"
  std::string str() const;

 private:
  void trim();
  std::vector<mpz_class> c_;
};

QPoly operator+(QPoly a, const QPoly& b);
QPoly operator-(QPoly a, const QPoly& b);
QPoly operator*(const QPoly& a, const QPoly& b);
QPoly operator*(QPoly a, const mpz_class& k);

QPoly q_int(int n);
QPoly q_factorial(int n);
QPoly q_binomial(int a, int b);
QPoly q_multinomial(const std::vector<int>& parts);

// coefficient reversal at the polynomial's own degree; rev_q(0) = 0
QPoly rev_q(const QPoly& f);
// q^d f(1/q); requires deg f <= d
QPoly rev_q_at(const QPoly& f, int d);

}  // namespace osprings
