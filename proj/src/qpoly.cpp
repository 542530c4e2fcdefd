#include "osprings/qpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace osprings {

QPoly::QPoly(long c) {
  if (c != 0) c_.push_back(mpz_class(c));
}

QPoly::QPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

QPoly QPoly::monomial(int degree, const mpz_class& c) {
  if (degree < 0) throw std::invalid_argument("negative q-degree");
  std::vector<mpz_class> v(degree + 1);
  v[degree] = c;
  return QPoly(std::move(v));
}

void QPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

mpz_class QPoly::coeff(int d) const {
  if (d < 0 || d >= static_cast<int>(c_.size())) return 0;
  return c_[d];
}

mpz_class QPoly::at_one() const {
  mpz_class s = 0;
  for (auto& x : c_) s += x;
  return s;
}

bool QPoly::nonnegative() const {
  return std::all_of(c_.begin(), c_.end(), [](const mpz_class& x) { return x >= 0; });
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator*=(const QPoly& o) {
  *this = *this * o;
  return *this;
}

QPoly& QPoly::operator*=(const mpz_class& k) {
  if (k == 0) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= k;
  return *this;
}

QPoly QPoly::shifted(int k) const {
  if (k < 0) throw std::invalid_argument("negative shift");
  if (is_zero()) return {};
  std::vector<mpz_class> v(k);
  v.insert(v.end(), c_.begin(), c_.end());
  return QPoly(std::move(v));
}

QPoly QPoly::truncated(int max_degree) const {
  if (max_degree < 0) return {};
  std::vector<mpz_class> v(c_.begin(), c_.begin() + std::min<size_t>(c_.size(), max_degree + 1));
  return QPoly(std::move(v));
}

std::string QPoly::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (size_t d = 0; d < c_.size(); ++d) {
    const mpz_class& x = c_[d];
    if (x == 0) continue;
    mpz_class mag = abs(x);
    if (out.empty()) {
      if (x < 0) out += "-";
    } else {
      out += x < 0 ? " - " : " + ";
    }
    if (d == 0 || mag != 1) out += mag.get_str();
    if (d >= 1) out += "q";
    if (d >= 2) out += "^" + std::to_string(d);
  }
  return out;
}

QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  std::vector<mpz_class> v(x.size() + y.size() - 1);
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (size_t j = 0; j < y.size(); ++j) v[i + j] += x[i] * y[j];
  }
  return QPoly(std::move(v));
}

QPoly operator*(QPoly a, const mpz_class& k) { return a *= k; }

QPoly q_int(int n) {
  if (n < 0) throw std::invalid_argument("q_int of negative");
  return QPoly(std::vector<mpz_class>(n, 1));
}

QPoly q_factorial(int n) {
  QPoly r = 1;
  for (int i = 2; i <= n; ++i) r *= q_int(i);
  return r;
}

QPoly q_binomial(int a, int b) {
  if (a < 0 || b < 0 || b > a) return {};
  // Pascal rows: [i,j] = [i-1,j-1] + q^j [i-1,j]
  std::vector<QPoly> row(b + 1);
  row[0] = 1;
  for (int i = 1; i <= a; ++i) {
    for (int j = std::min(i, b); j >= 1; --j) row[j] = row[j - 1] + row[j].shifted(j);
  }
  return row[b];
}

QPoly q_multinomial(const std::vector<int>& parts) {
  QPoly r = 1;
  int total = 0;
  for (int p : parts) {
    if (p < 0) return {};
    total += p;
    r *= q_binomial(total, p);
  }
  return r;
}

QPoly rev_q(const QPoly& f) {
  if (f.is_zero()) return {};
  return rev_q_at(f, f.degree());
}

QPoly rev_q_at(const QPoly& f, int d) {
  if (f.is_zero()) return {};
  if (f.degree() > d) throw std::invalid_argument("rev_q_at: degree exceeds reversal point");
  std::vector<mpz_class> v(d + 1);
  const auto& c = f.coeffs();
  for (size_t i = 0; i < c.size(); ++i) v[d - i] = c[i];
  return QPoly(std::move(v));
}

}  // namespace osprings
