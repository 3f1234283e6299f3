// Copyright 2026 The besselpade Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BESSELPADE_POLYNOMIAL_HPP
#define BESSELPADE_POLYNOMIAL_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "besselpade/rational.hpp"

namespace besselpade {

/// Dense univariate polynomial with exact rational coefficients, stored in
/// ascending degree. The zero polynomial has no stored coefficients and
/// degree -1; otherwise the highest stored coefficient is nonzero.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<Rational> ascending) : coeffs_(ascending) { trim(); }
  explicit Polynomial(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) { trim(); }

  static Polynomial constant(const Rational& c) { return Polynomial({c}); }
  static Polynomial monomial(const Rational& c, std::size_t k) {
    std::vector<Rational> v(k + 1);
    v[k] = c;
    return Polynomial(std::move(v));
  }
  /// The polynomial x.
  static Polynomial identity() { return monomial(1, 1); }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const Rational> coefficients() const noexcept { return coeffs_; }

  /// Coefficient of x^k; zero beyond the degree.
  Rational coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
  Rational operator[](std::size_t k) const { return coefficient(k); }

  const Rational& leading() const {
    if (is_zero()) throw std::domain_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
  }

  Rational operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  std::complex<double> evaluate(std::complex<double> x) const {
    std::complex<double> acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + to_double(*it);
    return acc;
  }

  Polynomial operator-() const {
    Polynomial out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
  }

  Polynomial& operator+=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Rational& c) {
    if (c == 0) {
      coeffs_.clear();
      return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
  }
  Polynomial& operator/=(const Rational& c) {
    if (c == 0) throw std::domain_error("polynomial division by zero scalar");
    for (auto& x : coeffs_) x /= c;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator/(Polynomial a, const Rational& c) { return a /= c; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
  }
  Polynomial& operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

/// Quotient and remainder of Euclidean division.
inline std::pair<Polynomial, Polynomial> divmod(const Polynomial& dividend, const Polynomial& divisor) {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  if (dividend.degree() < divisor.degree()) return {Polynomial{}, dividend};
  std::vector<Rational> rem(dividend.coefficients().begin(), dividend.coefficients().end());
  const auto dd = static_cast<std::size_t>(divisor.degree());
  std::vector<Rational> quot(rem.size() - dd);
  const Rational& lead = divisor.leading();
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Rational factor = rem[k + dd] / lead;
    quot[k] = factor;
    if (factor == 0) continue;
    for (std::size_t i = 0; i <= dd; ++i) rem[k + i] -= factor * divisor.coefficients()[i];
  }
  rem.resize(dd);
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

inline bool divides(const Polynomial& divisor, const Polynomial& dividend) {
  return divmod(dividend, divisor).second.is_zero();
}

inline Polynomial monic(const Polynomial& p) {
  if (p.is_zero()) return p;
  return p / p.leading();
}

/// Monic greatest common divisor.
inline Polynomial gcd(Polynomial a, Polynomial b) {
  if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd of two zero polynomials");
  while (!b.is_zero()) {
    Polynomial r = monic(divmod(a, b).second);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

inline Polynomial derivative(const Polynomial& p) {
  if (p.degree() < 1) return {};
  std::vector<Rational> out(static_cast<std::size_t>(p.degree()));
  for (std::size_t k = 1; k < p.coefficients().size(); ++k) out[k - 1] = p.coefficients()[k] * k;
  return Polynomial(std::move(out));
}

/// p(c*x): the coefficient of x^k is multiplied by c^k.
inline Polynomial scale_substitute(const Polynomial& p, const Rational& c) {
  std::vector<Rational> out(p.coefficients().begin(), p.coefficients().end());
  Rational scale = 1;
  for (auto& x : out) {
    x *= scale;
    scale *= c;
  }
  return Polynomial(std::move(out));
}

/// p(x)^k.
inline Polynomial power(const Polynomial& p, unsigned k) {
  Polynomial out = Polynomial::constant(1);
  for (unsigned i = 0; i < k; ++i) out *= p;
  return out;
}

/// Splits p(x) = e(x^2) + x o(x^2) into its even and odd parts, returned as
/// polynomials in x^2.
inline std::pair<Polynomial, Polynomial> even_odd_split(const Polynomial& p) {
  std::vector<Rational> even, odd;
  const auto c = p.coefficients();
  for (std::size_t k = 0; k < c.size(); ++k) (k % 2 == 0 ? even : odd).push_back(c[k]);
  return {Polynomial(std::move(even)), Polynomial(std::move(odd))};
}

/// Descending-order rendering: "3 s^2 - 24 s + 60". The zero polynomial
/// renders as "0".
inline std::string to_string(const Polynomial& p, std::string_view var = "s") {
  if (p.is_zero()) return "0";
  std::string out;
  const auto c = p.coefficients();
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k] == 0) continue;
    const bool negative = c[k] < 0;
    const Rational mag = negative ? Rational(-c[k]) : c[k];
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    if (k == 0) {
      out += to_string(mag);
      continue;
    }
    if (mag != 1) {
      out += to_string(mag);
      out += ' ';
    }
    out += var;
    if (k > 1) {
      out += '^';
      out += std::to_string(k);
    }
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << to_string(p); }

}  // namespace besselpade

#endif  // BESSELPADE_POLYNOMIAL_HPP
