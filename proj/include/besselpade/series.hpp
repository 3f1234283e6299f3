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

#ifndef BESSELPADE_SERIES_HPP
#define BESSELPADE_SERIES_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "besselpade/polynomial.hpp"

namespace besselpade {

/// First `order()` Maclaurin coefficients of some function. Binary
/// operations truncate to the shorter operand.
class TruncatedSeries {
 public:
  TruncatedSeries() = default;
  explicit TruncatedSeries(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {}

  static TruncatedSeries from_polynomial(const Polynomial& p, std::size_t terms) {
    std::vector<Rational> c(terms);
    for (std::size_t k = 0; k < terms; ++k) c[k] = p.coefficient(k);
    return TruncatedSeries(std::move(c));
  }

  std::size_t order() const noexcept { return coeffs_.size(); }
  std::span<const Rational> coefficients() const noexcept { return coeffs_; }
  const Rational& operator[](std::size_t k) const {
    if (k >= coeffs_.size()) throw std::out_of_range("series coefficient beyond truncation order");
    return coeffs_[k];
  }

  /// Index of the first nonzero coefficient, if any lies within the order.
  std::optional<std::size_t> first_nonzero() const {
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      if (coeffs_[k] != 0) return k;
    }
    return std::nullopt;
  }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<Rational> c(n);
    for (std::size_t k = 0; k < n; ++k) c[k] = a.coeffs_[k] + b.coeffs_[k];
    return TruncatedSeries(std::move(c));
  }
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<Rational> c(n);
    for (std::size_t k = 0; k < n; ++k) c[k] = a.coeffs_[k] - b.coeffs_[k];
    return TruncatedSeries(std::move(c));
  }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<Rational> c(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; i + j < n; ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return TruncatedSeries(std::move(c));
  }

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<Rational> coeffs_;
};

/// First `terms` Maclaurin coefficients of num/den by long division in
/// ascending powers.
inline TruncatedSeries series_of_ratio(const Polynomial& num, const Polynomial& den, std::size_t terms) {
  const Rational d0 = den.coefficient(0);
  if (d0 == 0) throw std::domain_error("series_of_ratio: denominator vanishes at the origin");
  std::vector<Rational> c(terms);
  for (std::size_t k = 0; k < terms; ++k) {
    Rational acc = num.coefficient(k);
    const std::size_t reach = std::min<std::size_t>(k, den.is_zero() ? 0 : static_cast<std::size_t>(den.degree()));
    for (std::size_t i = 1; i <= reach; ++i) acc -= den.coefficients()[i] * c[k - i];
    c[k] = acc / d0;
  }
  return TruncatedSeries(std::move(c));
}

/// Maclaurin coefficients of e^{sign*x}: sign^k / k!.
inline TruncatedSeries exp_series(int sign, std::size_t terms) {
  if (terms == 0) throw std::invalid_argument("exp_series: at least one term required");
  if (sign != 1 && sign != -1) throw std::invalid_argument("exp_series: sign must be +1 or -1");
  std::vector<Rational> c(terms);
  c[0] = 1;
  for (std::size_t k = 1; k < terms; ++k) c[k] = c[k - 1] * sign / static_cast<long long>(k);
  return TruncatedSeries(std::move(c));
}

}  // namespace besselpade

#endif  // BESSELPADE_SERIES_HPP
