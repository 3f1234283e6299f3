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

#ifndef BESSELPADE_PADE_HPP
#define BESSELPADE_PADE_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "besselpade/gbp.hpp"
#include "besselpade/rational_function.hpp"
#include "besselpade/series.hpp"

namespace besselpade {

/// (n, m): denominator degree n, numerator degree m.
struct PadeIndex {
  unsigned n = 0;
  unsigned m = 0;
};

/// Q_nm(s) = n!/(n+m)! sum_{k=0}^{m} C(m,k) (n+k)!/n! (-s)^{m-k}.
inline Polynomial pade_numerator(const PadeIndex& idx) {
  const auto [n, m] = idx;
  const Rational prefactor(factorial(n), factorial(n + m));
  std::vector<Rational> ascending(m + 1);
  for (unsigned k = 0; k <= m; ++k) {
    const unsigned power = m - k;
    Rational c = prefactor * Rational(binomial(m, k) * factorial(n + k), factorial(n));
    if (power % 2 == 1) c = -c;
    ascending[power] = c;
  }
  return Polynomial(std::move(ascending));
}

/// P_nm(s) = m!/(n+m)! sum_{k=0}^{n} C(n,k) (m+k)!/m! s^{n-k}.
inline Polynomial pade_denominator(const PadeIndex& idx) {
  const auto [n, m] = idx;
  const Rational prefactor(factorial(m), factorial(n + m));
  std::vector<Rational> ascending(n + 1);
  for (unsigned k = 0; k <= n; ++k) {
    ascending[n - k] = prefactor * Rational(binomial(n, k) * factorial(m + k), factorial(m));
  }
  return Polynomial(std::move(ascending));
}

/// (n, m) Pade approximant of e^{-s} from the explicit numerator and
/// denominator sums.
inline TransferFunction pade_exp(const PadeIndex& idx) {
  return TransferFunction(pade_numerator(idx), pade_denominator(idx));
}

/// The same approximant assembled from generalized Bessel polynomials:
///   Q_nm = n!/(n+m)! B_m(-s, n-m+2, 1),   P_nm = m!/(n+m)! B_n(s, m-n+2, 1).
/// The numerator is B_m, of degree m.
inline TransferFunction pade_via_gbp(const PadeIndex& idx) {
  const auto [n, m] = idx;
  const Rational delta = Rational(n) - Rational(m) + 2;
  const Rational alpha = Rational(m) - Rational(n) + 2;
  const Polynomial q = scale_substitute(gbp({m, delta, 1}), -1) * Rational(factorial(n), factorial(n + m));
  const Polynomial p = gbp({n, alpha, 1}) * Rational(factorial(m), factorial(n + m));
  return TransferFunction(q, p);
}

/// Index of the first nonzero Maclaurin coefficient of Q_nm(s) - e^{-s} P_nm(s).
/// For a Pade approximant this is n + m + 1.
inline std::size_t pade_order_defect(const PadeIndex& idx, std::size_t terms) {
  if (terms <= static_cast<std::size_t>(idx.n) + idx.m + 1) {
    throw std::invalid_argument("pade_order_defect: need more than n+m+1 terms");
  }
  const TruncatedSeries q = TruncatedSeries::from_polynomial(pade_numerator(idx), terms);
  const TruncatedSeries p = TruncatedSeries::from_polynomial(pade_denominator(idx), terms);
  const TruncatedSeries defect = q - exp_series(-1, terms) * p;
  const auto first = defect.first_nonzero();
  if (!first) throw std::domain_error("pade_order_defect: no nonzero term within the horizon");
  return *first;
}

}  // namespace besselpade

#endif  // BESSELPADE_PADE_HPP
