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

#ifndef BESSELPADE_GBP_HPP
#define BESSELPADE_GBP_HPP

#include <stdexcept>
#include <vector>

#include "besselpade/polynomial.hpp"

namespace besselpade {

/// Parameters of the generalized Bessel polynomial B_n(s, alpha, beta).
struct GbpParams {
  unsigned n = 0;
  Rational alpha = 2;
  Rational beta = 2;
};

/// Falling product q (q-1) ... (q-k+1); 1 when k = 0.
inline Rational backward_factorial(const Rational& q, unsigned k) {
  Rational out = 1;
  for (unsigned i = 0; i < k; ++i) out *= q - i;
  return out;
}

/// B_n(s, alpha, beta) = sum_{k=0}^{n} C(n,k) (n+k+alpha-2)^{(k)} / beta^k s^{n-k}.
///
/// The k = 0 term supplies the monic s^n head, so the result is always
/// monic of degree n.
inline Polynomial gbp(const GbpParams& params) {
  if (params.beta == 0) throw std::invalid_argument("gbp: beta must be nonzero");
  const unsigned n = params.n;
  std::vector<Rational> ascending(n + 1);
  Rational beta_power = 1;
  for (unsigned k = 0; k <= n; ++k) {
    const Rational q = Rational(n + k) + params.alpha - 2;
    ascending[n - k] = Rational(binomial(n, k)) * backward_factorial(q, k) / beta_power;
    beta_power *= params.beta;
  }
  return Polynomial(std::move(ascending));
}

/// Classical Bessel polynomial of filter theory, B_n(s, 2, 2).
inline Polynomial classical_bessel(unsigned n) { return gbp({n, 2, 2}); }

/// Necessary condition for B_n to be Hurwitz: alpha > 1 - n and beta > 0.
/// For n >= 1 this holds exactly when every coefficient is positive.
inline bool positivity_necessary(const GbpParams& params) {
  return params.alpha > Rational(1) - Rational(params.n) && params.beta > 0;
}

}  // namespace besselpade

#endif  // BESSELPADE_GBP_HPP
