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

#ifndef BESSELPADE_BUDAK_HPP
#define BESSELPADE_BUDAK_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "besselpade/gbp.hpp"
#include "besselpade/interpolate.hpp"
#include "besselpade/response.hpp"
#include "besselpade/stability.hpp"
#include "besselpade/surd.hpp"

namespace besselpade {

/// G_mn^gamma(s) = K B_m[2(gamma-1)s, 2, 1] / B_n(2 gamma s, 2, 1),
/// K = B_n(0,2,1) / B_m(0,2,1).
struct BudakParams {
  unsigned m = 0;
  unsigned n = 1;
  Rational gamma = 1;
};

inline void validate(const BudakParams& p) {
  if (p.gamma <= 0) throw std::invalid_argument("budak: gamma must be positive");
  if (p.n < 1) throw std::invalid_argument("budak: n must be at least 1");
  if (p.m > p.n) throw std::invalid_argument("budak: m must not exceed n");
}

/// Unreduced numerator and denominator of G_mn^gamma(s).
struct BudakPolynomials {
  Polynomial numerator;
  Polynomial denominator;
};

inline BudakPolynomials budak_polynomials(const BudakParams& p) {
  validate(p);
  const Polynomial bm = gbp({p.m, 2, 1});
  const Polynomial bn = gbp({p.n, 2, 1});
  const Rational k = bn(0) / bm(0);
  return {scale_substitute(bm, 2 * (p.gamma - 1)) * k, scale_substitute(bn, 2 * p.gamma)};
}

inline TransferFunction budak_tf(const BudakParams& p) {
  auto [num, den] = budak_polynomials(p);
  return TransferFunction(std::move(num), std::move(den));
}

/// Numerator (prefactor included) and denominator sums of the closed-form
/// squared magnitude, as polynomials in u = omega^2:
///   [(2n)!/(2m)!]^2 m!/n! sum_i C(m,i) (2i)!/i! (m+i)! [2(gamma-1)]^{2(m-i)} u^{m-i}
///   over sum_k C(n,k) (2k)!/k! (n+k)! (2 gamma)^{2(n-k)} u^{n-k}.
inline BudakPolynomials budak_magnitude_sums(const BudakParams& p) {
  validate(p);
  const auto [m, n, gamma] = p;
  const Rational ratio(factorial(2 * n), factorial(2 * m));
  const Rational prefactor = ratio * ratio * Rational(factorial(m), factorial(n));
  std::vector<Rational> num(m + 1), den(n + 1);
  const Rational num_base = power(2 * (gamma - 1), 2);
  const Rational den_base = power(2 * gamma, 2);
  for (unsigned i = 0; i <= m; ++i) {
    num[m - i] = prefactor * Rational(binomial(m, i) * factorial(2 * i) / factorial(i) * factorial(m + i)) *
                 power(num_base, m - i);
  }
  for (unsigned k = 0; k <= n; ++k) {
    den[n - k] = Rational(binomial(n, k) * factorial(2 * k) / factorial(k) * factorial(n + k)) * power(den_base, n - k);
  }
  return {Polynomial(std::move(num)), Polynomial(std::move(den))};
}

/// Closed-form |G_mn^gamma(j omega)|^2 in canonical form.
inline EvenRationalFunction budak_magnitude_closed(const BudakParams& p) {
  auto [num, den] = budak_magnitude_sums(p);
  return EvenRationalFunction(std::move(num), std::move(den));
}

namespace detail {

inline void require_lowpass(unsigned n, unsigned m) {
  if (m < 1 || m >= n) throw std::invalid_argument("budak: requires 1 <= m < n");
}

inline void require_index(unsigned n, unsigned m, unsigned j) {
  require_lowpass(n, m);
  if (j < 1 || j > m) throw std::invalid_argument("budak: index j out of range 1..m");
}

}  // namespace detail

/// A_j: the value of (gamma/(gamma-1))^{2j} that equates the u^j
/// coefficients of the squared magnitude's numerator and denominator.
inline Rational coefficient_ratio(unsigned n, unsigned m, unsigned j) {
  detail::require_index(n, m, j);
  const Rational first = Rational(factorial(2 * n) * factorial(2 * n) * factorial(n - j) * factorial(n - j),
                                  factorial(n) * factorial(n) * factorial(2 * (n - j)) * factorial(2 * n - j));
  const Rational second = Rational(factorial(m) * factorial(m) * factorial(2 * (m - j)) * factorial(2 * m - j),
                                   factorial(2 * m) * factorial(2 * m) * factorial(m - j) * factorial(m - j));
  return first * second;
}

/// Both solutions gamma = r/(r -/+ 1), r = A_j^{1/2j}, as rational
/// enclosures. `upper` is r/(r-1) and `lower` is r/(r+1); the exact surds
/// are attached for j = 1.
struct GammaSolutions {
  unsigned j = 0;
  Rational a_j;
  Interval upper;
  Interval lower;
  std::optional<std::pair<QuadSurd, QuadSurd>> exact;  // {upper, lower}
};

inline GammaSolutions gamma_candidates(unsigned n, unsigned m, unsigned j, int precision) {
  const Rational a = coefficient_ratio(n, m, j);
  if (a == 1) throw std::domain_error("gamma_candidates: A_j = 1 gives no finite solution");
  const Rational target = pow10(-precision);
  const unsigned root = 2 * j;
  GammaSolutions out{j, a, {}, {}, std::nullopt};
  for (int digits = precision + 2;; digits += 4) {
    const BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(digits));
    const BigInt scaled = floor_of(a * Rational(boost::multiprecision::pow(scale, root)));
    const BigInt r = integer_root(scaled, root);
    const Rational lo(r, scale);
    const Rational hi(r + 1, scale);
    if (lo <= 1 && 1 <= hi) continue;
    // r/(r+1) is increasing and r/(r-1) decreasing away from r = 1.
    out.lower = {lo / (lo + 1), hi / (hi + 1)};
    out.upper = {hi / (hi - 1), lo / (lo - 1)};
    if (out.lower.width() <= target && out.upper.width() <= target) break;
  }
  if (j == 1) {
    const QuadSurd r = QuadSurd::sqrt_of(a);
    const QuadSurd one(Rational(1));
    out.exact = std::pair{r / (r - one), r / (r + one)};
  }
  return out;
}

/// Gamma values giving a maximally flat magnitude of order 2:
/// [(2n-1) +/- sqrt((2n-1)(2m-1))] / (2(n-m)), the roots of
/// q(gamma) = 2(n-m) gamma^2 - 2(2n-1) gamma + (2n-1).
struct Order2Gamma {
  QuadSurd upper;
  QuadSurd lower;
  Polynomial q;
};

inline Order2Gamma gamma_order2(unsigned n, unsigned m) {
  detail::require_lowpass(n, m);
  const Rational two_n_1 = 2 * Rational(n) - 1;
  const Rational denom = 2 * (Rational(n) - Rational(m));
  const BigInt radicand = BigInt(2 * n - 1) * BigInt(2 * m - 1);
  Order2Gamma out{QuadSurd(two_n_1 / denom, 1 / denom, radicand), QuadSurd(two_n_1 / denom, -1 / denom, radicand),
                  Polynomial{two_n_1, -2 * two_n_1, denom}};
  return out;
}

/// Normalized mismatch of the u^power coefficients of the squared
/// magnitude, as a polynomial in gamma: den_power/den_0 - num_power/num_0.
/// Valid for any 1 <= power <= n; recovered by exact interpolation.
inline Polynomial magnitude_mismatch_at(unsigned n, unsigned m, unsigned power) {
  if (m > n || power < 1 || power > n) throw std::invalid_argument("magnitude_mismatch_at: power out of range");
  // Both normalized coefficients have gamma-degree at most 2*power.
  const unsigned samples = 2 * std::max(power, m) + 2;
  auto value_at = [&](const Rational& gamma) {
    const auto [num, den] = budak_magnitude_sums({m, n, gamma});
    return den.coefficient(power) / den.coefficient(0) - num.coefficient(power) / num.coefficient(0);
  };
  std::vector<SamplePoint> points;
  for (unsigned i = 1; i <= samples; ++i) points.emplace_back(Rational(i), value_at(Rational(i)));
  Polynomial out = interpolate(points);
  const Rational check = Rational(samples + 1, 3);
  if (out(check) != value_at(check)) throw std::logic_error("magnitude_mismatch_at: degree bound exceeded");
  return out;
}

/// u^j mismatch for 1 <= j <= m < n; its positive roots are the gamma
/// candidates for index j.
inline Polynomial magnitude_gamma_mismatch(unsigned n, unsigned m, unsigned j) {
  detail::require_index(n, m, j);
  return magnitude_mismatch_at(n, m, j);
}

/// Certificate that no single gamma equates two coefficient pairs.
struct MutualExclusionReport {
  std::vector<GammaSolutions> candidates;  // j = 1..m
  std::vector<std::pair<unsigned, unsigned>> pairs_checked;
  bool disjoint = true;
  bool all_above_half = true;
};

inline MutualExclusionReport mutual_exclusion(unsigned n, unsigned m, int precision) {
  detail::require_lowpass(n, m);
  MutualExclusionReport report;
  const Rational half(1, 2);
  for (unsigned j = 1; j <= m; ++j) {
    GammaSolutions s = gamma_candidates(n, m, j, precision);
    if (s.upper.lo <= half || s.lower.lo <= half) report.all_above_half = false;
    report.candidates.push_back(std::move(s));
  }
  for (unsigned j = 1; j <= m; ++j) {
    for (unsigned k = j + 1; k <= m; ++k) {
      report.pairs_checked.emplace_back(j, k);
      const auto& x = report.candidates[j - 1];
      const auto& y = report.candidates[k - 1];
      for (const Interval* a : {&x.upper, &x.lower}) {
        for (const Interval* b : {&y.upper, &y.lower}) {
          if (!disjoint(*a, *b)) report.disjoint = false;
        }
      }
    }
  }
  return report;
}

/// Group-delay coefficients as polynomials in gamma: t_d = sum a_k u^k /
/// sum b_k u^k, scaled so that every a_k, b_k has integer coefficients with
/// no common factor. `scale` is the shared constant a_0 = b_0.
struct DelayCoefficientPolys {
  std::vector<Polynomial> a;
  std::vector<Polynomial> b;
  Rational scale;
};

inline std::vector<Rational> default_gamma_samples(unsigned m, unsigned n) {
  std::vector<Rational> out;
  for (unsigned i = 0; i < 2 * (n + m) + 2; ++i) out.emplace_back(i + 2);
  return out;
}

inline DelayCoefficientPolys delay_gamma_polynomials(unsigned m, unsigned n, std::span<const Rational> gamma_samples) {
  validate({m, n, 1});
  const std::size_t bound = 2 * (static_cast<std::size_t>(n) + m);
  if (gamma_samples.size() <= bound) {
    throw std::invalid_argument("delay_gamma_polynomials: need more than " + std::to_string(bound) + " samples");
  }
  const std::size_t num_terms = n + m;  // numerator degree < n + m
  const std::size_t den_terms = n + m + 1;
  std::vector<std::vector<SamplePoint>> num_points(num_terms), den_points(den_terms);
  for (const auto& gamma : gamma_samples) {
    if (gamma <= 0 || gamma == 1) throw std::invalid_argument("delay_gamma_polynomials: gamma must be positive and != 1");
    const EvenRationalFunction td = group_delay(budak_tf({m, n, gamma}));
    if (td.denominator().degree() != static_cast<int>(n + m)) {
      throw std::invalid_argument("delay_gamma_polynomials: cancellation at gamma = " + to_string(gamma));
    }
    const Rational c0 = td.denominator().coefficient(0);
    for (std::size_t k = 0; k < num_terms; ++k) num_points[k].emplace_back(gamma, td.numerator().coefficient(k) / c0);
    for (std::size_t k = 0; k < den_terms; ++k) den_points[k].emplace_back(gamma, td.denominator().coefficient(k) / c0);
  }
  DelayCoefficientPolys out;
  for (auto& pts : num_points) out.a.push_back(interpolate(pts));
  for (auto& pts : den_points) out.b.push_back(interpolate(pts));

  // One sample off the grid confirms the degree bound.
  Rational check = gamma_samples.back() + Rational(1, 3);
  if (check == 1) check += 1;
  {
    const EvenRationalFunction td = group_delay(budak_tf({m, n, check}));
    const Rational c0 = td.denominator().coefficient(0);
    for (std::size_t k = 0; k < num_terms; ++k) {
      if (out.a[k](check) != td.numerator().coefficient(k) / c0) {
        throw std::logic_error("delay_gamma_polynomials: degree bound exceeded");
      }
    }
    for (std::size_t k = 0; k < den_terms; ++k) {
      if (out.b[k](check) != td.denominator().coefficient(k) / c0) {
        throw std::logic_error("delay_gamma_polynomials: degree bound exceeded");
      }
    }
  }
  while (!out.a.empty() && out.a.back().is_zero()) out.a.pop_back();

  // Clear denominators, then remove the common integer content.
  BigInt lcm_den = 1;
  for (const auto* list : {&out.a, &out.b}) {
    for (const auto& p : *list) {
      for (const auto& c : p.coefficients()) lcm_den = boost::multiprecision::lcm(lcm_den, denominator_of(c));
    }
  }
  BigInt content = 0;
  for (const auto* list : {&out.a, &out.b}) {
    for (const auto& p : *list) {
      for (const auto& c : p.coefficients()) {
        content = boost::multiprecision::gcd(content, numerator_of(c * Rational(lcm_den)));
      }
    }
  }
  out.scale = Rational(lcm_den, content);
  for (auto* list : {&out.a, &out.b}) {
    for (auto& p : *list) p *= out.scale;
  }
  return out;
}

inline DelayCoefficientPolys delay_gamma_polynomials(unsigned m, unsigned n) {
  const auto samples = default_gamma_samples(m, n);
  return delay_gamma_polynomials(m, n, samples);
}

/// Delay flatness of G_mn^gamma for rational gamma.
inline FlatnessReport delay_flatness_order_budak(const BudakParams& p) {
  validate(p);
  if (p.m < 1) throw std::invalid_argument("delay_flatness_order_budak: m must be at least 1");
  if (p.gamma == 1) throw std::invalid_argument("delay_flatness_order_budak: gamma = 1 is the all-pole case");
  return flatness(group_delay(budak_tf(p)), Quantity::Delay);
}

/// Flatness at an irrational gamma, read off exact evaluations in Q(sqrt d)
/// of the gamma-polynomial coefficient mismatches.
struct SurdFlatness {
  std::size_t order = 0;
  QuadSurd leading_deviation;
};

inline SurdFlatness budak_delay_flatness_at(unsigned m, unsigned n, const QuadSurd& gamma) {
  const DelayCoefficientPolys polys = delay_gamma_polynomials(m, n);
  for (std::size_t k = 1; k < polys.b.size(); ++k) {
    const Polynomial diff = (k < polys.a.size() ? polys.a[k] : Polynomial{}) - polys.b[k];
    const QuadSurd value = evaluate(diff, gamma);
    if (value.sign() != 0) return {k, value / QuadSurd(polys.scale)};
  }
  throw FlatBeyondHorizon("budak_delay_flatness_at: delay is identically flat");
}

inline SurdFlatness budak_magnitude_flatness_at(unsigned m, unsigned n, const QuadSurd& gamma) {
  for (unsigned k = 1; k <= n; ++k) {
    const QuadSurd value = -evaluate(magnitude_mismatch_at(n, m, k), gamma);
    if (value.sign() != 0) return {k, value};
  }
  throw FlatBeyondHorizon("budak_magnitude_flatness_at: magnitude is identically flat");
}

/// Divisibility certificate for order-2 magnitude flatness at the roots of
/// q(gamma): q divides the u^1 mismatch and does not divide the u^2
/// mismatch.
struct Order2Certificate {
  Polynomial q;
  Polynomial mismatch_u1;
  Polynomial mismatch_u2;
  bool u1_divisible = false;
  bool u2_divisible = false;
};

inline Order2Certificate order2_certificate(unsigned n, unsigned m) {
  Order2Certificate c;
  c.q = gamma_order2(n, m).q;
  c.mismatch_u1 = magnitude_mismatch_at(n, m, 1);
  c.mismatch_u2 = magnitude_mismatch_at(n, m, 2);
  c.u1_divisible = divides(c.q, c.mismatch_u1);
  c.u2_divisible = divides(c.q, c.mismatch_u2);
  return c;
}

}  // namespace besselpade

#endif  // BESSELPADE_BUDAK_HPP
