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

#ifndef BESSELPADE_RESPONSE_HPP
#define BESSELPADE_RESPONSE_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "besselpade/rational_function.hpp"
#include "besselpade/series.hpp"

namespace besselpade {

enum class Quantity { Delay, MagnitudeSquared };

inline std::string_view to_string(Quantity q) { return q == Quantity::Delay ? "Delay" : "MagnitudeSquared"; }

/// The deviation f(u) - f(0) begins exactly at u^order, with coefficient
/// leading_deviation.
struct FlatnessReport {
  Rational value_at_origin;
  std::size_t order = 0;
  Rational leading_deviation;
  Quantity quantity = Quantity::Delay;
};

/// Thrown by flatness() when no deviation appears within the requested
/// number of terms.
class FlatBeyondHorizon : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

namespace detail {

/// P(s) P(-s), an even polynomial in s, rewritten in u with s^2 = -u.
inline Polynomial para_conjugate_in_u(const Polynomial& p) {
  const Polynomial product = p * scale_substitute(p, -1);
  std::vector<Rational> u_coeffs;
  const auto c = product.coefficients();
  for (std::size_t k = 0; k < c.size(); k += 2) u_coeffs.push_back((k / 2) % 2 == 0 ? c[k] : Rational(-c[k]));
  return Polynomial(std::move(u_coeffs));
}

/// Phase derivative d arg P(j w) / dw as a fraction in u = w^2, from
/// P(j w) = e(u) + j w o(u).
struct PhaseDerivative {
  Polynomial num;
  Polynomial den;
};

inline PhaseDerivative phase_derivative(const Polynomial& p) {
  auto [even, odd] = even_odd_split(p);
  // even/odd are in s^2; s^2 = -u.
  const Polynomial e = scale_substitute(even, -1);
  const Polynomial o = scale_substitute(odd, -1);
  const Polynomial u = Polynomial::identity();
  Polynomial num = e * o + Rational(2) * u * (e * derivative(o) - o * derivative(e));
  Polynomial den = e * e + u * o * o;
  return {std::move(num), std::move(den)};
}

}  // namespace detail

/// |H(j w)|^2 as a reduced rational function of u = w^2.
inline EvenRationalFunction magnitude_squared(const TransferFunction& tf) {
  return EvenRationalFunction(detail::para_conjugate_in_u(tf.numerator()),
                              detail::para_conjugate_in_u(tf.denominator()));
}

/// Group delay -d arg H(j w)/dw as a reduced rational function of u = w^2.
inline EvenRationalFunction group_delay(const TransferFunction& tf) {
  if (tf.numerator()(0) == 0 || tf.denominator()(0) == 0) {
    throw std::domain_error("group_delay: transfer function has a zero or pole at the origin");
  }
  const auto d = detail::phase_derivative(tf.denominator());
  const auto n = detail::phase_derivative(tf.numerator());
  return EvenRationalFunction(d.num * n.den - n.num * d.den, d.den * n.den);
}

inline std::size_t default_flatness_terms(const EvenRationalFunction& f) {
  const auto deg = [](const Polynomial& p) { return static_cast<std::size_t>(p.degree() < 0 ? 0 : p.degree()); };
  return 2 * (deg(f.numerator()) + deg(f.denominator())) + 4;
}

/// Maximal-flatness order of f at the origin.
inline FlatnessReport flatness(const EvenRationalFunction& f, Quantity quantity, std::size_t max_terms) {
  if (f.denominator().coefficient(0) == 0) throw std::domain_error("flatness: function has a pole at the origin");
  if (max_terms < 2) throw std::invalid_argument("flatness: need at least two terms");
  const TruncatedSeries series = series_of_ratio(f.numerator(), f.denominator(), max_terms);
  for (std::size_t k = 1; k < max_terms; ++k) {
    if (series[k] != 0) return {series[0], k, series[k], quantity};
  }
  throw FlatBeyondHorizon("flatness: no deviation within " + std::to_string(max_terms) + " terms");
}

inline FlatnessReport flatness(const EvenRationalFunction& f, Quantity quantity) {
  return flatness(f, quantity, default_flatness_terms(f));
}

template <class Value>
struct Sample {
  double omega = 0.0;
  Value value{};
  /// True when the sample sits within 1e-12 (relative) of a pole.
  bool near_pole = false;
};

namespace detail {

inline double horner(const Polynomial& p, double x, double* magnitude_bound) {
  double acc = 0.0;
  double bound = 0.0;
  const auto c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    const double ck = to_double(*it);
    acc = acc * x + ck;
    bound = bound * std::abs(x) + std::abs(ck);
  }
  if (magnitude_bound != nullptr) *magnitude_bound = bound;
  return acc;
}

constexpr double kPoleTolerance = 1e-12;

}  // namespace detail

/// Double-precision samples of an even function at the given frequencies.
inline std::vector<Sample<double>> sample(const EvenRationalFunction& f, std::span<const double> omegas) {
  std::vector<Sample<double>> out;
  out.reserve(omegas.size());
  for (double w : omegas) {
    const double u = w * w;
    double bound = 0.0;
    const double den = detail::horner(f.denominator(), u, &bound);
    const double num = detail::horner(f.numerator(), u, nullptr);
    const bool near_pole = std::abs(den) <= detail::kPoleTolerance * bound;
    out.push_back({w, num / den, near_pole});
  }
  return out;
}

/// Complex frequency response H(j w) in double precision.
inline std::vector<Sample<std::complex<double>>> sample(const TransferFunction& tf, std::span<const double> omegas) {
  std::vector<Sample<std::complex<double>>> out;
  out.reserve(omegas.size());
  for (double w : omegas) {
    const std::complex<double> s(0.0, w);
    const std::complex<double> den = tf.denominator().evaluate(s);
    double bound = 0.0;
    for (auto it = tf.denominator().coefficients().rbegin(); it != tf.denominator().coefficients().rend(); ++it) {
      bound = bound * std::abs(w) + std::abs(to_double(*it));
    }
    const bool near_pole = std::abs(den) <= detail::kPoleTolerance * bound;
    out.push_back({w, tf.numerator().evaluate(s) / den, near_pole});
  }
  return out;
}

}  // namespace besselpade

#endif  // BESSELPADE_RESPONSE_HPP
