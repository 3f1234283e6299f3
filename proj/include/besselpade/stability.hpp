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

#ifndef BESSELPADE_STABILITY_HPP
#define BESSELPADE_STABILITY_HPP

#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "besselpade/gbp.hpp"
#include "besselpade/pade.hpp"

namespace besselpade {

enum class Verdict { StrictHurwitz, NotHurwitz, Marginal };

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::StrictHurwitz:
      return "StrictHurwitz";
    case Verdict::NotHurwitz:
      return "NotHurwitz";
    case Verdict::Marginal:
      return "Marginal";
  }
  return "?";
}

inline std::ostream& operator<<(std::ostream& os, Verdict v) { return os << to_string(v); }

/// Outcome of the exact Routh-Hurwitz test.
///
/// `routh_first_column` is the first column of the Routh array of p (leading
/// coefficient made positive). A row that vanishes entirely is replaced by
/// the derivative of the auxiliary polynomial of the row above it and the
/// array continues. A zero pivot in a nonzero row stops the array there; the
/// column then ends in that 0 and `sign_changes` is taken from the array of
/// (s + a) p, which has the same right half-plane roots and no zero pivot.
/// In every case `sign_changes` equals the number of roots with positive
/// real part.
struct StabilityReport {
  Verdict verdict = Verdict::NotHurwitz;
  std::vector<Rational> routh_first_column;
  std::size_t sign_changes = 0;
  std::vector<std::size_t> degenerate_rows;
};

namespace detail {

struct RouthArray {
  std::vector<Rational> column;
  std::vector<std::size_t> degenerate_rows;
  bool zero_row = false;
  bool zero_pivot = false;
};

inline bool all_zero(std::span<const Rational> row) {
  for (const auto& x : row) {
    if (x != 0) return false;
  }
  return true;
}

inline RouthArray routh_array(const Polynomial& p) {
  const auto degree = static_cast<std::size_t>(p.degree());
  const std::size_t width = degree / 2 + 1;
  std::vector<Rational> upper(width), lower(width);
  for (std::size_t j = 0; 2 * j <= degree; ++j) upper[j] = p.coefficient(degree - 2 * j);
  for (std::size_t j = 0; 2 * j + 1 <= degree; ++j) lower[j] = p.coefficient(degree - 2 * j - 1);

  RouthArray out;
  out.column.push_back(upper[0]);
  for (std::size_t row = 1; row <= degree; ++row) {
    if (all_zero(lower)) {
      out.zero_row = true;
      out.degenerate_rows.push_back(row);
      // Auxiliary polynomial from the row above, of degree degree-row+1 in
      // steps of two; replace this row by its derivative.
      const std::size_t power = degree - row + 1;
      for (std::size_t j = 0; j < width; ++j) {
        lower[j] = 2 * j <= power ? upper[j] * static_cast<long long>(power - 2 * j) : Rational(0);
      }
    }
    if (lower[0] == 0) {
      out.zero_pivot = true;
      out.degenerate_rows.push_back(row);
      out.column.push_back(0);
      return out;
    }
    out.column.push_back(lower[0]);
    std::vector<Rational> next(width);
    for (std::size_t j = 0; j + 1 < width; ++j) {
      next[j] = (lower[0] * upper[j + 1] - upper[0] * lower[j + 1]) / lower[0];
    }
    upper = std::move(lower);
    lower = std::move(next);
  }
  return out;
}

inline std::size_t count_sign_changes(std::span<const Rational> column) {
  std::size_t changes = 0;
  int previous = 0;
  for (const auto& x : column) {
    const int s = x.sign();
    if (s == 0) continue;
    if (previous != 0 && s != previous) ++changes;
    previous = s;
  }
  return changes;
}

}  // namespace detail

/// Exact Routh-Hurwitz classification of a polynomial of degree >= 1.
namespace detail {

inline int sign_at_minus_infinity(const Polynomial& p) {
  const int s = p.leading().sign();
  return p.degree() % 2 == 0 ? s : -s;
}

/// Distinct real roots of p in (-inf, 0), by a Sturm sequence; p(0) != 0.
inline std::size_t distinct_negative_roots(const Polynomial& p) {
  if (p.degree() < 1) return 0;
  std::vector<Polynomial> chain{p, derivative(p)};
  while (chain.back().degree() > 0) {
    Polynomial r = divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  std::vector<Rational> at_minus_inf, at_zero;
  for (const auto& q : chain) {
    at_minus_inf.emplace_back(sign_at_minus_infinity(q));
    at_zero.push_back(q.coefficient(0));
  }
  return count_sign_changes(at_minus_inf) - count_sign_changes(at_zero);
}

/// Roots of p in (-inf, 0) counted with multiplicity; p(0) != 0.
inline std::size_t negative_roots_with_multiplicity(Polynomial p) {
  std::size_t total = 0;
  while (p.degree() > 0) {
    total += distinct_negative_roots(p);
    p = gcd(p, derivative(p));
  }
  return total;
}

/// Number of roots with positive real part, for arrays the plain Routh
/// count cannot settle. p = g h with g = gcd(p, p(-s)) collecting every root
/// pair {r, -r}; h then has no such pairs, and g = s^k E(s^2) whose roots are
/// imaginary exactly when the corresponding root of E is real and negative.
inline std::pair<std::size_t, bool> right_half_plane_roots(const Polynomial& p) {
  const Polynomial g = gcd(p, scale_substitute(p, -1));
  const Polynomial h = divmod(p, g).first;

  std::size_t count = 0;
  if (h.degree() >= 1) {
    const Polynomial hp = h.leading() < 0 ? -h : h;
    bool resolved = false;
    for (int a = 0; a <= 1000 && !resolved; ++a) {
      // h itself first; then (s + a) h perturbs away an accidental zero pivot.
      const RouthArray shifted = routh_array(a == 0 ? hp : hp * Polynomial{a, 1});
      if (shifted.zero_pivot || shifted.zero_row) continue;
      count += count_sign_changes(shifted.column);
      resolved = true;
    }
    if (!resolved) throw std::logic_error("routh_hurwitz: could not resolve zero pivot");
  }

  bool imaginary = false;
  if (g.degree() >= 1) {
    std::size_t zeros_at_origin = 0;
    while (g.coefficient(zeros_at_origin) == 0) ++zeros_at_origin;
    imaginary = zeros_at_origin > 0;
    const auto shifted = g.coefficients().subspan(zeros_at_origin);
    const Polynomial rest(std::vector<Rational>(shifted.begin(), shifted.end()));
    const Polynomial e = even_odd_split(rest).first;  // rest is even
    const std::size_t axis = negative_roots_with_multiplicity(e);
    imaginary = imaginary || axis > 0;
    count += static_cast<std::size_t>(e.degree()) - axis;
  }
  return {count, imaginary};
}

}  // namespace detail

/// Exact Routh-Hurwitz classification. sign_changes is the number of roots in
/// the open right half-plane: the sign changes of the first column when the
/// array is regular, otherwise the count obtained after splitting off the
/// root pairs symmetric about the imaginary axis.
inline StabilityReport routh_hurwitz(const Polynomial& polynomial) {
  if (polynomial.degree() < 1) throw std::invalid_argument("routh_hurwitz: degree must be at least 1");
  const Polynomial p = polynomial.leading() < 0 ? -polynomial : polynomial;

  detail::RouthArray array = detail::routh_array(p);
  StabilityReport report;
  report.routh_first_column = array.column;
  report.degenerate_rows = array.degenerate_rows;
  bool imaginary = false;
  if (report.degenerate_rows.empty()) {
    report.sign_changes = detail::count_sign_changes(array.column);
  } else {
    std::tie(report.sign_changes, imaginary) = detail::right_half_plane_roots(p);
  }

  if (report.sign_changes > 0) {
    report.verdict = Verdict::NotHurwitz;
  } else if (imaginary) {
    report.verdict = Verdict::Marginal;
  } else if (!report.degenerate_rows.empty()) {
    throw std::logic_error("routh_hurwitz: degenerate array without boundary roots");
  } else {
    report.verdict = Verdict::StrictHurwitz;
  }
  return report;
}

struct GridPoint {
  unsigned n = 0;
  Rational alpha;
  Rational beta;
  Verdict verdict = Verdict::NotHurwitz;
};

struct Theorem1GridReport {
  std::size_t checked = 0;
  std::vector<GridPoint> violations;
  /// Boundary points (n = 1, alpha = 0) that came out Marginal.
  std::vector<GridPoint> boundary;
};

/// Checks that B_n(s, alpha, beta) is strictly Hurwitz over a grid with
/// alpha >= 0, beta > 0 and 1 <= n <= n_max. The point n = 1, alpha = 0
/// gives B_1 = s, a root at the origin; it only has to avoid NotHurwitz.
inline Theorem1GridReport theorem1_grid(unsigned n_max, std::span<const Rational> alphas,
                                        std::span<const Rational> betas) {
  for (const auto& a : alphas) {
    if (a < 0) throw std::invalid_argument("theorem1_grid: alpha must be >= 0");
  }
  for (const auto& b : betas) {
    if (b <= 0) throw std::invalid_argument("theorem1_grid: beta must be > 0");
  }
  Theorem1GridReport report;
  for (unsigned n = 1; n <= n_max; ++n) {
    for (const auto& alpha : alphas) {
      for (const auto& beta : betas) {
        const Verdict v = routh_hurwitz(gbp({n, alpha, beta})).verdict;
        ++report.checked;
        const GridPoint point{n, alpha, beta, v};
        const bool boundary = n == 1 && alpha == 0;
        if (boundary) {
          if (v == Verdict::NotHurwitz) report.violations.push_back(point);
          if (v == Verdict::Marginal) report.boundary.push_back(point);
        } else if (v != Verdict::StrictHurwitz) {
          report.violations.push_back(point);
        }
      }
    }
  }
  return report;
}

/// Routh-Hurwitz report for the denominator of the (n, m) Pade approximant.
inline StabilityReport pade_stability(const PadeIndex& idx) {
  if (idx.n < 1) throw std::invalid_argument("pade_stability: n must be at least 1");
  return routh_hurwitz(pade_exp(idx).denominator());
}

}  // namespace besselpade

#endif  // BESSELPADE_STABILITY_HPP
