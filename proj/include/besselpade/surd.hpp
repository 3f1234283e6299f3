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

#ifndef BESSELPADE_SURD_HPP
#define BESSELPADE_SURD_HPP

#include <stdexcept>
#include <string>
#include <utility>

#include "besselpade/polynomial.hpp"
#include "besselpade/rational.hpp"

namespace besselpade {

/// Closed rational interval [lo, hi].
struct Interval {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  friend bool disjoint(const Interval& a, const Interval& b) { return a.hi < b.lo || b.hi < a.lo; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

inline Rational pow10(int k) {
  const BigInt p = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(k < 0 ? -k : k));
  return k < 0 ? Rational(BigInt(1), p) : Rational(p);
}

/// Exact value a + b*sqrt(d) with d a square-free positive integer. A
/// rational value is stored with b = 0 and d = 1.
class QuadSurd {
 public:
  QuadSurd() : d_(1) {}
  QuadSurd(const Rational& rational) : a_(rational), d_(1) {}  // NOLINT: implicit by intent

  /// a + b*sqrt(radicand); square factors of the radicand are pulled out.
  QuadSurd(Rational a, Rational b, BigInt radicand) : a_(std::move(a)), b_(std::move(b)) {
    if (radicand < 0) throw std::invalid_argument("QuadSurd: negative radicand");
    if (radicand == 0 || b_ == 0) {
      b_ = 0;
      d_ = 1;
      return;
    }
    BigInt outside = 1;
    BigInt inside = 1;
    BigInt rest = radicand;
    for (BigInt p = 2; p * p <= rest; ++p) {
      unsigned count = 0;
      while (rest % p == 0) {
        rest /= p;
        ++count;
      }
      for (unsigned i = 0; i + 1 < count; i += 2) outside *= p;
      if (count % 2 == 1) inside *= p;
    }
    inside *= rest;
    b_ *= outside;
    d_ = inside;
    if (d_ == 1) {
      a_ += b_;
      b_ = 0;
    }
  }

  /// sqrt(r) for a non-negative rational r.
  static QuadSurd sqrt_of(const Rational& r) {
    if (r < 0) throw std::invalid_argument("QuadSurd::sqrt_of: negative argument");
    // sqrt(p/q) = sqrt(p*q)/q
    return QuadSurd(0, Rational(BigInt(1), denominator_of(r)), numerator_of(r) * denominator_of(r));
  }

  const Rational& a() const noexcept { return a_; }
  const Rational& b() const noexcept { return b_; }
  const BigInt& d() const noexcept { return d_; }
  bool is_rational() const noexcept { return b_ == 0; }

  int sign() const {
    const int sa = a_.sign();
    const int sb = b_.sign();
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    // Opposite signs: compare a^2 with b^2 d.
    const Rational lhs = a_ * a_;
    const Rational rhs = b_ * b_ * Rational(d_);
    if (lhs == rhs) return 0;
    return lhs > rhs ? sa : sb;
  }

  /// Rational enclosure of width at most 10^-digits.
  Interval enclosure(int digits) const {
    if (b_ == 0) return {a_, a_};
    const Rational target = pow10(-digits);
    const Rational abs_b = b_ < 0 ? Rational(-b_) : b_;
    // sqrt(d) lies in [s/S, (s+1)/S] with s = isqrt(d S^2); the width of the
    // result is |b|/S.
    BigInt scale = 1;
    while (abs_b / Rational(scale) > target) scale *= 10;
    const BigInt s = boost::multiprecision::sqrt(BigInt(d_ * scale * scale));
    const Rational lo_root(s, scale);
    const Rational hi_root(s + 1, scale);
    Rational x = a_ + b_ * lo_root;
    Rational y = a_ + b_ * hi_root;
    if (x > y) std::swap(x, y);
    return {x, y};
  }

  double to_double() const {
    const Interval i = enclosure(20);
    return besselpade::to_double((i.lo + i.hi) / 2);
  }

  QuadSurd conjugate() const {
    QuadSurd out = *this;
    out.b_ = -out.b_;
    return out;
  }

  QuadSurd operator-() const {
    QuadSurd out = *this;
    out.a_ = -out.a_;
    out.b_ = -out.b_;
    return out;
  }

  friend QuadSurd operator+(const QuadSurd& x, const QuadSurd& y) {
    const BigInt d = common_radicand(x, y);
    return QuadSurd(x.a_ + y.a_, x.b_ + y.b_, d);
  }
  friend QuadSurd operator-(const QuadSurd& x, const QuadSurd& y) { return x + (-y); }
  friend QuadSurd operator*(const QuadSurd& x, const QuadSurd& y) {
    const BigInt d = common_radicand(x, y);
    return QuadSurd(x.a_ * y.a_ + x.b_ * y.b_ * Rational(d), x.a_ * y.b_ + x.b_ * y.a_, d);
  }
  friend QuadSurd operator/(const QuadSurd& x, const QuadSurd& y) {
    const Rational norm = y.a_ * y.a_ - y.b_ * y.b_ * Rational(y.d_);
    if (norm == 0) throw std::domain_error("QuadSurd division by zero");
    const QuadSurd num = x * y.conjugate();
    return QuadSurd(num.a_ / norm, num.b_ / norm, num.d_);
  }

  friend bool operator==(const QuadSurd&, const QuadSurd&) = default;

  friend bool operator<(const QuadSurd& x, const QuadSurd& y) {
    if (x.d_ == y.d_ || x.is_rational() || y.is_rational()) return (y - x).sign() > 0;
    // Distinct square-free radicands with nonzero b never coincide.
    for (int digits = 10;; digits *= 2) {
      const Interval ix = x.enclosure(digits);
      const Interval iy = y.enclosure(digits);
      if (ix.hi < iy.lo) return true;
      if (iy.hi < ix.lo) return false;
    }
  }

 private:
  static BigInt common_radicand(const QuadSurd& x, const QuadSurd& y) {
    if (x.is_rational()) return y.d_;
    if (y.is_rational() || x.d_ == y.d_) return x.d_;
    throw std::domain_error("QuadSurd arithmetic across different radicands");
  }

  Rational a_;
  Rational b_;
  BigInt d_;
};

/// p(x) evaluated exactly in Q(sqrt d).
inline QuadSurd evaluate(const Polynomial& p, const QuadSurd& x) {
  QuadSurd acc;
  const auto c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + QuadSurd(*it);
  return acc;
}

namespace detail {

inline int floor_log10(const Rational& positive) {
  if (positive >= 1) {
    return static_cast<int>(floor_of(positive).str().size()) - 1;
  }
  int k = 0;
  Rational scaled = positive;
  while (scaled < 1) {
    scaled *= 10;
    ++k;
  }
  return -k;
}

inline Interval abs_enclosure(const QuadSurd& x, int digits) {
  Interval i = x.enclosure(digits);
  if (i.lo < 0 && i.hi <= 0) return {-i.hi, -i.lo};
  return i;
}

/// floor(|x| 10^t + 1/2), refining until the enclosure pins it down.
inline BigInt round_scaled(const QuadSurd& x, int t) {
  const Rational half(1, 2);
  for (int digits = t + 8;; digits += 16) {
    const Interval i = abs_enclosure(x, digits);
    const BigInt lo = floor_of(i.lo * pow10(t) + half);
    const BigInt hi = floor_of(i.hi * pow10(t) + half);
    if (lo == hi) return lo;
  }
}

}  // namespace detail

/// Decimal rendering of x rounded to `significant` significant digits, with
/// halves rounded away from zero: (5/2, 1/2, 15) at 4 digits is "4.436".
inline std::string to_decimal(const QuadSurd& x, int significant) {
  if (significant < 1) throw std::invalid_argument("to_decimal: precision must be at least 1");
  const int s = x.sign();
  int exponent = 0;
  if (s == 0) {
    exponent = 0;
  } else {
    for (int digits = 8;; digits *= 2) {
      const Interval i = detail::abs_enclosure(x, digits);
      if (i.lo <= 0) continue;
      const int lo = detail::floor_log10(i.lo);
      if (lo == detail::floor_log10(i.hi)) {
        exponent = lo;
        break;
      }
    }
  }
  int t = significant - 1 - exponent;
  BigInt digits_value = s == 0 ? BigInt(0) : detail::round_scaled(x, t);
  if (digits_value == boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(significant))) {
    // Rounding carried into a new leading digit.
    --t;
    digits_value = detail::round_scaled(x, t);
  }
  std::string text = digits_value.str();
  if (t > 0) {
    if (static_cast<int>(text.size()) <= t) text.insert(0, static_cast<std::size_t>(t) + 1 - text.size(), '0');
    text.insert(text.size() - static_cast<std::size_t>(t), ".");
  } else if (t < 0) {
    text.append(static_cast<std::size_t>(-t), '0');
  }
  return s < 0 ? "-" + text : text;
}

/// Single-denominator rendering such as "(5+sqrt(15))/2" or "-3*sqrt(2)/4".
inline std::string to_string(const QuadSurd& x) {
  if (x.is_rational()) return to_string(x.a());
  const BigInt den = boost::multiprecision::lcm(denominator_of(x.a()), denominator_of(x.b()));
  const BigInt a = numerator_of(x.a()) * (den / denominator_of(x.a()));
  const BigInt b = numerator_of(x.b()) * (den / denominator_of(x.b()));
  std::string root = "sqrt(" + x.d().str() + ")";
  const BigInt abs_b = b < 0 ? BigInt(-b) : b;
  std::string radical = abs_b == 1 ? root : abs_b.str() + "*" + root;
  std::string body;
  if (a != 0) {
    body = a.str() + (b < 0 ? "-" : "+") + radical;
  } else {
    body = (b < 0 ? "-" : "") + radical;
  }
  if (den == 1) return body;
  return (a != 0 ? "(" + body + ")" : body) + "/" + den.str();
}

}  // namespace besselpade

#endif  // BESSELPADE_SURD_HPP
