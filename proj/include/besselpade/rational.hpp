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

#ifndef BESSELPADE_RATIONAL_HPP
#define BESSELPADE_RATIONAL_HPP

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace besselpade {

/// Arbitrary-precision integer.
using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number. Always stored reduced with a positive denominator;
/// zero is 0/1.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rational& r) { return denominator_of(r) == 1; }

inline int sign(const Rational& r) { return r.sign(); }

/// "p/q", with "/q" omitted when q == 1.
inline std::string to_string(const Rational& r) {
  std::string out = numerator_of(r).str();
  const BigInt den = denominator_of(r);
  if (den != 1) {
    out += '/';
    out += den.str();
  }
  return out;
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// Exact rational value of a finite double (every finite double is a dyadic
/// rational).
inline Rational from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("from_double: non-finite value");
  int exponent = 0;
  double mantissa = std::frexp(x, &exponent);
  // Shift the 53-bit mantissa into an integer.
  BigInt scaled = static_cast<long long>(std::ldexp(mantissa, 53));
  exponent -= 53;
  if (exponent >= 0) return Rational(scaled << exponent);
  return Rational(scaled, BigInt(1) << -exponent);
}

namespace detail {

inline BigInt parse_integer(std::string_view digits, std::string_view whole) {
  if (digits.empty()) throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
    }
  }
  // Leading zeros would select octal in the BigInt string constructor.
  while (digits.size() > 1 && digits.front() == '0') digits.remove_prefix(1);
  return BigInt(std::string(digits));
}

}  // namespace detail

/// Parses "p", "p/q" or a plain decimal "x.y" into an exact rational.
/// A leading sign is accepted on the numerator only.
inline Rational parse_rational(std::string_view text) {
  const std::string_view whole = text;
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  Rational value;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const BigInt num = detail::parse_integer(text.substr(0, slash), whole);
    const BigInt den = detail::parse_integer(text.substr(slash + 1), whole);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(whole) + "'");
    value = Rational(num, den);
  } else if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const std::string_view int_part = text.substr(0, dot);
    const std::string_view frac_part = text.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) {
      throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
    }
    const BigInt ip = int_part.empty() ? BigInt(0) : detail::parse_integer(int_part, whole);
    const BigInt fp = frac_part.empty() ? BigInt(0) : detail::parse_integer(frac_part, whole);
    const BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac_part.size()));
    value = Rational(ip * scale + fp, scale);
  } else {
    value = Rational(detail::parse_integer(text, whole));
  }
  return negative ? Rational(-value) : value;
}

inline BigInt factorial(unsigned n) {
  BigInt out = 1;
  for (unsigned i = 2; i <= n; ++i) out *= i;
  return out;
}

inline BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt out = 1;
  for (unsigned i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;
  }
  return out;
}

inline Rational power(const Rational& base, unsigned exponent) {
  Rational out = 1;
  Rational b = base;
  while (exponent != 0) {
    if (exponent & 1u) out *= b;
    exponent >>= 1;
    if (exponent != 0) b *= b;
  }
  return out;
}

/// floor(x^(1/k)) for x >= 0, k >= 1.
inline BigInt integer_root(const BigInt& x, unsigned k) {
  if (x < 0) throw std::invalid_argument("integer_root: negative radicand");
  if (x < 2 || k == 1) return x;
  if (k == 2) return boost::multiprecision::sqrt(x);
  // Newton iteration from an upper bound.
  const unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(x)) + 1;
  BigInt r = BigInt(1) << (bits / k + 1);
  while (true) {
    const BigInt next = ((k - 1) * r + x / boost::multiprecision::pow(r, k - 1)) / k;
    if (next >= r) break;
    r = next;
  }
  while (boost::multiprecision::pow(r, k) > x) --r;
  while (boost::multiprecision::pow(r + 1, k) <= x) ++r;
  return r;
}

inline BigInt floor_of(const Rational& r) {
  BigInt q = numerator_of(r) / denominator_of(r);
  if (r.sign() < 0 && q * denominator_of(r) != numerator_of(r)) --q;
  return q;
}

}  // namespace besselpade

#endif  // BESSELPADE_RATIONAL_HPP
