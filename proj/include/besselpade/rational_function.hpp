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

#ifndef BESSELPADE_RATIONAL_FUNCTION_HPP
#define BESSELPADE_RATIONAL_FUNCTION_HPP

#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

#include "besselpade/polynomial.hpp"

namespace besselpade {

struct LaplaceVariable {
  static constexpr const char* name = "s";
};

/// u = omega^2.
struct SquaredFrequencyVariable {
  static constexpr const char* name = "u";
};

/// Reduced rational function num/den in canonical form: gcd(num, den) = 1
/// and den is monic. The zero function is 0/1. Two functions are equal iff
/// their canonical forms are identical.
template <class Variable>
class RationalFunction {
 public:
  RationalFunction() : den_(Polynomial::constant(1)) {}

  RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::invalid_argument("rational function with zero denominator");
    if (num_.is_zero()) {
      den_ = Polynomial::constant(1);
      return;
    }
    const Polynomial g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = divmod(num_, g).first;
      den_ = divmod(den_, g).first;
    }
    const Rational lead = den_.leading();
    num_ /= lead;
    den_ /= lead;
  }

  explicit RationalFunction(Polynomial num) : RationalFunction(std::move(num), Polynomial::constant(1)) {}

  const Polynomial& numerator() const noexcept { return num_; }
  const Polynomial& denominator() const noexcept { return den_; }

  Rational operator()(const Rational& x) const {
    const Rational d = den_(x);
    if (d == 0) throw std::domain_error("rational function evaluated at a pole");
    return num_(x) / d;
  }

  static constexpr const char* variable_name() { return Variable::name; }

  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

 private:
  Polynomial num_;
  Polynomial den_;
};

/// Transfer function H(s).
using TransferFunction = RationalFunction<LaplaceVariable>;

/// Even function of omega written in u = omega^2, e.g. |H(j omega)|^2 or the
/// group delay.
using EvenRationalFunction = RationalFunction<SquaredFrequencyVariable>;

/// "(3 s^2 - 24 s + 60) / (s^3 + 9 s^2 + 36 s + 60)"; single-term sides are
/// printed without parentheses.
template <class Variable>
std::string to_string(const RationalFunction<Variable>& f) {
  auto side = [](const Polynomial& p) {
    std::string text = to_string(p, Variable::name);
    const bool single = text.find(" + ") == std::string::npos && text.find(" - ") == std::string::npos;
    return single ? text : "(" + text + ")";
  };
  return side(f.numerator()) + " / " + side(f.denominator());
}

template <class Variable>
std::ostream& operator<<(std::ostream& os, const RationalFunction<Variable>& f) {
  return os << to_string(f);
}

}  // namespace besselpade

#endif  // BESSELPADE_RATIONAL_FUNCTION_HPP
