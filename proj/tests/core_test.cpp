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

#include <random>
#include <vector>

#include "besselpade/interpolate.hpp"
#include "besselpade/polynomial.hpp"
#include "besselpade/rational_function.hpp"
#include "besselpade/series.hpp"
#include "besselpade/surd.hpp"
#include "gtest/gtest.h"

namespace besselpade {
namespace {

Rational R(long long p, long long q = 1) { return Rational(p, q); }

Polynomial random_polynomial(std::mt19937& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<int> num(-20, 20);
  std::uniform_int_distribution<int> den(1, 7);
  std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& x : c) x = R(num(rng), den(rng));
  return Polynomial(c);
}

TEST(RationalTest, StringFormAndParsing) {
  EXPECT_EQ(to_string(R(6, 4)), "3/2");
  EXPECT_EQ(to_string(R(-4, 2)), "-2");
  EXPECT_EQ(to_string(R(0)), "0");
  EXPECT_EQ(parse_rational("-3/6"), R(-1, 2));
  EXPECT_EQ(parse_rational("7"), R(7));
  EXPECT_EQ(parse_rational("2.25"), R(9, 4));
  EXPECT_EQ(parse_rational(".5"), R(1, 2));
  EXPECT_EQ(parse_rational("0.0900"), R(9, 100));
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
  EXPECT_EQ(from_double(0.375), R(3, 8));
  EXPECT_EQ(from_double(-3.0), R(-3));
}

TEST(RationalTest, IntegerRoot) {
  EXPECT_EQ(integer_root(BigInt(80), 4), 2);
  EXPECT_EQ(integer_root(BigInt(81), 4), 3);
  EXPECT_EQ(integer_root(BigInt(1000000), 3), 100);
  EXPECT_EQ(integer_root(BigInt(999999), 3), 99);
}

TEST(PolynomialTest, ZeroAndDegree) {
  Polynomial zero;
  EXPECT_TRUE(zero.is_zero());
  EXPECT_EQ(zero.degree(), -1);
  EXPECT_EQ(Polynomial({1, 2, 0, 0}).degree(), 1);
  EXPECT_EQ(to_string(Polynomial{60, 36, 9, 1}), "s^3 + 9 s^2 + 36 s + 60");
  EXPECT_EQ(to_string(Polynomial{60, -24, 3}), "3 s^2 - 24 s + 60");
  EXPECT_EQ(to_string(Polynomial{0, R(1, 2), -1}, "u"), "-u^2 + 1/2 u");
  EXPECT_EQ(to_string(zero), "0");
}

TEST(PolynomialTest, ScaleSubstitute) {
  EXPECT_EQ(scale_substitute(Polynomial{15, 15, 6, 1}, 2), (Polynomial{15, 30, 24, 8}));
  const Polynomial p{R(3, 7), -2, 0, 5};
  EXPECT_EQ(scale_substitute(p, 1), p);
  // (-s)^2 + 8(-s) + 20
  EXPECT_EQ(scale_substitute(Polynomial{20, 8, 1}, -1), (Polynomial{20, -8, 1}));
}

TEST(PolynomialTest, GcdExamples) {
  EXPECT_EQ(gcd(Polynomial{-1, 0, 1}, Polynomial{-1, 1}), (Polynomial{-1, 1}));
  EXPECT_EQ(gcd(Polynomial{3, 1, 4}, Polynomial{1}), (Polynomial{1}));
  EXPECT_EQ(gcd(Polynomial{2, 4}, Polynomial{}), (Polynomial{R(1, 2), 1}));
  EXPECT_THROW(gcd(Polynomial{}, Polynomial{}), std::invalid_argument);
}

TEST(PolynomialTest, CanonicalFormRemovesCommonContent) {
  // 9 x the printed (3,2) delay over |N|^2 |D|^2 reduces to the printed form.
  const Polynomial mag_num{3600, 216, 9};
  const Polynomial mag_den{3600, 216, 9, 1};
  const Polynomial delay_num{1440000, 172800, 12384, 592, 17};
  const Polynomial delay_den{1440000, 172800, 12384, 832, 33, 1};
  EXPECT_EQ(mag_num * mag_den / 9, delay_den);
  const EvenRationalFunction raw(delay_num * 9, mag_num * mag_den);
  EXPECT_EQ(raw.numerator(), delay_num);
  EXPECT_EQ(raw.denominator(), delay_den);
}

TEST(PolynomialTest, DivmodReconstructs) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const Polynomial a = random_polynomial(rng, 7);
    Polynomial b = random_polynomial(rng, 4);
    if (b.is_zero()) continue;
    const auto [q, r] = divmod(a, b);
    EXPECT_EQ(q * b + r, a);
    EXPECT_LT(r.degree(), b.degree());
  }
}

TEST(PolynomialPropertyTest, RingLaws) {
  std::mt19937 rng(20261016);
  for (int trial = 0; trial < 60; ++trial) {
    const Polynomial a = random_polynomial(rng, 6);
    const Polynomial b = random_polynomial(rng, 6);
    const Polynomial c = random_polynomial(rng, 6);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST(RationalFunctionPropertyTest, ReductionRespectsQuotients) {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    const Polynomial p = random_polynomial(rng, 5);
    const Polynomial q = random_polynomial(rng, 5);
    const Polynomial g = random_polynomial(rng, 3);
    if (q.is_zero() || g.is_zero()) continue;
    const TransferFunction plain(p, q);
    const TransferFunction padded(p * g, q * g);
    EXPECT_EQ(plain, padded);
    EXPECT_EQ(padded.denominator().leading(), 1);
    if (!p.is_zero()) {
      EXPECT_EQ(gcd(padded.numerator(), padded.denominator()), Polynomial{1});
    }
  }
}

TEST(RationalFunctionTest, RejectsZeroDenominatorAndRenders) {
  EXPECT_THROW(TransferFunction(Polynomial{1}, Polynomial{}), std::invalid_argument);
  EXPECT_EQ(to_string(TransferFunction(Polynomial{1}, Polynomial{1})), "1 / 1");
  EXPECT_EQ(to_string(TransferFunction(Polynomial{60, -24, 3}, Polynomial{60, 36, 9, 1})),
            "(3 s^2 - 24 s + 60) / (s^3 + 9 s^2 + 36 s + 60)");
  EXPECT_EQ(TransferFunction(Polynomial{}, Polynomial{4, 1}).denominator(), Polynomial{1});
}

TEST(SeriesTest, SeriesOfRatio) {
  EXPECT_EQ(series_of_ratio(Polynomial{1}, Polynomial{1, 1}, 4), TruncatedSeries({1, -1, 1, -1}));
  const Polynomial num{1440000, 172800, 12384, 592, 17};
  const Polynomial den{1440000, 172800, 12384, 832, 33, 1};
  // Hand long division; u^4 term is -16/1440000 + (240/1440000)(172800/1440000).
  EXPECT_EQ(series_of_ratio(num, den, 5), TruncatedSeries({1, 0, 0, R(-1, 6000), R(1, 112500)}));
  const Polynomial p{3, R(1, 2), -7};
  EXPECT_EQ(series_of_ratio(p, p, 4), TruncatedSeries({1, 0, 0, 0}));
  EXPECT_THROW(series_of_ratio(Polynomial{1}, Polynomial{0, 1}, 3), std::domain_error);
}

TEST(SeriesTest, ExpSeries) {
  EXPECT_EQ(exp_series(-1, 4), TruncatedSeries({1, -1, R(1, 2), R(-1, 6)}));
  EXPECT_EQ(exp_series(1, 3), TruncatedSeries({1, 1, R(1, 2)}));
  EXPECT_EQ(exp_series(-1, 8) * exp_series(1, 8), TruncatedSeries({1, 0, 0, 0, 0, 0, 0, 0}));
  EXPECT_THROW(exp_series(1, 0), std::invalid_argument);
}

TEST(SeriesPropertyTest, RatioTimesDenominatorRecoversNumerator) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const Polynomial num = random_polynomial(rng, 6);
    const Polynomial den = random_polynomial(rng, 6);
    if (den.coefficient(0) == 0) continue;
    const std::size_t terms = 12;
    const TruncatedSeries ratio = series_of_ratio(num, den, terms);
    EXPECT_EQ(ratio * TruncatedSeries::from_polynomial(den, terms), TruncatedSeries::from_polynomial(num, terms));
  }
}

TEST(InterpolateTest, Examples) {
  EXPECT_EQ(interpolate({{0, 0}, {1, 1}, {2, 4}}), (Polynomial{0, 0, 1}));
  EXPECT_EQ(interpolate({{3, 5}, {R(1, 2), 5}}), Polynomial{5});
  std::vector<SamplePoint> pts;
  for (int g = 0; g < 7; ++g) {
    const Rational gamma(g - 3, 2);
    pts.emplace_back(gamma, 135 * (8 * gamma * gamma - 10 * gamma + 5));
  }
  EXPECT_EQ(interpolate(pts), (Polynomial{675, -1350, 1080}));
  EXPECT_THROW(interpolate({{1, 2}, {1, 3}}), std::invalid_argument);
}

TEST(InterpolatePropertyTest, RecoversKnownPolynomials) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    const Polynomial p = random_polynomial(rng, 8);
    std::vector<SamplePoint> pts;
    const int count = std::max(p.degree(), 0) + 1 + trial % 3;
    for (int i = 0; i < count; ++i) {
      const Rational x(i * 3 - 7, i % 4 + 1);
      bool fresh = true;
      for (const auto& [px, py] : pts) fresh = fresh && px != x;
      if (fresh) pts.emplace_back(x, p(x));
    }
    if (static_cast<int>(pts.size()) <= p.degree()) continue;
    EXPECT_EQ(interpolate(pts), p);
  }
}

TEST(SurdTest, NormalizesRadicand) {
  const QuadSurd x(1, 1, BigInt(12));  // 1 + 2 sqrt(3)
  EXPECT_EQ(x.b(), 2);
  EXPECT_EQ(x.d(), 3);
  const QuadSurd y(1, 3, BigInt(16));
  EXPECT_TRUE(y.is_rational());
  EXPECT_EQ(y.a(), 13);
  EXPECT_EQ(QuadSurd::sqrt_of(R(5, 3)), QuadSurd(0, R(1, 3), BigInt(15)));
}

TEST(SurdTest, DecimalRendering) {
  EXPECT_EQ(to_decimal(QuadSurd(R(5, 2), R(1, 2), BigInt(15)), 4), "4.436");
  EXPECT_EQ(to_decimal(QuadSurd(R(3), 0, BigInt(2)), 4), "3.000");
  EXPECT_EQ(to_decimal(QuadSurd(R(5, 2), R(-1, 2), BigInt(15)), 4), "0.5635");
  EXPECT_EQ(to_decimal(QuadSurd(0, 1, BigInt(2)), 12), "1.41421356237");
  EXPECT_EQ(to_decimal(QuadSurd(0, -1, BigInt(2)), 3), "-1.41");
  EXPECT_EQ(to_decimal(QuadSurd(R(999, 100)), 2), "10");
  EXPECT_EQ(to_decimal(QuadSurd(R(1, 800)), 2), "0.0013");
  EXPECT_EQ(to_decimal(QuadSurd(R(0)), 3), "0.00");
  EXPECT_THROW(to_decimal(QuadSurd(R(1)), 0), std::invalid_argument);
}

TEST(SurdTest, StringRendering) {
  EXPECT_EQ(to_string(QuadSurd(R(5, 2), R(1, 2), BigInt(15))), "(5+sqrt(15))/2");
  EXPECT_EQ(to_string(QuadSurd(R(5, 2), R(-1, 2), BigInt(15))), "(5-sqrt(15))/2");
  EXPECT_EQ(to_string(QuadSurd(0, R(-3, 4), BigInt(2))), "-3*sqrt(2)/4");
  EXPECT_EQ(to_string(QuadSurd(R(7, 3))), "7/3");
}

TEST(SurdTest, FieldArithmetic) {
  const QuadSurd r(0, 1, BigInt(15));
  EXPECT_EQ(r * r, QuadSurd(R(15)));
  const QuadSurd x(R(5, 2), R(1, 2), BigInt(15));
  // x is a root of 2 g^2 - 10 g + 5.
  EXPECT_EQ(evaluate(Polynomial{5, -10, 2}, x), QuadSurd(R(0)));
  EXPECT_EQ(x / x, QuadSurd(R(1)));
  EXPECT_EQ(x.sign(), 1);
  EXPECT_EQ((QuadSurd(R(1)) - QuadSurd(0, 1, BigInt(2))).sign(), -1);
  EXPECT_TRUE(QuadSurd(0, 1, BigInt(2)) < QuadSurd(0, 1, BigInt(3)));
}

TEST(SurdPropertyTest, PrecisionRefinementIsConsistent) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> num(-50, 50);
  std::uniform_int_distribution<int> den(1, 9);
  std::uniform_int_distribution<int> rad(2, 200);
  for (int trial = 0; trial < 40; ++trial) {
    const QuadSurd x(R(num(rng), den(rng)), R(num(rng), den(rng)), BigInt(rad(rng)));
    if (x.sign() == 0) continue;
    for (int k : {3, 6, 9}) {
      const Rational coarse = parse_rational(to_decimal(x, k));
      const Rational fine = parse_rational(to_decimal(x, 2 * k));
      const Interval tight = x.enclosure(4 * k + 10);
      // Both renderings lie within half a unit in their last place of x.
      const Rational mag = tight.lo < 0 ? Rational(-tight.lo) : tight.lo;
      const int exponent = detail::floor_log10(mag);
      const Rational ulp_coarse = pow10(exponent - k + 1);
      const Rational ulp_fine = pow10(exponent - 2 * k + 1);
      auto dist = [](const Rational& a, const Rational& b) { return a > b ? Rational(a - b) : Rational(b - a); };
      EXPECT_LE(dist(coarse, fine), ulp_coarse / 2 + ulp_fine / 2 + ulp_coarse / 1000);
      EXPECT_LE(dist(fine, tight.lo), ulp_fine);
    }
  }
}

}  // namespace
}  // namespace besselpade
