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

#include "besselpade/budak.hpp"
#include "besselpade/pade.hpp"
#include "gtest/gtest.h"

namespace besselpade {
namespace {

Rational R(long long p, long long q = 1) { return Rational(p, q); }

// The (2,3) forms as printed: unscaled gamma arguments, not monic.
TransferFunction printed_g23(const Rational& g) {
  return TransferFunction(Polynomial{15, 15 * (g - 1), 5 * (g - 1) * (g - 1)},
                          Polynomial{15, 15 * g, 6 * g * g, g * g * g});
}

EvenRationalFunction printed_g23_magnitude(const Rational& g) {
  return EvenRationalFunction(Polynomial{225, 75 * power(g - 1, 2), 25 * power(g - 1, 4)},
                              Polynomial{225, 45 * g * g, 6 * power(g, 4), power(g, 6)});
}

Polynomial gamma_poly(std::initializer_list<Rational> c) { return Polynomial(c); }
const Polynomial kGamma = Polynomial::identity();
const Polynomial kGammaMinus1{-1, 1};

TEST(BudakTest, TransferFunctionExamples) {
  EXPECT_EQ(budak_tf({2, 3, 2}), TransferFunction(Polynomial{15, 15, 5}, Polynomial{15, 30, 24, 8}));
  EXPECT_EQ(budak_tf({2, 3, 1}), TransferFunction(Polynomial{15}, Polynomial{15, 15, 6, 1}));
  EXPECT_EQ(budak_tf({0, 2, 1}), TransferFunction(Polynomial{3}, Polynomial{3, 3, 1}));
  EXPECT_NE(budak_tf({2, 3, R(1, 2)}), pade_exp({3, 2}));
  for (unsigned n = 1; n <= 6; ++n) EXPECT_EQ(budak_tf({n, n, R(1, 2)}), pade_exp({n, n})) << n;
}

TEST(BudakTest, RejectsInvalidParameters) {
  EXPECT_THROW(budak_tf({2, 3, 0}), std::invalid_argument);
  EXPECT_THROW(budak_tf({2, 3, R(-1, 2)}), std::invalid_argument);
  EXPECT_THROW(budak_tf({4, 3, 2}), std::invalid_argument);
  EXPECT_THROW(budak_tf({0, 0, 2}), std::invalid_argument);
}

TEST(BudakTest, MatchesPrintedForms) {
  for (const Rational& g : {R(1, 2), R(2), R(3), R(7, 3), R(1)}) {
    EXPECT_EQ(budak_tf({2, 3, g}), printed_g23(g)) << g;
    EXPECT_EQ(budak_magnitude_closed({2, 3, g}), printed_g23_magnitude(g)) << g;
  }
  EXPECT_EQ(budak_magnitude_closed({2, 3, 2}),
            EvenRationalFunction(Polynomial{225, 75, 25}, Polynomial{225, 180, 96, 64}));
  EXPECT_EQ(budak_magnitude_closed({2, 3, 1}), EvenRationalFunction(Polynomial{225}, Polynomial{225, 45, 6, 1}));
}

TEST(BudakTest, ClosedMagnitudeMatchesConstruction) {
  const std::vector<Rational> gammas{R(1, 2), R(2, 3), 2, R(7, 3), 5};
  for (unsigned n = 1; n <= 6; ++n) {
    for (unsigned m = 0; m <= n; ++m) {
      for (const auto& g : gammas) {
        EXPECT_EQ(budak_magnitude_closed({m, n, g}), magnitude_squared(budak_tf({m, n, g})))
            << m << "," << n << "," << g;
      }
    }
  }
}

TEST(BudakTest, UnitGainAtOrigin) {
  for (unsigned n = 1; n <= 6; ++n) {
    for (unsigned m = 0; m <= n; ++m) {
      for (const Rational& g : {R(1, 3), R(1), R(9, 4)}) EXPECT_EQ(budak_tf({m, n, g})(0), 1);
    }
  }
}

TEST(CoefficientRatioTest, Examples) {
  EXPECT_EQ(coefficient_ratio(3, 2, 1), R(5, 3));
  // Equating the u^2 coefficients of the (2,3) magnitude gives
  // 25 (g-1)^4 = 6 g^4, i.e. (g/(g-1))^4 = 25/6.
  EXPECT_EQ(coefficient_ratio(3, 2, 2), R(25, 6));
  for (unsigned m = 1; m <= 7; ++m) EXPECT_GT(coefficient_ratio(m + 1, m, m), 0);
  EXPECT_THROW(coefficient_ratio(3, 2, 0), std::invalid_argument);
  EXPECT_THROW(coefficient_ratio(3, 2, 3), std::invalid_argument);
  EXPECT_THROW(coefficient_ratio(3, 3, 1), std::invalid_argument);
}

TEST(CoefficientRatioTest, SolutionsZeroTheMismatch) {
  // (g/(g-1))^{2j} = A_j is the condition that the u^j coefficients agree.
  for (unsigned n = 2; n <= 6; ++n) {
    for (unsigned m = 1; m < n; ++m) {
      for (unsigned j = 1; j <= m; ++j) {
        const Polynomial lhs = power(kGamma, 2 * j) - coefficient_ratio(n, m, j) * power(kGammaMinus1, 2 * j);
        const Polynomial mismatch = magnitude_gamma_mismatch(n, m, j);
        // Both vanish on the same gamma: they are proportional.
        EXPECT_EQ(monic(lhs), monic(mismatch)) << n << "," << m << "," << j;
      }
    }
  }
}

TEST(GammaTest, CandidatesExamples) {
  const GammaSolutions s = gamma_candidates(3, 2, 1, 9);
  ASSERT_TRUE(s.exact.has_value());
  EXPECT_TRUE(s.upper.contains(s.exact->first.enclosure(20).lo));
  EXPECT_TRUE(s.lower.contains(s.exact->second.enclosure(20).lo));
  EXPECT_LE(s.upper.width(), R(1, 1000000000));
  EXPECT_EQ(s.exact->first, QuadSurd(R(5, 2), R(1, 2), 15));
  EXPECT_EQ(s.exact->second, QuadSurd(R(5, 2), R(-1, 2), 15));

  const GammaSolutions s2 = gamma_candidates(3, 2, 2, 9);
  EXPECT_FALSE(s2.exact.has_value());
  EXPECT_TRUE(disjoint(s.upper, s2.upper));
  EXPECT_TRUE(disjoint(s.lower, s2.lower));
}

TEST(GammaTest, CandidatesAboveHalfAndSatisfyEquation) {
  const Rational half(1, 2);
  for (unsigned n = 2; n <= 8; ++n) {
    for (unsigned m = 1; m < n; ++m) {
      for (unsigned j = 1; j <= m; ++j) {
        const GammaSolutions s = gamma_candidates(n, m, j, 9);
        EXPECT_GT(s.upper.lo, half);
        EXPECT_GT(s.lower.lo, half);
        // (g/(g-1))^{2j} - A_j changes sign across each enclosure.
        const Rational a = s.a_j;
        auto f = [&](const Rational& g) { return power(g / (g - 1), 2 * j) - a; };
        for (const Interval* i : {&s.upper, &s.lower}) {
          EXPECT_LE(f(i->lo) * f(i->hi), 0) << n << "," << m << "," << j;
        }
      }
    }
  }
}

TEST(GammaTest, Order2Examples) {
  const Order2Gamma g = gamma_order2(3, 2);
  EXPECT_EQ(g.upper, QuadSurd(R(5, 2), R(1, 2), 15));
  EXPECT_EQ(g.lower, QuadSurd(R(5, 2), R(-1, 2), 15));
  EXPECT_EQ(g.q, ((Polynomial{5, -10, 2})));
  EXPECT_EQ(to_decimal(g.upper, 4), "4.436");
  EXPECT_EQ(to_decimal(g.lower, 4), "0.5635");
  EXPECT_EQ(evaluate(g.q, g.upper), QuadSurd(0));
  EXPECT_EQ(evaluate(g.q, g.lower), QuadSurd(0));
  EXPECT_THROW(gamma_order2(3, 3), std::invalid_argument);
  EXPECT_THROW(gamma_order2(3, 0), std::invalid_argument);
}

TEST(GammaTest, Order2IsTheFirstMatchingIndex) {
  const QuadSurd half(R(1, 2));
  for (unsigned n = 2; n <= 8; ++n) {
    for (unsigned m = 1; m < n; ++m) {
      const Order2Gamma g = gamma_order2(n, m);
      const GammaSolutions s = gamma_candidates(n, m, 1, 9);
      ASSERT_TRUE(s.exact.has_value());
      EXPECT_EQ(g.upper, s.exact->first) << n << "," << m;
      EXPECT_EQ(g.lower, s.exact->second) << n << "," << m;
      EXPECT_TRUE(half < g.upper);
      EXPECT_TRUE(half < g.lower);
    }
  }
}

TEST(MismatchTest, Examples) {
  EXPECT_EQ(magnitude_gamma_mismatch(3, 2, 1), gamma_poly({R(-1, 3), R(2, 3), R(-2, 15)}));
  EXPECT_EQ(magnitude_gamma_mismatch(3, 2, 1) * Rational(15), (Polynomial{-5, 10, -2}));
  // At gamma = 1 the numerator is constant: mismatch is the all-pole u^2
  // coefficient of 225/(u^3 + 6u^2 + 45u + 225).
  EXPECT_EQ(magnitude_gamma_mismatch(3, 2, 2)(1), R(6, 225));
  EXPECT_THROW(magnitude_gamma_mismatch(3, 2, 3), std::invalid_argument);
}

TEST(MismatchTest, Order2Certificate) {
  for (unsigned n = 2; n <= 6; ++n) {
    for (unsigned m = 1; m < n; ++m) {
      const Order2Certificate c = order2_certificate(n, m);
      EXPECT_TRUE(c.u1_divisible) << n << "," << m;
      EXPECT_FALSE(c.u2_divisible) << n << "," << m;
      EXPECT_TRUE(divides(gamma_order2(n, m).q, magnitude_gamma_mismatch(n, m, 1)));
    }
  }
}

TEST(MismatchTest, GenericGammaHasUnitMagnitudeOrder) {
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> num(1, 60);
  std::uniform_int_distribution<int> den(1, 9);
  for (unsigned n = 2; n <= 6; ++n) {
    for (unsigned m = 1; m < n; ++m) {
      const Polynomial mismatch = magnitude_gamma_mismatch(n, m, 1);
      for (int trial = 0; trial < 5;) {
        const Rational g = R(num(rng), den(rng));
        if (mismatch(g) == 0) continue;
        ++trial;
        EXPECT_EQ(flatness(budak_magnitude_closed({m, n, g}), Quantity::MagnitudeSquared).order, 1u);
      }
    }
  }
}

TEST(MismatchTest, SurdGammaReachesOrderTwo) {
  for (unsigned n = 2; n <= 5; ++n) {
    for (unsigned m = 1; m < n; ++m) {
      const Order2Gamma g = gamma_order2(n, m);
      EXPECT_EQ(budak_magnitude_flatness_at(m, n, g.upper).order, 2u) << n << "," << m;
      EXPECT_EQ(budak_magnitude_flatness_at(m, n, g.lower).order, 2u) << n << "," << m;
    }
  }
}

TEST(MutualExclusionTest, Examples) {
  const auto r32 = mutual_exclusion(3, 2, 9);
  EXPECT_EQ(r32.pairs_checked.size(), 1u);
  EXPECT_TRUE(r32.disjoint);
  EXPECT_TRUE(r32.all_above_half);
  const auto r54 = mutual_exclusion(5, 4, 9);
  EXPECT_EQ(r54.pairs_checked.size(), 6u);
  EXPECT_TRUE(r54.disjoint);
  const auto r21 = mutual_exclusion(2, 1, 9);
  EXPECT_TRUE(r21.pairs_checked.empty());
  EXPECT_TRUE(r21.disjoint);
}

TEST(MutualExclusionTest, Sweep) {
  for (unsigned n = 2; n <= 8; ++n) {
    for (unsigned m = 1; m < n; ++m) {
      const auto r = mutual_exclusion(n, m, 9);
      EXPECT_TRUE(r.disjoint) << n << "," << m;
      EXPECT_TRUE(r.all_above_half) << n << "," << m;
    }
  }
}

TEST(DelayPolynomialsTest, PrintedBlock) {
  const DelayCoefficientPolys d = delay_gamma_polynomials(2, 3);
  ASSERT_EQ(d.a.size(), 5u);
  ASSERT_EQ(d.b.size(), 6u);
  EXPECT_EQ(d.a[0], (Polynomial{2025}));
  EXPECT_EQ(d.b[0], (Polynomial{2025}));
  const Polynomial g = kGamma;
  const Polynomial gm1 = kGammaMinus1;
  EXPECT_EQ(d.a[4], (Rational(3) * Polynomial{-2, 1} * power(gm1, 3) * power(g, 5)));
  EXPECT_EQ(d.a[3], (Rational(9) * gm1 * power(g, 3) * Polynomial{-5, 13, -13, 4}));
  EXPECT_EQ(d.a[2], (Rational(9) * g * Polynomial{25, -85, 120, -79, 25}));
  EXPECT_EQ(d.a[1], (Rational(135) * Polynomial{5, -10, 8}));
  EXPECT_EQ(d.b[1], d.a[1]);
  EXPECT_EQ(d.b[2], (Rational(9) * Polynomial{25, -100, 165, -130, 46}));
  EXPECT_EQ(d.b[3], (Rational(9) * power(g, 2) * Polynomial{5, -20, 32, -24, 8}));
  EXPECT_EQ(d.b[5], power(gm1, 4) * power(g, 6));
  // b4 carries (g - 1)^2; a single factor of (g - 1) does not match.
  EXPECT_EQ(d.b[4], (Rational(3) * power(gm1, 2) * power(g, 4) * Polynomial{2, -4, 3}));
  EXPECT_EQ(d.a[2] - d.b[2], Rational(225) * power(gm1, 5));
  EXPECT_EQ(d.scale, 2025);
}

TEST(DelayPolynomialsTest, AllPoleAtUnitGamma) {
  const DelayCoefficientPolys d = delay_gamma_polynomials(2, 3);
  std::vector<Rational> num, den;
  for (const auto& p : d.a) num.push_back(p(1));
  for (const auto& p : d.b) den.push_back(p(1));
  const EvenRationalFunction at_one{Polynomial(num), Polynomial(den)};
  EXPECT_EQ(at_one, group_delay(TransferFunction(Polynomial{15}, classical_bessel(3))));
}

TEST(DelayPolynomialsTest, AgreesWithDirectConstruction) {
  const DelayCoefficientPolys d = delay_gamma_polynomials(2, 3);
  for (const Rational& g : {R(1, 3), R(5, 7), R(13, 2)}) {
    std::vector<Rational> num, den;
    for (const auto& p : d.a) num.push_back(p(g));
    for (const auto& p : d.b) den.push_back(p(g));
    EXPECT_EQ(EvenRationalFunction(Polynomial(num), Polynomial(den)), group_delay(budak_tf({2, 3, g}))) << g;
  }
}

TEST(DelayPolynomialsTest, RejectsBadSamples) {
  std::vector<Rational> few{2, 3, 4};
  EXPECT_THROW(delay_gamma_polynomials(2, 3, few), std::invalid_argument);
  std::vector<Rational> with_one = default_gamma_samples(2, 3);
  with_one[0] = 1;
  EXPECT_THROW(delay_gamma_polynomials(2, 3, with_one), std::invalid_argument);
  std::vector<Rational> duplicated = default_gamma_samples(2, 3);
  duplicated[1] = duplicated[0];
  EXPECT_THROW(delay_gamma_polynomials(2, 3, duplicated), std::invalid_argument);
}

TEST(DelayFlatnessTest, Examples) {
  EXPECT_EQ(delay_flatness_order_budak({2, 3, 3}).order, 2u);
  EXPECT_EQ(delay_flatness_order_budak({2, 3, 2}).order, 2u);
  EXPECT_EQ(delay_flatness_order_budak({1, 4, R(5, 2)}).order, 1u);
  EXPECT_THROW(delay_flatness_order_budak({2, 3, 1}), std::invalid_argument);
  EXPECT_THROW(delay_flatness_order_budak({0, 3, 2}), std::invalid_argument);
}

TEST(DelayFlatnessTest, OrderEqualsNumeratorDegree) {
  for (unsigned n = 2; n <= 6; ++n) {
    for (unsigned m = 1; m < n; ++m) {
      for (const Rational& g : {R(1, 2), R(2), R(3), R(5, 4)}) {
        EXPECT_EQ(delay_flatness_order_budak({m, n, g}).order, m) << m << "," << n << "," << g;
      }
    }
  }
}

TEST(DelayFlatnessTest, SurdGammaKeepsOrder) {
  const Order2Gamma g = gamma_order2(3, 2);
  EXPECT_EQ(budak_delay_flatness_at(2, 3, g.upper).order, 2u);
  EXPECT_EQ(budak_delay_flatness_at(2, 3, g.lower).order, 2u);
  // Rational gamma agrees with the direct construction.
  const SurdFlatness at2 = budak_delay_flatness_at(2, 3, QuadSurd(R(2)));
  const FlatnessReport direct = delay_flatness_order_budak({2, 3, 2});
  EXPECT_EQ(at2.order, direct.order);
  EXPECT_EQ(at2.leading_deviation, QuadSurd(direct.leading_deviation));
}

TEST(MinimumPhaseTest, Boundary) {
  for (unsigned n = 1; n <= 5; ++n) {
    for (unsigned m = 1; m <= std::min(3u, n); ++m) {
      for (const Rational& g : {R(3, 2), R(2), R(7)}) {
        EXPECT_EQ(routh_hurwitz(budak_tf({m, n, g}).numerator()).verdict, Verdict::StrictHurwitz)
            << m << "," << n << "," << g;
      }
      for (const Rational& g : {R(1, 4), R(1, 2), R(9, 10)}) {
        EXPECT_EQ(routh_hurwitz(budak_tf({m, n, g}).numerator()).verdict, Verdict::NotHurwitz)
            << m << "," << n << "," << g;
      }
    }
  }
}

}  // namespace
}  // namespace besselpade
