// Copyright 2026 The nilcone Authors.
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

#include <gtest/gtest.h>

#include "nilcone/finite_field.hpp"
#include "nilcone/kac.hpp"

namespace nilcone {
namespace {

std::vector<Integer> coeffs(std::initializer_list<int> c) { return {c.begin(), c.end()}; }

TEST(FiniteField, Axioms) {
  for (int q : {2, 3, 4, 5, 7, 8, 9, 16, 25, 27}) {
    const FiniteField f(q);
    EXPECT_EQ(f.order(), q);
    using E = FiniteField::Element;
    for (int a = 0; a < q; ++a) {
      const auto ea = static_cast<E>(a);
      EXPECT_EQ(f.add(ea, f.neg(ea)), 0);
      if (a != 0) EXPECT_EQ(f.mul(ea, f.inv(ea)), 1);
      for (int b = 0; b < q; ++b) {
        const auto eb = static_cast<E>(b);
        EXPECT_EQ(f.mul(ea, eb), f.mul(eb, ea));
        for (int c = 0; c < q; c += 3) {
          const auto ec = static_cast<E>(c);
          EXPECT_EQ(f.mul(ea, f.add(eb, ec)), f.add(f.mul(ea, eb), f.mul(ea, ec)));
        }
      }
    }
  }
}

TEST(FiniteField, RejectsNonPrimePowers) {
  for (int q : {0, 1, 6, 10, 12, 257}) EXPECT_THROW(FiniteField{q}, Error) << q;
  EXPECT_EQ(small_prime_powers(8), (std::vector<int>{2, 3, 4, 5, 7, 8, 9, 11}));
}

TEST(KacPolynomial, RankOne) {
  for (int g = 1; g <= 5; ++g) {
    std::vector<Integer> expected(static_cast<std::size_t>(g + 1), 0);
    expected.back() = 1;
    EXPECT_EQ(kac_polynomial(g, 1).coefficients, expected);
  }
}

TEST(KacPolynomial, OneLoop) {
  for (int r = 1; r <= 6; ++r) EXPECT_EQ(kac_polynomial(1, r).coefficients, coeffs({0, 1}));
}

TEST(KacPolynomial, FrozenValues) {
  // Each value is checked against the finite-field count below.
  EXPECT_EQ(kac_polynomial(2, 2).coefficients, coeffs({0, 0, 0, 1, 0, 1}));
  EXPECT_EQ(kac_polynomial(3, 2).coefficients, coeffs({0, 0, 0, 0, 0, 1, 0, 1, 0, 1}));
  EXPECT_EQ(kac_polynomial(2, 3).coefficients, coeffs({0, 0, 0, 0, 1, 1, 1, 1, 1, 0, 1}));
  EXPECT_EQ(kac_polynomial(2, 2).str(), "q^5 + q^3");
  EXPECT_EQ(kac_polynomial(3, 3).at_one(), 15);
  EXPECT_EQ(kac_polynomial(2, 4).at_one(), 22);
}

TEST(KacPolynomial, DegreeAndPositivity) {
  for (int g = 1; g <= 4; ++g) {
    for (int r = 1; r <= 4; ++r) {
      const auto p = kac_polynomial(g, r);
      EXPECT_EQ(p.degree(), 1 + (g - 1) * r * r);
      EXPECT_EQ(p.coefficients.back(), 1);
      for (const auto& c : p.coefficients) EXPECT_GE(c, 0);
      if (g >= 2) EXPECT_GT(p.at_one(), 0);
    }
  }
}

TEST(KacPolynomial, Limits) {
  try {
    (void)kac_polynomial(2, 9);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SizeTooLarge);
  }
  EXPECT_THROW((void)kac_polynomial(50, 3), Error);
  EXPECT_NO_THROW((void)kac_polynomial(50, 3, KacLimits{8, 1000}));
}

TEST(KacPolynomial, Evaluation) {
  const auto p = kac_polynomial(2, 2);
  EXPECT_EQ(p.evaluate(2), 40);
  EXPECT_EQ(p.evaluate(3), 270);
  EXPECT_EQ(p.at_one(), 2);
}

TEST(Oracle, TrivialCounts) {
  EXPECT_EQ(count_abs_indec(2, 1, 2), 4);
  EXPECT_EQ(count_abs_indec(1, 1, 3), 3);
  EXPECT_EQ(count_abs_indec(3, 1, 4), 64);
}

TEST(Oracle, MatchesHua) {
  for (auto [g, r, q] : std::vector<std::tuple<int, int, int>>{
           {1, 2, 2}, {1, 2, 3}, {1, 2, 4}, {1, 3, 2}, {1, 3, 3}, {1, 4, 2}, {2, 2, 2}, {2, 2, 3}, {3, 2, 2}}) {
    EXPECT_EQ(count_abs_indec(g, r, q), kac_polynomial(g, r).evaluate(q)) << g << " " << r << " " << q;
  }
}

TEST(Oracle, ParallelMatchesSequential) { EXPECT_EQ(count_abs_indec(2, 2, 3, true), count_abs_indec(2, 2, 3, false)); }

TEST(Oracle, Budget) {
  try {
    (void)count_abs_indec(3, 2, 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BudgetExceeded);
  }
}

TEST(Interpolation, AgreesWithHua) {
  for (auto [g, r] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 1}, {3, 1}, {4, 1}}) {
    EXPECT_EQ(kac_polynomial_interpolated(g, r), kac_polynomial(g, r)) << g << " " << r;
  }
  EXPECT_THROW((void)kac_polynomial_interpolated(2, 2), Error);
}

TEST(Crosscheck, CensusMatchesKacAtOne) {
  for (auto [g, r, d] : std::vector<std::tuple<int, int, int>>{{2, 1, 0}, {2, 2, 1}, {3, 2, 1}, {2, 3, 1}, {2, 3, 2}}) {
    const auto report = crosscheck(GenusContext(g), r, d);
    EXPECT_TRUE(report.match) << g << " " << r << " " << d;
    EXPECT_EQ(Integer(report.census.total), report.kac_at_one);
  }
}

TEST(Crosscheck, Errors) {
  try {
    (void)crosscheck(GenusContext(2), 2, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotCoprime);
  }
  EXPECT_THROW((void)crosscheck(GenusContext(1), 2, 1), Error);
}

}  // namespace
}  // namespace nilcone
