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

#include <random>

#include "nilcone/semistability.hpp"

namespace nilcone {
namespace {

JordanType jt(int g, std::vector<std::int64_t> r, std::vector<std::int64_t> d) {
  return JordanType(GenusContext(g), std::move(r), std::move(d));
}

JordanType random_type(std::mt19937_64& rng, int g, int s) {
  std::uniform_int_distribution<std::int64_t> rank(0, 2);
  std::uniform_int_distribution<std::int64_t> degree(-8, 8);
  std::uniform_int_distribution<std::int64_t> torsion(0, 3);
  std::vector<std::int64_t> r(static_cast<std::size_t>(s));
  std::vector<std::int64_t> d(static_cast<std::size_t>(s));
  for (std::size_t k = 0; k < r.size(); ++k) {
    r[k] = rank(rng);
    d[k] = r[k] == 0 ? torsion(rng) : degree(rng);
  }
  if (r.back() == 0 && d.back() == 0) d.back() = 1;
  if (std::all_of(r.begin(), r.end(), [](auto x) { return x == 0; })) r.front() = 1;
  return jt(g, r, d);
}

TEST(RegionTest, SemistableExample) {
  const auto v = is_semistable_regions(jt(2, {0, 1}, {1, 1}));
  EXPECT_TRUE(v.semistable);
  EXPECT_FALSE(v.witness.has_value());
}

TEST(RegionTest, UnstableExampleWitness) {
  const auto v = is_semistable_regions(jt(2, {0, 1}, {3, 0}));
  ASSERT_FALSE(v.semistable);
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_EQ(v.witness->region, CanonicalRegion({1, 1}));
  EXPECT_EQ(v.witness->side, ViolatedSide::Upper);
  EXPECT_EQ(v.witness->region_slope, Slope::finite(Rational(1)));
  EXPECT_EQ(v.witness->total_slope, Slope::finite(make_rational(1, 2)));
}

TEST(InequalityTest, UnstableExampleWitnessIsTheBarRegion) {
  const auto v = is_semistable_inequalities(jt(2, {0, 1}, {3, 0}));
  ASSERT_FALSE(v.semistable);
  EXPECT_EQ(v.witness->region, CanonicalRegion({0, 1}));
  EXPECT_EQ(v.witness->side, ViolatedSide::Lower);
  EXPECT_EQ(v.witness->region_slope, Slope::finite(Rational(1)));
}

TEST(BothTests, SingleColumnIsSemistable) {
  for (std::int64_t d = -5; d <= 5; ++d) {
    EXPECT_TRUE(is_semistable_regions(jt(2, {3}, {d})).semistable);
    EXPECT_TRUE(is_semistable_inequalities(jt(2, {3}, {d})).semistable);
  }
}

TEST(InequalityTest, RankOneOneDegreeWindow) {
  // d = 1 forces d_1 = 3 - 2 d_2.
  for (std::int64_t d2 = -6; d2 <= 8; ++d2) {
    const auto t = jt(2, {1, 1}, {3 - 2 * d2, d2});
    const bool expected = d2 == 1 || d2 == 2;
    EXPECT_EQ(is_semistable_inequalities(t).semistable, expected) << d2;
    EXPECT_EQ(is_semistable_regions(t).semistable, expected) << d2;
  }
}

TEST(InequalityTest, TorsionSecondColumnWindow) {
  // g = 2, r = (0, 1), d = 1: 1/2 <= d_2 <= 5/2 and d_1 = 3 - 2 d_2 >= 0.
  for (std::int64_t d2 = -3; d2 <= 1; ++d2) {
    const auto t = jt(2, {0, 1}, {3 - 2 * d2, d2});
    EXPECT_EQ(is_semistable_inequalities(t).semistable, d2 == 1) << d2;
  }
}

TEST(BothTests, Errors) {
  try {
    (void)is_semistable_regions(jt(1, {0, 1}, {1, 1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::GenusTooSmall);
  }
  try {
    (void)is_semistable_inequalities(jt(2, {0, 0}, {1, 2}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TorsionTotal);
  }
}

TEST(Offsets, MatchClosedForms) {
  const auto t = jt(3, {1, 0, 2}, {0, 1, 5});
  const CanonicalRegion region({0, 1, 2});
  // l = 4, only column 3 has rank: b- = l * (2 * 1 / 2) * 2, b+ = l * (2 * 3 / 2) * 2.
  EXPECT_EQ(lower_bound_offset(t, region), Rational(8));
  EXPECT_EQ(upper_bound_offset(t, region), Rational(24));
}

TEST(Offsets, LowerBoundIsUpperBoundOfBar) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 400; ++i) {
    const int s = 2 + i % 5;
    const JordanType t = random_type(rng, 2 + i % 2, s);
    const ClassH total = total_class(t);
    const Rational r(total.rank);
    const Rational d(total.degree);
    for (const auto& region : enumerate_canonical_regions(s)) {
      if (region.height(1) != 0 || region.is_empty()) continue;
      Rational central(0);
      for (int k = 1; k <= s; ++k) central += region.height(k) * t.degree(k);
      const ClassH cr = region_class(t, region);
      const Rational pr = Rational(cr.rank) / r;
      const ClassH cb = region_class(t, bar(region));
      // r * (central - p d - b-) = -(d_bar r - d r_bar): lower side <=> slope(bar R) <= d/r.
      EXPECT_EQ(r * (central - pr * d - lower_bound_offset(t, region)), -(Rational(cb.degree) * r - d * cb.rank));
      // r * (p d + b+ - central) = d r_R - d_R r: upper side <=> slope(R) <= d/r.
      EXPECT_EQ(r * (pr * d + upper_bound_offset(t, region) - central), d * cr.rank - Rational(cr.degree) * r);
    }
  }
}

TEST(BothTests, AgreeOnRandomTypes) {
  std::mt19937_64 rng(37);
  int semistable = 0;
  for (int i = 0; i < 4000; ++i) {
    const JordanType t = random_type(rng, 2 + i % 3, 1 + i % 5);
    const auto a = is_semistable_regions(t);
    const auto b = is_semistable_inequalities(t);
    ASSERT_EQ(a.semistable, b.semistable) << t;
    EXPECT_EQ(a.witness.has_value(), !a.semistable);
    EXPECT_EQ(b.witness.has_value(), !b.semistable);
    if (a.semistable) {
      ++semistable;
      EXPECT_GT(t.rank(t.length()), 0) << t;
    }
  }
  EXPECT_GT(semistable, 0);
}

}  // namespace
}  // namespace nilcone
