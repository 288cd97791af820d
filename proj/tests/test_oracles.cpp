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

#include <algorithm>
#include <numeric>
#include <random>

#include "nilcone/chains.hpp"
#include "nilcone/partitions.hpp"
#include "nilcone/polytope.hpp"
#include "nilcone/semistability.hpp"
#include "nilcone_tools/oracles.hpp"

namespace nilcone {
namespace {

TEST(RegionOracle, HeightVectorsMatchSaturationScan) {
  for (int s = 1; s <= 6; ++s) {
    std::vector<oracle::Boxes> listed;
    for (const auto& r : enumerate_canonical_regions(s)) listed.push_back(oracle::boxes_of(r));
    std::sort(listed.begin(), listed.end());
    const auto scanned = oracle::saturated_subsets(s);
    EXPECT_EQ(listed, scanned) << s;
    EXPECT_EQ(scanned.size(), std::size_t{1} << s);
  }
}

std::vector<std::pair<std::int64_t, std::int64_t>> box_for(const InequalitySystem& sys) {
  std::vector<std::pair<std::int64_t, std::int64_t>> box;
  for (const auto& iv : variable_bounds(sys)) {
    box.emplace_back(floor_of(iv.lower).convert_to<std::int64_t>() - 2, ceil_of(iv.upper).convert_to<std::int64_t>() + 2);
  }
  return box;
}

TEST(LatticeOracle, EnumerationMatchesBoxScan) {
  for (int g : {2, 3}) {
    const GenusContext ctx(g);
    for (int r = 1; r <= 6; ++r) {
      for (const auto& ranks : multiplicity_partitions(r)) {
        if (ranks.size() > 4) continue;
        for (std::int64_t d = -5; d <= 5; ++d) {
          const auto sys = build_system(ctx, ranks, d);
          std::vector<std::pair<std::int64_t, std::int64_t>> box;
          try {
            box = box_for(sys);
          } catch (const Error& e) {
            ASSERT_EQ(e.code(), ErrorCode::Infeasible);
            EXPECT_TRUE(enumerate_lattice_points(sys).empty());
            continue;
          }
          EXPECT_EQ(enumerate_lattice_points(sys), oracle::points_by_scan(ctx, ranks, d, box));
        }
      }
    }
  }
}

TEST(LatticeOracle, FrozenCensusTotals) {
  struct Case {
    int g;
    int r;
    int d;
    std::int64_t total;
  };
  for (const auto& c : {Case{2, 2, 1, 2}, Case{3, 2, 1, 3}, Case{2, 3, 1, 6}, Case{2, 3, 2, 6}, Case{3, 3, 1, 15},
                        Case{2, 4, 1, 22}, Case{2, 4, 2, 25}}) {
    const GenusContext ctx(c.g);
    std::int64_t total = 0;
    for (const auto& ranks : multiplicity_partitions(c.r)) {
      total += static_cast<std::int64_t>(oracle::points_by_scan(ctx, ranks, c.d, box_for(build_system(ctx, ranks, c.d))).size());
    }
    EXPECT_EQ(total, c.total);
    EXPECT_EQ(census(ctx, c.r, c.d).total, c.total);
  }
}

TEST(FlagOracle, AgreesWithLibraryOnAllFlags) {
  std::mt19937_64 rng(53);
  std::uniform_int_distribution<std::int64_t> rank(0, 2);
  std::uniform_int_distribution<std::int64_t> degree(-6, 6);
  for (int i = 0; i < 300; ++i) {
    const int s = 1 + i % 4;
    std::vector<std::int64_t> r(static_cast<std::size_t>(s));
    std::vector<std::int64_t> d(static_cast<std::size_t>(s));
    for (std::size_t k = 0; k < r.size(); ++k) {
      r[k] = rank(rng);
      d[k] = r[k] == 0 ? std::abs(degree(rng)) : degree(rng);
    }
    r.back() = std::max<std::int64_t>(r.back(), 1);
    const JordanType t(GenusContext(2 + i % 2), r, d);
    std::vector<int> p(static_cast<std::size_t>(s));
    std::iota(p.begin(), p.end(), 1);
    do {
      const OneFlag flag(p);
      const auto reference = oracle::check_flag(t, p);
      const auto chain = chain_type(t, flag);
      EXPECT_EQ(reference.n, chain.ranks);
      EXPECT_EQ(reference.p, chain.degrees);
      EXPECT_EQ(reference.conditions_hold, check_conditions(t, flag).all_hold()) << t;
    } while (std::next_permutation(p.begin(), p.end()));
  }
}

TEST(FlagOracle, KappaOutputsPassEveryCondition) {
  for (auto [g, r, d] : std::vector<std::tuple<int, int, int>>{{2, 3, 1}, {2, 4, 1}, {3, 3, 1}, {2, 5, 1}, {2, 5, 2}}) {
    for (const auto& e : kappa_census(GenusContext(g), r, d).entries) {
      const auto reference = oracle::check_flag(e.type, e.result.flag.sizes());
      EXPECT_TRUE(reference.conditions_hold) << e.type << " " << reference.first_failure.value_or("");
      EXPECT_EQ(reference.n, e.result.chain.ranks);
      EXPECT_EQ(reference.p, e.result.chain.degrees);
    }
  }
}

}  // namespace
}  // namespace nilcone
