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

// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>

#include "nilcone/chains.hpp"
#include "nilcone/kac.hpp"
#include "nilcone/partitions.hpp"
#include "nilcone/polytope.hpp"
#include "nilcone/semistability.hpp"
#include "nilcone/tableau.hpp"
#include "nilcone_tools/oracles.hpp"

namespace {

using namespace nilcone;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition && pass) {
      pass = false;
      detail = what;
    }
  }
};

using Box = std::vector<std::pair<std::int64_t, std::int64_t>>;

Box bounding_box(const InequalitySystem& sys, std::int64_t margin) {
  Box box;
  try {
    for (const auto& iv : variable_bounds(sys)) {
      box.emplace_back(floor_of(iv.lower).convert_to<std::int64_t>() - margin,
                       ceil_of(iv.upper).convert_to<std::int64_t>() + margin);
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Infeasible) throw;
    box.clear();
    for (std::size_t k = 2; k <= sys.ranks.size(); ++k) box.emplace_back(-3 * static_cast<std::int64_t>(k) - margin, 3 * static_cast<std::int64_t>(k) + margin);
  }
  return box;
}

std::vector<std::vector<std::int64_t>> tails_in(const Box& box) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> tail(box.size());
  for (std::size_t i = 0; i < box.size(); ++i) tail[i] = box[i].first;
  for (;;) {
    out.push_back(tail);
    std::size_t i = tail.size();
    while (i > 0 && tail[i - 1] == box[i - 1].second) {
      tail[i - 1] = box[i - 1].first;
      --i;
    }
    if (i == 0) return out;
    ++tail[i - 1];
  }
}

Outcome criterion_regions() {
  Outcome o;
  for (int s = 1; s <= 6; ++s) {
    std::vector<oracle::Boxes> listed;
    for (const auto& r : enumerate_canonical_regions(s)) listed.push_back(oracle::boxes_of(r));
    std::sort(listed.begin(), listed.end());
    const auto scanned = oracle::saturated_subsets(s);
    o.require(listed == scanned, "s=" + std::to_string(s) + ": enumeration differs from saturation scan");
    o.require(scanned.size() == (std::size_t{1} << s), "s=" + std::to_string(s) + ": scan count is not 2^s");
  }
  if (o.pass) o.detail = "2,4,8,16,32,64 regions for s=1..6, equal to the saturation scan";
  return o;
}

Outcome criterion_dimension() {
  Outcome o;
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<int> genus(2, 4);
  std::uniform_int_distribution<int> length(1, 6);
  std::uniform_int_distribution<std::int64_t> rank(0, 4);
  std::uniform_int_distribution<std::int64_t> degree(-30, 30);
  for (int i = 0; i < 1000; ++i) {
    const int g = genus(rng);
    const int s = length(rng);
    std::vector<std::int64_t> r(static_cast<std::size_t>(s));
    std::vector<std::int64_t> d(static_cast<std::size_t>(s));
    for (std::size_t k = 0; k < r.size(); ++k) {
      r[k] = rank(rng);
      d[k] = r[k] == 0 ? std::abs(degree(rng)) : degree(rng);
    }
    if (r.back() == 0 && d.back() == 0) d.back() = 1;
    const JordanType t(GenusContext(g), r, d);
    const std::int64_t total = total_class(t).rank;
    o.require(stratum_dimension(t) == (g - 1) * total * total, "identity fails on a random type");
  }
  if (o.pass) o.detail = "1000 random types, g in {2,3,4}, s <= 6";
  return o;
}

Outcome criterion_dual() {
  Outcome o;
  std::int64_t types = 0;
  for (int g : {2, 3}) {
    const GenusContext ctx(g);
    for (int r = 1; r <= 4; ++r) {
      for (const auto& ranks : multiplicity_partitions(r)) {
        for (std::int64_t d = -5; d <= 5; ++d) {
          const auto sys = build_system(ctx, ranks, d);
          for (const auto& tail : tails_in(bounding_box(sys, 2))) {
            std::vector<std::int64_t> degrees{sys.first_degree(tail)};
            degrees.insert(degrees.end(), tail.begin(), tail.end());
            bool valid = true;
            for (std::size_t k = 0; k < ranks.size(); ++k) valid = valid && (ranks[k] > 0 || degrees[k] >= 0);
            if (!valid) continue;
            const JordanType t(ctx, ranks, degrees);
            ++types;
            o.require(is_semistable_regions(t).semistable == is_semistable_inequalities(t).semistable,
                      "tests disagree at g=" + std::to_string(g) + " d=" + std::to_string(d));
          }
        }
      }
    }
  }
  if (o.pass) o.detail = std::to_string(types) + " Jordan types agree";
  return o;
}

std::int64_t scanned_total(const GenusContext& ctx, int r, std::int64_t d) {
  std::int64_t total = 0;
  for (const auto& ranks : multiplicity_partitions(r)) {
    total += static_cast<std::int64_t>(oracle::points_by_scan(ctx, ranks, d, bounding_box(build_system(ctx, ranks, d), 2)).size());
  }
  return total;
}

Outcome criterion_census() {
  Outcome o;
  const auto a = census(GenusContext(2), 2, 1);
  o.require(a.total == 2, "g=2 r=2 d=1 total is not 2");
  o.require(a.partitions.size() == 2 && a.partitions[0].ranks == std::vector<std::int64_t>{0, 1} &&
                a.partitions[0].count == 1 && a.partitions[1].ranks == std::vector<std::int64_t>{2} &&
                a.partitions[1].count == 1,
            "g=2 r=2 d=1 breakdown is not {(2):1, (1^2):1}");
  o.require(scanned_total(GenusContext(2), 2, 1) == 2, "box scan disagrees at g=2 r=2 d=1");
  o.require(census(GenusContext(3), 2, 1).total == 3, "g=3 r=2 d=1 total is not 3");
  o.require(scanned_total(GenusContext(3), 2, 1) == 3, "box scan disagrees at g=3 r=2 d=1");
  for (int g = 2; g <= 4; ++g) {
    for (std::int64_t d = -10; d <= 10; ++d) {
      o.require(census(GenusContext(g), 1, d).total == 1, "rank one total is not 1");
    }
  }
  if (o.pass) o.detail = "(2,2,1)=2 as (2):1 + (1^2):1, (3,2,1)=3, rank one = 1 for g=2..4, |d|<=10";
  return o;
}

Outcome criterion_degree_independence() {
  Outcome o;
  std::string detail;
  for (const auto& [r, degrees] : std::vector<std::pair<int, std::vector<std::int64_t>>>{{2, {1, 3, 5, 7}}, {3, {1, 2, 4, 5}}}) {
    std::set<std::int64_t> totals;
    for (auto d : degrees) totals.insert(census(GenusContext(2), r, d).total);
    o.require(totals.size() == 1, "g=2 r=" + std::to_string(r) + " totals depend on d");
    detail += (detail.empty() ? "" : ", ") + std::string("r=") + std::to_string(r) + ": " + std::to_string(*totals.begin());
  }
  if (o.pass) o.detail = "g=2 " + detail;
  return o;
}

Outcome criterion_translation() {
  Outcome o;
  std::int64_t systems = 0;
  std::int64_t bijections = 0;
  for (int g : {2, 3}) {
    const GenusContext ctx(g);
    for (int r = 1; r <= 7; ++r) {
      for (const auto& ranks : multiplicity_partitions(r)) {
        if (ranks.size() > 5) continue;
        const auto base = normalized_system(build_system(ctx, ranks, 1));
        const auto base_points = enumerate_lattice_points(build_system(ctx, ranks, 1));
        for (std::int64_t d = -6; d <= 8; ++d) {
          ++systems;
          o.require(normalized_system(build_system(ctx, ranks, d)) == base, "normalized systems differ");
          const auto tau = integral_translation(ranks, 1, d);
          if (!tau) continue;
          ++bijections;
          std::vector<std::vector<std::int64_t>> moved;
          for (auto pt : base_points) {
            for (std::size_t k = 0; k < pt.size(); ++k) pt[k] += (*tau)[k];
            moved.push_back(pt);
          }
          std::sort(moved.begin(), moved.end());
          auto target = enumerate_lattice_points(build_system(ctx, ranks, d));
          std::sort(target.begin(), target.end());
          o.require(moved == target, "integral translation is not a bijection");
        }
      }
    }
  }
  if (o.pass) {
    o.detail = std::to_string(systems) + " systems identical, " + std::to_string(bijections) + " integral bijections";
  }
  return o;
}

Outcome criterion_kappa() {
  Outcome o;
  std::vector<std::tuple<int, std::int64_t, std::int64_t>> cases{{2, 2, 1}, {3, 2, 1}, {2, 2, 3}, {2, 2, 5}, {2, 2, 7},
                                                                {2, 3, 1}, {2, 3, 2}, {2, 3, 4}, {2, 3, 5}};
  for (int g = 2; g <= 3; ++g) {
    for (std::int64_t d = -3; d <= 3; ++d) cases.emplace_back(g, 1, d);
  }
  std::int64_t types = 0;
  for (const auto& [g, r, d] : cases) {
    const GenusContext ctx(g);
    const std::int64_t l = ctx.canonical_degree();
    std::set<ChainType> images;
    for (const auto& e : kappa_census(ctx, r, d).entries) {
      ++types;
      const auto& chain = e.result.chain;
      const auto ref = oracle::check_flag(e.type, e.result.flag.sizes());
      o.require(ref.conditions_hold, "a condition fails: " + ref.first_failure.value_or(""));
      o.require(ref.n == chain.ranks && ref.p == chain.degrees, "chain differs from the flag strips");
      std::int64_t n = 0;
      std::int64_t p = 0;
      for (std::size_t k = 0; k < chain.ranks.size(); ++k) {
        n += chain.ranks[k];
        p += chain.degrees[k] + static_cast<std::int64_t>(k) * l * chain.ranks[k];
      }
      o.require(n == r && p == d, "class is not conserved");
      o.require(higgs_slope(ctx, chain) == Slope::finite(make_rational(d, r)), "Higgs slope is not d/r");
      o.require(images.insert(chain).second, "kappa is not injective");
    }
  }
  o.require(kappa(JordanType(GenusContext(2), {0, 1}, {1, 1})).chain == ChainType{{1, 1}, {0, -1}}, "first anchor");
  o.require(kappa(JordanType(GenusContext(2), {1, 1}, {-1, 2})).chain == ChainType{{1, 2}, {0, -3}}, "second anchor");
  if (o.pass) o.detail = std::to_string(types) + " types, injective, both anchors reproduced";
  return o;
}

Outcome criterion_worked_example() {
  Outcome o;
  const OneFlag flag({3, 2, 5, 4, 1, 6});
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<std::int64_t> rank(0, 4);
  std::uniform_int_distribution<std::int64_t> degree(-25, 25);
  for (int i = 0; i < 500; ++i) {
    std::vector<std::int64_t> r(6);
    std::vector<std::int64_t> d(6);
    for (std::size_t k = 0; k < 6; ++k) {
      r[k] = rank(rng);
      d[k] = r[k] == 0 ? std::abs(degree(rng)) : degree(rng);
    }
    r[1] = std::max<std::int64_t>(r[1], 1);  // n_4 < n_3, so R_3^4 is defined
    r[5] = std::max<std::int64_t>(r[5], 1);
    r[0] = std::max<std::int64_t>(r[0], 1);  // n_5 < n_6, so the checked region is defined
    const JordanType t(GenusContext(2 + i % 4), r, d);
    const std::int64_t l = t.context().canonical_degree();
    o.require(region_slope_rkj(t, flag, 3, 4) == slope(twist(t.alpha(2), -l)), "slope of R_3^4");
    ClassH top;
    for (int k = 1; k <= 5; ++k) top += t.alpha(k);
    o.require(strip_set_class(t, flag, 5, 6, flag.size(5)) == top, "class of the checked R_5^6");
    o.require(region_slope_rcheck(t, flag, 5, 6) == slope(top), "slope of the checked R_5^6");
  }
  if (o.pass) o.detail = "sigma=(3,2,5,4,1,6) on 500 random types";
  return o;
}

Outcome criterion_kac() {
  Outcome o;
  for (int g = 1; g <= 5; ++g) {
    std::vector<Integer> expected(static_cast<std::size_t>(g + 1), 0);
    expected.back() = 1;
    o.require(kac_polynomial(g, 1).coefficients == expected, "A_{g,1} is not q^g");
  }
  std::string counts;
  for (auto [g, r, q] : std::vector<std::tuple<int, int, int>>{{1, 2, 2}, {2, 2, 2}, {2, 2, 3}}) {
    const Integer brute = count_abs_indec(g, r, q);
    o.require(brute == kac_polynomial(g, r).evaluate(q), "Hua differs from the finite-field count");
    counts += (counts.empty() ? "" : ",") + brute.str();
  }
  for (int g = 1; g <= 3; ++g) {
    for (int r = 1; r <= 3; ++r) {
      const auto p = kac_polynomial(g, r);
      o.require(p.degree() == 1 + (g - 1) * r * r, "degree is not 1+(g-1)r^2");
      o.require(std::all_of(p.coefficients.begin(), p.coefficients.end(), [](const Integer& c) { return c >= 0; }),
                "negative coefficient");
    }
  }
  if (o.pass) o.detail = "A_{g,1}=q^g for g<=5; oracle counts " + counts + "; degree/positivity for g,r<=3";
  return o;
}

Outcome criterion_crosscheck() {
  Outcome o;
  std::string detail;
  for (auto [g, r, d] : std::vector<std::tuple<int, int, int>>{{2, 2, 1}, {3, 2, 1}, {2, 3, 1}}) {
    const auto report = crosscheck(GenusContext(g), r, d);
    o.require(report.match, "census total differs from A(1)");
    detail += (detail.empty() ? "" : ", ") + std::string("(") + std::to_string(g) + "," + std::to_string(r) + "," +
              std::to_string(d) + ")=" + std::to_string(report.census.total);
  }
  if (o.pass) o.detail = detail + " equal to A_{g,r}(1)";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double budget_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"canonical-region oracle", 10, criterion_regions},
      {"dimension identity", 5, criterion_dimension},
      {"dual-test agreement", 60, criterion_dual},
      {"census values", 60, criterion_census},
      {"degree independence", 60, criterion_degree_independence},
      {"translation", 60, criterion_translation},
      {"kappa correctness", 60, criterion_kappa},
      {"worked-example anchors", 60, criterion_worked_example},
      {"Kac module", 120, criterion_kac},
      {"census equals A_{g,r}(1)", 300, criterion_crosscheck},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome.pass = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (outcome.pass && seconds > c.budget_seconds) {
      outcome.pass = false;
      outcome.detail = "exceeded the time budget";
    }
    failures += outcome.pass ? 0 : 1;
    std::printf("criterion %2zu %s  %-26s %6.2fs  %s\n", i + 1, outcome.pass ? "PASS" : "FAIL", c.name, seconds,
                outcome.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
