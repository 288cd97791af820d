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

#include "nilcone_tools/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <unistd.h>

#include "nilcone/chains.hpp"
#include "nilcone/kac.hpp"
#include "nilcone/partitions.hpp"
#include "nilcone/polytope.hpp"
#include "nilcone/semistability.hpp"
#include "nilcone/tableau.hpp"
#include "nilcone_tools/oracles.hpp"
#include "nilcone_tools/report.hpp"

namespace nilcone::tools {

namespace {

class Checker {
 public:
  explicit Checker(SuiteResult& result) : result_(result) {}

  bool expect(bool condition, const std::string& property) {
    ++checks_;
    if (!condition && result_.pass) {
      result_.pass = false;
      result_.first_failure = result_.suite + ": " + property;
    }
    return condition;
  }

  std::int64_t checks() const noexcept { return checks_; }

 private:
  SuiteResult& result_;
  std::int64_t checks_ = 0;
};

std::string type_label(int g, const std::vector<std::int64_t>& r, const std::vector<std::int64_t>& d) {
  return "g=" + std::to_string(g) + " r=(" + join(r) + ") d=(" + join(d) + ")";
}

std::vector<std::vector<std::int64_t>> partitions_of(int n) {
  std::vector<std::vector<std::int64_t>> out;
  for (const auto& m : multiplicity_partitions(n)) out.push_back(m);
  return out;
}

void regions_suite(const VerifyOptions& opt, SuiteResult& res) {
  Checker check(res);
  for (int s = 1; s <= 6; ++s) {
    std::vector<oracle::Boxes> listed;
    for (const auto& region : enumerate_canonical_regions(s)) {
      const BoxSet set = BoxSet::of_region(region);
      check.expect(is_saturated(set), "s=" + std::to_string(s) + " region is not saturated");
      oracle::Boxes b;
      for (const Box& box : set.boxes()) b.emplace_back(box.column, box.height);
      std::sort(b.begin(), b.end());
      listed.push_back(std::move(b));
    }
    if (opt.inject_fault && s == 3) listed.pop_back();
    std::sort(listed.begin(), listed.end());
    const auto scanned = oracle::saturated_subsets(s);
    check.expect(listed == scanned, "s=" + std::to_string(s) + " height enumeration differs from saturation scan");
    check.expect(listed.size() == (std::size_t{1} << s), "s=" + std::to_string(s) + " count is not 2^s");
    res.details["counts"][std::to_string(s)] = listed.size();
  }
  res.details["checks"] = check.checks();
}

void dimension_suite(const VerifyOptions& opt, SuiteResult& res) {
  Checker check(res);
  std::mt19937_64 rng(20261018);
  std::uniform_int_distribution<int> genus(2, 4);
  std::uniform_int_distribution<int> length(1, 6);
  std::uniform_int_distribution<std::int64_t> rank(0, 3);
  std::uniform_int_distribution<std::int64_t> degree(-20, 20);
  std::uniform_int_distribution<std::int64_t> torsion(0, 6);
  constexpr int kTypes = 1000;
  for (int i = 0; i < kTypes; ++i) {
    const int g = genus(rng);
    const int s = length(rng);
    std::vector<std::int64_t> r(static_cast<std::size_t>(s));
    std::vector<std::int64_t> d(static_cast<std::size_t>(s));
    for (int k = 0; k < s; ++k) {
      r[static_cast<std::size_t>(k)] = rank(rng);
      d[static_cast<std::size_t>(k)] = r[static_cast<std::size_t>(k)] == 0 ? torsion(rng) : degree(rng);
    }
    if (r.back() == 0 && d.back() == 0) r.back() = 1;
    const JordanType jt(GenusContext(g), r, d);
    const std::int64_t total = total_class(jt).rank;
    std::int64_t dim = stratum_dimension(jt);
    if (opt.inject_fault && i == 0) ++dim;
    check.expect(dim == (g - 1) * total * total, "dimension identity fails for " + type_label(g, r, d));
  }
  res.details["types"] = kTypes;
}

// Bounding box of the polytope in (d_2..d_s), inflated by `margin`; a box
// around the barycentre when the system is infeasible.
std::vector<std::pair<std::int64_t, std::int64_t>> inflated_box(const InequalitySystem& sys, std::int64_t margin) {
  std::vector<std::pair<std::int64_t, std::int64_t>> box;
  try {
    for (const auto& iv : variable_bounds(sys)) {
      box.emplace_back(floor_of(iv.lower).convert_to<std::int64_t>() - margin,
                       ceil_of(iv.upper).convert_to<std::int64_t>() + margin);
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Infeasible) throw;
    box.clear();
    const std::int64_t l = 2 * sys.ctx.genus() - 2;
    for (std::size_t k = 2; k <= sys.ranks.size(); ++k) {
      const std::int64_t rk = sys.ranks[k - 1];
      const std::int64_t centre = floor_of(make_rational(sys.total_degree * rk, sys.total_rank)).convert_to<std::int64_t>();
      const std::int64_t width = l * static_cast<std::int64_t>(k) * std::max<std::int64_t>(rk, 1) + margin;
      box.emplace_back(centre - width, centre + width);
    }
  }
  return box;
}

void dual_suite(const VerifyOptions& opt, SuiteResult& res) {
  Checker check(res);
  std::int64_t types = 0;
  std::int64_t systems = 0;
  bool injected = false;
  for (int g : {2, 3}) {
    const GenusContext ctx(g);
    for (int r = 1; r <= 4; ++r) {
      for (const auto& ranks : partitions_of(r)) {
        for (std::int64_t d = -1; d <= r + 1; ++d) {
          const InequalitySystem sys = build_system(ctx, ranks, d);
          const auto box = inflated_box(sys, 2);
          ++systems;
          const auto scanned = oracle::points_by_scan(ctx, ranks, d, box);
          auto enumerated = enumerate_lattice_points(sys);
          if (opt.inject_fault && !injected && !enumerated.empty()) {
            enumerated.pop_back();
            injected = true;
          }
          check.expect(enumerated == scanned, "lattice points differ from box scan for g=" + std::to_string(g) +
                                                  " r=(" + join(ranks) + ") d=" + std::to_string(d));
          const std::set<std::vector<std::int64_t>> inside(scanned.begin(), scanned.end());
          // Every integer vector in the box.
          std::vector<std::int64_t> tail(box.size());
          for (std::size_t i = 0; i < box.size(); ++i) tail[i] = box[i].first;
          for (bool more = true; more;) {
            const std::int64_t d1 = sys.first_degree(tail);
            std::vector<std::int64_t> degrees{d1};
            degrees.insert(degrees.end(), tail.begin(), tail.end());
            bool valid = true;
            for (std::size_t k = 0; k < ranks.size(); ++k) valid = valid && (ranks[k] > 0 || degrees[k] >= 0);
            if (valid) {
              const JordanType jt(ctx, ranks, degrees);
              const bool a = is_semistable_regions(jt).semistable;
              const bool b = is_semistable_inequalities(jt).semistable;
              ++types;
              check.expect(a == b, "region and inequality tests disagree on " + type_label(g, ranks, degrees));
              check.expect(a == inside.contains(degrees), "region test disagrees with box scan on " +
                                                              type_label(g, ranks, degrees));
            }
            check.expect(sys.contains(tail) == inside.contains(degrees),
                         "inequality system membership disagrees on " + type_label(g, ranks, degrees));
            more = false;
            for (std::size_t i = tail.size(); i-- > 0;) {
              if (tail[i] < box[i].second) {
                ++tail[i];
                for (std::size_t q = i + 1; q < tail.size(); ++q) tail[q] = box[q].first;
                more = true;
                break;
              }
            }
          }
        }
      }
    }
  }
  res.details["systems"] = systems;
  res.details["types"] = types;
}

void kappa_suite(const VerifyOptions& opt, SuiteResult& res) {
  Checker check(res);
  struct Case {
    int g;
    std::int64_t r;
    std::int64_t d;
  };
  const std::vector<Case> cases{{2, 2, 1}, {3, 2, 1}, {2, 1, 7}, {2, 2, 3}, {2, 2, 5}, {2, 2, 7},
                                {2, 3, 1}, {2, 3, 2}, {2, 3, 4}, {2, 3, 5}};
  std::int64_t checked = 0;
  std::int64_t mutations = 0;
  for (const auto& c : cases) {
    const GenusContext ctx(c.g);
    const std::int64_t l = 2 * c.g - 2;
    const auto kc = kappa_census(ctx, c.r, c.d);
    const auto lc = census(ctx, c.r, c.d);
    check.expect(static_cast<std::int64_t>(kc.entries.size()) == lc.total, "kappa census size differs from census");
    std::set<ChainType> images;
    for (const auto& entry : kc.entries) {
      const auto& jt = entry.type;
      ChainType chain = entry.result.chain;
      if (opt.inject_fault && checked == 0) chain.degrees.front() += 1;
      const std::vector<std::int64_t> r(jt.ranks().begin(), jt.ranks().end());
      const std::vector<std::int64_t> d(jt.degrees().begin(), jt.degrees().end());
      const std::string label = type_label(c.g, r, d);
      const auto flag = oracle::check_flag(jt, entry.result.flag.sizes());
      check.expect(flag.n == chain.ranks && flag.p == chain.degrees, "kappa chain differs from flag strips for " + label);
      check.expect(flag.conditions_hold, "kappa output violates " + flag.first_failure.value_or("?") + " for " + label);
      std::int64_t n = 0;
      std::int64_t p = 0;
      for (std::size_t k = 0; k < chain.ranks.size(); ++k) {
        n += chain.ranks[k];
        p += chain.degrees[k] + static_cast<std::int64_t>(k) * l * chain.ranks[k];
      }
      check.expect(n == c.r && p == c.d, "kappa does not conserve the class for " + label);
      check.expect(higgs_slope(ctx, chain) == Slope::finite(make_rational(c.d, c.r)), "Higgs slope is not d/r for " + label);
      check.expect(images.insert(chain).second, "kappa is not injective at " + label);
      mutations += entry.result.mutations;
      ++checked;
    }
  }
  const auto a = kappa(JordanType(GenusContext(2), {0, 1}, {1, 1})).chain;
  check.expect(a == ChainType{{1, 1}, {0, -1}}, "anchor g=2 r=(0,1) d=(1,1)");
  const auto b = kappa(JordanType(GenusContext(2), {1, 1}, {-1, 2})).chain;
  check.expect(b == ChainType{{1, 2}, {0, -3}}, "anchor g=2 r=(1,1) d=(-1,2)");
  res.details["types"] = checked;
  res.details["mutations"] = mutations;
}

void oracle_suite(const VerifyOptions& opt, SuiteResult& res) {
  Checker check(res);
  res.details["counts"] = Json::array();
  for (auto [g, r, q] : std::vector<std::tuple<int, int, int>>{{1, 2, 2}, {2, 2, 2}, {2, 2, 3}}) {
    Integer brute = count_abs_indec(g, r, q);
    if (opt.inject_fault && g == 1) brute += 1;
    const Integer hua = kac_polynomial(g, r).evaluate(q);
    check.expect(brute == hua, "oracle count differs from Hua at g=" + std::to_string(g) + " r=" + std::to_string(r) +
                                   " q=" + std::to_string(q));
    Json entry;
    entry["g"] = g;
    entry["r"] = r;
    entry["q"] = q;
    entry["count"] = integer_json(brute);
    res.details["counts"].push_back(std::move(entry));
  }
  for (auto [g, r] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 1}, {3, 1}}) {
    check.expect(kac_polynomial_interpolated(g, r) == kac_polynomial(g, r),
                 "interpolated polynomial differs from Hua at g=" + std::to_string(g) + " r=" + std::to_string(r));
  }
}

void translation_suite(const VerifyOptions& opt, SuiteResult& res) {
  Checker check(res);
  std::int64_t systems = 0;
  std::int64_t bijections = 0;
  bool injected = false;
  for (int g : {2, 3}) {
    const GenusContext ctx(g);
    for (int r = 1; r <= 5; ++r) {
      for (const auto& ranks : partitions_of(r)) {
        const auto base = normalized_system(build_system(ctx, ranks, 0));
        const auto base_points = enumerate_lattice_points(build_system(ctx, ranks, 0));
        for (std::int64_t d = -3; d <= 7; ++d) {
          auto other = normalized_system(build_system(ctx, ranks, d));
          if (opt.inject_fault && !injected && !other.empty()) {
            other.front().constant += 1;
            injected = true;
          }
          ++systems;
          const std::string label = "g=" + std::to_string(g) + " r=(" + join(ranks) + ") d=" + std::to_string(d);
          check.expect(other == base, "normalized system differs for " + label);
          check.expect(translation_check(ctx, ranks, 0, d), "translation_check fails for " + label);
          if (const auto tau = integral_translation(ranks, 0, d)) {
            ++bijections;
            std::vector<std::vector<std::int64_t>> moved;
            for (auto pt : base_points) {
              for (std::size_t k = 0; k < pt.size(); ++k) pt[k] += (*tau)[k];
              moved.push_back(std::move(pt));
            }
            std::sort(moved.begin(), moved.end());
            auto target = enumerate_lattice_points(build_system(ctx, ranks, d));
            std::sort(target.begin(), target.end());
            check.expect(moved == target, "translation is not a bijection of lattice points for " + label);
          }
        }
      }
    }
  }
  res.details["systems"] = systems;
  res.details["bijections"] = bijections;
}

void kac_suite(const VerifyOptions& opt, SuiteResult& res) {
  Checker check(res);
  for (int g = 1; g <= 5; ++g) {
    std::vector<Integer> expected(static_cast<std::size_t>(g + 1), 0);
    expected.back() = 1;
    auto coeffs = kac_polynomial(g, 1).coefficients;
    if (opt.inject_fault && g == 1) coeffs.push_back(1);
    check.expect(coeffs == expected, "A_{" + std::to_string(g) + ",1} is not q^" + std::to_string(g));
  }
  for (int g = 1; g <= 3; ++g) {
    for (int r = 1; r <= 3; ++r) {
      const auto poly = kac_polynomial(g, r);
      const std::string label = "A_{" + std::to_string(g) + "," + std::to_string(r) + "}";
      check.expect(poly.degree() == 1 + (g - 1) * r * r, label + " has the wrong degree");
      check.expect(std::all_of(poly.coefficients.begin(), poly.coefficients.end(), [](const Integer& c) { return c >= 0; }),
                   label + " has a negative coefficient");
      check.expect(poly.coefficients.back() == 1, label + " is not monic");
      res.details["polynomials"][label] = poly.str();
    }
  }
}

void crosscheck_suite(const VerifyOptions& opt, SuiteResult& res) {
  Checker check(res);
  for (auto [g, r, d] : std::vector<std::tuple<int, std::int64_t, std::int64_t>>{{2, 2, 1}, {3, 2, 1}, {2, 3, 1}}) {
    auto report = crosscheck(GenusContext(g), r, d);
    if (opt.inject_fault && g == 3) report.census.total += 1;
    const std::string label = "g=" + std::to_string(g) + " r=" + std::to_string(r) + " d=" + std::to_string(d);
    check.expect(Integer(report.census.total) == report.kac_at_one, "census total differs from A(1) at " + label);
    res.details[label] = report.census.total;
  }
  struct Family {
    std::int64_t r;
    std::vector<std::int64_t> degrees;
  };
  for (const auto& fam : {Family{2, {1, 3, 5, 7}}, Family{3, {1, 2, 4, 5}}}) {
    std::set<std::int64_t> totals;
    for (auto d : fam.degrees) totals.insert(census(GenusContext(2), fam.r, d).total);
    check.expect(totals.size() == 1, "census total depends on d for g=2 r=" + std::to_string(fam.r));
  }
  for (std::int64_t d = -3; d <= 7; ++d) {
    check.expect(census(GenusContext(2), 1, d).total == 1, "rank one census is not 1 at d=" + std::to_string(d));
  }
}

void cache_suite(const VerifyOptions& opt, SuiteResult& res) {
  Checker check(res);
  const auto dir = opt.scratch_dir.empty() ? std::filesystem::temp_directory_path() : opt.scratch_dir;
  const auto path = dir / ("nilcone-verify-" + std::to_string(::getpid()) + ".jsonl");
  std::filesystem::remove(path);
  ResultCache cache(path);
  const CacheKey key{2, 3, 1, "census", kCacheSchemaVersion};
  const Json fresh = census_payload(2, 3, 1, false);
  check.expect(!cache.lookup(key).has_value(), "empty cache reports a hit");
  check.expect(cache.append(key, fresh), "cache append failed");
  CacheKey stale = key;
  stale.version = kCacheSchemaVersion + 1;
  Json wrong = fresh;
  wrong["total"] = -1;
  cache.append(stale, wrong);
  auto hit = cache.lookup(key);
  if (opt.inject_fault && hit) (*hit)["total"] = -1;
  check.expect(hit.has_value() && *hit == census_payload(2, 3, 1, false), "cache hit differs from recomputation");
  check.expect(hit.has_value() && hit->dump() == fresh.dump(), "cache hit is not byte-identical");
  std::filesystem::remove(path);
}

}  // namespace

Json census_payload(int g, std::int64_t r, std::int64_t d, bool with_points) {
  return census_json(census(GenusContext(g), r, d, with_points), with_points);
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"regions",     "dimension", "dual", "kappa",      "oracle",
                                              "translation", "kac",       "crosscheck", "cache"};
  return names;
}

SuiteResult run_suite(std::string_view name, const VerifyOptions& options) {
  using Runner = void (*)(const VerifyOptions&, SuiteResult&);
  static const std::map<std::string, Runner, std::less<>> runners{
      {"regions", regions_suite},         {"dimension", dimension_suite}, {"dual", dual_suite},
      {"kappa", kappa_suite},             {"oracle", oracle_suite},       {"translation", translation_suite},
      {"kac", kac_suite},                 {"crosscheck", crosscheck_suite}, {"cache", cache_suite}};
  const auto it = runners.find(name);
  if (it == runners.end()) throw Error(ErrorCode::ParseError, "unknown suite \"" + std::string(name) + "\"");
  SuiteResult result;
  result.suite = std::string(name);
  try {
    it->second(options, result);
  } catch (const Error& e) {
    result.pass = false;
    if (result.first_failure.empty()) result.first_failure = result.suite + ": unexpected error: " + e.what();
  }
  return result;
}

}  // namespace nilcone::tools
