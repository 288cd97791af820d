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

#include "nilcone_tools/report.hpp"

#include <limits>

#include "nilcone/jordan_json.hpp"

namespace nilcone::tools {

std::string join(const std::vector<std::int64_t>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(values[i]);
  }
  return out;
}

Json integer_json(const Integer& value) {
  if (value >= std::numeric_limits<std::int64_t>::min() && value <= std::numeric_limits<std::int64_t>::max()) {
    return value.convert_to<std::int64_t>();
  }
  return value.str();
}

Json census_json(const LatticeCensus& census, bool with_points) {
  Json j;
  j["g"] = census.genus;
  j["r"] = census.rank;
  j["d"] = census.degree;
  j["partitions"] = Json::array();
  for (const auto& pc : census.partitions) {
    Json entry;
    entry["r"] = pc.ranks;
    entry["count"] = pc.count;
    if (with_points) {
      entry["points"] = Json::array();
      for (const auto& degrees : pc.points) {
        entry["points"].push_back(Json::parse(to_json(JordanType(GenusContext(census.genus), pc.ranks, degrees))));
      }
    }
    j["partitions"].push_back(std::move(entry));
  }
  j["total"] = census.total;
  return j;
}

std::string census_csv(const Json& census) {
  std::string out = "partition,count\n";
  for (const auto& entry : census["partitions"]) {
    out += "\"" + join(entry["r"].get<std::vector<std::int64_t>>()) + "\"," + std::to_string(entry["count"].get<std::int64_t>()) + "\n";
  }
  out += "total," + std::to_string(census["total"].get<std::int64_t>()) + "\n";
  return out;
}

Json verdict_json(const SemistabilityVerdict& verdict) {
  Json j;
  j["semistable"] = verdict.semistable;
  if (verdict.witness) {
    const auto& w = *verdict.witness;
    Json wj;
    wj["region"] = std::vector<int>(w.region.heights().begin(), w.region.heights().end());
    wj["side"] = w.side == ViolatedSide::Upper ? "upper" : "lower";
    wj["region_slope"] = w.region_slope.str();
    wj["total_slope"] = w.total_slope.str();
    j["witness"] = std::move(wj);
  }
  return j;
}

Json kappa_json(const KappaResult& result) {
  Json j;
  j["n"] = result.chain.ranks;
  j["p"] = result.chain.degrees;
  j["flag"] = std::vector<int>(result.flag.sizes().begin(), result.flag.sizes().end());
  Json conditions;
  conditions["all_hold"] = result.report.all_hold();
  conditions["mutations"] = result.mutations;
  conditions["c0_swaps"] = result.c0_swaps;
  conditions["checked"] = Json::array();
  for (const auto& c : result.report.conditions) {
    if (!c.guard) continue;
    Json cj;
    cj["kind"] = to_string(c.kind);
    cj["k"] = c.k;
    if (c.kind != ConditionKind::Ck) cj["j"] = c.j;
    cj["holds"] = c.holds;
    if (c.slope) cj["slope"] = c.slope->str();
    conditions["checked"].push_back(std::move(cj));
  }
  j["conditions"] = std::move(conditions);
  return j;
}

Json kac_json(const KacPolynomial& poly) {
  Json j;
  j["g"] = poly.g;
  j["r"] = poly.r;
  j["degree"] = poly.degree();
  j["coefficients"] = Json::array();
  for (const auto& c : poly.coefficients) j["coefficients"].push_back(integer_json(c));
  j["polynomial"] = poly.str();
  j["at_one"] = integer_json(poly.at_one());
  return j;
}

Json bounds_json(const InequalitySystem& sys, const std::vector<Interval>& bounds) {
  Json j;
  j["g"] = sys.ctx.genus();
  j["r"] = sys.ranks;
  j["d"] = sys.total_degree;
  j["bounds"] = Json::array();
  for (std::size_t i = 0; i < bounds.size(); ++i) {
    Json b;
    b["variable"] = "d" + std::to_string(i + 2);
    b["lower"] = to_string(bounds[i].lower);
    b["upper"] = to_string(bounds[i].upper);
    j["bounds"].push_back(std::move(b));
  }
  j["inequalities"] = Json::array();
  for (const auto& ineq : sys.inequalities) j["inequalities"].push_back(to_string(ineq));
  return j;
}

}  // namespace nilcone::tools
