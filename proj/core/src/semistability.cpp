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

#include "nilcone/semistability.hpp"

namespace nilcone {

namespace {

ClassH require_census_input(const JordanType& jt) {
  jt.context().require_higher_genus();
  const ClassH total = total_class(jt);
  if (total.rank <= 0) throw Error(ErrorCode::TorsionTotal, "total rank is zero");
  return total;
}

std::int64_t rank_dot(const JordanType& jt, const CanonicalRegion& region) {
  std::int64_t sum = 0;
  for (int k = 1; k <= jt.length(); ++k) sum += region.height(k) * jt.rank(k);
  return sum;
}

std::int64_t degree_dot(const JordanType& jt, const CanonicalRegion& region) {
  std::int64_t sum = 0;
  for (int k = 1; k <= jt.length(); ++k) sum += region.height(k) * jt.degree(k);
  return sum;
}

}  // namespace

Rational lower_bound_offset(const JordanType& jt, const CanonicalRegion& region) {
  std::int64_t twice = 0;
  for (int k = 1; k <= jt.length(); ++k) {
    const std::int64_t h = region.height(k);
    twice += h * (h - 1) * jt.rank(k);
  }
  return make_rational(jt.context().canonical_degree() * twice, 2);
}

Rational upper_bound_offset(const JordanType& jt, const CanonicalRegion& region) {
  std::int64_t twice = 0;
  for (int k = 1; k <= jt.length(); ++k) {
    const std::int64_t h = region.height(k);
    twice += h * ((k - h) + k - 1) * jt.rank(k);
  }
  return make_rational(jt.context().canonical_degree() * twice, 2);
}

SemistabilityVerdict is_semistable_regions(const JordanType& jt) {
  const ClassH total = require_census_input(jt);
  const Slope mu = slope(total);
  for (const CanonicalRegion& region : enumerate_canonical_regions(jt.length())) {
    if (region.is_empty() || region.is_full()) continue;
    const ClassH c = region_class(jt, region);
    if (c.is_zero()) continue;
    Slope s = slope(c);
    if (s > mu) return {false, SemistabilityWitness{region, ViolatedSide::Upper, std::move(s), mu}};
  }
  return {};
}

SemistabilityVerdict is_semistable_inequalities(const JordanType& jt) {
  const ClassH total = require_census_input(jt);
  const Slope mu = slope(total);
  const Rational d(total.degree);
  for (const CanonicalRegion& region : enumerate_canonical_regions(jt.length())) {
    if (region.first_nonzero_column() < 2) continue;  // keep R_1 = 0, R nonempty
    const Rational base = make_rational(rank_dot(jt, region), total.rank) * d;
    const Rational central(degree_dot(jt, region));
    if (central > base + upper_bound_offset(jt, region)) {
      const ClassH c = region_class(jt, region);
      return {false, SemistabilityWitness{region, ViolatedSide::Upper, slope(c), mu}};
    }
    if (central < base + lower_bound_offset(jt, region)) {
      const ClassH c = region_class(jt, bar(region));
      return {false, SemistabilityWitness{region, ViolatedSide::Lower, slope(c), mu}};
    }
  }
  return {};
}

}  // namespace nilcone
