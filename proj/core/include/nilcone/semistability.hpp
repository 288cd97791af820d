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

#ifndef NILCONE_SEMISTABILITY_HPP
#define NILCONE_SEMISTABILITY_HPP

#include <optional>

#include "nilcone/tableau.hpp"

namespace nilcone {

enum class ViolatedSide { Upper, Lower };

struct SemistabilityWitness {
  CanonicalRegion region;
  ViolatedSide side;
  // Slope of the offending region: `region` itself for Upper, bar(region) for Lower.
  Slope region_slope;
  Slope total_slope;
};

struct SemistabilityVerdict {
  bool semistable = true;
  std::optional<SemistabilityWitness> witness;  // set iff !semistable
};

// mu(R) <= d/r for every canonical region other than the empty one and T_s.
// Torsion regions count as slope +inf; zero-class regions impose nothing.
// The witness is the lexicographically first violating region.
// Throws GenusTooSmall for g < 2 and TorsionTotal when the total rank is 0.
SemistabilityVerdict is_semistable_regions(const JordanType& jt);

// Two-sided form: for every R with R_1 = 0 and R nonempty,
//   p_R d + l sum R_k(R_k-1)/2 r_k <= sum R_k d_k <= p_R d + l sum R_k(bar R_k + k - 1)/2 r_k
// with p_R = (sum R_k r_k)/r.
SemistabilityVerdict is_semistable_inequalities(const JordanType& jt);

// Bounds b-_R and b+_R (without the p_R d term).
Rational lower_bound_offset(const JordanType& jt, const CanonicalRegion& region);
Rational upper_bound_offset(const JordanType& jt, const CanonicalRegion& region);

}  // namespace nilcone

#endif  // NILCONE_SEMISTABILITY_HPP
