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

#ifndef NILCONE_TOOLS_REPORT_HPP
#define NILCONE_TOOLS_REPORT_HPP

#include <string>

#include "nilcone/chains.hpp"
#include "nilcone/kac.hpp"
#include "nilcone/polytope.hpp"
#include "nilcone/semistability.hpp"
#include "nilcone_tools/cache.hpp"

namespace nilcone::tools {

// Integers that fit in 64 bits become JSON numbers, larger ones strings.
Json integer_json(const Integer& value);

Json census_json(const LatticeCensus& census, bool with_points);
std::string census_csv(const Json& census);

Json verdict_json(const SemistabilityVerdict& verdict);
Json kappa_json(const KappaResult& result);
Json kac_json(const KacPolynomial& poly);

Json bounds_json(const InequalitySystem& sys, const std::vector<Interval>& bounds);

// "0,1" for (r_1, r_2) = (0, 1).
std::string join(const std::vector<std::int64_t>& values);

}  // namespace nilcone::tools

#endif  // NILCONE_TOOLS_REPORT_HPP
