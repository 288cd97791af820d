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

#ifndef NILCONE_TOOLS_ORACLES_HPP
#define NILCONE_TOOLS_ORACLES_HPP

// Brute-force reference implementations. They recompute everything from the
// box filling of the tableau and share no code paths with the library
// algorithms they are compared against.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nilcone/chains.hpp"
#include "nilcone/sheaf_class.hpp"
#include "nilcone/tableau.hpp"

namespace nilcone::oracle {

// (column, height) pairs, sorted.
using Boxes = std::vector<std::pair<int, int>>;

// Every box subset of T_s closed under the west, south and south-east
// neighbours, by exhaustive scan over 2^(s(s+1)/2) subsets.
std::vector<Boxes> saturated_subsets(int s);

Boxes boxes_of(const CanonicalRegion& region);

// alpha_t(-(t-h) l) summed over the boxes.
ClassH class_of(const GenusContext& ctx, std::span<const std::int64_t> ranks, std::span<const std::int64_t> degrees,
                const Boxes& boxes);

// Semistability by scanning every saturated subset other than the empty and
// full ones.
bool semistable_by_boxes(const JordanType& jt, const std::vector<Boxes>& saturated);

// All semistable degree vectors (d_1..d_s) whose tail (d_2..d_s) lies in the
// given inclusive box, sorted by tail.
std::vector<std::vector<std::int64_t>> points_by_scan(const GenusContext& ctx, std::span<const std::int64_t> ranks,
                                                      std::int64_t degree,
                                                      const std::vector<std::pair<std::int64_t, std::int64_t>>& box);

// Strip k of the flag (1-based) as boxes, built from successive prefix regions.
Boxes strip_boxes(std::span<const int> sizes, int k);

// Chain type and every condition of a 1-flag, evaluated from boxes.
struct FlagCheck {
  std::vector<std::int64_t> n;
  std::vector<std::int64_t> p;
  bool conditions_hold = false;
  std::optional<std::string> first_failure;
};
FlagCheck check_flag(const JordanType& jt, std::span<const int> sizes);

}  // namespace nilcone::oracle

#endif  // NILCONE_TOOLS_ORACLES_HPP
