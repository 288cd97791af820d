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

#ifndef NILCONE_PARTITIONS_HPP
#define NILCONE_PARTITIONS_HPP

#include <cstdint>
#include <span>
#include <vector>

namespace nilcone {

// A partition as a weakly decreasing list of positive parts.
using Parts = std::vector<int>;

// All partitions of n, parts weakly decreasing, in reverse lexicographic order
// ((n) first, (1^n) last). partitions(0) = { {} }.
std::vector<Parts> partitions(int n);

Parts conjugate(std::span<const int> parts);

// Exponential form (r_1..r_s), r_k = multiplicity of the part k, s = largest part.
std::vector<std::int64_t> to_multiplicities(std::span<const int> parts);
Parts from_multiplicities(std::span<const std::int64_t> mult);

// Exponential forms of all partitions of n, sorted lexicographically.
std::vector<std::vector<std::int64_t>> multiplicity_partitions(int n);

}  // namespace nilcone

#endif  // NILCONE_PARTITIONS_HPP
