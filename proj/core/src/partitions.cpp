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

#include "nilcone/partitions.hpp"

#include <algorithm>
#include <functional>

namespace nilcone {

std::vector<Parts> partitions(int n) {
  std::vector<Parts> out;
  Parts current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  if (n >= 0) rec(n, n);
  return out;
}

Parts conjugate(std::span<const int> parts) {
  Parts conj;
  if (parts.empty()) return conj;
  const int largest = *std::max_element(parts.begin(), parts.end());
  for (int i = 0; i < largest; ++i) {
    conj.push_back(static_cast<int>(std::count_if(parts.begin(), parts.end(), [i](int p) { return p > i; })));
  }
  return conj;
}

std::vector<std::int64_t> to_multiplicities(std::span<const int> parts) {
  if (parts.empty()) return {};
  const int largest = *std::max_element(parts.begin(), parts.end());
  std::vector<std::int64_t> mult(static_cast<std::size_t>(largest), 0);
  for (int p : parts) ++mult[static_cast<std::size_t>(p - 1)];
  return mult;
}

Parts from_multiplicities(std::span<const std::int64_t> mult) {
  Parts parts;
  for (std::size_t k = mult.size(); k-- > 0;) {
    for (std::int64_t i = 0; i < mult[k]; ++i) parts.push_back(static_cast<int>(k + 1));
  }
  return parts;
}

std::vector<std::vector<std::int64_t>> multiplicity_partitions(int n) {
  std::vector<std::vector<std::int64_t>> out;
  for (const auto& p : partitions(n)) out.push_back(to_multiplicities(p));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace nilcone
