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

#ifndef NILCONE_CHAINS_HPP
#define NILCONE_CHAINS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nilcone/tableau.hpp"

namespace nilcone {

// A 1-flag of canonical regions, encoded by the strip sizes
// (sigma(1), ..., sigma(s)) = (|S_1|, ..., |S_s|), a permutation of 1..s.
// Strip k covers the sigma(k) leftmost columns t >= s + 1 - sigma(k), one box
// per column, stacked on top of the earlier strips.
class OneFlag {
 public:
  // Throws IndexOutOfRange unless `sizes` is a permutation of 1..s.
  explicit OneFlag(std::vector<int> sizes);

  static OneFlag identity(int s);

  int length() const noexcept { return static_cast<int>(sizes_.size()); }
  std::span<const int> sizes() const noexcept { return sizes_; }
  int size(int k) const { return sizes_.at(static_cast<std::size_t>(k - 1)); }

  // Leftmost column index reached by strip k is s; its rightmost is first_column(k).
  int first_column(int k) const { return length() + 1 - size(k); }
  bool covers(int k, int column) const { return column >= first_column(k); }
  // h(k, t) = #{i <= k : sigma(i) >= s + 1 - t}: height of strip k's box in
  // column t, equivalently the column height of the prefix region R_k.
  int height(int k, int column) const;
  CanonicalRegion prefix_region(int k) const;

  friend bool operator==(const OneFlag&, const OneFlag&) = default;

 private:
  std::vector<int> sizes_;
};

struct ChainType {
  std::vector<std::int64_t> ranks;    // n_1..n_s
  std::vector<std::int64_t> degrees;  // p_1..p_s
  friend bool operator==(const ChainType&, const ChainType&) = default;
  friend auto operator<=>(const ChainType&, const ChainType&) = default;
};

// (n_k, p_k) of the k-th subquotient E_k: strip k valued at its stacked
// heights, twisted by -(k-1) l.
ClassH strip_class(const JordanType& jt, const OneFlag& flag, int k);
ChainType chain_type(const JordanType& jt, const OneFlag& flag);

// Boxes of strips k..j lying right of the |S_j| leftmost columns (R_k^j),
// or right of the |S_k| leftmost columns (the checked variant).
BoxSet strip_complement(const OneFlag& flag, int k, int j, int cutoff);
ClassH strip_set_class(const JordanType& jt, const OneFlag& flag, int k, int j, int cutoff);

// Slopes of R_k^j and of its checked counterpart. Throw GuardNotMet when the
// rank guard of the corresponding condition fails, EmptyRegion when the box
// set is empty and IndexOutOfRange unless 1 <= k < j <= s.
Slope region_slope_rkj(const JordanType& jt, const OneFlag& flag, int k, int j);
Slope region_slope_rcheck(const JordanType& jt, const OneFlag& flag, int k, int j);

enum class ConditionKind { C0, Ck, Ckj, CheckKj };

std::string to_string(ConditionKind kind);

struct ConditionStatus {
  ConditionKind kind;
  int k = 0;
  int j = 0;               // C0: the index i of (n_{i-1} = n_i => p_i <= p_{i-1}); Ck: unused
  bool guard = true;       // whether the implication's premise holds
  bool holds = true;       // conclusion (vacuously true when !guard)
  std::optional<Slope> slope;
};

struct ConditionReport {
  Slope total_slope = Slope::finite(Rational(0));
  std::vector<ConditionStatus> conditions;

  bool all_hold() const noexcept;
  std::optional<ConditionStatus> first_failure() const;
  // Statuses of every non-C0 condition, for before/after comparisons.
  std::vector<bool> status_vector(bool include_c0) const;
};

ConditionReport check_conditions(const JordanType& jt, const OneFlag& flag);

// Greedy flag: each step adds the shortest available left-justified strip
// whose leftover segment of the longest available strip has slope <= mu
// (empty or zero-class leftovers count as -inf). Throws NotSemistable.
OneFlag greedy_flag(const JordanType& jt);

// rho_k^j: moves strip k to position j, shifting strips k+1..j down by one.
OneFlag mutate(const OneFlag& flag, int k, int j);

struct KappaResult {
  ChainType chain;
  OneFlag flag;
  ConditionReport report;
  int mutations = 0;
  int c0_swaps = 0;
};

// The injection from semistable Jordan types to semistable chain types.
// All conditions and class conservation are verified before returning;
// failures raise internal errors. Throws NotSemistable for unstable input.
KappaResult kappa(const JordanType& jt);

// Sum_k (p_k + (k-1) l n_k) / Sum_k n_k. Throws ZeroRank.
Slope higgs_slope(const GenusContext& ctx, const ChainType& chain);

struct KappaEntry {
  JordanType type;
  KappaResult result;
};

struct KappaCensus {
  int genus = 0;
  std::int64_t rank = 0;
  std::int64_t degree = 0;
  std::vector<KappaEntry> entries;
};

// kappa over every semistable type of (g, r, d); throws InjectivityViolation
// if two types share a chain type.
KappaCensus kappa_census(const GenusContext& ctx, std::int64_t rank, std::int64_t degree);

}  // namespace nilcone

#endif  // NILCONE_CHAINS_HPP
