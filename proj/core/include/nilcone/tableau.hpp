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

#ifndef NILCONE_TABLEAU_HPP
#define NILCONE_TABLEAU_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "nilcone/sheaf_class.hpp"

namespace nilcone {

// Jordan type alpha_k = (r_k, d_k), k = 1..s, of a nilpotent Higgs sheaf.
//
// The triangular tableau T_s has s columns indexed from the right; column t
// holds t boxes at heights 1 (bottom) .. t (top), and the box (t, h) carries
// alpha_t(-(t - h) l). Sequences are stored ascending in k.
class JordanType {
 public:
  // Throws InvalidJordanType unless s >= 1, both sequences have length s,
  // every alpha_k lies in the monoid and alpha_s != (0,0).
  JordanType(GenusContext ctx, std::vector<std::int64_t> ranks, std::vector<std::int64_t> degrees);

  const GenusContext& context() const noexcept { return ctx_; }
  int length() const noexcept { return static_cast<int>(ranks_.size()); }
  std::span<const std::int64_t> ranks() const noexcept { return ranks_; }
  std::span<const std::int64_t> degrees() const noexcept { return degrees_; }
  std::int64_t rank(int k) const { return ranks_.at(static_cast<std::size_t>(k - 1)); }
  std::int64_t degree(int k) const { return degrees_.at(static_cast<std::size_t>(k - 1)); }
  ClassH alpha(int k) const { return ClassH{rank(k), degree(k)}; }

  friend bool operator==(const JordanType&, const JordanType&) = default;

 private:
  GenusContext ctx_;
  std::vector<std::int64_t> ranks_;
  std::vector<std::int64_t> degrees_;
};

std::ostream& operator<<(std::ostream& os, const JordanType& jt);

// Canonical (west/south/south-east saturated) region of T_s, stored as its
// bottom-justified column heights R_1..R_s. Valid height vectors satisfy
// R_1 in {0,1} and R_{k+1} in {R_k, R_k + 1}.
class CanonicalRegion {
 public:
  // Throws IndexOutOfRange if the heights are not canonical.
  explicit CanonicalRegion(std::vector<int> heights);

  static CanonicalRegion empty(int s) { return CanonicalRegion(std::vector<int>(static_cast<std::size_t>(s), 0)); }
  static CanonicalRegion full(int s);

  int length() const noexcept { return static_cast<int>(heights_.size()); }
  int height(int k) const { return heights_.at(static_cast<std::size_t>(k - 1)); }
  std::span<const int> heights() const noexcept { return heights_; }
  int box_count() const noexcept;
  bool is_empty() const noexcept;
  bool is_full() const noexcept;
  // p with R_1 = ... = R_{p-1} = 0 != R_p, or 0 for the empty region.
  int first_nonzero_column() const noexcept;

  friend bool operator==(const CanonicalRegion&, const CanonicalRegion&) = default;
  friend auto operator<=>(const CanonicalRegion& a, const CanonicalRegion& b) { return a.heights_ <=> b.heights_; }

 private:
  std::vector<int> heights_;
};

std::ostream& operator<<(std::ostream& os, const CanonicalRegion& r);

// A box (t, h) of T_s: column t from the right, height h from the bottom.
struct Box {
  int column;
  int height;
  friend auto operator<=>(const Box&, const Box&) = default;
};

// Arbitrary (possibly non-canonical) set of distinct boxes of T_s.
class BoxSet {
 public:
  // Throws OutOfTableau for boxes outside T_s and InvariantViolation for duplicates.
  BoxSet(int s, std::vector<Box> boxes);

  static BoxSet of_region(const CanonicalRegion& region);

  int length() const noexcept { return s_; }
  std::span<const Box> boxes() const noexcept { return boxes_; }
  bool empty() const noexcept { return boxes_.empty(); }
  bool contains(Box b) const noexcept;

 private:
  int s_;
  std::vector<Box> boxes_;  // sorted
};

// Literal saturation test: every box's west, south and south-east neighbours
// inside T_s also belong to the set.
bool is_saturated(const BoxSet& set);

// Sum over all boxes: r = sum k r_k, d = sum k d_k - l sum k(k-1)/2 r_k.
ClassH total_class(const JordanType& jt);

// alpha_t(-(t - h) l). Throws OutOfTableau unless 1 <= h <= t <= s.
ClassH box_class(const JordanType& jt, int column, int height);

ClassH box_set_class(const JordanType& jt, const BoxSet& set);

// All 2^s canonical regions, lexicographic in (R_1, ..., R_s).
std::vector<CanonicalRegion> enumerate_canonical_regions(int s);

// Closed form (sum R_k r_k, sum R_k d_k - l sum R_k (2k - R_k - 1)/2 r_k).
ClassH region_class(const JordanType& jt, const CanonicalRegion& region);

// Throws EmptyRegion for the empty region and ZeroClass for a zero region class.
Slope region_slope(const JordanType& jt, const CanonicalRegion& region);

// (R_k) -> (k - R_k).
CanonicalRegion bar(const CanonicalRegion& region);

// Class of ker theta^k: the bottom k rows. Throws IndexOutOfRange unless 0 <= k <= s.
ClassH kernel_class(const JordanType& jt, int k);
// Class of F_k = Im theta^k(-k Omega): boxes strictly below the k-th subdiagonal band.
ClassH image_class(const JordanType& jt, int k);

// Dimension of the Jordan stratum assembled from the relative dimensions of
// the two vector-bundle-stack towers; equals (g-1) r^2.
std::int64_t stratum_dimension(const JordanType& jt);

// Partial order on Jordan strata by kernel ranks: a <= b iff for every k,
// sum_t min(k,t) r_t(b) <= sum_t min(k,t) r_t(a). Throws RankMismatch.
bool stratum_leq(std::span<const std::int64_t> ranks_a, std::span<const std::int64_t> ranks_b);
bool stratum_leq(const JordanType& a, const JordanType& b);

// Same order through conjugate partitions: a <= b iff conj(b) is dominated by conj(a).
bool stratum_leq_by_dominance(std::span<const std::int64_t> ranks_a, std::span<const std::int64_t> ranks_b);

}  // namespace nilcone

#endif  // NILCONE_TABLEAU_HPP
