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

#include "nilcone/tableau.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

#include "nilcone/partitions.hpp"

namespace nilcone {

namespace {

std::string seq_str(std::span<const std::int64_t> v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out + ")";
}

void require_index(const JordanType& jt, int k) {
  if (k < 0 || k > jt.length()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "index " + std::to_string(k) + " outside [0," + std::to_string(jt.length()) + "]");
  }
}

}  // namespace

JordanType::JordanType(GenusContext ctx, std::vector<std::int64_t> ranks, std::vector<std::int64_t> degrees)
    : ctx_(ctx), ranks_(std::move(ranks)), degrees_(std::move(degrees)) {
  if (ranks_.empty()) throw Error(ErrorCode::InvalidJordanType, "Jordan type of length 0");
  if (ranks_.size() != degrees_.size()) {
    throw Error(ErrorCode::InvalidJordanType, "rank and degree sequences differ in length");
  }
  for (std::size_t k = 0; k < ranks_.size(); ++k) {
    if (!ClassH{ranks_[k], degrees_[k]}.in_monoid()) {
      throw Error(ErrorCode::InvalidJordanType, "alpha_" + std::to_string(k + 1) + " = (" +
                                                    std::to_string(ranks_[k]) + "," +
                                                    std::to_string(degrees_[k]) + ") is not a sheaf class");
    }
  }
  if (ranks_.back() == 0 && degrees_.back() == 0) {
    throw Error(ErrorCode::InvalidJordanType, "top class alpha_s is zero");
  }
}

std::ostream& operator<<(std::ostream& os, const JordanType& jt) {
  return os << "g=" << jt.context().genus() << " r=" << seq_str(jt.ranks()) << " d=" << seq_str(jt.degrees());
}

CanonicalRegion::CanonicalRegion(std::vector<int> heights) : heights_(std::move(heights)) {
  int prev = 0;
  for (std::size_t i = 0; i < heights_.size(); ++i) {
    const int h = heights_[i];
    if (h != prev && h != prev + 1) {
      throw Error(ErrorCode::IndexOutOfRange, "column heights are not those of a canonical region");
    }
    prev = h;
  }
}

CanonicalRegion CanonicalRegion::full(int s) {
  std::vector<int> h(static_cast<std::size_t>(s));
  std::iota(h.begin(), h.end(), 1);
  return CanonicalRegion(std::move(h));
}

int CanonicalRegion::box_count() const noexcept { return std::accumulate(heights_.begin(), heights_.end(), 0); }

bool CanonicalRegion::is_empty() const noexcept {
  return std::all_of(heights_.begin(), heights_.end(), [](int h) { return h == 0; });
}

bool CanonicalRegion::is_full() const noexcept {
  for (std::size_t i = 0; i < heights_.size(); ++i) {
    if (heights_[i] != static_cast<int>(i + 1)) return false;
  }
  return true;
}

int CanonicalRegion::first_nonzero_column() const noexcept {
  for (std::size_t i = 0; i < heights_.size(); ++i) {
    if (heights_[i] != 0) return static_cast<int>(i + 1);
  }
  return 0;
}

std::ostream& operator<<(std::ostream& os, const CanonicalRegion& r) {
  os << '(';
  for (int k = 1; k <= r.length(); ++k) os << (k > 1 ? "," : "") << r.height(k);
  return os << ')';
}

BoxSet::BoxSet(int s, std::vector<Box> boxes) : s_(s), boxes_(std::move(boxes)) {
  for (const Box& b : boxes_) {
    if (b.height < 1 || b.height > b.column || b.column > s_) {
      throw Error(ErrorCode::OutOfTableau,
                  "box (" + std::to_string(b.column) + "," + std::to_string(b.height) + ") outside T_" + std::to_string(s_));
    }
  }
  std::sort(boxes_.begin(), boxes_.end());
  if (std::adjacent_find(boxes_.begin(), boxes_.end()) != boxes_.end()) {
    throw Error(ErrorCode::InvariantViolation, "box set contains a repeated box");
  }
}

BoxSet BoxSet::of_region(const CanonicalRegion& region) {
  std::vector<Box> boxes;
  for (int t = 1; t <= region.length(); ++t) {
    for (int h = 1; h <= region.height(t); ++h) boxes.push_back({t, h});
  }
  return BoxSet(region.length(), std::move(boxes));
}

bool BoxSet::contains(Box b) const noexcept { return std::binary_search(boxes_.begin(), boxes_.end(), b); }

bool is_saturated(const BoxSet& set) {
  const int s = set.length();
  auto inside = [s](Box b) { return b.column >= 1 && b.column <= s && b.height >= 1 && b.height <= b.column; };
  for (const Box& b : set.boxes()) {
    // West is one column further from the right edge; south-east one column closer.
    for (Box n : {Box{b.column + 1, b.height}, Box{b.column, b.height - 1}, Box{b.column - 1, b.height - 1}}) {
      if (inside(n) && !set.contains(n)) return false;
    }
  }
  return true;
}

ClassH total_class(const JordanType& jt) {
  const std::int64_t l = jt.context().canonical_degree();
  ClassH total;
  for (int k = 1; k <= jt.length(); ++k) {
    total.rank += k * jt.rank(k);
    total.degree += k * jt.degree(k) - l * (static_cast<std::int64_t>(k) * (k - 1) / 2) * jt.rank(k);
  }
  return total;
}

ClassH box_class(const JordanType& jt, int column, int height) {
  if (column < 1 || column > jt.length() || height < 1 || height > column) {
    throw Error(ErrorCode::OutOfTableau, "box (" + std::to_string(column) + "," + std::to_string(height) +
                                             ") outside T_" + std::to_string(jt.length()));
  }
  return twist(jt.alpha(column), -static_cast<std::int64_t>(column - height) * jt.context().canonical_degree());
}

ClassH box_set_class(const JordanType& jt, const BoxSet& set) {
  if (set.length() != jt.length()) throw Error(ErrorCode::OutOfTableau, "box set built for another tableau");
  ClassH sum;
  for (const Box& b : set.boxes()) sum += box_class(jt, b.column, b.height);
  return sum;
}

std::vector<CanonicalRegion> enumerate_canonical_regions(int s) {
  std::vector<CanonicalRegion> out;
  if (s < 1) return out;
  std::vector<int> h(static_cast<std::size_t>(s));
  // Bit k-1 of `steps` says whether column k is one box taller than column k-1.
  const std::uint64_t count = std::uint64_t{1} << s;
  out.reserve(count);
  for (std::uint64_t steps = 0; steps < count; ++steps) {
    int prev = 0;
    for (int k = 0; k < s; ++k) {
      prev += static_cast<int>((steps >> (s - 1 - k)) & 1U);
      h[static_cast<std::size_t>(k)] = prev;
    }
    out.emplace_back(h);
  }
  std::sort(out.begin(), out.end());
  return out;
}

ClassH region_class(const JordanType& jt, const CanonicalRegion& region) {
  if (region.length() != jt.length()) throw Error(ErrorCode::OutOfTableau, "region built for another tableau");
  const std::int64_t l = jt.context().canonical_degree();
  ClassH c;
  for (int k = 1; k <= jt.length(); ++k) {
    const std::int64_t h = region.height(k);
    c.rank += h * jt.rank(k);
    c.degree += h * jt.degree(k) - l * (h * (2 * k - h - 1) / 2) * jt.rank(k);
  }
  return c;
}

Slope region_slope(const JordanType& jt, const CanonicalRegion& region) {
  if (region.is_empty()) throw Error(ErrorCode::EmptyRegion, "the empty region has no slope");
  return slope(region_class(jt, region));
}

CanonicalRegion bar(const CanonicalRegion& region) {
  std::vector<int> h(static_cast<std::size_t>(region.length()));
  for (int k = 1; k <= region.length(); ++k) h[static_cast<std::size_t>(k - 1)] = k - region.height(k);
  return CanonicalRegion(std::move(h));
}

ClassH kernel_class(const JordanType& jt, int k) {
  require_index(jt, k);
  ClassH c;
  for (int row = 1; row <= k; ++row) {
    for (int t = row; t <= jt.length(); ++t) c += box_class(jt, t, row);
  }
  return c;
}

ClassH image_class(const JordanType& jt, int k) {
  require_index(jt, k);
  ClassH c;
  for (int t = 1; t <= jt.length(); ++t) {
    for (int h = 1; h <= t - k; ++h) c += box_class(jt, t, h);
  }
  return c;
}

std::int64_t stratum_dimension(const JordanType& jt) {
  const GenusContext& ctx = jt.context();
  const std::int64_t l = ctx.canonical_degree();
  const int s = jt.length();
  // [F''_k] = sum_{i>k} alpha_i(-kl), [F'_k] = sum_{j>k} alpha_j((1-j)l).
  auto graded_image = [&](int k) {
    ClassH c;
    for (int i = k + 1; i <= s; ++i) c += twist(jt.alpha(i), -k * l);
    return c;
  };
  auto graded_kernel = [&](int k) {
    ClassH c;
    for (int j = k + 1; j <= s; ++j) c += twist(jt.alpha(j), (1 - j) * l);
    return c;
  };
  std::int64_t dim = 0;
  for (int k = 0; k <= s; ++k) dim -= euler_form(ctx, graded_image(k), graded_kernel(k + 1));
  for (int i = 1; i <= s; ++i) {
    for (int j = i + 1; j <= s; ++j) dim -= euler_form(ctx, jt.alpha(j), jt.alpha(i));
  }
  for (int k = 1; k <= s; ++k) dim -= euler_form(ctx, jt.alpha(k), jt.alpha(k));
  return dim;
}

namespace {

std::int64_t weighted_rank(std::span<const std::int64_t> ranks) {
  std::int64_t r = 0;
  for (std::size_t t = 0; t < ranks.size(); ++t) r += static_cast<std::int64_t>(t + 1) * ranks[t];
  return r;
}

void require_same_rank(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
  if (weighted_rank(a) != weighted_rank(b)) {
    throw Error(ErrorCode::RankMismatch, "Jordan types of total ranks " + std::to_string(weighted_rank(a)) +
                                             " and " + std::to_string(weighted_rank(b)));
  }
}

}  // namespace

bool stratum_leq(std::span<const std::int64_t> ranks_a, std::span<const std::int64_t> ranks_b) {
  require_same_rank(ranks_a, ranks_b);
  const std::size_t s = std::max(ranks_a.size(), ranks_b.size());
  auto kernel_rank = [](std::span<const std::int64_t> ranks, std::size_t k) {
    std::int64_t sum = 0;
    for (std::size_t t = 1; t <= ranks.size(); ++t) sum += static_cast<std::int64_t>(std::min(k, t)) * ranks[t - 1];
    return sum;
  };
  for (std::size_t k = 1; k <= s; ++k) {
    if (kernel_rank(ranks_b, k) > kernel_rank(ranks_a, k)) return false;
  }
  return true;
}

bool stratum_leq(const JordanType& a, const JordanType& b) { return stratum_leq(a.ranks(), b.ranks()); }

bool stratum_leq_by_dominance(std::span<const std::int64_t> ranks_a, std::span<const std::int64_t> ranks_b) {
  require_same_rank(ranks_a, ranks_b);
  const Parts conj_a = conjugate(from_multiplicities(ranks_a));
  const Parts conj_b = conjugate(from_multiplicities(ranks_b));
  std::int64_t sum_a = 0;
  std::int64_t sum_b = 0;
  for (std::size_t i = 0; i < std::max(conj_a.size(), conj_b.size()); ++i) {
    sum_a += i < conj_a.size() ? conj_a[i] : 0;
    sum_b += i < conj_b.size() ? conj_b[i] : 0;
    if (sum_b > sum_a) return false;
  }
  return true;
}

}  // namespace nilcone
