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

#include "nilcone_tools/oracles.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace nilcone::oracle {

namespace {

bool saturated(const std::set<std::pair<int, int>>& set, int s) {
  for (const auto& [t, h] : set) {
    if (t + 1 <= s && !set.contains({t + 1, h})) return false;
    if (h > 1 && !set.contains({t, h - 1})) return false;
    if (h > 1 && t > 1 && h - 1 <= t - 1 && !set.contains({t - 1, h - 1})) return false;
  }
  return true;
}

Rational ratio(const ClassH& c) { return make_rational(c.degree, c.rank); }

}  // namespace

std::vector<Boxes> saturated_subsets(int s) {
  Boxes all;
  for (int t = 1; t <= s; ++t) {
    for (int h = 1; h <= t; ++h) all.emplace_back(t, h);
  }
  std::vector<Boxes> out;
  const std::uint64_t subsets = std::uint64_t{1} << all.size();
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    std::set<std::pair<int, int>> set;
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (mask >> i & 1U) set.insert(all[i]);
    }
    if (saturated(set, s)) out.emplace_back(set.begin(), set.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

Boxes boxes_of(const CanonicalRegion& region) {
  Boxes out;
  for (int t = 1; t <= region.length(); ++t) {
    for (int h = 1; h <= region.height(t); ++h) out.emplace_back(t, h);
  }
  std::sort(out.begin(), out.end());
  return out;
}

ClassH class_of(const GenusContext& ctx, std::span<const std::int64_t> ranks, std::span<const std::int64_t> degrees,
                const Boxes& boxes) {
  const std::int64_t l = 2 * ctx.genus() - 2;
  ClassH sum{0, 0};
  for (const auto& [t, h] : boxes) {
    const std::int64_t r = ranks[static_cast<std::size_t>(t - 1)];
    sum.rank += r;
    sum.degree += degrees[static_cast<std::size_t>(t - 1)] - (t - h) * l * r;
  }
  return sum;
}

bool semistable_by_boxes(const JordanType& jt, const std::vector<Boxes>& saturated) {
  const std::size_t full = static_cast<std::size_t>(jt.length() * (jt.length() + 1) / 2);
  const ClassH total = class_of(jt.context(), jt.ranks(), jt.degrees(), boxes_of(CanonicalRegion::full(jt.length())));
  const Rational mu = ratio(total);
  for (const Boxes& b : saturated) {
    if (b.empty() || b.size() == full) continue;
    const ClassH c = class_of(jt.context(), jt.ranks(), jt.degrees(), b);
    if (c.rank == 0) {
      if (c.degree > 0) return false;
      continue;
    }
    if (ratio(c) > mu) return false;
  }
  return true;
}

std::vector<std::vector<std::int64_t>> points_by_scan(const GenusContext& ctx, std::span<const std::int64_t> ranks,
                                                      std::int64_t degree,
                                                      const std::vector<std::pair<std::int64_t, std::int64_t>>& box) {
  const int s = static_cast<int>(ranks.size());
  const std::int64_t l = 2 * ctx.genus() - 2;
  const auto saturated = saturated_subsets(s);
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> tail(box.size());
  for (std::size_t i = 0; i < box.size(); ++i) tail[i] = box[i].first;
  if (std::any_of(box.begin(), box.end(), [](const auto& b) { return b.first > b.second; })) return out;
  for (;;) {
    // d_1 from the total degree.
    std::int64_t d1 = degree;
    for (int k = 2; k <= s; ++k) {
      const std::int64_t rk = ranks[static_cast<std::size_t>(k - 1)];
      d1 -= k * tail[static_cast<std::size_t>(k - 2)] - l * k * (k - 1) / 2 * rk;
    }
    std::vector<std::int64_t> degrees{d1};
    degrees.insert(degrees.end(), tail.begin(), tail.end());
    bool valid = true;
    for (int k = 1; k <= s; ++k) {
      if (ranks[static_cast<std::size_t>(k - 1)] == 0 && degrees[static_cast<std::size_t>(k - 1)] < 0) valid = false;
    }
    if (valid && semistable_by_boxes(JordanType(ctx, {ranks.begin(), ranks.end()}, degrees), saturated)) {
      out.push_back(degrees);
    }
    std::size_t pos = tail.size();
    while (pos > 0) {
      --pos;
      if (tail[pos] < box[pos].second) {
        ++tail[pos];
        for (std::size_t q = pos + 1; q < tail.size(); ++q) tail[q] = box[q].first;
        break;
      }
      if (pos == 0) return out;
    }
    if (tail.empty()) return out;
  }
}

namespace {

// Column heights of the prefix region made of strips 1..k.
std::vector<int> prefix_heights(std::span<const int> sizes, int k) {
  const int s = static_cast<int>(sizes.size());
  std::vector<int> heights(static_cast<std::size_t>(s), 0);
  for (int i = 0; i < k; ++i) {
    for (int t = s + 1 - sizes[static_cast<std::size_t>(i)]; t <= s; ++t) ++heights[static_cast<std::size_t>(t - 1)];
  }
  return heights;
}

}  // namespace

Boxes strip_boxes(std::span<const int> sizes, int k) {
  const auto before = prefix_heights(sizes, k - 1);
  const auto after = prefix_heights(sizes, k);
  Boxes out;
  for (std::size_t i = 0; i < after.size(); ++i) {
    if (after[i] > before[i]) out.emplace_back(static_cast<int>(i) + 1, after[i]);
  }
  return out;
}

FlagCheck check_flag(const JordanType& jt, std::span<const int> sizes) {
  const auto& ctx = jt.context();
  const int s = jt.length();
  const std::int64_t l = 2 * ctx.genus() - 2;
  const ClassH total = class_of(ctx, jt.ranks(), jt.degrees(), boxes_of(CanonicalRegion::full(s)));
  const Rational mu = ratio(total);

  std::vector<Boxes> strips;
  FlagCheck out;
  for (int k = 1; k <= s; ++k) {
    strips.push_back(strip_boxes(sizes, k));
    const ClassH c = class_of(ctx, jt.ranks(), jt.degrees(), strips.back());
    out.n.push_back(c.rank);
    out.p.push_back(c.degree - (k - 1) * l * c.rank);
  }
  auto fail = [&](std::string what) {
    if (!out.first_failure) out.first_failure = std::move(what);
  };
  // Slope comparison; a rank-zero region counts as +inf when its degree is
  // positive and as -inf otherwise.
  auto exceeds = [&](const Boxes& b) {
    const ClassH c = class_of(ctx, jt.ranks(), jt.degrees(), b);
    if (c.rank == 0) return c.degree > 0;
    return ratio(c) > mu;
  };
  auto restricted = [&](int k, int j, int cutoff) {
    Boxes b;
    for (int i = k; i <= j; ++i) {
      for (const auto& box : strips[static_cast<std::size_t>(i - 1)]) {
        if (box.first <= cutoff) b.push_back(box);
      }
    }
    return b;
  };

  for (int i = 2; i <= s; ++i) {
    const auto a = static_cast<std::size_t>(i - 2);
    if (out.n[a] == out.n[a + 1] && out.p[a + 1] > out.p[a]) fail("C0 at " + std::to_string(i));
  }
  for (int k = 1; k < s; ++k) {
    Boxes prefix;
    for (int i = 1; i <= k; ++i) prefix.insert(prefix.end(), strips[static_cast<std::size_t>(i - 1)].begin(), strips[static_cast<std::size_t>(i - 1)].end());
    if (exceeds(prefix)) fail("C_" + std::to_string(k));
  }
  for (int k = 1; k <= s; ++k) {
    for (int j = k + 1; j <= s; ++j) {
      const auto nk = out.n.begin() + (k - 1);
      const auto nj = out.n.begin() + (j - 1);
      if (*nj < *std::min_element(nk, nj)) {
        const Boxes b = restricted(k, j, s - sizes[static_cast<std::size_t>(j - 1)]);
        if (b.empty() || !exceeds(b)) fail("C_" + std::to_string(k) + "^" + std::to_string(j));
      }
      if (*nk < *std::min_element(nk + 1, nj + 1)) {
        const Boxes b = restricted(k, j, s - sizes[static_cast<std::size_t>(k - 1)]);
        if (!b.empty() && exceeds(b)) fail("Ccheck_" + std::to_string(k) + "^" + std::to_string(j));
      }
    }
  }
  out.conditions_hold = !out.first_failure.has_value();
  return out;
}

}  // namespace nilcone::oracle
