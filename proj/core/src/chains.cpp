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

#include "nilcone/chains.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "nilcone/polytope.hpp"
#include "nilcone/semistability.hpp"

namespace nilcone {

namespace {

void require_pair(const OneFlag& flag, int k, int j) {
  if (k < 1 || k >= j || j > flag.length()) {
    throw Error(ErrorCode::IndexOutOfRange, "need 1 <= k < j <= s, got k=" + std::to_string(k) +
                                                " j=" + std::to_string(j));
  }
}

std::int64_t min_rank(const ChainType& chain, int from, int to) {
  std::int64_t m = chain.ranks[static_cast<std::size_t>(from - 1)];
  for (int t = from; t <= to; ++t) m = std::min(m, chain.ranks[static_cast<std::size_t>(t - 1)]);
  return m;
}

bool guard_rkj(const ChainType& chain, int k, int j) {
  return chain.ranks[static_cast<std::size_t>(j - 1)] < min_rank(chain, k, j - 1);
}

bool guard_rcheck(const ChainType& chain, int k, int j) {
  return chain.ranks[static_cast<std::size_t>(k - 1)] < min_rank(chain, k + 1, j);
}

// Zero-class box sets have no slope; callers decide what that means.
std::optional<Slope> maybe_slope(const ClassH& c) {
  if (c.is_zero()) return std::nullopt;
  return slope(c);
}

std::int64_t factorial(int n) {
  std::int64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

OneFlag::OneFlag(std::vector<int> sizes) : sizes_(std::move(sizes)) {
  std::vector<int> sorted = sizes_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != static_cast<int>(i + 1)) {
      throw Error(ErrorCode::IndexOutOfRange, "strip sizes must be a permutation of 1..s");
    }
  }
}

OneFlag OneFlag::identity(int s) {
  std::vector<int> sizes(static_cast<std::size_t>(s));
  std::iota(sizes.begin(), sizes.end(), 1);
  return OneFlag(std::move(sizes));
}

int OneFlag::height(int k, int column) const {
  const int s = length();
  int h = 0;
  for (int i = 1; i <= k; ++i) h += size(i) >= s + 1 - column ? 1 : 0;
  return h;
}

CanonicalRegion OneFlag::prefix_region(int k) const {
  std::vector<int> heights(static_cast<std::size_t>(length()));
  for (int t = 1; t <= length(); ++t) heights[static_cast<std::size_t>(t - 1)] = height(k, t);
  return CanonicalRegion(std::move(heights));
}

ClassH strip_class(const JordanType& jt, const OneFlag& flag, int k) {
  if (flag.length() != jt.length()) throw Error(ErrorCode::IndexOutOfRange, "flag and type differ in length");
  if (k < 1 || k > flag.length()) throw Error(ErrorCode::IndexOutOfRange, "strip index " + std::to_string(k));
  ClassH c;
  for (int t = flag.first_column(k); t <= flag.length(); ++t) c += box_class(jt, t, flag.height(k, t));
  c.degree -= (k - 1) * jt.context().canonical_degree() * c.rank;
  return c;
}

ChainType chain_type(const JordanType& jt, const OneFlag& flag) {
  ChainType chain;
  for (int k = 1; k <= flag.length(); ++k) {
    const ClassH c = strip_class(jt, flag, k);
    chain.ranks.push_back(c.rank);
    chain.degrees.push_back(c.degree);
  }
  return chain;
}

BoxSet strip_complement(const OneFlag& flag, int k, int j, int cutoff) {
  require_pair(flag, k, j);
  const int s = flag.length();
  std::vector<Box> boxes;
  for (int t = k; t <= j; ++t) {
    for (int c = flag.first_column(t); c <= s - cutoff; ++c) boxes.push_back({c, flag.height(t, c)});
  }
  return BoxSet(s, std::move(boxes));
}

ClassH strip_set_class(const JordanType& jt, const OneFlag& flag, int k, int j, int cutoff) {
  return box_set_class(jt, strip_complement(flag, k, j, cutoff));
}

Slope region_slope_rkj(const JordanType& jt, const OneFlag& flag, int k, int j) {
  require_pair(flag, k, j);
  if (!guard_rkj(chain_type(jt, flag), k, j)) throw Error(ErrorCode::GuardNotMet, "n_j < min(n_k..n_{j-1}) fails");
  const BoxSet set = strip_complement(flag, k, j, flag.size(j));
  if (set.empty()) throw Error(ErrorCode::EmptyRegion, "R_k^j is empty");
  return slope(box_set_class(jt, set));
}

Slope region_slope_rcheck(const JordanType& jt, const OneFlag& flag, int k, int j) {
  require_pair(flag, k, j);
  if (!guard_rcheck(chain_type(jt, flag), k, j)) throw Error(ErrorCode::GuardNotMet, "n_k < min(n_{k+1}..n_j) fails");
  const BoxSet set = strip_complement(flag, k, j, flag.size(k));
  if (set.empty()) throw Error(ErrorCode::EmptyRegion, "checked R_k^j is empty");
  return slope(box_set_class(jt, set));
}

std::string to_string(ConditionKind kind) {
  switch (kind) {
    case ConditionKind::C0: return "C0";
    case ConditionKind::Ck: return "C_k";
    case ConditionKind::Ckj: return "C_k^j";
    case ConditionKind::CheckKj: return "Ccheck_k^j";
  }
  return "?";
}

bool ConditionReport::all_hold() const noexcept {
  return std::all_of(conditions.begin(), conditions.end(), [](const ConditionStatus& c) { return c.holds; });
}

std::optional<ConditionStatus> ConditionReport::first_failure() const {
  for (const auto& c : conditions) {
    if (!c.holds) return c;
  }
  return std::nullopt;
}

std::vector<bool> ConditionReport::status_vector(bool include_c0) const {
  std::vector<bool> v;
  for (const auto& c : conditions) {
    if (include_c0 || c.kind != ConditionKind::C0) v.push_back(c.holds);
  }
  return v;
}

ConditionReport check_conditions(const JordanType& jt, const OneFlag& flag) {
  const int s = flag.length();
  const ChainType chain = chain_type(jt, flag);
  ConditionReport report;
  report.total_slope = slope(total_class(jt));
  const Slope& mu = report.total_slope;

  for (int i = 2; i <= s; ++i) {
    const auto a = static_cast<std::size_t>(i - 2);
    const auto b = static_cast<std::size_t>(i - 1);
    const bool guard = chain.ranks[a] == chain.ranks[b];
    report.conditions.push_back({ConditionKind::C0, i - 1, i, guard, !guard || chain.degrees[b] <= chain.degrees[a], {}});
  }
  for (int k = 1; k < s; ++k) {
    auto sl = maybe_slope(region_class(jt, flag.prefix_region(k)));
    const bool holds = !sl || *sl <= mu;
    report.conditions.push_back({ConditionKind::Ck, k, 0, true, holds, sl});
  }
  for (int k = 1; k < s; ++k) {
    for (int j = k + 1; j <= s; ++j) {
      if (guard_rkj(chain, k, j)) {
        auto sl = maybe_slope(strip_set_class(jt, flag, k, j, flag.size(j)));
        report.conditions.push_back({ConditionKind::Ckj, k, j, true, sl && *sl > mu, sl});
      } else {
        report.conditions.push_back({ConditionKind::Ckj, k, j, false, true, {}});
      }
      if (guard_rcheck(chain, k, j)) {
        auto sl = maybe_slope(strip_set_class(jt, flag, k, j, flag.size(k)));
        report.conditions.push_back({ConditionKind::CheckKj, k, j, true, !sl || *sl <= mu, sl});
      } else {
        report.conditions.push_back({ConditionKind::CheckKj, k, j, false, true, {}});
      }
    }
  }
  return report;
}

OneFlag greedy_flag(const JordanType& jt) {
  if (!is_semistable_regions(jt).semistable) {
    throw Error(ErrorCode::NotSemistable, "greedy flag needs a semistable Jordan type");
  }
  const int s = jt.length();
  const Slope mu = slope(total_class(jt));
  std::vector<int> sizes;
  std::vector<bool> used(static_cast<std::size_t>(s + 1), false);
  for (int step = 0; step < s; ++step) {
    int longest = s;
    while (used[static_cast<std::size_t>(longest)]) --longest;
    // Heights of the region built so far; the next strip sits one box higher.
    auto next_height = [&](int column) {
      int h = 1;
      for (int u : sizes) h += u >= s + 1 - column ? 1 : 0;
      return h;
    };
    for (int m = 1; m <= longest; ++m) {
      if (used[static_cast<std::size_t>(m)]) continue;
      ClassH leftover;
      for (int t = s + 1 - longest; t <= s - m; ++t) leftover += box_class(jt, t, next_height(t));
      const auto sl = maybe_slope(leftover);
      if (m == longest || !sl || *sl <= mu) {
        sizes.push_back(m);
        used[static_cast<std::size_t>(m)] = true;
        break;
      }
    }
  }
  return OneFlag(std::move(sizes));
}

OneFlag mutate(const OneFlag& flag, int k, int j) {
  require_pair(flag, k, j);
  std::vector<int> sizes(flag.sizes().begin(), flag.sizes().end());
  std::rotate(sizes.begin() + (k - 1), sizes.begin() + k, sizes.begin() + j);
  return OneFlag(std::move(sizes));
}

Slope higgs_slope(const GenusContext& ctx, const ChainType& chain) {
  std::int64_t rank = 0;
  std::int64_t degree = 0;
  for (std::size_t i = 0; i < chain.ranks.size(); ++i) {
    rank += chain.ranks[i];
    degree += chain.degrees[i] + static_cast<std::int64_t>(i) * ctx.canonical_degree() * chain.ranks[i];
  }
  if (rank == 0) throw Error(ErrorCode::ZeroRank, "chain of total rank zero");
  return slope(ClassH{rank, degree});
}

namespace {

// Swaps adjacent equal-rank strips violating C0 until none remain. Each swap
// must leave every other condition's status untouched.
int repair_c0(const JordanType& jt, OneFlag& flag) {
  int swaps = 0;
  const int s = flag.length();
  for (int guard = 0; guard <= s * s; ++guard) {
    const ChainType chain = chain_type(jt, flag);
    int violated = 0;
    for (int i = 2; i <= s && !violated; ++i) {
      const auto a = static_cast<std::size_t>(i - 2);
      const auto b = static_cast<std::size_t>(i - 1);
      if (chain.ranks[a] == chain.ranks[b] && chain.degrees[a] < chain.degrees[b]) violated = i;
    }
    if (!violated) return swaps;
    const auto before = check_conditions(jt, flag).status_vector(false);
    std::vector<int> sizes(flag.sizes().begin(), flag.sizes().end());
    std::swap(sizes[static_cast<std::size_t>(violated - 2)], sizes[static_cast<std::size_t>(violated - 1)]);
    flag = OneFlag(std::move(sizes));
    if (check_conditions(jt, flag).status_vector(false) != before) {
      throw Error(ErrorCode::InvariantViolation, "C0 transposition changed another condition");
    }
    ++swaps;
  }
  throw Error(ErrorCode::IterationCapExceeded, "C0 repair did not settle");
}

}  // namespace

KappaResult kappa(const JordanType& jt) {
  OneFlag flag = greedy_flag(jt);
  const int s = jt.length();
  const GenusContext& ctx = jt.context();

  for (const auto& c : check_conditions(jt, flag).conditions) {
    if ((c.kind == ConditionKind::Ck || c.kind == ConditionKind::Ckj) && !c.holds) {
      throw Error(ErrorCode::InvariantViolation, "greedy flag violates " + to_string(c.kind));
    }
  }

  KappaResult result{{}, flag, {}, 0, 0};
  result.c0_swaps += repair_c0(jt, flag);

  const std::int64_t cap = static_cast<std::int64_t>(s) * s * factorial(s);
  for (std::int64_t iteration = 0;; ++iteration) {
    if (iteration > cap) throw Error(ErrorCode::IterationCapExceeded, "mutation schedule exceeded s^2 s!");
    const ConditionReport report = check_conditions(jt, flag);
    // Unfulfilled checked condition on the longest strip, smallest j first.
    int best_k = 0;
    int best_j = 0;
    for (const auto& c : report.conditions) {
      if (c.kind != ConditionKind::CheckKj || c.holds) continue;
      if (best_k == 0 || flag.size(c.k) > flag.size(best_k) || (c.k == best_k && c.j < best_j)) {
        best_k = c.k;
        best_j = c.j;
      }
    }
    if (best_k == 0) break;
    for (int t = best_k + 1; t <= best_j; ++t) {
      if (flag.size(t) < flag.size(best_k)) {
        throw Error(ErrorCode::InvariantViolation, "mutation would move a strip past a shorter one");
      }
    }
    flag = mutate(flag, best_k, best_j);
    ++result.mutations;
    result.c0_swaps += repair_c0(jt, flag);
  }

  result.flag = flag;
  result.report = check_conditions(jt, flag);
  if (auto failure = result.report.first_failure()) {
    throw Error(ErrorCode::InvariantViolation, "kappa output violates " + to_string(failure->kind) + " at k=" +
                                                   std::to_string(failure->k) + " j=" + std::to_string(failure->j));
  }
  result.chain = chain_type(jt, flag);

  const ClassH total = total_class(jt);
  ClassH sum;
  for (int k = 1; k <= s; ++k) {
    const auto i = static_cast<std::size_t>(k - 1);
    sum += ClassH{result.chain.ranks[i], result.chain.degrees[i] + (k - 1) * ctx.canonical_degree() * result.chain.ranks[i]};
  }
  if (sum != total) throw Error(ErrorCode::InvariantViolation, "chain type does not sum to (r,d)");
  if (higgs_slope(ctx, result.chain) != slope(total)) {
    throw Error(ErrorCode::InvariantViolation, "Higgs slope of the chain differs from d/r");
  }
  return result;
}

KappaCensus kappa_census(const GenusContext& ctx, std::int64_t rank, std::int64_t degree) {
  const LatticeCensus lattice = census(ctx, rank, degree, /*keep_points=*/true);
  KappaCensus out{ctx.genus(), rank, degree, {}};
  std::map<ChainType, std::size_t> seen;
  for (const auto& pc : lattice.partitions) {
    for (const auto& point : pc.points) {
      JordanType jt(ctx, pc.ranks, point);
      KappaResult res = kappa(jt);
      auto [it, inserted] = seen.emplace(res.chain, out.entries.size());
      if (!inserted) {
        throw Error(ErrorCode::InjectivityViolation, "two Jordan types share a chain type");
      }
      out.entries.push_back({std::move(jt), std::move(res)});
    }
  }
  return out;
}

}  // namespace nilcone
