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

#include "nilcone/polytope.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <map>

#include "nilcone/partitions.hpp"
#include "nilcone/semistability.hpp"

namespace nilcone {

namespace {

// a . x <= b, the working form for elimination.
struct HalfSpace {
  std::vector<Rational> a;
  Rational b;
};

HalfSpace as_half_space(const Inequality& ineq) {
  HalfSpace h{ineq.coefficients, ineq.constant};
  if (ineq.relation == Relation::GreaterEqual) {
    for (auto& c : h.a) c = -c;
    h.b = -h.b;
  }
  return h;
}

// Scale so that the largest |a_i| is 1; zero rows are left alone.
void normalize(HalfSpace& h) {
  Rational m(0);
  for (const auto& c : h.a) m = std::max(m, Rational(abs(c)));
  if (m == 0) return;
  for (auto& c : h.a) c /= m;
  h.b /= m;
}

// Deduplicates parallel rows keeping the tightest one, and drops trivially
// true zero rows. Returns false if a zero row is violated.
bool prune(std::vector<HalfSpace>& rows) {
  std::map<std::vector<Rational>, Rational> tightest;
  for (auto& h : rows) {
    normalize(h);
    const bool zero = std::all_of(h.a.begin(), h.a.end(), [](const Rational& c) { return c == 0; });
    if (zero) {
      if (h.b < 0) return false;
      continue;
    }
    auto [it, inserted] = tightest.emplace(h.a, h.b);
    if (!inserted && h.b < it->second) it->second = h.b;
  }
  rows.clear();
  for (auto& [a, b] : tightest) rows.push_back({a, b});
  return true;
}

// Removes variable j (the row keeps its length; column j becomes zero).
std::vector<HalfSpace> eliminate(const std::vector<HalfSpace>& rows, std::size_t j) {
  std::vector<HalfSpace> pos;
  std::vector<HalfSpace> neg;
  std::vector<HalfSpace> out;
  for (const auto& h : rows) {
    if (h.a[j] > 0) {
      pos.push_back(h);
    } else if (h.a[j] < 0) {
      neg.push_back(h);
    } else {
      out.push_back(h);
    }
  }
  for (const auto& p : pos) {
    for (const auto& n : neg) {
      const Rational alpha = p.a[j];
      const Rational beta = -n.a[j];
      HalfSpace c{std::vector<Rational>(p.a.size()), beta * p.b + alpha * n.b};
      for (std::size_t i = 0; i < p.a.size(); ++i) c.a[i] = beta * p.a[i] + alpha * n.a[i];
      c.a[j] = 0;
      out.push_back(std::move(c));
    }
  }
  return out;
}

std::vector<HalfSpace> half_spaces(const InequalitySystem& sys) {
  std::vector<HalfSpace> rows;
  rows.reserve(sys.inequalities.size());
  for (const auto& ineq : sys.inequalities) rows.push_back(as_half_space(ineq));
  return rows;
}

struct Bound {
  std::optional<Rational> lower;
  std::optional<Rational> upper;
};

// Bounds on variable j from rows whose only nonzero column is j (after the
// already-fixed prefix has been substituted into `shift`).
Bound single_variable_bound(const std::vector<HalfSpace>& rows, std::size_t j, std::span<const std::int64_t> prefix) {
  Bound bound;
  for (const auto& h : rows) {
    Rational rhs = h.b;
    for (std::size_t i = 0; i < prefix.size(); ++i) rhs -= h.a[i] * prefix[i];
    const Rational& a = h.a[j];
    if (a == 0) {
      continue;
    }
    const Rational v = rhs / a;
    if (a > 0) {
      if (!bound.upper || v < *bound.upper) bound.upper = v;
    } else {
      if (!bound.lower || v > *bound.lower) bound.lower = v;
    }
  }
  return bound;
}

void require_partition(std::span<const std::int64_t> ranks) {
  if (ranks.empty() || ranks.back() <= 0) {
    throw Error(ErrorCode::InvalidPartition, "rank sequence must be nonempty with r_s > 0");
  }
  for (auto r : ranks) {
    if (r < 0) throw Error(ErrorCode::InvalidPartition, "negative multiplicity");
  }
}

std::int64_t triangular_rank_shift(std::span<const std::int64_t> ranks, std::int64_t l) {
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    const auto k = static_cast<std::int64_t>(i + 1);
    sum += k * (k - 1) / 2 * ranks[i];
  }
  return l * sum;
}

}  // namespace

bool Inequality::satisfied_by(std::span<const Rational> x) const {
  Rational lhs(0);
  for (std::size_t i = 0; i < coefficients.size(); ++i) lhs += coefficients[i] * x[i];
  return relation == Relation::LessEqual ? lhs <= constant : lhs >= constant;
}

bool Inequality::satisfied_by(std::span<const std::int64_t> x) const {
  Rational lhs(0);
  for (std::size_t i = 0; i < coefficients.size(); ++i) lhs += coefficients[i] * x[i];
  return relation == Relation::LessEqual ? lhs <= constant : lhs >= constant;
}

std::string to_string(const Inequality& ineq) {
  std::string out;
  for (std::size_t i = 0; i < ineq.coefficients.size(); ++i) {
    const Rational& c = ineq.coefficients[i];
    if (c == 0) continue;
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    const Rational m = abs(c);
    if (m != 1) out += to_string(m) + "*";
    out += "d" + std::to_string(i + 2);
  }
  if (out.empty()) out = "0";
  out += ineq.relation == Relation::LessEqual ? " <= " : " >= ";
  return out + to_string(ineq.constant);
}

std::int64_t InequalitySystem::first_degree(std::span<const std::int64_t> tail) const {
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < tail.size(); ++i) sum += static_cast<std::int64_t>(i + 2) * tail[i];
  return total_degree - sum + triangular_rank_shift(ranks, ctx.canonical_degree());
}

bool InequalitySystem::contains(std::span<const std::int64_t> tail) const {
  return std::all_of(inequalities.begin(), inequalities.end(),
                     [&](const Inequality& ineq) { return ineq.satisfied_by(tail); });
}

InequalitySystem build_system(const GenusContext& ctx, std::span<const std::int64_t> ranks, std::int64_t degree) {
  ctx.require_higher_genus();
  require_partition(ranks);
  InequalitySystem sys{ctx, std::vector<std::int64_t>(ranks.begin(), ranks.end()), 0, degree, {}};
  const int s = static_cast<int>(ranks.size());
  for (int k = 1; k <= s; ++k) sys.total_rank += k * ranks[static_cast<std::size_t>(k - 1)];
  const std::size_t n = sys.variable_count();

  // b-/b+ only read ranks, so any Jordan type with these ranks will do.
  const JordanType shape(ctx, sys.ranks, std::vector<std::int64_t>(ranks.size(), 0));
  for (const CanonicalRegion& region : enumerate_canonical_regions(s)) {
    if (region.first_nonzero_column() < 2) continue;
    std::vector<Rational> coeff(n);
    std::int64_t rank_dot = 0;
    for (int k = 1; k <= s; ++k) {
      rank_dot += region.height(k) * ranks[static_cast<std::size_t>(k - 1)];
      if (k >= 2) coeff[static_cast<std::size_t>(k - 2)] = region.height(k);
    }
    const Rational base = make_rational(rank_dot, sys.total_rank) * degree;
    sys.inequalities.push_back(
        {coeff, Relation::GreaterEqual, base + lower_bound_offset(shape, region), InequalityOrigin::RegionLower, region, 0});
    sys.inequalities.push_back(
        {coeff, Relation::LessEqual, base + upper_bound_offset(shape, region), InequalityOrigin::RegionUpper, region, 0});
  }
  for (int k = 2; k <= s; ++k) {
    if (ranks[static_cast<std::size_t>(k - 1)] != 0) continue;
    std::vector<Rational> coeff(n);
    coeff[static_cast<std::size_t>(k - 2)] = 1;
    sys.inequalities.push_back(
        {std::move(coeff), Relation::GreaterEqual, Rational(0), InequalityOrigin::TorsionPositivity, std::nullopt, k});
  }
  if (ranks[0] == 0) {
    std::vector<Rational> coeff(n);
    for (int k = 2; k <= s; ++k) coeff[static_cast<std::size_t>(k - 2)] = k;
    sys.inequalities.push_back({std::move(coeff), Relation::LessEqual,
                                Rational(degree + triangular_rank_shift(ranks, ctx.canonical_degree())),
                                InequalityOrigin::FirstColumnFacet, std::nullopt, 1});
  }
  return sys;
}

std::vector<Interval> variable_bounds(const InequalitySystem& sys) {
  const std::size_t n = sys.variable_count();
  std::vector<Interval> out;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<HalfSpace> rows = half_spaces(sys);
    if (!prune(rows)) throw Error(ErrorCode::Infeasible, "polytope is empty");
    for (std::size_t i = 0; i < n; ++i) {
      if (i == j) continue;
      rows = eliminate(rows, i);
      if (!prune(rows)) throw Error(ErrorCode::Infeasible, "polytope is empty");
    }
    const Bound b = single_variable_bound(rows, j, {});
    if (!b.lower || !b.upper) {
      throw Error(ErrorCode::UnboundedPolytope, "variable d" + std::to_string(j + 2) + " is unbounded");
    }
    if (*b.lower > *b.upper) throw Error(ErrorCode::Infeasible, "polytope is empty");
    out.push_back({*b.lower, *b.upper});
  }
  return out;
}

std::vector<std::vector<std::int64_t>> enumerate_lattice_points(const InequalitySystem& sys) {
  const std::size_t n = sys.variable_count();
  std::vector<std::vector<std::int64_t>> points;

  // projections[k] constrains x_0..x_k only.
  std::vector<std::vector<HalfSpace>> projections(n);
  std::vector<HalfSpace> rows = half_spaces(sys);
  if (!prune(rows)) return points;
  for (std::size_t k = n; k-- > 0;) {
    projections[k] = rows;
    if (k > 0) {
      rows = eliminate(rows, k);
      if (!prune(rows)) return points;
    }
  }

  std::vector<std::int64_t> tail;
  std::function<void(std::size_t)> descend = [&](std::size_t k) {
    if (k == n) {
      if (!sys.contains(tail)) throw Error(ErrorCode::InvariantViolation, "projection produced an outside point");
      std::vector<std::int64_t> point{sys.first_degree(tail)};
      point.insert(point.end(), tail.begin(), tail.end());
      points.push_back(std::move(point));
      return;
    }
    const Bound b = single_variable_bound(projections[k], k, tail);
    if (!b.lower || !b.upper) {
      throw Error(ErrorCode::UnboundedPolytope, "variable d" + std::to_string(k + 2) + " is unbounded");
    }
    const Integer lo = ceil_of(*b.lower);
    const Integer hi = floor_of(*b.upper);
    for (Integer v = lo; v <= hi; ++v) {
      tail.push_back(static_cast<std::int64_t>(v));
      descend(k + 1);
      tail.pop_back();
    }
  };
  descend(0);

  for (const auto& point : points) {
    const JordanType jt(sys.ctx, sys.ranks, point);
    if (!is_semistable_regions(jt).semistable) {
      throw Error(ErrorCode::InvariantViolation, "lattice point fails the region criterion");
    }
  }
  return points;
}

LatticeCensus census(const GenusContext& ctx, std::int64_t rank, std::int64_t degree, bool keep_points,
                     bool parallel) {
  ctx.require_higher_genus();
  if (rank < 1) throw Error(ErrorCode::TorsionTotal, "census needs rank >= 1");
  LatticeCensus out{ctx.genus(), rank, degree, {}, 0};
  const auto shapes = multiplicity_partitions(static_cast<int>(rank));

  auto count_one = [&](const std::vector<std::int64_t>& ranks) {
    PartitionCount pc{ranks, 0, {}};
    auto points = enumerate_lattice_points(build_system(ctx, ranks, degree));
    pc.count = static_cast<std::int64_t>(points.size());
    if (keep_points) pc.points = std::move(points);
    return pc;
  };

  if (parallel) {
    std::vector<std::future<PartitionCount>> jobs;
    jobs.reserve(shapes.size());
    for (const auto& ranks : shapes) jobs.push_back(std::async(std::launch::async, count_one, std::cref(ranks)));
    for (auto& job : jobs) out.partitions.push_back(job.get());
  } else {
    for (const auto& ranks : shapes) out.partitions.push_back(count_one(ranks));
  }
  for (const auto& pc : out.partitions) out.total += pc.count;
  return out;
}

std::vector<Inequality> normalized_system(const InequalitySystem& sys) {
  std::vector<Inequality> out = sys.inequalities;
  const Rational mu = make_rational(sys.total_degree, sys.total_rank);
  for (auto& ineq : out) {
    Rational shift(0);
    for (std::size_t i = 0; i < ineq.coefficients.size(); ++i) shift += ineq.coefficients[i] * sys.ranks[i + 1];
    ineq.constant -= mu * shift;
  }
  return out;
}

bool translation_check(const GenusContext& ctx, std::span<const std::int64_t> ranks, std::int64_t degree,
                       std::int64_t other_degree) {
  return normalized_system(build_system(ctx, ranks, degree)) ==
         normalized_system(build_system(ctx, ranks, other_degree));
}

std::optional<std::vector<std::int64_t>> integral_translation(std::span<const std::int64_t> ranks, std::int64_t degree,
                                                              std::int64_t other_degree) {
  std::int64_t r = 0;
  for (std::size_t i = 0; i < ranks.size(); ++i) r += static_cast<std::int64_t>(i + 1) * ranks[i];
  if (r == 0) return std::nullopt;
  std::vector<std::int64_t> tau;
  for (auto rk : ranks) {
    const std::int64_t num = (other_degree - degree) * rk;
    if (num % r != 0) return std::nullopt;
    tau.push_back(num / r);
  }
  return tau;
}

}  // namespace nilcone
