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

#ifndef NILCONE_POLYTOPE_HPP
#define NILCONE_POLYTOPE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nilcone/tableau.hpp"

namespace nilcone {

enum class Relation { LessEqual, GreaterEqual };

enum class InequalityOrigin {
  RegionLower,        // lower bound of a region R with R_1 = 0
  RegionUpper,        // upper bound of the same region
  TorsionPositivity,  // d_k >= 0 for r_k = 0, k >= 2
  FirstColumnFacet,   // d_1 >= 0 for r_1 = 0, written through the degree identity
};

// sum_i coefficients[i] * x_i  (relation)  constant, over x = (d_2, ..., d_s).
struct Inequality {
  std::vector<Rational> coefficients;
  Relation relation;
  Rational constant;
  InequalityOrigin origin;
  std::optional<CanonicalRegion> region;  // for RegionLower / RegionUpper
  int column = 0;                         // for TorsionPositivity / FirstColumnFacet

  bool satisfied_by(std::span<const Rational> x) const;
  bool satisfied_by(std::span<const std::int64_t> x) const;
  friend bool operator==(const Inequality&, const Inequality&) = default;
};

// Inequality system of the polytope of degree vectors for a partition r_seq
// of r and a total degree d. Variables are d_2..d_s; d_1 is recovered from
// sum k d_k = d + l sum k(k-1)/2 r_k.
struct InequalitySystem {
  GenusContext ctx;
  std::vector<std::int64_t> ranks;
  std::int64_t total_rank = 0;
  std::int64_t total_degree = 0;
  std::vector<Inequality> inequalities;

  std::size_t variable_count() const noexcept { return ranks.empty() ? 0 : ranks.size() - 1; }
  // d_1 for the given (d_2..d_s).
  std::int64_t first_degree(std::span<const std::int64_t> tail) const;
  bool contains(std::span<const std::int64_t> tail) const;
};

std::string to_string(const Inequality& ineq);

// Throws InvalidPartition unless r_seq is nonempty, r_s > 0 and all r_k >= 0;
// GenusTooSmall for g < 2.
InequalitySystem build_system(const GenusContext& ctx, std::span<const std::int64_t> ranks, std::int64_t degree);

struct Interval {
  Rational lower;
  Rational upper;
  friend bool operator==(const Interval&, const Interval&) = default;
};

// Exact per-variable bounds by Fourier-Motzkin elimination. Throws Infeasible
// for an empty polytope and UnboundedPolytope when a variable has no finite bound.
std::vector<Interval> variable_bounds(const InequalitySystem& sys);

// Integer points, returned as full degree vectors (d_1..d_s) ordered
// lexicographically in (d_2, ..., d_s). Every point is re-checked against
// the region criterion (InvariantViolation on disagreement).
std::vector<std::vector<std::int64_t>> enumerate_lattice_points(const InequalitySystem& sys);

struct PartitionCount {
  std::vector<std::int64_t> ranks;
  std::int64_t count = 0;
  std::vector<std::vector<std::int64_t>> points;  // filled only when requested
};

struct LatticeCensus {
  int genus = 0;
  std::int64_t rank = 0;
  std::int64_t degree = 0;
  std::vector<PartitionCount> partitions;  // lexicographic in r_seq
  std::int64_t total = 0;
};

// Semistable components of rank r and degree d, partition by partition.
// Partitions are processed concurrently when `parallel` is set; the report
// order does not depend on it.
LatticeCensus census(const GenusContext& ctx, std::int64_t rank, std::int64_t degree, bool keep_points = false,
                     bool parallel = true);

// Normalized form in e_k = d_k - (d/r) r_k, whose constants do not depend on d.
std::vector<Inequality> normalized_system(const InequalitySystem& sys);

// True iff the normalized systems for d and d' coincide term by term.
bool translation_check(const GenusContext& ctx, std::span<const std::int64_t> ranks, std::int64_t degree,
                       std::int64_t other_degree);

// tau = (d' - d) r_seq / r when every entry is integral.
std::optional<std::vector<std::int64_t>> integral_translation(std::span<const std::int64_t> ranks, std::int64_t degree,
                                                              std::int64_t other_degree);

}  // namespace nilcone

#endif  // NILCONE_POLYTOPE_HPP
