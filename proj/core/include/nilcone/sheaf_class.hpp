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

#ifndef NILCONE_SHEAF_CLASS_HPP
#define NILCONE_SHEAF_CLASS_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "nilcone/errors.hpp"
#include "nilcone/rational.hpp"

namespace nilcone {

// Genus of the base curve together with the canonical degree l = 2g - 2.
class GenusContext {
 public:
  // Throws GenusTooSmall for g < 1.
  explicit GenusContext(int g);

  int genus() const noexcept { return g_; }
  std::int64_t canonical_degree() const noexcept { return 2 * static_cast<std::int64_t>(g_) - 2; }

  // Census and semistability code needs g >= 2.
  void require_higher_genus() const;

  friend bool operator==(const GenusContext&, const GenusContext&) = default;

 private:
  int g_;
};

// Numerical class (rank, degree) of a coherent sheaf. Elements of the monoid
// satisfy rank >= 0 and degree >= 0 whenever rank == 0; intermediate
// differences may leave the monoid, so validity is checked explicitly.
struct ClassH {
  std::int64_t rank = 0;
  std::int64_t degree = 0;

  // Throws InvalidClass when (rank, degree) is outside the monoid.
  static ClassH checked(std::int64_t rank, std::int64_t degree);

  bool in_monoid() const noexcept { return rank > 0 || (rank == 0 && degree >= 0); }
  bool is_zero() const noexcept { return rank == 0 && degree == 0; }

  ClassH& operator+=(const ClassH& o) noexcept {
    rank += o.rank;
    degree += o.degree;
    return *this;
  }
  ClassH& operator-=(const ClassH& o) noexcept {
    rank -= o.rank;
    degree -= o.degree;
    return *this;
  }
  friend ClassH operator+(ClassH a, const ClassH& b) noexcept { return a += b; }
  friend ClassH operator-(ClassH a, const ClassH& b) noexcept { return a -= b; }
  friend bool operator==(const ClassH&, const ClassH&) = default;
};

std::ostream& operator<<(std::ostream& os, const ClassH& a);

// Element of Q u {+inf}. +inf is strictly above every rational and equal to itself.
class Slope {
 public:
  static Slope finite(Rational value) { return Slope(false, std::move(value)); }
  static Slope infinity() { return Slope(true, Rational(0)); }

  bool is_infinite() const noexcept { return infinite_; }
  // Only meaningful for finite slopes.
  const Rational& value() const noexcept { return value_; }

  friend bool operator==(const Slope& a, const Slope& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend std::strong_ordering operator<=>(const Slope& a, const Slope& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (b.value_ < a.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  // "inf" or an exact rational "n/d".
  std::string str() const;

 private:
  Slope(bool infinite, Rational value) : infinite_(infinite), value_(std::move(value)) {}

  bool infinite_;
  Rational value_;
};

std::ostream& operator<<(std::ostream& os, const Slope& s);

// (r, d + p r); rank-zero classes are fixed.
constexpr ClassH twist(const ClassH& a, std::int64_t p) noexcept {
  return ClassH{a.rank, a.degree + p * a.rank};
}

// <(r,d),(r',d')> = (1-g) r r' + r d' - r' d.
std::int64_t euler_form(const GenusContext& ctx, const ClassH& a, const ClassH& b);

// d/r, or +inf for torsion classes. Throws ZeroClass on (0,0).
Slope slope(const ClassH& a);

}  // namespace nilcone

#endif  // NILCONE_SHEAF_CLASS_HPP
