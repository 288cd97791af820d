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

#ifndef NILCONE_FINITE_FIELD_HPP
#define NILCONE_FINITE_FIELD_HPP

#include <cstdint>
#include <vector>

namespace nilcone {

// Table-driven arithmetic in F_q for small prime powers q = p^e. Elements
// are 0..q-1, read as base-p digit vectors of polynomials modulo a monic
// irreducible of degree e; 0 and 1 are the field's zero and one.
class FiniteField {
 public:
  using Element = std::uint16_t;

  // Throws BudgetExceeded unless q is a prime power with 2 <= q <= 256.
  explicit FiniteField(int q);

  int order() const noexcept { return q_; }
  int characteristic() const noexcept { return p_; }

  Element add(Element a, Element b) const noexcept { return add_[index(a, b)]; }
  Element sub(Element a, Element b) const noexcept { return add(a, neg_[b]); }
  Element mul(Element a, Element b) const noexcept { return mul_[index(a, b)]; }
  Element neg(Element a) const noexcept { return neg_[a]; }
  // a must be nonzero.
  Element inv(Element a) const noexcept { return inv_[a]; }

 private:
  std::size_t index(Element a, Element b) const noexcept { return static_cast<std::size_t>(a) * q_ + b; }

  int q_;
  int p_;
  std::vector<Element> add_;
  std::vector<Element> mul_;
  std::vector<Element> neg_;
  std::vector<Element> inv_;
};

// Smallest prime powers >= 2 in increasing order, `count` of them.
std::vector<int> small_prime_powers(std::size_t count);

}  // namespace nilcone

#endif  // NILCONE_FINITE_FIELD_HPP
