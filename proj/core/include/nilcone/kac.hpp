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

#ifndef NILCONE_KAC_HPP
#define NILCONE_KAC_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "nilcone/polytope.hpp"
#include "nilcone/rational.hpp"
#include "nilcone/sheaf_class.hpp"

namespace nilcone {

// A_{g,r}(q) for the quiver with one vertex and g loops; coefficients[i] is
// the coefficient of q^i.
struct KacPolynomial {
  int g = 0;
  int r = 0;
  std::vector<Integer> coefficients;

  int degree() const noexcept { return static_cast<int>(coefficients.size()) - 1; }
  Integer evaluate(const Integer& q) const;
  Integer at_one() const;
  std::string str() const;

  friend bool operator==(const KacPolynomial&, const KacPolynomial&) = default;
};

// Largest sizes accepted by kac_polynomial.
struct KacLimits {
  int max_rank = 8;
  int max_degree = 400;  // 1 + (g-1) r^2
};

// Hua's generating identity: the coefficient of X^r in the plethystic
// logarithm of sum_lambda q^{(g-1)<lambda,lambda>} / prod_i prod_{k<=m_i} (1 - q^-k) X^|lambda|,
// multiplied by q - 1. Series are exact Laurent series in 1/q.
// Throws SizeTooLarge beyond `limits`.
KacPolynomial kac_polynomial(int g, int r, KacLimits limits = {});

// Largest number of matrix tuples the finite-field oracle will visit.
inline constexpr std::uint64_t kOracleTupleBudget = std::uint64_t{1} << 22;

// Isoclasses of absolutely indecomposable g-tuples of r x r matrices over
// F_q, by visiting every tuple and weighting it with |Aut| / |GL_r(F_q)|.
// A tuple counts when every element of its joint commutant is a scalar plus a
// nilpotent. Throws BudgetExceeded above kOracleTupleBudget tuples.
Integer count_abs_indec(int g, int r, int q, bool parallel = true);

// Lagrange interpolation of A_{g,r} through oracle counts at the first
// 2 + (g-1) r^2 prime powers. Throws BudgetExceeded when any count is too large.
KacPolynomial kac_polynomial_interpolated(int g, int r);

struct CrosscheckReport {
  int g = 0;
  std::int64_t r = 0;
  std::int64_t d = 0;
  LatticeCensus census;
  KacPolynomial kac;
  Integer kac_at_one;
  bool match = false;
};

// Census total against A_{g,r}(1). Throws NotCoprime unless gcd(r, d) = 1.
CrosscheckReport crosscheck(const GenusContext& ctx, std::int64_t r, std::int64_t d);

}  // namespace nilcone

#endif  // NILCONE_KAC_HPP
