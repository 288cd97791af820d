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

#include "nilcone/finite_field.hpp"

#include <string>

#include "nilcone/errors.hpp"

namespace nilcone {

namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// q = p^e, or {0, 0} if q is not a prime power.
std::pair<int, int> split_prime_power(int q) {
  for (int p = 2; p <= q; ++p) {
    if (!is_prime(p) || q % p != 0) continue;
    int e = 0;
    int m = q;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    return m == 1 ? std::pair{p, e} : std::pair{0, 0};
  }
  return {0, 0};
}

using Digits = std::vector<int>;

Digits digits_of(int x, int p, int e) {
  Digits d(static_cast<std::size_t>(e));
  for (int i = 0; i < e; ++i) {
    d[static_cast<std::size_t>(i)] = x % p;
    x /= p;
  }
  return d;
}

int value_of(const Digits& d, int p) {
  int x = 0;
  for (std::size_t i = d.size(); i-- > 0;) x = x * p + d[i];
  return x;
}

// Product of two residues modulo the monic polynomial x^e - sum tail_i x^i.
Digits multiply_mod(const Digits& a, const Digits& b, const Digits& reduction, int p) {
  const std::size_t e = a.size();
  std::vector<int> prod(2 * e, 0);
  for (std::size_t i = 0; i < e; ++i) {
    for (std::size_t j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  }
  for (std::size_t deg = 2 * e; deg-- > e;) {
    const int c = prod[deg];
    if (c == 0) continue;
    prod[deg] = 0;
    for (std::size_t i = 0; i < e; ++i) prod[deg - e + i] = (prod[deg - e + i] + c * reduction[i]) % p;
  }
  return Digits(prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(e));
}

}  // namespace

FiniteField::FiniteField(int q) : q_(q) {
  auto [p, e] = split_prime_power(q);
  if (p == 0 || q > 256) throw Error(ErrorCode::BudgetExceeded, "unsupported field order " + std::to_string(q));
  p_ = p;
  const auto n = static_cast<std::size_t>(q);
  add_.resize(n * n);
  mul_.resize(n * n);
  neg_.resize(n);
  inv_.assign(n, 0);

  for (int a = 0; a < q; ++a) {
    const Digits da = digits_of(a, p, e);
    Digits dn(da.size());
    for (std::size_t i = 0; i < da.size(); ++i) dn[i] = (p - da[i]) % p;
    neg_[static_cast<std::size_t>(a)] = static_cast<Element>(value_of(dn, p));
    for (int b = 0; b < q; ++b) {
      const Digits db = digits_of(b, p, e);
      Digits ds(da.size());
      for (std::size_t i = 0; i < da.size(); ++i) ds[i] = (da[i] + db[i]) % p;
      add_[index(static_cast<Element>(a), static_cast<Element>(b))] = static_cast<Element>(value_of(ds, p));
    }
  }

  // Try reduction polynomials until every nonzero residue is invertible,
  // which happens exactly for irreducible moduli.
  for (int candidate = 0; candidate < q; ++candidate) {
    const Digits reduction = digits_of(candidate, p, e);
    for (int a = 0; a < q; ++a) {
      for (int b = 0; b < q; ++b) {
        mul_[index(static_cast<Element>(a), static_cast<Element>(b))] =
            static_cast<Element>(value_of(multiply_mod(digits_of(a, p, e), digits_of(b, p, e), reduction, p), p));
      }
    }
    bool field = true;
    for (int a = 1; a < q && field; ++a) {
      field = false;
      for (int b = 1; b < q; ++b) {
        if (mul_[index(static_cast<Element>(a), static_cast<Element>(b))] == 1) {
          inv_[static_cast<std::size_t>(a)] = static_cast<Element>(b);
          field = true;
          break;
        }
      }
    }
    if (field) return;
  }
  throw Error(ErrorCode::InvariantViolation, "no irreducible modulus found for q=" + std::to_string(q));
}

std::vector<int> small_prime_powers(std::size_t count) {
  std::vector<int> out;
  for (int q = 2; out.size() < count; ++q) {
    if (split_prime_power(q).first != 0) out.push_back(q);
  }
  return out;
}

}  // namespace nilcone
