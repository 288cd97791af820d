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

#include "nilcone/kac.hpp"

#include <algorithm>
#include <optional>
#include <future>
#include <numeric>
#include <thread>

#include "nilcone/finite_field.hpp"
#include "nilcone/partitions.hpp"

namespace nilcone {

namespace {

// Truncated Laurent series in t = 1/q: coefficients of t^e are known for
// lo <= e < prec and are zero below lo.
class Laurent {
 public:
  Laurent(int lo, int prec) : lo_(lo), prec_(prec), c_(static_cast<std::size_t>(std::max(0, prec - lo))) {}

  static Laurent one(int prec) {
    Laurent s(0, prec);
    if (prec > 0) s.c_[0] = 1;
    return s;
  }

  int lo() const noexcept { return lo_; }
  int prec() const noexcept { return prec_; }

  Rational at(int e) const {
    if (e < lo_) return Rational(0);
    if (e >= prec_) throw Error(ErrorCode::InvariantViolation, "series coefficient beyond known precision");
    return c_[static_cast<std::size_t>(e - lo_)];
  }
  Rational& ref(int e) { return c_[static_cast<std::size_t>(e - lo_)]; }

  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent out(a.lo_ + b.lo_, std::min(a.prec_ + b.lo_, b.prec_ + a.lo_));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      const int ea = a.lo_ + static_cast<int>(i);
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        const int e = ea + b.lo_ + static_cast<int>(j);
        if (e >= out.prec_) break;
        out.ref(e) += a.c_[i] * b.c_[j];
      }
    }
    return out;
  }

  friend Laurent operator+(const Laurent& a, const Laurent& b) {
    Laurent out(std::min(a.lo_, b.lo_), std::min(a.prec_, b.prec_));
    for (int e = out.lo_; e < out.prec_; ++e) out.ref(e) = a.at(e) + b.at(e);
    return out;
  }

  Laurent scaled(const Rational& k) const {
    Laurent out = *this;
    for (auto& x : out.c_) x *= k;
    return out;
  }

  // Multiplication by t^k.
  Laurent shifted(int k) const {
    Laurent out = *this;
    out.lo_ += k;
    out.prec_ += k;
    return out;
  }

  // t -> t^n.
  Laurent adams(int n) const {
    Laurent out(lo_ * n, prec_ * n);
    for (int e = lo_; e < prec_; ++e) out.ref(e * n) = at(e);
    return out;
  }

 private:
  int lo_;
  int prec_;
  std::vector<Rational> c_;
};

// 1 / (1 - t^k) up to precision prec.
Laurent geometric(int k, int prec) {
  Laurent s(0, prec);
  for (int e = 0; e < prec; e += k) s.ref(e) = 1;
  return s;
}

int mobius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  return n > 1 ? -result : result;
}

std::vector<Laurent> hua_log_coefficients(int g, int r, int prec) {
  // F_m = sum over partitions of m.
  std::vector<Laurent> f;
  f.push_back(Laurent::one(prec));
  for (int m = 1; m <= r; ++m) {
    std::optional<Laurent> sum;
    for (const Parts& lambda : partitions(m)) {
      const Parts conj = conjugate(lambda);
      int pairing = 0;
      for (int c : conj) pairing += c * c;
      Laurent term = Laurent::one(prec);
      const auto mult = to_multiplicities(lambda);
      for (auto mi : mult) {
        for (int k = 1; k <= mi; ++k) term = term * geometric(k, prec);
      }
      term = term.shifted(-(g - 1) * pairing);
      sum = sum ? *sum + term : term;
    }
    f.push_back(*sum);
  }
  // Ordinary logarithm: m L_m = m F_m - sum_{k<m} k L_k F_{m-k}.
  std::vector<Laurent> log(static_cast<std::size_t>(r + 1), Laurent(0, prec));
  for (int m = 1; m <= r; ++m) {
    Laurent acc = f[static_cast<std::size_t>(m)];
    for (int k = 1; k < m; ++k) {
      acc = acc + (log[static_cast<std::size_t>(k)] * f[static_cast<std::size_t>(m - k)]).scaled(make_rational(-k, m));
    }
    log[static_cast<std::size_t>(m)] = acc;
  }
  // Plethystic logarithm.
  std::vector<Laurent> plog;
  plog.emplace_back(0, prec);
  for (int m = 1; m <= r; ++m) {
    std::optional<Laurent> acc;
    for (int n = 1; n <= m; ++n) {
      if (m % n != 0 || mobius(n) == 0) continue;
      Laurent term = log[static_cast<std::size_t>(m / n)].adams(n).scaled(make_rational(mobius(n), n));
      acc = acc ? *acc + term : term;
    }
    plog.push_back(*acc);
  }
  return plog;
}

Integer power(const Integer& base, int exp) {
  Integer out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

// Reads the q-polynomial (q - 1) * series; returns nullopt if precision is short.
std::optional<std::vector<Rational>> polynomial_in_q(const Laurent& plog) {
  const Laurent a = plog.shifted(-1) + plog.scaled(Rational(-1));
  if (a.prec() < 2) return std::nullopt;
  for (int e = 1; e < a.prec(); ++e) {
    if (a.at(e) != 0) throw Error(ErrorCode::InvariantViolation, "Kac series has positive powers of 1/q");
  }
  std::vector<Rational> coeffs(static_cast<std::size_t>(std::max(1, -a.lo() + 1)));
  for (int e = a.lo(); e <= 0; ++e) coeffs[static_cast<std::size_t>(-e)] = a.at(e);
  return coeffs;
}

KacPolynomial to_kac(int g, int r, std::vector<Rational> coeffs) {
  while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
  KacPolynomial out{g, r, {}};
  for (const auto& c : coeffs) {
    if (!is_integer(c) || c < 0) {
      throw Error(ErrorCode::InvariantViolation, "Kac polynomial coefficient " + to_string(c) +
                                                     " is not a nonnegative integer");
    }
    out.coefficients.push_back(boost::multiprecision::numerator(c));
  }
  return out;
}

}  // namespace

Integer KacPolynomial::evaluate(const Integer& q) const {
  Integer acc = 0;
  for (std::size_t i = coefficients.size(); i-- > 0;) acc = acc * q + coefficients[i];
  return acc;
}

Integer KacPolynomial::at_one() const { return evaluate(Integer(1)); }

std::string KacPolynomial::str() const {
  std::string out;
  for (std::size_t i = coefficients.size(); i-- > 0;) {
    const Integer& c = coefficients[i];
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    if (c != 1 || i == 0) out += c.str();
    if (i > 0) {
      if (c != 1) out += "*";
      out += "q";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

KacPolynomial kac_polynomial(int g, int r, KacLimits limits) {
  if (g < 1 || r < 1) throw Error(ErrorCode::SizeTooLarge, "kac_polynomial needs g >= 1 and r >= 1");
  const int degree = 1 + (g - 1) * r * r;
  if (r > limits.max_rank || degree > limits.max_degree) {
    throw Error(ErrorCode::SizeTooLarge, "A_{g,r} with g=" + std::to_string(g) + " r=" + std::to_string(r) +
                                             " exceeds the configured budget");
  }
  // Each product in the logarithm can lose up to (g-1) r^2 terms of precision.
  int prec = 4 + (r + 1) * (g - 1) * r * r + r;
  for (;;) {
    const auto plog = hua_log_coefficients(g, r, prec);
    if (auto coeffs = polynomial_in_q(plog[static_cast<std::size_t>(r)])) return to_kac(g, r, std::move(*coeffs));
    prec *= 2;
  }
}

Integer count_abs_indec(int g, int r, int q, bool parallel) {
  if (g < 1 || r < 1) throw Error(ErrorCode::BudgetExceeded, "oracle needs g >= 1 and r >= 1");
  const FiniteField field(q);
  const int n = r * r;
  std::uint64_t tuples = 1;
  for (int i = 0; i < g * n; ++i) {
    tuples *= static_cast<std::uint64_t>(q);
    if (tuples > kOracleTupleBudget) {
      throw Error(ErrorCode::BudgetExceeded, "q^(g r^2) exceeds the oracle budget");
    }
  }
  using E = FiniteField::Element;

  auto is_scalar_plus_nilpotent = [&](const std::vector<E>& x) {
    std::vector<E> m(static_cast<std::size_t>(n));
    std::vector<E> pw(static_cast<std::size_t>(n));
    std::vector<E> tmp(static_cast<std::size_t>(n));
    for (int lambda = 0; lambda < q; ++lambda) {
      m = x;
      for (int i = 0; i < r; ++i) m[static_cast<std::size_t>(i * r + i)] = field.sub(m[static_cast<std::size_t>(i * r + i)], static_cast<E>(lambda));
      pw = m;
      for (int step = 1; step < r; ++step) {
        for (int a = 0; a < r; ++a) {
          for (int b = 0; b < r; ++b) {
            E acc = 0;
            for (int c = 0; c < r; ++c) {
              acc = field.add(acc, field.mul(pw[static_cast<std::size_t>(a * r + c)], m[static_cast<std::size_t>(c * r + b)]));
            }
            tmp[static_cast<std::size_t>(a * r + b)] = acc;
          }
        }
        pw.swap(tmp);
      }
      if (std::all_of(pw.begin(), pw.end(), [](E v) { return v == 0; })) return true;
    }
    return false;
  };

  // Weight |Aut| = q^(c-1) (q-1) of one tuple, or 0 if not absolutely indecomposable.
  auto weight = [&](std::uint64_t index) -> std::uint64_t {
    std::vector<std::vector<E>> mats(static_cast<std::size_t>(g), std::vector<E>(static_cast<std::size_t>(n)));
    for (auto& mat : mats) {
      for (auto& v : mat) {
        v = static_cast<E>(index % static_cast<std::uint64_t>(q));
        index /= static_cast<std::uint64_t>(q);
      }
    }
    // Rows of X A - A X = 0 in the unknowns X[a][b] (index a r + b).
    std::vector<std::vector<E>> rows;
    for (const auto& mat : mats) {
      for (int a = 0; a < r; ++a) {
        for (int b = 0; b < r; ++b) {
          std::vector<E> row(static_cast<std::size_t>(n), 0);
          for (int c = 0; c < r; ++c) {
            auto& u = row[static_cast<std::size_t>(a * r + c)];
            u = field.add(u, mat[static_cast<std::size_t>(c * r + b)]);
            auto& v = row[static_cast<std::size_t>(c * r + b)];
            v = field.sub(v, mat[static_cast<std::size_t>(a * r + c)]);
          }
          rows.push_back(std::move(row));
        }
      }
    }
    // Reduced row echelon form.
    std::vector<int> pivot_col;
    std::size_t rank = 0;
    for (int col = 0; col < n && rank < rows.size(); ++col) {
      std::size_t piv = rank;
      while (piv < rows.size() && rows[piv][static_cast<std::size_t>(col)] == 0) ++piv;
      if (piv == rows.size()) continue;
      std::swap(rows[piv], rows[rank]);
      const E inv = field.inv(rows[rank][static_cast<std::size_t>(col)]);
      for (auto& v : rows[rank]) v = field.mul(v, inv);
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i == rank) continue;
        const E f = rows[i][static_cast<std::size_t>(col)];
        if (f == 0) continue;
        for (int c = 0; c < n; ++c) {
          rows[i][static_cast<std::size_t>(c)] =
              field.sub(rows[i][static_cast<std::size_t>(c)], field.mul(f, rows[rank][static_cast<std::size_t>(c)]));
        }
      }
      pivot_col.push_back(col);
      ++rank;
    }
    const int dim = n - static_cast<int>(rank);
    std::uint64_t aut = static_cast<std::uint64_t>(q - 1);
    for (int i = 1; i < dim; ++i) aut *= static_cast<std::uint64_t>(q);
    if (dim == 1) return aut;  // only scalars commute

    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < n; ++c) {
      if (!is_pivot[static_cast<std::size_t>(c)]) free_cols.push_back(c);
    }
    std::vector<std::vector<E>> basis;
    for (int fc : free_cols) {
      std::vector<E> v(static_cast<std::size_t>(n), 0);
      v[static_cast<std::size_t>(fc)] = 1;
      for (std::size_t i = 0; i < pivot_col.size(); ++i) {
        v[static_cast<std::size_t>(pivot_col[i])] = field.neg(rows[i][static_cast<std::size_t>(fc)]);
      }
      basis.push_back(std::move(v));
    }
    std::vector<int> coeff(basis.size(), 0);
    std::vector<E> x(static_cast<std::size_t>(n));
    for (;;) {
      std::fill(x.begin(), x.end(), E{0});
      for (std::size_t b = 0; b < basis.size(); ++b) {
        if (coeff[b] == 0) continue;
        for (int c = 0; c < n; ++c) {
          x[static_cast<std::size_t>(c)] =
              field.add(x[static_cast<std::size_t>(c)], field.mul(static_cast<E>(coeff[b]), basis[b][static_cast<std::size_t>(c)]));
        }
      }
      if (!is_scalar_plus_nilpotent(x)) return 0;
      std::size_t pos = 0;
      while (pos < coeff.size() && ++coeff[pos] == q) coeff[pos++] = 0;
      if (pos == coeff.size()) break;
    }
    return aut;
  };

  auto sum_range = [&](std::uint64_t begin, std::uint64_t end) {
    Integer acc = 0;
    for (std::uint64_t i = begin; i < end; ++i) acc += weight(i);
    return acc;
  };

  Integer total = 0;
  const unsigned workers = parallel ? std::max(1U, std::thread::hardware_concurrency()) : 1U;
  if (workers == 1 || tuples < 4096) {
    total = sum_range(0, tuples);
  } else {
    std::vector<std::future<Integer>> jobs;
    const std::uint64_t chunk = (tuples + workers - 1) / workers;
    for (std::uint64_t begin = 0; begin < tuples; begin += chunk) {
      jobs.push_back(std::async(std::launch::async, sum_range, begin, std::min(tuples, begin + chunk)));
    }
    for (auto& job : jobs) total += job.get();
  }

  Integer gl = 1;
  const Integer qr = power(Integer(q), r);
  for (int i = 0; i < r; ++i) gl *= qr - power(Integer(q), i);
  if (total % gl != 0) throw Error(ErrorCode::InvariantViolation, "orbit weights do not sum to an integer");
  return total / gl;
}

KacPolynomial kac_polynomial_interpolated(int g, int r) {
  if (g < 1 || r < 1) throw Error(ErrorCode::BudgetExceeded, "interpolation needs g >= 1 and r >= 1");
  const int degree = 1 + (g - 1) * r * r;
  const std::vector<int> qs = small_prime_powers(static_cast<std::size_t>(degree + 1));
  std::vector<Rational> ys;
  for (int q : qs) ys.emplace_back(count_abs_indec(g, r, q));

  std::vector<Rational> poly(qs.size(), Rational(0));
  for (std::size_t i = 0; i < qs.size(); ++i) {
    // Expand prod_{j != i} (x - x_j) / (x_i - x_j).
    std::vector<Rational> basis{Rational(1)};
    Rational denom(1);
    for (std::size_t j = 0; j < qs.size(); ++j) {
      if (j == i) continue;
      std::vector<Rational> next(basis.size() + 1, Rational(0));
      for (std::size_t k = 0; k < basis.size(); ++k) {
        next[k + 1] += basis[k];
        next[k] -= basis[k] * qs[j];
      }
      basis = std::move(next);
      denom *= qs[i] - qs[j];
    }
    for (std::size_t k = 0; k < basis.size(); ++k) poly[k] += ys[i] * basis[k] / denom;
  }
  return to_kac(g, r, std::move(poly));
}

CrosscheckReport crosscheck(const GenusContext& ctx, std::int64_t r, std::int64_t d) {
  ctx.require_higher_genus();
  if (r < 1 || std::gcd(r, d) != 1) {
    throw Error(ErrorCode::NotCoprime, "crosscheck needs gcd(r,d) = 1, got r=" + std::to_string(r) +
                                           " d=" + std::to_string(d));
  }
  CrosscheckReport report;
  report.g = ctx.genus();
  report.r = r;
  report.d = d;
  report.census = census(ctx, r, d);
  report.kac = kac_polynomial(ctx.genus(), static_cast<int>(r));
  report.kac_at_one = report.kac.at_one();
  report.match = Integer(report.census.total) == report.kac_at_one;
  return report;
}

}  // namespace nilcone
