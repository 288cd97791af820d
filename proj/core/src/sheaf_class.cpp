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

#include "nilcone/sheaf_class.hpp"

#include <ostream>

namespace nilcone {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ZeroClass: return "ZeroClass";
    case ErrorCode::InvalidClass: return "InvalidClass";
    case ErrorCode::InvalidJordanType: return "InvalidJordanType";
    case ErrorCode::OutOfTableau: return "OutOfTableau";
    case ErrorCode::EmptyRegion: return "EmptyRegion";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::GenusTooSmall: return "GenusTooSmall";
    case ErrorCode::TorsionTotal: return "TorsionTotal";
    case ErrorCode::InvalidPartition: return "InvalidPartition";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::GuardNotMet: return "GuardNotMet";
    case ErrorCode::NotSemistable: return "NotSemistable";
    case ErrorCode::ZeroRank: return "ZeroRank";
    case ErrorCode::SizeTooLarge: return "SizeTooLarge";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnboundedPolytope: return "UnboundedPolytope";
    case ErrorCode::IterationCapExceeded: return "IterationCapExceeded";
    case ErrorCode::InjectivityViolation: return "InjectivityViolation";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

GenusContext::GenusContext(int g) : g_(g) {
  if (g < 1) throw Error(ErrorCode::GenusTooSmall, "genus must be at least 1, got " + std::to_string(g));
}

void GenusContext::require_higher_genus() const {
  if (g_ < 2) throw Error(ErrorCode::GenusTooSmall, "genus must be at least 2, got " + std::to_string(g_));
}

ClassH ClassH::checked(std::int64_t rank, std::int64_t degree) {
  ClassH a{rank, degree};
  if (!a.in_monoid()) {
    throw Error(ErrorCode::InvalidClass,
                "(" + std::to_string(rank) + "," + std::to_string(degree) + ") is not a sheaf class");
  }
  return a;
}

std::ostream& operator<<(std::ostream& os, const ClassH& a) {
  return os << '(' << a.rank << ',' << a.degree << ')';
}

std::string Slope::str() const { return infinite_ ? "inf" : to_string(value_); }

std::ostream& operator<<(std::ostream& os, const Slope& s) { return os << s.str(); }

std::int64_t euler_form(const GenusContext& ctx, const ClassH& a, const ClassH& b) {
  return (1 - ctx.genus()) * a.rank * b.rank + a.rank * b.degree - b.rank * a.degree;
}

Slope slope(const ClassH& a) {
  if (a.is_zero()) throw Error(ErrorCode::ZeroClass, "the zero class has no slope");
  if (a.rank == 0) {
    if (a.degree < 0) throw Error(ErrorCode::InvalidClass, "torsion class with negative degree");
    return Slope::infinity();
  }
  if (a.rank < 0) throw Error(ErrorCode::InvalidClass, "negative rank");
  return Slope::finite(make_rational(a.degree, a.rank));
}

}  // namespace nilcone
