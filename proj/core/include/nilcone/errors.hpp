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

#ifndef NILCONE_ERRORS_HPP
#define NILCONE_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace nilcone {

enum class ErrorCode {
  ZeroClass,
  InvalidClass,
  InvalidJordanType,
  OutOfTableau,
  EmptyRegion,
  IndexOutOfRange,
  RankMismatch,
  GenusTooSmall,
  TorsionTotal,
  InvalidPartition,
  NotCoprime,
  Infeasible,
  GuardNotMet,
  NotSemistable,
  ZeroRank,
  SizeTooLarge,
  BudgetExceeded,
  ParseError,
  // The codes below indicate a broken invariant rather than bad input.
  UnboundedPolytope,
  IterationCapExceeded,
  InjectivityViolation,
  InvariantViolation,
};

std::string_view to_string(ErrorCode code) noexcept;

// True for codes that signal an implementation bug (CLI exit code 2).
constexpr bool is_internal(ErrorCode code) noexcept {
  return code >= ErrorCode::UnboundedPolytope;
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  bool internal() const noexcept { return is_internal(code_); }

 private:
  ErrorCode code_;
};

}  // namespace nilcone

#endif  // NILCONE_ERRORS_HPP
