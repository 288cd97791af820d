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

#ifndef NILCONE_TOOLS_VERIFY_HPP
#define NILCONE_TOOLS_VERIFY_HPP

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "nilcone_tools/cache.hpp"

namespace nilcone::tools {

struct VerifyOptions {
  // Perturbs one library result per suite so that the comparison must fail.
  bool inject_fault = false;
  // Directory for the cache suite's scratch file; the system temp directory if empty.
  std::filesystem::path scratch_dir;
};

struct SuiteResult {
  std::string suite;
  bool pass = true;
  std::string first_failure;
  Json details = Json::object();
};

// Suite names in the order `all` runs them.
const std::vector<std::string>& suite_names();

// Throws Error(ParseError) for an unknown suite name.
SuiteResult run_suite(std::string_view name, const VerifyOptions& options);

// The census payload written by `census` and stored in the cache.
Json census_payload(int g, std::int64_t r, std::int64_t d, bool with_points);

}  // namespace nilcone::tools

#endif  // NILCONE_TOOLS_VERIFY_HPP
