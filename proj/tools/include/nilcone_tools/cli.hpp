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

#ifndef NILCONE_TOOLS_CLI_HPP
#define NILCONE_TOOLS_CLI_HPP

#include <iosfwd>

namespace nilcone::tools {

enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitInternal = 2 };

// Entry point of the `nilcone` executable, writing reports to `out` and
// diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace nilcone::tools

#endif  // NILCONE_TOOLS_CLI_HPP
