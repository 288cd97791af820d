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

#ifndef NILCONE_JORDAN_JSON_HPP
#define NILCONE_JORDAN_JSON_HPP

#include <string>
#include <string_view>

#include "nilcone/tableau.hpp"

namespace nilcone {

// Compact record {"g":G,"r":[r_1,...],"d":[d_1,...]}.
std::string to_json(const JordanType& jt);

// Throws ParseError on malformed input and the JordanType errors on invalid data.
JordanType jordan_type_from_json(std::string_view text);

}  // namespace nilcone

#endif  // NILCONE_JORDAN_JSON_HPP
