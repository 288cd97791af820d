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

#include "nilcone/jordan_json.hpp"

#include "json.hpp"

namespace nilcone {

namespace {

using Json = nlohmann::ordered_json;

std::vector<std::int64_t> integer_array(const Json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end() || !it->is_array()) {
    throw Error(ErrorCode::ParseError, std::string("field \"") + key + "\" must be an integer array");
  }
  std::vector<std::int64_t> out;
  for (const auto& v : *it) {
    if (!v.is_number_integer()) {
      throw Error(ErrorCode::ParseError, std::string("field \"") + key + "\" must contain integers");
    }
    out.push_back(v.get<std::int64_t>());
  }
  return out;
}

}  // namespace

std::string to_json(const JordanType& jt) {
  Json j;
  j["g"] = jt.context().genus();
  j["r"] = std::vector<std::int64_t>(jt.ranks().begin(), jt.ranks().end());
  j["d"] = std::vector<std::int64_t>(jt.degrees().begin(), jt.degrees().end());
  return j.dump();
}

JordanType jordan_type_from_json(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "Jordan type must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key != "g" && key != "r" && key != "d") throw Error(ErrorCode::ParseError, "unexpected field \"" + key + "\"");
  }
  const auto g = j.find("g");
  if (g == j.end() || !g->is_number_integer()) throw Error(ErrorCode::ParseError, "field \"g\" must be an integer");
  const std::int64_t genus = g->get<std::int64_t>();
  if (genus < 1 || genus > 1'000'000) throw Error(ErrorCode::GenusTooSmall, "genus must be at least 1");
  return JordanType(GenusContext(static_cast<int>(genus)), integer_array(j, "r"), integer_array(j, "d"));
}

}  // namespace nilcone
