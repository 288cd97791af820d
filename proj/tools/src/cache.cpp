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

#include "nilcone_tools/cache.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>

namespace nilcone::tools {

namespace {

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::optional<CacheKey> parse_key(const Json& j) {
  if (!j.is_object()) return std::nullopt;
  for (const char* field : {"g", "r", "d", "version"}) {
    if (!j.contains(field) || !j[field].is_number_integer()) return std::nullopt;
  }
  if (!j.contains("command") || !j["command"].is_string()) return std::nullopt;
  return CacheKey{j["g"].get<int>(), j["r"].get<std::int64_t>(), j["d"].get<std::int64_t>(),
                  j["command"].get<std::string>(), j["version"].get<int>()};
}

}  // namespace

Json CacheKey::to_json() const {
  Json j;
  j["g"] = g;
  j["r"] = r;
  j["d"] = d;
  j["command"] = command;
  j["version"] = version;
  return j;
}

ResultCache::ResultCache(std::filesystem::path path) : path_(std::move(path)) {}

std::filesystem::path ResultCache::default_path() {
  if (const char* env = std::getenv("NILCONE_CACHE"); env != nullptr && *env != '\0') return env;
  std::filesystem::path base;
  if (const char* xdg = std::getenv("XDG_DATA_HOME"); xdg != nullptr && *xdg != '\0') {
    base = xdg;
  } else if (const char* home = std::getenv("HOME"); home != nullptr && *home != '\0') {
    base = std::filesystem::path(home) / ".local" / "share";
  } else {
    base = std::filesystem::temp_directory_path();
  }
  return base / "nilcone" / "cache.jsonl";
}

std::optional<Json> ResultCache::lookup(const CacheKey& key) const {
  std::lock_guard lock(mutex_);
  std::ifstream in(path_);
  if (!in) return std::nullopt;
  std::optional<Json> found;
  std::string line;
  while (std::getline(in, line)) {
    const Json record = Json::parse(line, nullptr, false);
    if (record.is_discarded() || !record.is_object() || !record.contains("key") || !record.contains("payload")) continue;
    const auto k = parse_key(record["key"]);
    if (!k || k->version != kCacheSchemaVersion || !(*k == key)) continue;
    found = record["payload"];
  }
  return found;
}

bool ResultCache::append(const CacheKey& key, const Json& payload) {
  std::lock_guard lock(mutex_);
  std::error_code ec;
  if (path_.has_parent_path()) std::filesystem::create_directories(path_.parent_path(), ec);
  std::ofstream out(path_, std::ios::app);
  if (!out) return false;
  Json record;
  record["key"] = key.to_json();
  record["payload"] = payload;
  record["timestamp"] = utc_timestamp();
  out << record.dump() + "\n";
  out.flush();
  return static_cast<bool>(out);
}

}  // namespace nilcone::tools
