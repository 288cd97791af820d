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

#ifndef NILCONE_TOOLS_CACHE_HPP
#define NILCONE_TOOLS_CACHE_HPP

#include <cstdint>
#include <filesystem>
#include <mutex>
#include <optional>
#include <string>

#include "json.hpp"

namespace nilcone::tools {

using Json = nlohmann::ordered_json;

inline constexpr int kCacheSchemaVersion = 1;

struct CacheKey {
  int g = 0;
  std::int64_t r = 0;
  std::int64_t d = 0;
  std::string command;
  int version = kCacheSchemaVersion;

  Json to_json() const;
  friend bool operator==(const CacheKey&, const CacheKey&) = default;
};

// Append-only JSON-lines store of command payloads. Lines that fail to parse
// or carry another schema version are ignored.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path path);

  // $NILCONE_CACHE, else $XDG_DATA_HOME/nilcone/cache.jsonl, else
  // ~/.local/share/nilcone/cache.jsonl.
  static std::filesystem::path default_path();

  const std::filesystem::path& path() const noexcept { return path_; }

  // Payload of the latest record with this key.
  std::optional<Json> lookup(const CacheKey& key) const;

  // Writes one complete line per call; returns false if the file cannot be
  // opened.
  bool append(const CacheKey& key, const Json& payload);

 private:
  std::filesystem::path path_;
  mutable std::mutex mutex_;
};

}  // namespace nilcone::tools

#endif  // NILCONE_TOOLS_CACHE_HPP
