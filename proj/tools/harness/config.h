// Copyright 2026 The Figstory Authors.
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

#ifndef FIGSTORY_HARNESS_CONFIG_H_
#define FIGSTORY_HARNESS_CONFIG_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace figstory::harness {

// Flat "section.key" -> value store. Starts from built-in defaults, then an
// INI file, then command-line overrides.
class Config {
 public:
  static Config Defaults();

  // Merges an INI file with [section] headers over the current values.
  // Throws InvalidArgument on unreadable or malformed files and on keys that
  // have no default.
  void LoadIni(const std::filesystem::path &path);

  // "section.key=value". Throws InvalidArgument on unknown keys.
  void Override(std::string_view assignment);
  void Set(std::string_view key, std::string_view value);

  bool Has(std::string_view key) const;
  const std::string &Get(std::string_view key) const;
  std::string GetString(std::string_view key) const { return Get(key); }
  long long GetInt(std::string_view key) const;
  double GetDouble(std::string_view key) const;
  bool GetBool(std::string_view key) const;
  std::vector<std::string> GetList(std::string_view key) const;

  // Empty value means unset.
  std::optional<std::filesystem::path> GetPath(std::string_view key) const;

  const std::map<std::string, std::string, std::less<>> &values() const {
    return values_;
  }

 private:
  std::map<std::string, std::string, std::less<>> values_;
};

}  // namespace figstory::harness

#endif  // FIGSTORY_HARNESS_CONFIG_H_
