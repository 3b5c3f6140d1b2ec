// Copyright 2026 The Authors.
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

//
// Flat "key = value" configuration files. One key per line, '#' starts a
// comment, later assignments win. Command-line flags are layered on top
// with Set().
//

#ifndef LATRED_CONFIG_H_
#define LATRED_CONFIG_H_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace latred {

class Config {
 public:
  // Throws std::invalid_argument on a line without '=' or with an empty key.
  static Config Parse(std::istream& in);
  // Throws std::runtime_error when the file cannot be opened.
  static Config Load(const std::string& path);

  void Set(const std::string& key, const std::string& value);
  bool Has(const std::string& key) const;
  const std::map<std::string, std::string>& entries() const {
    return entries_;
  }

  // Typed lookups; the optional variants return nullopt for missing keys and
  // every lookup throws std::invalid_argument on a malformed value.
  std::optional<std::string> GetString(const std::string& key) const;
  std::optional<int64_t> GetInt(const std::string& key) const;
  std::optional<uint64_t> GetUnsigned(const std::string& key) const;
  std::optional<double> GetDouble(const std::string& key) const;
  std::optional<bool> GetBool(const std::string& key) const;
  // Comma-separated numbers.
  std::optional<std::vector<double>> GetDoubleList(
      const std::string& key) const;

 private:
  std::map<std::string, std::string> entries_;
};

// "0,0.25,0.5" -> {0, 0.25, 0.5}. Also accepts "lo:hi:count" for an evenly
// spaced grid with both endpoints. Throws std::invalid_argument.
std::vector<double> ParseGrid(const std::string& text);

}  // namespace latred

#endif  // LATRED_CONFIG_H_
