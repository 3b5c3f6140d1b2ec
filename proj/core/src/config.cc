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

#include "latred/config.h"

#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace latred {
namespace {

std::string Trim(const std::string& s) {
  const size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double ToDouble(const std::string& key, const std::string& text) {
  size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) {
    throw std::invalid_argument(key + ": not a number: '" + text + "'");
  }
  return v;
}

std::vector<std::string> SplitComma(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) parts.push_back(Trim(part));
  return parts;
}

}  // namespace

Config Config::Parse(std::istream& in) {
  Config config;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    if (Trim(line).empty()) continue;
    const size_t eq = line.find('=');
    const std::string key =
        eq == std::string::npos ? "" : Trim(line.substr(0, eq));
    if (key.empty()) {
      throw std::invalid_argument("config line " + std::to_string(line_no) +
                                  ": expected 'key = value'");
    }
    config.Set(key, Trim(line.substr(eq + 1)));
  }
  return config;
}

Config Config::Load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config " + path);
  return Parse(in);
}

void Config::Set(const std::string& key, const std::string& value) {
  entries_[key] = value;
}

bool Config::Has(const std::string& key) const {
  return entries_.count(key) > 0;
}

std::optional<std::string> Config::GetString(const std::string& key) const {
  auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

std::optional<int64_t> Config::GetInt(const std::string& key) const {
  auto s = GetString(key);
  if (!s) return std::nullopt;
  size_t used = 0;
  int64_t v = 0;
  try {
    v = std::stoll(*s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s->size()) {
    throw std::invalid_argument(key + ": not an integer: '" + *s + "'");
  }
  return v;
}

std::optional<uint64_t> Config::GetUnsigned(const std::string& key) const {
  auto s = GetString(key);
  if (!s) return std::nullopt;
  size_t used = 0;
  uint64_t v = 0;
  if (!s->empty() && (*s)[0] != '-') {
    try {
      v = std::stoull(*s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
  }
  if (used == 0 || used != s->size()) {
    throw std::invalid_argument(key + ": not an unsigned integer: '" + *s +
                                "'");
  }
  return v;
}

std::optional<double> Config::GetDouble(const std::string& key) const {
  auto s = GetString(key);
  if (!s) return std::nullopt;
  return ToDouble(key, *s);
}

std::optional<bool> Config::GetBool(const std::string& key) const {
  auto s = GetString(key);
  if (!s) return std::nullopt;
  if (*s == "true" || *s == "1" || *s == "yes") return true;
  if (*s == "false" || *s == "0" || *s == "no") return false;
  throw std::invalid_argument(key + ": not a boolean: '" + *s + "'");
}

std::optional<std::vector<double>> Config::GetDoubleList(
    const std::string& key) const {
  auto s = GetString(key);
  if (!s) return std::nullopt;
  return ParseGrid(*s);
}

std::vector<double> ParseGrid(const std::string& text) {
  std::vector<double> grid;
  if (text.find(':') != std::string::npos) {
    std::vector<std::string> parts;
    std::stringstream in(text);
    std::string part;
    while (std::getline(in, part, ':')) parts.push_back(Trim(part));
    if (parts.size() != 3) {
      throw std::invalid_argument("range grid must be lo:hi:count");
    }
    const double lo = ToDouble("grid", parts[0]);
    const double hi = ToDouble("grid", parts[1]);
    const double count = ToDouble("grid", parts[2]);
    if (count < 1 || count != static_cast<int>(count)) {
      throw std::invalid_argument("grid count must be a positive integer");
    }
    const int k = static_cast<int>(count);
    for (int i = 0; i < k; ++i) {
      grid.push_back(k == 1 ? lo : lo + (hi - lo) * i / (k - 1));
    }
    return grid;
  }
  for (const std::string& part : SplitComma(text)) {
    grid.push_back(ToDouble("grid", part));
  }
  if (grid.empty()) throw std::invalid_argument("empty grid");
  return grid;
}

}  // namespace latred
