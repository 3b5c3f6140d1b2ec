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

#include "latred/matrix_io.h"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace latred {
namespace {

// Parses every number on a line, treating commas as blanks.
std::vector<double> ParseNumbers(std::string line, int line_no) {
  for (char& c : line) {
    if (c == ',') c = ' ';
  }
  std::istringstream fields(line);
  std::vector<double> values;
  std::string token;
  while (fields >> token) {
    size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size()) {
      throw std::invalid_argument("line " + std::to_string(line_no) +
                                  ": not a number: '" + token + "'");
    }
    values.push_back(v);
  }
  return values;
}

bool IsBlankOrComment(const std::string& line) {
  const size_t p = line.find_first_not_of(" \t\r");
  return p == std::string::npos || line[p] == '#';
}

// With `leading_count`, the first row is a lone count and is exempt from
// the equal-length check.
std::vector<std::vector<double>> ReadRows(std::istream& in,
                                          bool leading_count) {
  std::vector<std::vector<double>> rows;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (IsBlankOrComment(line)) continue;
    rows.push_back(ParseNumbers(line, line_no));
    const size_t ref = leading_count ? 1 : 0;
    if (rows.size() > ref + 1 && rows.back().size() != rows[ref].size()) {
      throw std::invalid_argument("line " + std::to_string(line_no) +
                                  ": ragged row");
    }
  }
  return rows;
}

int ReadCount(const std::vector<std::vector<double>>& rows) {
  if (rows.empty() || rows.front().size() != 1) {
    throw std::invalid_argument("expected a count on the first line");
  }
  const double n = rows.front()[0];
  if (n < 1 || n != static_cast<int>(n)) {
    throw std::invalid_argument("count must be a positive integer");
  }
  return static_cast<int>(n);
}

std::string Format(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::ifstream OpenOrThrow(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return in;
}

}  // namespace

Matrix ReadMatrix(std::istream& in) {
  auto rows = ReadRows(in, /*leading_count=*/true);
  const int n = ReadCount(rows);
  if (static_cast<int>(rows.size()) != n + 1) {
    throw std::invalid_argument("matrix has " +
                                std::to_string(rows.size() - 1) +
                                " rows, header says " + std::to_string(n));
  }
  Matrix m(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i + 1].size()) != n) {
      throw std::invalid_argument("matrix row " + std::to_string(i) +
                                  " does not have " + std::to_string(n) +
                                  " entries");
    }
    for (int j = 0; j < n; ++j) m(i, j) = rows[i + 1][j];
  }
  return m;
}

void WriteMatrix(std::ostream& out, const Matrix& m) {
  out << m.size() << '\n';
  for (int i = 0; i < m.size(); ++i) {
    for (int j = 0; j < m.size(); ++j) {
      if (j > 0) out << ' ';
      out << Format(m(i, j));
    }
    out << '\n';
  }
}

std::vector<double> ReadVector(std::istream& in) {
  auto rows = ReadRows(in, /*leading_count=*/true);
  const int n = ReadCount(rows);
  std::vector<double> v;
  for (size_t r = 1; r < rows.size(); ++r) {
    v.insert(v.end(), rows[r].begin(), rows[r].end());
  }
  if (static_cast<int>(v.size()) != n) {
    throw std::invalid_argument("vector has " + std::to_string(v.size()) +
                                " values, header says " + std::to_string(n));
  }
  return v;
}

void WriteVector(std::ostream& out, const std::vector<double>& v) {
  out << v.size() << '\n';
  for (size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out << ' ';
    out << Format(v[i]);
  }
  out << '\n';
}

std::vector<std::vector<double>> ReadFeatureRows(std::istream& in) {
  auto rows = ReadRows(in, /*leading_count=*/false);
  if (rows.empty() || rows.front().empty()) {
    throw std::invalid_argument("feature file has no rows");
  }
  return rows;
}

Matrix ReadMatrixFile(const std::string& path) {
  auto in = OpenOrThrow(path);
  return ReadMatrix(in);
}

std::vector<std::vector<double>> ReadFeatureFile(const std::string& path) {
  auto in = OpenOrThrow(path);
  return ReadFeatureRows(in);
}

}  // namespace latred
