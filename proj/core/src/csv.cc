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

#include "latred/csv.h"

#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace latred {

std::string FormatNumber(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

std::string FormatNumber(std::optional<double> v) {
  return v ? FormatNumber(*v) : std::string();
}

void WriteSchemaLine(std::ostream& out, const std::string& schema,
                     int version) {
  out << "# latred " << schema << " v" << version << '\n';
}

void WriteCsvRow(std::ostream& out, const std::vector<std::string>& cells) {
  for (size_t i = 0; i < cells.size(); ++i) {
    if (cells[i].find_first_of(",\n") != std::string::npos) {
      throw std::invalid_argument("CSV cell contains a separator: " +
                                  cells[i]);
    }
    if (i > 0) out << ',';
    out << cells[i];
  }
  out << '\n';
}

}  // namespace latred
