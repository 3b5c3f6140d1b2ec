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
// CSV emission helpers. Every file the harness writes starts with a schema
// line "# latred <schema> v<version>" followed by the column header.
//

#ifndef LATRED_CSV_H_
#define LATRED_CSV_H_

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace latred {

// Shortest round-trip-stable rendering used in every CSV cell ("%.10g").
std::string FormatNumber(double v);
// Empty cell when absent.
std::string FormatNumber(std::optional<double> v);

void WriteSchemaLine(std::ostream& out, const std::string& schema,
                     int version);

// Joins cells with commas. Cells must not contain commas or newlines.
void WriteCsvRow(std::ostream& out, const std::vector<std::string>& cells);

}  // namespace latred

#endif  // LATRED_CSV_H_
