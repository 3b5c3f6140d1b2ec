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
// Plain-text problem data. A matrix file holds n on the first line and then
// n whitespace-separated rows; a vector file holds n and then n values.
// Feature files are comma-separated rows, one per point. '#' lines are
// comments everywhere.
//

#ifndef LATRED_MATRIX_IO_H_
#define LATRED_MATRIX_IO_H_

#include <iosfwd>
#include <string>
#include <vector>

#include "latred/matrix.h"

namespace latred {

// Throws std::invalid_argument on ragged, non-square or non-numeric input.
Matrix ReadMatrix(std::istream& in);
void WriteMatrix(std::ostream& out, const Matrix& m);

std::vector<double> ReadVector(std::istream& in);
void WriteVector(std::ostream& out, const std::vector<double>& v);

// Rows of a comma-separated feature file. Throws on ragged rows.
std::vector<std::vector<double>> ReadFeatureRows(std::istream& in);

// File variants; throw std::runtime_error when the file cannot be opened.
Matrix ReadMatrixFile(const std::string& path);
std::vector<std::vector<double>> ReadFeatureFile(const std::string& path);

}  // namespace latred

#endif  // LATRED_MATRIX_IO_H_
