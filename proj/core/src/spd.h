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

// Principal-submatrix factorizations backing the determinant families.

#ifndef LATRED_SRC_SPD_H_
#define LATRED_SRC_SPD_H_

#include <span>
#include <vector>

#include "latred/matrix.h"

namespace latred::internal {

// log det K_idx. Zero for an empty index list. Throws NotPositiveDefiniteError.
double LogDetPrincipal(const Matrix& k, std::span<const int> idx);

// For each candidate c (disjoint from base): log(K_cc - K_cB K_B^{-1} K_Bc),
// i.e. log det K_{B+c} - log det K_B.
std::vector<double> LogSchurComplements(const Matrix& k,
                                        std::span<const int> base,
                                        std::span<const int> candidates);

// For each candidate c (a member of base): log (K_B^{-1})_cc,
// i.e. log det K_{B-c} - log det K_B.
std::vector<double> LogInverseDiagonal(const Matrix& k,
                                       std::span<const int> base,
                                       std::span<const int> candidates);

bool IsPositiveDefinite(const Matrix& k);

}  // namespace latred::internal

#endif  // LATRED_SRC_SPD_H_
