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

#ifndef LATRED_FEATURE_KERNEL_H_
#define LATRED_FEATURE_KERNEL_H_

#include <vector>

#include "latred/families.h"

namespace latred {

inline constexpr double kDefaultKernelJitter = 1e-8;

// Builds an RBF similarity kernel from feature rows:
//   K_ij = exp(-gamma * |x_i - x_j|^2) + jitter * [i == j].
// Throws std::invalid_argument for ragged or empty rows, gamma <= 0 or
// jitter < 0, and NotPositiveDefiniteError when Cholesky fails on K.
LogDetSpec IngestFeatures(const std::vector<std::vector<double>>& rows,
                          double gamma, double jitter = kDefaultKernelJitter);

}  // namespace latred

#endif  // LATRED_FEATURE_KERNEL_H_
