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

#include "latred/feature_kernel.h"

#include <cmath>
#include <stdexcept>

#include "spd.h"

namespace latred {

LogDetSpec IngestFeatures(const std::vector<std::vector<double>>& rows,
                          double gamma, double jitter) {
  if (rows.empty()) throw std::invalid_argument("feature table is empty");
  if (!(gamma > 0.0)) throw std::invalid_argument("gamma must be positive");
  if (!(jitter >= 0.0)) throw std::invalid_argument("jitter must be >= 0");
  const size_t dim = rows.front().size();
  for (const auto& row : rows) {
    if (row.size() != dim) {
      throw std::invalid_argument("feature rows differ in dimension");
    }
  }
  const int n = static_cast<int>(rows.size());
  Matrix k(n);
  for (int i = 0; i < n; ++i) {
    k(i, i) = 1.0 + jitter;
    for (int j = i + 1; j < n; ++j) {
      double dist2 = 0.0;
      for (size_t d = 0; d < dim; ++d) {
        const double diff = rows[i][d] - rows[j][d];
        dist2 += diff * diff;
      }
      k(i, j) = k(j, i) = std::exp(-gamma * dist2);
    }
  }
  if (!internal::IsPositiveDefinite(k)) {
    throw NotPositiveDefiniteError(
        "similarity kernel is not positive definite; increase jitter");
  }
  return LogDetSpec{std::move(k)};
}

}  // namespace latred
