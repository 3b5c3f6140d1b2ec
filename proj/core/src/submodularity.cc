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

#include "latred/submodularity.h"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace latred {

std::optional<SubmodularityViolation> FindSubmodularityViolation(
    const SetFunction& f, double tolerance) {
  const int n = f.n();
  if (n > kMaxExhaustiveCheck) {
    throw std::invalid_argument(
        "exhaustive submodularity check limited to n <= " +
        std::to_string(kMaxExhaustiveCheck) + ", got " + std::to_string(n));
  }
  const uint64_t full = (uint64_t{1} << n) - 1;
  std::vector<double> value(full + 1);
  for (uint64_t mask = 0; mask <= full; ++mask) {
    value[mask] = f.Eval(ElementSet::FromMask(n, mask));
  }
  for (uint64_t b = 0; b <= full; ++b) {
    for (int i = 0; i < n; ++i) {
      const uint64_t bit = uint64_t{1} << i;
      if (b & bit) continue;
      const double gain_b = value[b | bit] - value[b];
      // All submasks a of b, including b itself and 0.
      for (uint64_t a = b;; a = (a - 1) & b) {
        const double gain_a = value[a | bit] - value[a];
        if (gain_a < gain_b - tolerance) {
          return SubmodularityViolation{ElementSet::FromMask(n, a),
                                        ElementSet::FromMask(n, b), i, gain_a,
                                        gain_b};
        }
        if (a == 0) break;
      }
    }
  }
  return std::nullopt;
}

bool VerifySubmodularity(const SetFunction& f, double tolerance) {
  return !FindSubmodularityViolation(f, tolerance).has_value();
}

}  // namespace latred
