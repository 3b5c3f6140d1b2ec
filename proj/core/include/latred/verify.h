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
// Self-check suite behind `latred verify`: exhaustive property checks on
// small random instances.
//

#ifndef LATRED_VERIFY_H_
#define LATRED_VERIFY_H_

#include <cstdint>
#include <string>
#include <vector>

#include "latred/instances.h"

namespace latred {

struct VerifyOptions {
  std::vector<Family> families = AllFamilies();
  int n = 8;  // at most kMaxExhaustiveCheck
  uint64_t seed = 1;
  int cases = 5;
  double tolerance = 1e-9;
};

struct VerifyReport {
  int checks = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Per instance:
//   - diminishing returns over every pair A subset B;
//   - a brute-force optimum stays inside the lattice after every reduction
//     iteration, for both senses;
//   - branch-and-bound matches brute force on maximization;
//   - one perturbation-reduction run per sense at P(t) = 1/2 loses no more
//     than the noise on mistakenly reduced elements, which in turn is at
//     most n t R_t.
// Throws std::invalid_argument for n outside [1, kMaxExhaustiveCheck].
VerifyReport RunPropertySuite(const VerifyOptions& options);

}  // namespace latred

#endif  // LATRED_VERIFY_H_
