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

#ifndef LATRED_SUBMODULARITY_H_
#define LATRED_SUBMODULARITY_H_

#include <optional>

#include "latred/element_set.h"
#include "latred/set_function.h"

namespace latred {

inline constexpr int kMaxExhaustiveCheck = 14;

// A witness of f(i|A) < f(i|B) with A <= B, i notin B.
struct SubmodularityViolation {
  ElementSet a;
  ElementSet b;
  int element = -1;
  double gain_a = 0.0;
  double gain_b = 0.0;
};

// Exhaustive diminishing-returns check: f(i|A) >= f(i|B) - tolerance for all
// A <= B <= N, i notin B. Returns the first violation found, if any.
// Every one of the 2^n values is evaluated exactly once; the pair scan is
// O(n 3^n). Throws std::invalid_argument for n > kMaxExhaustiveCheck.
std::optional<SubmodularityViolation> FindSubmodularityViolation(
    const SetFunction& f, double tolerance = 1e-9);

bool VerifySubmodularity(const SetFunction& f, double tolerance = 1e-9);

}  // namespace latred

#endif  // LATRED_SUBMODULARITY_H_
