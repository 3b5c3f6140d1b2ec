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
// Seeded random problem instances for every objective family.
//

#ifndef LATRED_INSTANCES_H_
#define LATRED_INSTANCES_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "latred/families.h"
#include "latred/set_function.h"

namespace latred {

enum class Family {
  kSubsetSelection,
  kGaussianMI,
  kLogDet,
  kHalfProducts,
  kCut,
  kModular,
};

const char* FamilyName(Family family);
// "subset-selection", "gaussian-mi", "logdet", "half-products", "cut",
// "modular". Throws std::invalid_argument otherwise.
Family ParseFamily(const std::string& text);
std::vector<Family> AllFamilies();

// Generator constants.
inline constexpr double kSubsetSelectionLambda = 0.7;
inline constexpr int kLogDetDimension = 10;
inline constexpr double kLogDetGamma = 0.5;
inline constexpr double kCutEdgeProbability = 0.5;

using InstanceParams = std::variant<SubsetSelectionSpec, GaussianMISpec,
                                    LogDetSpec, HalfProductsSpec, CutSpec,
                                    ModularWeights>;

struct InstanceData {
  Family family = Family::kCut;
  int n = 0;
  uint64_t seed = 0;
  InstanceParams params;
};

// Draws the family's parameters:
//   subset-selection  M_ij ~ U(0,1) symmetric, M_ii = 1, lambda = 0.7
//   gaussian-mi       sigma = Z Z^T / m, Z ~ N(0,1)^{n x m}, m = 2n + 10
//   logdet            RBF kernel of n points ~ U[0,1]^10, gamma 0.5
//   half-products     a, b ~ U(0.1,0.5), c ~ U(1,5)
//   cut               each edge with probability 1/2, weight ~ U(0,1)
//   modular           w_i ~ U(-1,1)
// Deterministic per (family, n, seed). Throws std::invalid_argument for
// n outside [1, kMaxElements].
InstanceData GenerateInstanceData(Family family, int n, uint64_t seed);

Oracle BuildOracle(const InstanceData& data);

// GenerateInstanceData followed by BuildOracle.
Oracle GenerateInstance(Family family, int n, uint64_t seed);

// Human-readable parameter dump: a "# family n seed" line, then the
// parameters in matrix/vector file format, each preceded by its name.
void WriteInstance(std::ostream& out, const InstanceData& data);

}  // namespace latred

#endif  // LATRED_INSTANCES_H_
