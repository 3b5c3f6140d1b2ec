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

#ifndef LATRED_MODULAR_H_
#define LATRED_MODULAR_H_

#include <cstdint>
#include <vector>

#include "latred/element_set.h"

namespace latred {

// Weights of a modular function r(X) = sum_{i in X} w_i.
class ModularWeights {
 public:
  ModularWeights() = default;
  explicit ModularWeights(std::vector<double> w) : w_(std::move(w)) {}

  int size() const { return static_cast<int>(w_.size()); }
  double operator[](int i) const { return w_[i]; }
  const std::vector<double>& values() const { return w_; }

  // r(X). Throws std::invalid_argument on a ground-set size mismatch.
  double Eval(const ElementSet& x) const;

  // max_i |w_i|, 0 when empty.
  double MaxAbs() const;

  friend bool operator==(const ModularWeights&,
                         const ModularWeights&) = default;

 private:
  std::vector<double> w_;
};

// n i.i.d. draws from Uniform[-t, t], reproducible per seed.
// Throws std::invalid_argument for t < 0 or a non-positive n.
ModularWeights UniformNoise(int n, double t, uint64_t seed);

}  // namespace latred

#endif  // LATRED_MODULAR_H_
