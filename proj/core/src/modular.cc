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

#include "latred/modular.h"

#include <cmath>
#include <stdexcept>
#include <string>

#include "latred/rng.h"

namespace latred {

double ModularWeights::Eval(const ElementSet& x) const {
  if (x.universe_size() != size()) {
    throw std::invalid_argument("modular weights over " +
                                std::to_string(size()) +
                                " elements evaluated on a set over " +
                                std::to_string(x.universe_size()));
  }
  double sum = 0.0;
  x.ForEach([&](int i) { sum += w_[i]; });
  return sum;
}

double ModularWeights::MaxAbs() const {
  double m = 0.0;
  for (double v : w_) m = std::max(m, std::abs(v));
  return m;
}

ModularWeights UniformNoise(int n, double t, uint64_t seed) {
  if (!(t >= 0.0)) {
    throw std::invalid_argument("noise scale must be >= 0");
  }
  if (n <= 0) throw std::invalid_argument("noise length must be positive");
  std::vector<double> w(n, 0.0);
  if (t == 0.0) return ModularWeights(std::move(w));
  Rng rng(seed);
  for (double& v : w) v = rng.Uniform(-t, t);
  return ModularWeights(std::move(w));
}

}  // namespace latred
