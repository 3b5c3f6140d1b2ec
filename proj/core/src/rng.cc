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

#include "latred/rng.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace latred {

uint64_t MixSeed(uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

uint64_t DeriveSeed(uint64_t master, std::initializer_list<uint64_t> path) {
  uint64_t s = MixSeed(master);
  for (uint64_t p : path) s = MixSeed(s ^ MixSeed(p + 0x632be59bd9b4e019ull));
  return s;
}

Rng::Rng(uint64_t seed) : seed_(seed), engine_(MixSeed(seed)) {}

Rng Rng::Split(uint64_t stream) const {
  return Rng(DeriveSeed(seed_, {stream}));
}

double Rng::Uniform01() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::Uniform(double lo, double hi) {
  if (!(lo <= hi)) throw std::invalid_argument("Uniform: lo > hi");
  // Full 53-bit grid on [0, 1] so both endpoints are reachable.
  const double u = static_cast<double>(engine_() >> 11) / 9007199254740991.0;
  return lo + (hi - lo) * u;
}

uint64_t Rng::UniformInt(uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("UniformInt: zero bound");
  // Rejection sampling on the top of the range.
  const uint64_t limit = ~uint64_t{0} - (~uint64_t{0} % bound);
  uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

bool Rng::Bernoulli(double p) { return Uniform01() < p; }

double Rng::Normal() {
  double u1;
  do {
    u1 = Uniform01();
  } while (u1 <= 0.0);
  const double u2 = Uniform01();
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace latred
