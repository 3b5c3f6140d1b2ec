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

#ifndef LATRED_RNG_H_
#define LATRED_RNG_H_

#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>
#include <vector>

namespace latred {

// Seeded pseudo-random source, passed by value.
//
// The engine is std::mt19937_64, whose output sequence is fixed by the
// standard. Every derived quantity (uniform reals, integers, normals,
// shuffles) is computed here rather than through <random> distributions,
// whose algorithms are implementation-defined, so a seed reproduces the same
// bytes on every platform.
class Rng {
 public:
  explicit Rng(uint64_t seed);

  uint64_t seed() const { return seed_; }

  // An independent stream derived from this generator's seed and `stream`.
  // Does not advance this generator.
  Rng Split(uint64_t stream) const;

  uint64_t NextU64() { return engine_(); }
  // Uniform on [0, 1) with 53 random bits.
  double Uniform01();
  // Uniform on [lo, hi].
  double Uniform(double lo, double hi);
  // Uniform integer on [0, bound). bound must be positive.
  uint64_t UniformInt(uint64_t bound);
  bool Bernoulli(double p);
  // Standard normal (Box-Muller).
  double Normal();

  template <typename T>
  void Shuffle(std::span<T> items) {
    for (size_t i = items.size(); i > 1; --i) {
      const size_t j = static_cast<size_t>(UniformInt(i));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  uint64_t seed_;
  std::mt19937_64 engine_;
};

// SplitMix64 finalizer.
uint64_t MixSeed(uint64_t x);

// Deterministic seed for the node reached from `master` along `path`, e.g.
// DeriveSeed(master, {case_id, grid_index, draw}).
uint64_t DeriveSeed(uint64_t master, std::initializer_list<uint64_t> path);

}  // namespace latred

#endif  // LATRED_RNG_H_
