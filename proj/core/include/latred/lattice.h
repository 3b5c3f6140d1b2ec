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

#ifndef LATRED_LATTICE_H_
#define LATRED_LATTICE_H_

#include <string>

#include "latred/element_set.h"

namespace latred {

// The set interval [lower, upper] = {X : lower <= X <= upper}.
class Lattice {
 public:
  // Throws std::invalid_argument unless lower is a subset of upper.
  Lattice(ElementSet lower, ElementSet upper);

  // [empty, N].
  static Lattice Full(int n);
  // [x, x].
  static Lattice Point(const ElementSet& x);

  const ElementSet& lower() const { return lower_; }
  const ElementSet& upper() const { return upper_; }
  int universe_size() const { return lower_.universe_size(); }

  // upper \ lower, the elements whose membership is still undecided.
  ElementSet Free() const { return upper_ - lower_; }
  int FreeCount() const;
  bool IsPoint() const { return lower_ == upper_; }

  // lower <= x <= upper.
  bool Contains(const ElementSet& x) const;
  // [S', T'] is inside [S, T] iff S <= S' and T' <= T.
  bool IsSubLatticeOf(const Lattice& outer) const;

  std::string ToString() const;

  friend bool operator==(const Lattice&, const Lattice&) = default;

 private:
  ElementSet lower_;
  ElementSet upper_;
};

}  // namespace latred

#endif  // LATRED_LATTICE_H_
