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

#include "latred/lattice.h"

#include <stdexcept>
#include <utility>

namespace latred {

Lattice::Lattice(ElementSet lower, ElementSet upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
  if (!lower_.IsSubsetOf(upper_)) {
    throw std::invalid_argument("lattice lower bound {" + lower_.ToString() +
                                "} is not a subset of upper bound {" +
                                upper_.ToString() + "}");
  }
}

Lattice Lattice::Full(int n) {
  return Lattice(ElementSet::Empty(n), ElementSet::Full(n));
}

Lattice Lattice::Point(const ElementSet& x) { return Lattice(x, x); }

int Lattice::FreeCount() const { return upper_.Count() - lower_.Count(); }

bool Lattice::Contains(const ElementSet& x) const {
  return lower_.IsSubsetOf(x) && x.IsSubsetOf(upper_);
}

bool Lattice::IsSubLatticeOf(const Lattice& outer) const {
  return outer.lower_.IsSubsetOf(lower_) && upper_.IsSubsetOf(outer.upper_);
}

std::string Lattice::ToString() const {
  return "[{" + lower_.ToString() + "},{" + upper_.ToString() + "}]";
}

}  // namespace latred
