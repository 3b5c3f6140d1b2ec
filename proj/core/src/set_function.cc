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

#include "latred/set_function.h"

#include <stdexcept>
#include <utility>

namespace latred {

SetFunction::SetFunction(int n) : n_(GroundSet::Of(n).n) {}

void SetFunction::CheckUniverse(const ElementSet& x) const {
  if (x.universe_size() != n_) {
    throw std::invalid_argument("set over " +
                                std::to_string(x.universe_size()) +
                                " elements passed to " + name() + " over " +
                                std::to_string(n_));
  }
}

void SetFunction::ResetCounters() const {
  evals_.store(0, std::memory_order_relaxed);
  marginals_.store(0, std::memory_order_relaxed);
}

double SetFunction::Eval(const ElementSet& x) const {
  CheckUniverse(x);
  evals_.fetch_add(1, std::memory_order_relaxed);
  return DoEval(x);
}

double SetFunction::Marginal(int i, const ElementSet& a) const {
  CheckUniverse(a);
  if (a.Contains(i)) {
    throw std::invalid_argument("marginal f(i|A) requires i not in A (i=" +
                                std::to_string(i) + ")");
  }
  marginals_.fetch_add(1, std::memory_order_relaxed);
  return DoMarginal(i, a);
}

std::vector<double> SetFunction::Marginals(
    const ElementSet& a, std::span<const int> candidates) const {
  CheckUniverse(a);
  for (int i : candidates) {
    if (a.Contains(i)) {
      throw std::invalid_argument("marginal f(i|A) requires i not in A (i=" +
                                  std::to_string(i) + ")");
    }
  }
  std::vector<double> out(candidates.size());
  if (candidates.empty()) return out;
  marginals_.fetch_add(static_cast<int64_t>(candidates.size()),
                       std::memory_order_relaxed);
  DoMarginals(a, candidates, out);
  return out;
}

std::vector<double> SetFunction::RemovalMarginals(
    const ElementSet& y, std::span<const int> candidates) const {
  CheckUniverse(y);
  for (int j : candidates) {
    if (!y.Contains(j)) {
      throw std::invalid_argument(
          "removal marginal f(j|Y-j) requires j in Y (j=" + std::to_string(j) +
          ")");
    }
  }
  std::vector<double> out(candidates.size());
  if (candidates.empty()) return out;
  marginals_.fetch_add(static_cast<int64_t>(candidates.size()),
                       std::memory_order_relaxed);
  DoRemovalMarginals(y, candidates, out);
  return out;
}

double SetFunction::DoMarginal(int i, const ElementSet& a) const {
  return Eval(a.With(i)) - Eval(a);
}

void SetFunction::DoMarginals(const ElementSet& a,
                              std::span<const int> candidates,
                              std::span<double> out) const {
  for (size_t k = 0; k < candidates.size(); ++k) {
    out[k] = DoMarginal(candidates[k], a);
  }
}

void SetFunction::DoRemovalMarginals(const ElementSet& y,
                                     std::span<const int> candidates,
                                     std::span<double> out) const {
  for (size_t k = 0; k < candidates.size(); ++k) {
    out[k] = DoMarginal(candidates[k], y.Without(candidates[k]));
  }
}

LambdaFunction::LambdaFunction(int n, Fn fn, std::string name)
    : SetFunction(n), fn_(std::move(fn)), name_(std::move(name)) {}

Oracle MakeLambda(int n, LambdaFunction::Fn fn, std::string name) {
  return std::make_shared<LambdaFunction>(n, std::move(fn), std::move(name));
}

}  // namespace latred
