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

#include "latred/memoized.h"

#include <utility>

namespace latred {

MemoizedFunction::MemoizedFunction(Oracle base)
    : SetFunction(base->n()), base_(std::move(base)) {}

size_t MemoizedFunction::cache_size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return cache_.size();
}

int64_t MemoizedFunction::hits() const {
  std::lock_guard<std::mutex> lock(mu_);
  return hits_;
}

double MemoizedFunction::DoEval(const ElementSet& x) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(x);
    if (it != cache_.end()) {
      ++hits_;
      return it->second;
    }
  }
  const double value = base_->Eval(x);
  std::lock_guard<std::mutex> lock(mu_);
  cache_.emplace(x, value);
  return value;
}

Oracle Memoize(Oracle base) {
  return std::make_shared<MemoizedFunction>(std::move(base));
}

}  // namespace latred
