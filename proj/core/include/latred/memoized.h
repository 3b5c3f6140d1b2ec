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

#ifndef LATRED_MEMOIZED_H_
#define LATRED_MEMOIZED_H_

#include <mutex>
#include <string>
#include <unordered_map>

#include "latred/set_function.h"

namespace latred {

// Caches f(X) keyed by the membership mask. Safe for concurrent use: lookups
// and inserts are serialized by a mutex, and the underlying oracle is called
// outside the lock (a racing miss may evaluate the same set twice).
//
// Marginals go through the cache via the two-evaluation definition, so fast
// paths of the wrapped family are not used.
class MemoizedFunction final : public SetFunction {
 public:
  explicit MemoizedFunction(Oracle base);

  std::string name() const override { return base_->name() + "+memo"; }
  size_t cache_size() const;
  int64_t hits() const;

 protected:
  double DoEval(const ElementSet& x) const override;

 private:
  Oracle base_;
  mutable std::mutex mu_;
  mutable std::unordered_map<ElementSet, double, ElementSetHash> cache_;
  mutable int64_t hits_ = 0;
};

Oracle Memoize(Oracle base);

}  // namespace latred

#endif  // LATRED_MEMOIZED_H_
