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
// Set function oracles.
//
// A SetFunction is a pure map f: 2^N -> R with two counters: `eval_count`
// increments exactly once per Eval() call, and `marginal_count` once per
// marginal gain f(i|A) handed out (single or batched). The default marginal
// route is the two-evaluation definition f(A+i) - f(A) and therefore also
// bumps eval_count by two. Families override the Do* hooks with closed-form
// fast paths; the batched hooks let a family share one factorization across
// every candidate element of a reduction iteration.
//
// Counters are atomics, so a single oracle may be probed from many threads.
//

#ifndef LATRED_SET_FUNCTION_H_
#define LATRED_SET_FUNCTION_H_

#include <atomic>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "latred/element_set.h"

namespace latred {

class SetFunction {
 public:
  explicit SetFunction(int n);
  virtual ~SetFunction() = default;

  SetFunction(const SetFunction&) = delete;
  SetFunction& operator=(const SetFunction&) = delete;

  int n() const { return n_; }
  virtual std::string name() const = 0;

  // f(X).
  double Eval(const ElementSet& x) const;

  // f(i|A) = f(A+i) - f(A). Throws std::invalid_argument if i is in A.
  double Marginal(int i, const ElementSet& a) const;

  // f(i|A) for each i in `candidates`; none may belong to A.
  std::vector<double> Marginals(const ElementSet& a,
                                std::span<const int> candidates) const;

  // f(j|Y-j) for each j in `candidates`; all must belong to Y.
  std::vector<double> RemovalMarginals(const ElementSet& y,
                                       std::span<const int> candidates) const;

  int64_t eval_count() const { return evals_.load(std::memory_order_relaxed); }
  int64_t marginal_count() const {
    return marginals_.load(std::memory_order_relaxed);
  }
  void ResetCounters() const;

 protected:
  virtual double DoEval(const ElementSet& x) const = 0;
  // Defaults to Eval(A+i) - Eval(A).
  virtual double DoMarginal(int i, const ElementSet& a) const;
  // Defaults to DoMarginal per candidate.
  virtual void DoMarginals(const ElementSet& a, std::span<const int> candidates,
                           std::span<double> out) const;
  // Defaults to DoMarginal(j, Y-j) per candidate.
  virtual void DoRemovalMarginals(const ElementSet& y,
                                  std::span<const int> candidates,
                                  std::span<double> out) const;

  void CheckUniverse(const ElementSet& x) const;

 private:
  int n_;
  mutable std::atomic<int64_t> evals_{0};
  mutable std::atomic<int64_t> marginals_{0};
};

// Shared, immutable handle to an oracle.
using Oracle = std::shared_ptr<const SetFunction>;

// Wraps an arbitrary callable; handy for tests and ad-hoc objectives.
class LambdaFunction final : public SetFunction {
 public:
  using Fn = std::function<double(const ElementSet&)>;
  LambdaFunction(int n, Fn fn, std::string name = "lambda");

  std::string name() const override { return name_; }

 protected:
  double DoEval(const ElementSet& x) const override { return fn_(x); }

 private:
  Fn fn_;
  std::string name_;
};

Oracle MakeLambda(int n, LambdaFunction::Fn fn, std::string name = "lambda");

}  // namespace latred

#endif  // LATRED_SET_FUNCTION_H_
