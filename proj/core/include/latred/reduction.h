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
// Lattice reduction for unconstrained submodular minimization and
// maximization.
//
// Both directions evaluate the same two sets against the iteration-entry
// lattice [X, Y]:
//   U = {i in Y\X : f(i|X) < 0},   D = {j in Y\X : f(j|Y-j) > 0}.
// Minimization moves U into X and drops D from Y; maximization drops U from
// Y and moves D into X. U and D are both computed before either is applied.
// For submodular f every minimizer (resp. maximizer) inside the input
// lattice survives every iteration.
//

#ifndef LATRED_REDUCTION_H_
#define LATRED_REDUCTION_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <vector>

#include "latred/element_set.h"
#include "latred/lattice.h"
#include "latred/set_function.h"

namespace latred {

enum class Sense { kMinimize, kMaximize };

const char* SenseName(Sense sense);
// Accepts "min"/"max" (and "minimize"/"maximize").
Sense ParseSense(const std::string& text);

// An element satisfied both the U and D tests in one iteration, which
// cannot happen for a submodular oracle.
class NotSubmodularError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct ReductionOptions {
  // U uses f(i|X) < -tolerance and D uses f(j|Y-j) > tolerance. Zero keeps
  // the strict sign tests.
  double tolerance = 0.0;
};

struct ReductionIteration {
  ElementSet x;     // X_t
  ElementSet y;     // Y_t
  ElementSet up;    // U_t
  ElementSet down;  // D_t
};

struct ReductionTrace {
  Sense sense = Sense::kMinimize;
  Lattice input = Lattice::Full(1);
  Lattice output = Lattice::Full(1);
  // Iterations in order. The last one is the terminating iteration with
  // U = D = {} (its [X, Y] is the output lattice).
  std::vector<ReductionIteration> iterations;
  // Reduction rate of the lattice after each iteration, against |N|.
  std::vector<double> rates;
  // H_i: elements free in the input lattice and fixed in the output.
  ElementSet reduced;
  int64_t marginal_evaluations = 0;

  double final_rate() const { return rates.empty() ? 0.0 : rates.back(); }
  // Lattice after `k` iterations; 0 gives the input lattice, and values past
  // termination give the output lattice.
  Lattice LatticeAfter(int k) const;
  // Iterations that shrank the lattice.
  int effective_iterations() const {
    return static_cast<int>(iterations.size()) - 1;
  }
};

struct ReductionResult {
  Lattice lattice;
  ReductionTrace trace;
};

struct UpDownSets {
  ElementSet up;
  ElementSet down;
};

// U and D for the working lattice [x, y]. Costs 2|y\x| marginals.
UpDownSets FindUpDown(const SetFunction& f, const ElementSet& x,
                      const ElementSet& y, double tolerance = 0.0);

ReductionResult Reduce(const SetFunction& f, const Lattice& lattice,
                       Sense sense, const ReductionOptions& options = {});
ReductionResult ReduceMin(const SetFunction& f, const Lattice& lattice,
                          const ReductionOptions& options = {});
ReductionResult ReduceMax(const SetFunction& f, const Lattice& lattice,
                          const ReductionOptions& options = {});

// K_i = sgn f(i|S) * sgn f(i|T-i) per free element, K = max_i K_i.
struct ReducibilityReport {
  std::vector<int> elements;  // T\S in increasing order
  std::vector<int> signs;     // K_i, parallel to `elements`
  int k = 0;
  bool reducible() const { return k > 0; }
};

// Throws std::invalid_argument when T\S is empty.
ReducibilityReport ReducibilityIndex(const SetFunction& f,
                                     const Lattice& lattice);

struct LatticeStats {
  double min_margin = 0.0;  // m = min_i min(f(i|S), -f(i|T-i))
  double max_margin = 0.0;  // M = max_i max(f(i|S), -f(i|T-i))
  // c = max over f(i|S) > 0 of (f(i|S) - f(i|T-i)) / f(i|S); absent when no
  // free element has a positive gain at S.
  std::optional<double> curvature;
  double gain_sum = 0.0;  // k = sum_i f(i|S)
  int free_count = 0;     // s = |T\S|
  double midpoint = 0.0;  // F = (f(S) + f(T)) / 2
};

// Throws std::invalid_argument when T\S is empty.
LatticeStats ComputeLatticeStats(const SetFunction& f, const Lattice& lattice);

// 1 - |T'\S'| / n for after = [S', T']. Throws std::invalid_argument unless
// after is a sublattice of before.
double ReductionRate(const Lattice& before, const Lattice& after, int n);
double ReductionRate(const Lattice& lattice);

// CSV: iter,x_size,y_size,up_size,down_size,rate
void WriteTraceCsv(std::ostream& out, const ReductionTrace& trace);

}  // namespace latred

#endif  // LATRED_REDUCTION_H_
