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
// Closed-form reducibility-gain and performance-loss bounds for
// perturbation-reduction, and the bookkeeping of mistakenly reduced
// elements they are stated in. All evaluators are pure arithmetic. Values
// are returned raw; clamping to a meaningful range is reported separately.
//

#ifndef LATRED_BOUNDS_H_
#define LATRED_BOUNDS_H_

#include <iosfwd>
#include <string>
#include <vector>

#include "latred/element_set.h"
#include "latred/perturbation.h"
#include "latred/reduction.h"

namespace latred {

struct BoundQuery {
  Sense sense = Sense::kMaximize;
  double t = 0.0;         // perturbation scale
  double delta = 0.1;     // confidence / approximation slack, in (0, 1)
  double epsilon = 0.25;  // mistake budget fraction, in (0, 1/2)
  int n = 0;              // element count (n_{k-1} for later iterations)
  double rate = 0.0;      // reduction rate R_t
  double curvature = 0.0;
  double gain_sum = 0.0;  // k
  int free_count = 0;     // s
  double midpoint = 0.0;  // F (F_{k-1} for later iterations)
  double optimum = 0.0;   // f at a reference optimum of the unperturbed problem
};

// Fills curvature, gain_sum, free_count and midpoint from lattice stats.
// Throws std::domain_error when the curvature is undefined.
BoundQuery QueryFromStats(const LatticeStats& stats, double t);

struct ClampedBound {
  double raw = 0.0;
  double clamped = 0.0;
};

// Expected reduction rate of the first iteration is at least
// 1 - c k / (2 t s); clamped to [0, 1]. Throws std::invalid_argument for
// s <= 0 or t <= 0.
ClampedBound ExpectedReductionRateBound(const BoundQuery& q);

struct LossBounds {
  // Noise mass on the mistakenly reduced elements:
  //   min: -r(X_t \ X_*) + r(X_* \ Y_t)
  //   max:  r(X_t \ X^*) - r(X^* \ Y_t)
  double exact = 0.0;
  double coarse = 0.0;  // n t R_t
};

// `trace` is the reduction of g = f + r; `reference` an optimum of f.
// Throws std::invalid_argument when reference lies outside trace.input.
LossBounds PerformanceLossBounds(const Perturbation& r,
                                 const ReductionTrace& trace,
                                 const ElementSet& reference, int n,
                                 double rate);

// t sqrt(2 K (n + ln(1/delta))) for K mistakenly reduced elements; holds
// with probability at least 1 - delta. Throws for delta outside (0, 1).
double HighProbabilityLossBound(const BoundQuery& q, int mistaken);

// Expected number of mistakes in one iteration that starts from a lattice
// with q.n free elements and midpoint q.midpoint:
//   min: n/2 - (F - f(X_*)) / t,   max: n/2 - (f(X^*) - F) / t.
// The first iteration on [empty, N] uses n = |N| and F = (f({}) + f(N)) / 2.
double ExpectedMistakesBound(const BoundQuery& q);

struct MistakenReductionReport {
  ElementSet contraction;  // (reference | X_t) & Y_t
  int total = 0;           // |contraction ^ reference|
  // Elements fixed against the reference in each iteration (added to X
  // while outside it, or dropped from Y while inside it).
  std::vector<int> per_iteration;
};

// Throws std::invalid_argument when reference lies outside trace.input.
MistakenReductionReport CountMistakes(const ElementSet& reference,
                                      const ReductionTrace& trace);

enum class ScaleRule {
  // t = 2 (f(X^*) - F) / (n (1 - 2 epsilon)): about epsilon n mistakes.
  kMistakeBudget,
  // t = 2 ((1 + delta) f(X^*) - F) / n: loss within a (1 - delta) ratio.
  kApproximationRatio,
};

// Throws std::invalid_argument for epsilon outside (0, 1/2), delta <= 0, or
// a non-positive numerator.
double SuggestScale(const BoundQuery& q, ScaleRule rule);

// One row of a bound-vs-empirical comparison.
struct BoundComparison {
  std::string config_id;
  double t = 0.0;
  double ratio = 0.0;
  std::string bound_name;
  double bound_value = 0.0;
  double empirical_mean = 0.0;
  double empirical_stderr = 0.0;
  int draws = 0;
};

// CSV: config_id,t,p_ratio,bound,bound_value,empirical_mean,empirical_stderr,draws
void WriteBoundComparisonCsv(std::ostream& out,
                             const std::vector<BoundComparison>& rows);

}  // namespace latred

#endif  // LATRED_BOUNDS_H_
