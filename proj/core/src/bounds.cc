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

#include "latred/bounds.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace latred {
namespace {

void CheckReference(const ElementSet& reference, const ReductionTrace& trace) {
  if (!trace.input.Contains(reference)) {
    throw std::invalid_argument("reference {" + reference.ToString() +
                                "} lies outside the input lattice " +
                                trace.input.ToString());
  }
}

}  // namespace

BoundQuery QueryFromStats(const LatticeStats& stats, double t) {
  if (!stats.curvature) {
    throw std::domain_error("curvature undefined: no positive gain at S");
  }
  BoundQuery q;
  q.t = t;
  q.curvature = *stats.curvature;
  q.gain_sum = stats.gain_sum;
  q.free_count = stats.free_count;
  q.n = stats.free_count;
  q.midpoint = stats.midpoint;
  return q;
}

ClampedBound ExpectedReductionRateBound(const BoundQuery& q) {
  if (q.free_count <= 0) {
    throw std::invalid_argument("reduction bound needs s > 0");
  }
  if (!(q.t > 0.0)) throw std::invalid_argument("reduction bound needs t > 0");
  ClampedBound b;
  b.raw = 1.0 - q.curvature * q.gain_sum / (2.0 * q.t * q.free_count);
  b.clamped = std::clamp(b.raw, 0.0, 1.0);
  return b;
}

LossBounds PerformanceLossBounds(const Perturbation& r,
                                 const ReductionTrace& trace,
                                 const ElementSet& reference, int n,
                                 double rate) {
  CheckReference(reference, trace);
  const ElementSet& x = trace.output.lower();
  const ElementSet& y = trace.output.upper();
  const double added = r.weights.Eval(x - reference);
  const double dropped = r.weights.Eval(reference - y);
  LossBounds b;
  b.exact = trace.sense == Sense::kMinimize ? dropped - added : added - dropped;
  b.coarse = n * r.scale * rate;
  return b;
}

double HighProbabilityLossBound(const BoundQuery& q, int mistaken) {
  if (!(q.delta > 0.0 && q.delta < 1.0)) {
    throw std::invalid_argument("delta must lie in (0, 1)");
  }
  if (mistaken < 0) throw std::invalid_argument("negative mistake count");
  return q.t * std::sqrt(2.0 * mistaken * (q.n + std::log(1.0 / q.delta)));
}

double ExpectedMistakesBound(const BoundQuery& q) {
  if (!(q.t > 0.0)) throw std::invalid_argument("mistake bound needs t > 0");
  const double gap = q.sense == Sense::kMinimize ? q.midpoint - q.optimum
                                                 : q.optimum - q.midpoint;
  return 0.5 * q.n - gap / q.t;
}

MistakenReductionReport CountMistakes(const ElementSet& reference,
                                      const ReductionTrace& trace) {
  CheckReference(reference, trace);
  MistakenReductionReport report;
  const ElementSet& x = trace.output.lower();
  const ElementSet& y = trace.output.upper();
  report.contraction = (reference | x) & y;
  report.total = (report.contraction ^ reference).Count();
  for (size_t t = 0; t + 1 < trace.iterations.size(); ++t) {
    const ReductionIteration& now = trace.iterations[t];
    const ReductionIteration& next = trace.iterations[t + 1];
    const ElementSet added = next.x - now.x;
    const ElementSet dropped = now.y - next.y;
    report.per_iteration.push_back((added - reference).Count() +
                                   (dropped & reference).Count());
  }
  return report;
}

double SuggestScale(const BoundQuery& q, ScaleRule rule) {
  if (q.n <= 0) throw std::invalid_argument("scale rule needs n > 0");
  if (rule == ScaleRule::kMistakeBudget) {
    if (!(q.epsilon > 0.0 && q.epsilon < 0.5)) {
      throw std::invalid_argument("epsilon must lie in (0, 1/2)");
    }
    const double numerator = 2.0 * (q.optimum - q.midpoint);
    if (!(numerator > 0.0)) {
      throw std::invalid_argument("mistake-budget rule needs f(X^*) > F");
    }
    return numerator / (q.n * (1.0 - 2.0 * q.epsilon));
  }
  if (!(q.delta > 0.0)) throw std::invalid_argument("delta must be positive");
  const double numerator = 2.0 * ((1.0 + q.delta) * q.optimum - q.midpoint);
  if (!(numerator > 0.0)) {
    throw std::invalid_argument(
        "approximation-ratio rule needs (1 + delta) f(X^*) > F");
  }
  return numerator / q.n;
}

void WriteBoundComparisonCsv(std::ostream& out,
                             const std::vector<BoundComparison>& rows) {
  out << "# latred bound-comparison v1\n";
  out << "config_id,t,p_ratio,bound,bound_value,empirical_mean,"
         "empirical_stderr,draws\n";
  char buf[256];
  for (const BoundComparison& r : rows) {
    std::snprintf(buf, sizeof(buf), "%s,%.10g,%.10g,%s,%.10g,%.10g,%.10g,%d\n",
                  r.config_id.c_str(), r.t, r.ratio, r.bound_name.c_str(),
                  r.bound_value, r.empirical_mean, r.empirical_stderr,
                  r.draws);
    out << buf;
  }
}

}  // namespace latred
