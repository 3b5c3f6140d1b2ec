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

#include "latred/reduction.h"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <string>

namespace latred {
namespace {

int Sign(double v) { return (v > 0.0) - (v < 0.0); }

}  // namespace

const char* SenseName(Sense sense) {
  return sense == Sense::kMinimize ? "min" : "max";
}

Sense ParseSense(const std::string& text) {
  if (text == "min" || text == "minimize") return Sense::kMinimize;
  if (text == "max" || text == "maximize") return Sense::kMaximize;
  throw std::invalid_argument("unknown mode '" + text + "' (want min|max)");
}

Lattice ReductionTrace::LatticeAfter(int k) const {
  if (k <= 0 || iterations.empty()) return input;
  if (k >= static_cast<int>(iterations.size())) return output;
  const ReductionIteration& it = iterations[k];
  return Lattice(it.x, it.y);
}

UpDownSets FindUpDown(const SetFunction& f, const ElementSet& x,
                      const ElementSet& y, double tolerance) {
  const std::vector<int> free = (y - x).Members();
  UpDownSets sets{ElementSet(f.n()), ElementSet(f.n())};
  if (free.empty()) return sets;
  const std::vector<double> gains_at_x = f.Marginals(x, free);
  const std::vector<double> gains_at_y = f.RemovalMarginals(y, free);
  for (size_t k = 0; k < free.size(); ++k) {
    if (gains_at_x[k] < -tolerance) sets.up.Insert(free[k]);
    if (gains_at_y[k] > tolerance) sets.down.Insert(free[k]);
  }
  return sets;
}

ReductionResult Reduce(const SetFunction& f, const Lattice& lattice,
                       Sense sense, const ReductionOptions& options) {
  if (lattice.universe_size() != f.n()) {
    throw std::invalid_argument("lattice and oracle ground sets differ");
  }
  const int n = f.n();
  ReductionTrace trace;
  trace.sense = sense;
  trace.input = lattice;
  ElementSet x = lattice.lower();
  ElementSet y = lattice.upper();
  while (true) {
    const int free_count = y.Count() - x.Count();
    UpDownSets sets = FindUpDown(f, x, y, options.tolerance);
    trace.marginal_evaluations += 2 * static_cast<int64_t>(free_count);
    if (!(sets.up & sets.down).IsEmpty()) {
      throw NotSubmodularError(
          "elements {" + (sets.up & sets.down).ToString() +
          "} have f(i|X) < 0 and f(i|Y-i) > 0; oracle is not submodular");
    }
    const bool done = sets.up.IsEmpty() && sets.down.IsEmpty();
    trace.iterations.push_back({x, y, sets.up, sets.down});
    if (done) break;
    if (sense == Sense::kMinimize) {
      x |= sets.up;
      y -= sets.down;
    } else {
      y -= sets.up;
      x |= sets.down;
    }
    trace.rates.push_back(1.0 - static_cast<double>(y.Count() - x.Count()) /
                                    static_cast<double>(n));
  }
  // The terminating iteration leaves the lattice unchanged.
  trace.rates.push_back(1.0 - static_cast<double>(y.Count() - x.Count()) /
                                  static_cast<double>(n));
  trace.output = Lattice(x, y);
  trace.reduced = lattice.Free() - trace.output.Free();
  return ReductionResult{trace.output, std::move(trace)};
}

ReductionResult ReduceMin(const SetFunction& f, const Lattice& lattice,
                          const ReductionOptions& options) {
  return Reduce(f, lattice, Sense::kMinimize, options);
}

ReductionResult ReduceMax(const SetFunction& f, const Lattice& lattice,
                          const ReductionOptions& options) {
  return Reduce(f, lattice, Sense::kMaximize, options);
}

ReducibilityReport ReducibilityIndex(const SetFunction& f,
                                     const Lattice& lattice) {
  ReducibilityReport report;
  report.elements = lattice.Free().Members();
  if (report.elements.empty()) {
    throw std::invalid_argument("reducibility index needs a non-point lattice");
  }
  const auto at_lower = f.Marginals(lattice.lower(), report.elements);
  const auto at_upper = f.RemovalMarginals(lattice.upper(), report.elements);
  report.signs.resize(report.elements.size());
  report.k = -1;
  for (size_t k = 0; k < report.elements.size(); ++k) {
    report.signs[k] = Sign(at_lower[k]) * Sign(at_upper[k]);
    report.k = std::max(report.k, report.signs[k]);
  }
  return report;
}

LatticeStats ComputeLatticeStats(const SetFunction& f, const Lattice& lattice) {
  const std::vector<int> free = lattice.Free().Members();
  if (free.empty()) {
    throw std::invalid_argument("lattice statistics need a non-point lattice");
  }
  const auto at_lower = f.Marginals(lattice.lower(), free);
  const auto at_upper = f.RemovalMarginals(lattice.upper(), free);
  LatticeStats stats;
  stats.free_count = static_cast<int>(free.size());
  stats.min_margin = std::min(at_lower[0], -at_upper[0]);
  stats.max_margin = std::max(at_lower[0], -at_upper[0]);
  for (size_t k = 0; k < free.size(); ++k) {
    stats.min_margin =
        std::min(stats.min_margin, std::min(at_lower[k], -at_upper[k]));
    stats.max_margin =
        std::max(stats.max_margin, std::max(at_lower[k], -at_upper[k]));
    stats.gain_sum += at_lower[k];
    if (at_lower[k] > 0.0) {
      const double ratio = (at_lower[k] - at_upper[k]) / at_lower[k];
      stats.curvature =
          stats.curvature ? std::max(*stats.curvature, ratio) : ratio;
    }
  }
  stats.midpoint = 0.5 * (f.Eval(lattice.lower()) + f.Eval(lattice.upper()));
  return stats;
}

double ReductionRate(const Lattice& before, const Lattice& after, int n) {
  if (!after.IsSubLatticeOf(before)) {
    throw std::invalid_argument("reduced lattice " + after.ToString() +
                                " is not inside " + before.ToString());
  }
  if (n <= 0) throw std::invalid_argument("ground set size must be positive");
  return 1.0 - static_cast<double>(after.FreeCount()) / n;
}

double ReductionRate(const Lattice& lattice) {
  return 1.0 - static_cast<double>(lattice.FreeCount()) /
                   lattice.universe_size();
}

void WriteTraceCsv(std::ostream& out, const ReductionTrace& trace) {
  out << "# latred reduction-trace v1 mode=" << SenseName(trace.sense) << "\n";
  out << "iter,x_size,y_size,up_size,down_size,rate\n";
  for (size_t t = 0; t < trace.iterations.size(); ++t) {
    const ReductionIteration& it = trace.iterations[t];
    char rate[32];
    std::snprintf(rate, sizeof(rate), "%.10g", trace.rates[t]);
    out << t << ',' << it.x.Count() << ',' << it.y.Count() << ','
        << it.up.Count() << ',' << it.down.Count() << ',' << rate << "\n";
  }
}

}  // namespace latred
