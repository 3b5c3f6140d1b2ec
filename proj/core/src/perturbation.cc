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

#include "latred/perturbation.h"

#include <chrono>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace latred {

Perturbation DrawPerturbation(int n, double t, uint64_t seed) {
  return Perturbation{UniformNoise(n, t, seed), t, seed};
}

Perturbation InjectedPerturbation(ModularWeights w) {
  const double scale = w.MaxAbs();
  return Perturbation{std::move(w), scale, 0};
}

PerturbedFunction::PerturbedFunction(Oracle base, Perturbation noise)
    : SetFunction(base->n()), base_(std::move(base)), noise_(std::move(noise)) {
  if (noise_.weights.size() != base_->n()) {
    throw std::invalid_argument("noise over " +
                                std::to_string(noise_.weights.size()) +
                                " elements added to an oracle over " +
                                std::to_string(base_->n()));
  }
}

double PerturbedFunction::DoEval(const ElementSet& x) const {
  return base_->Eval(x) + noise_.weights.Eval(x);
}

double PerturbedFunction::DoMarginal(int i, const ElementSet& a) const {
  return base_->Marginal(i, a) + noise_.weights[i];
}

void PerturbedFunction::DoMarginals(const ElementSet& a,
                                    std::span<const int> candidates,
                                    std::span<double> out) const {
  const auto gains = base_->Marginals(a, candidates);
  for (size_t k = 0; k < candidates.size(); ++k) {
    out[k] = gains[k] + noise_.weights[candidates[k]];
  }
}

void PerturbedFunction::DoRemovalMarginals(const ElementSet& y,
                                           std::span<const int> candidates,
                                           std::span<double> out) const {
  const auto gains = base_->RemovalMarginals(y, candidates);
  for (size_t k = 0; k < candidates.size(); ++k) {
    out[k] = gains[k] + noise_.weights[candidates[k]];
  }
}

std::shared_ptr<const PerturbedFunction> PerturbedOracle(
    Oracle f, const Perturbation& noise) {
  return std::make_shared<PerturbedFunction>(std::move(f), noise);
}

double ScaleRatio(const LatticeStats& stats, double t) {
  const double span = stats.max_margin - stats.min_margin;
  if (!(span != 0.0)) {
    throw std::domain_error("scale ratio undefined: max margin equals min");
  }
  return (t - stats.min_margin) / span;
}

double ScaleFromRatio(const LatticeStats& stats, double ratio) {
  return stats.min_margin + ratio * (stats.max_margin - stats.min_margin);
}

PrResult PerturbationReduction(const Oracle& f, const Lattice& lattice,
                               Sense sense, const PrOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  PrResult result;
  result.sense = sense;
  result.perturbation =
      options.injected_noise
          ? InjectedPerturbation(*options.injected_noise)
          : DrawPerturbation(f->n(), options.scale, options.seed);

  // Exact reduction of f, only when the index says it makes progress.
  Lattice working = lattice;
  if (!working.IsPoint() && ReducibilityIndex(*f, working).reducible()) {
    ReductionResult exact = Reduce(*f, working, sense, options.reduction);
    result.marginal_evaluations += exact.trace.marginal_evaluations;
    working = exact.lattice;
    result.exact_trace = std::move(exact.trace);
  }
  result.exact_lattice = working;

  const auto g = PerturbedOracle(f, result.perturbation);
  ReductionResult perturbed = Reduce(*g, working, sense, options.reduction);
  result.marginal_evaluations += perturbed.trace.marginal_evaluations;
  result.lattice = perturbed.lattice;
  result.perturbed_trace = std::move(perturbed.trace);

  // The inner solver sees f, never g.
  result.inner = Solve(f, result.lattice, sense, options.inner);
  result.solution = result.inner.solution;
  result.value = result.inner.value;
  result.seconds = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return result;
}

PrResult PrMinimize(const Oracle& f, const Lattice& lattice,
                    const PrOptions& options) {
  return PerturbationReduction(f, lattice, Sense::kMinimize, options);
}

PrResult PrMaximize(const Oracle& f, const Lattice& lattice,
                    const PrOptions& options) {
  return PerturbationReduction(f, lattice, Sense::kMaximize, options);
}

void WritePrResultHeader(std::ostream& out) {
  out << "mode,t,p_ratio,rate,value,loss,marginals,inner_evals,seconds,set\n";
}

void WritePrResultRow(std::ostream& out, const PrResult& result,
                      std::optional<double> ratio,
                      std::optional<double> reference_value) {
  auto num = [](double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return std::string(buf);
  };
  std::string loss;
  if (reference_value) {
    loss = num(result.sense == Sense::kMinimize
                   ? result.value - *reference_value
                   : *reference_value - result.value);
  }
  char seconds[40];
  std::snprintf(seconds, sizeof(seconds), "%.6f", result.seconds);
  out << SenseName(result.sense) << ',' << num(result.perturbation.scale)
      << ',' << (ratio ? num(*ratio) : "") << ',' << num(result.final_rate())
      << ',' << num(result.value) << ',' << loss << ','
      << result.marginal_evaluations << ',' << result.inner.evals << ','
      << seconds << ",\"" << result.solution.ToString() << "\"\n";
}

}  // namespace latred
