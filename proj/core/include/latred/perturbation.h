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
// Perturbation-reduction: make an irreducible objective reducible by adding
// uniform modular noise, reduce the perturbed objective, then optimize the
// original objective on the reduced lattice.
//

#ifndef LATRED_PERTURBATION_H_
#define LATRED_PERTURBATION_H_

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>

#include "latred/lattice.h"
#include "latred/modular.h"
#include "latred/reduction.h"
#include "latred/set_function.h"
#include "latred/solvers.h"

namespace latred {

// One draw of the modular noise r, |r(i)| <= scale.
struct Perturbation {
  ModularWeights weights;
  double scale = 0.0;
  uint64_t seed = 0;
};

// r(i) ~ Uniform[-t, t] i.i.d., reproducible per seed.
Perturbation DrawPerturbation(int n, double t, uint64_t seed);
// Explicit noise vector; scale is max |w_i|.
Perturbation InjectedPerturbation(ModularWeights w);

// g = f + r.
class PerturbedFunction final : public SetFunction {
 public:
  PerturbedFunction(Oracle base, Perturbation noise);

  std::string name() const override { return base_->name() + "+noise"; }
  const Perturbation& noise() const { return noise_; }

 protected:
  double DoEval(const ElementSet& x) const override;
  double DoMarginal(int i, const ElementSet& a) const override;
  void DoMarginals(const ElementSet& a, std::span<const int> candidates,
                   std::span<double> out) const override;
  void DoRemovalMarginals(const ElementSet& y, std::span<const int> candidates,
                          std::span<double> out) const override;

 private:
  Oracle base_;
  Perturbation noise_;
};

// Throws std::invalid_argument on a ground-set mismatch.
std::shared_ptr<const PerturbedFunction> PerturbedOracle(
    Oracle f, const Perturbation& noise);

// P(t) = (t - m) / (M - m). Throws std::domain_error when M == m.
double ScaleRatio(const LatticeStats& stats, double t);
// Inverse of ScaleRatio: t = m + P (M - m).
double ScaleFromRatio(const LatticeStats& stats, double ratio);

struct PrOptions {
  double scale = 0.0;
  uint64_t seed = 0;
  SolverChoice inner;
  // Overrides the seeded draw (scale is then taken from the vector).
  std::optional<ModularWeights> injected_noise;
  ReductionOptions reduction;
};

struct PrResult {
  Sense sense = Sense::kMinimize;
  ElementSet solution;  // in `lattice`
  double value = 0.0;   // f(solution) for the unperturbed f
  // Lattice after the exact reduction of f (equal to the input when f was
  // irreducible there).
  Lattice exact_lattice = Lattice::Full(1);
  // Lattice after reducing the perturbed objective; the inner solver's domain.
  Lattice lattice = Lattice::Full(1);
  std::optional<ReductionTrace> exact_trace;
  ReductionTrace perturbed_trace;
  Perturbation perturbation;
  SolveReport inner;
  int64_t marginal_evaluations = 0;  // both reduction passes
  double seconds = 0.0;              // whole pipeline

  double final_rate() const { return ReductionRate(lattice); }
};

// Reduce f exactly when it is reducible on the lattice, reduce g = f + r from
// there, then run the inner solver on f over the result. One noise draw per
// call; a vacuous perturbed reduction is kept, not redrawn.
PrResult PerturbationReduction(const Oracle& f, const Lattice& lattice,
                               Sense sense, const PrOptions& options);
PrResult PrMinimize(const Oracle& f, const Lattice& lattice,
                    const PrOptions& options);
PrResult PrMaximize(const Oracle& f, const Lattice& lattice,
                    const PrOptions& options);

// CSV: mode,t,p_ratio,rate,value,loss,marginals,inner_evals,seconds,set
// `ratio` and `reference_value` are written empty when absent.
void WritePrResultHeader(std::ostream& out);
void WritePrResultRow(std::ostream& out, const PrResult& result,
                      std::optional<double> ratio,
                      std::optional<double> reference_value);

}  // namespace latred

#endif  // LATRED_PERTURBATION_H_
