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

#include "latred/verify.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "latred/bounds.h"
#include "latred/perturbation.h"
#include "latred/reduction.h"
#include "latred/rng.h"
#include "latred/solvers.h"
#include "latred/submodularity.h"

namespace latred {
namespace {

std::string Label(Family family, int case_id) {
  return std::string(FamilyName(family)) + " case " + std::to_string(case_id);
}

}  // namespace

VerifyReport RunPropertySuite(const VerifyOptions& options) {
  if (options.n < 1 || options.n > kMaxExhaustiveCheck) {
    throw std::invalid_argument("verify needs 1 <= n <= " +
                                std::to_string(kMaxExhaustiveCheck));
  }
  VerifyReport report;
  auto check = [&](bool ok, const std::string& what) {
    ++report.checks;
    if (!ok) report.violations.push_back(what);
  };

  for (Family family : options.families) {
    for (int c = 0; c < options.cases; ++c) {
      const Oracle f = GenerateInstance(family, options.n, options.seed + c);
      const std::string label = Label(family, c);
      const Lattice full = Lattice::Full(options.n);

      const auto violation = FindSubmodularityViolation(*f, options.tolerance);
      check(!violation, label + ": not submodular" +
                            (violation ? " at element " +
                                             std::to_string(violation->element)
                                       : ""));
      if (violation) continue;

      for (Sense sense : {Sense::kMinimize, Sense::kMaximize}) {
        const SolveReport opt = BruteForce(f, full, sense);
        const ReductionTrace trace = Reduce(*f, full, sense).trace;
        bool kept = true;
        for (const ReductionIteration& it : trace.iterations) {
          kept = kept && it.x.IsSubsetOf(opt.solution) &&
                 opt.solution.IsSubsetOf(it.y);
        }
        check(kept, label + ": " + SenseName(sense) +
                        " reduction cut off the optimum");

        if (full.IsPoint()) continue;
        const LatticeStats stats = ComputeLatticeStats(*f, full);
        if (stats.max_margin <= stats.min_margin) continue;
        PrOptions pr_options;
        pr_options.scale = std::max(0.0, ScaleFromRatio(stats, 0.5));
        pr_options.seed = DeriveSeed(options.seed, {static_cast<uint64_t>(c)});
        const PrResult pr = PerturbationReduction(f, full, sense, pr_options);
        // Loss bounds apply to the perturbed reduction, which starts from the
        // exact lattice; that lattice contains every optimum.
        const SolveReport ref = BruteForce(f, pr.exact_lattice, sense);
        const LossBounds bounds =
            PerformanceLossBounds(pr.perturbation, pr.perturbed_trace,
                                  ref.solution, options.n, pr.final_rate());
        const double loss = sense == Sense::kMinimize ? pr.value - ref.value
                                                      : ref.value - pr.value;
        const double slack =
            options.tolerance * (1.0 + std::abs(ref.value) + bounds.coarse);
        check(loss <= bounds.exact + slack,
              label + ": " + SenseName(sense) + " loss exceeds noise bound");
        check(bounds.exact <= bounds.coarse + slack,
              label + ": " + SenseName(sense) + " noise bound exceeds n t R");
      }

      const SolveReport brute = BruteForce(f, full, Sense::kMaximize);
      const SolveReport bnb = BranchAndBoundMax(f, full);
      check(std::abs(brute.value - bnb.value) <=
                options.tolerance * (1.0 + std::abs(brute.value)),
            label + ": branch-and-bound disagrees with brute force");
    }
  }
  return report;
}

}  // namespace latred
