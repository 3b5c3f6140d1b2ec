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
// Experiment sweeps: reduction rates of the perturbed objective across a
// grid of perturbation scales, and optimization runs that compare a
// baseline solver on the full lattice with perturbation-reduction.
//
// All randomness is derived from (instance_seed, master_seed), so every
// deterministic CSV is reproducible. Wall-clock measurements are kept out
// of those files and go to a separate timing table.
//

#ifndef LATRED_EXPERIMENT_H_
#define LATRED_EXPERIMENT_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "latred/config.h"
#include "latred/instances.h"
#include "latred/reduction.h"
#include "latred/solvers.h"

namespace latred {

struct ExperimentConfig {
  Family family = Family::kCut;
  int n = 20;
  // Case c uses the instance generated from instance_seed + c.
  uint64_t instance_seed = 1;
  int cases = 1;
  // P(t) ratios, or absolute t values when absolute_scale is set.
  std::vector<double> grid = {0.0, 0.25, 0.5, 0.75, 1.0};
  bool absolute_scale = false;
  int draws = 10;
  Sense sense = Sense::kMaximize;
  SolverChoice baseline{SolverKind::kBranchAndBound};
  SolverChoice inner{SolverKind::kBranchAndBound};
  // Runs per randomized solver on both sides; the best is kept.
  int trials = 5;
  std::string out;
  bool raw = false;
  uint64_t master_seed = 0;

  // Throws std::invalid_argument on an empty grid, non-positive counts,
  // negative absolute scales or an invalid n.
  void Validate() const;
};

// Applies recognised keys (family, n, seed, cases, grid, t, draws, mode,
// solver, inner, trials, out, raw, master_seed, node_budget,
// brute_force_cap) on top of `base`. "t" sets an absolute grid, "grid" a
// ratio grid. Unknown keys throw std::invalid_argument.
ExperimentConfig ApplyConfig(const Config& config, ExperimentConfig base = {});

// Raised for a zero exact value.
class UndefinedRelativeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// |exact - approx| / |exact|.
double RelativeError(double exact_value, double approx_value);

// Iterations 1-4 and the last one.
inline constexpr int kCheckpointCount = 5;
// "1".."4", "last".
const char* CheckpointName(int checkpoint);

struct SweepRawRow {
  int case_id = 0;
  int grid_index = 0;
  int draw = 0;
  std::optional<double> ratio;
  double t = 0.0;
  double rates[kCheckpointCount] = {};
  int iterations = 0;  // effective iterations of the perturbed reduction
  uint64_t seed = 0;
};

struct SweepAggregateRow {
  int grid_index = 0;
  double grid_value = 0.0;
  int checkpoint = 0;
  std::optional<double> ratio_mean;
  double t_mean = 0.0;
  double rate_mean = 0.0;
  double rate_stderr = 0.0;
  int samples = 0;
};

struct SweepResult {
  ExperimentConfig config;
  // Ordered by grid index, then checkpoint.
  std::vector<SweepAggregateRow> aggregate;
  // Ordered by case, grid index, draw.
  std::vector<SweepRawRow> raw;
};

// For every case, exact reduction of f on [{}, N] when reducible fixes the
// starting lattice L and its stats (m, M) that convert ratios to scales.
// Each (case, grid point, draw) then reduces g = f + r from L and records
// the reduction rate, against n, after each checkpoint. Parallel over
// draws; results do not depend on the worker count.
SweepResult RunReductionSweep(const ExperimentConfig& config);

void WriteSweepCsv(std::ostream& out, const SweepResult& result);
void WriteSweepRawCsv(std::ostream& out, const SweepResult& result);

struct OptRawRow {
  int case_id = 0;
  int grid_index = 0;
  int draw = 0;
  std::optional<double> ratio;
  double t = 0.0;
  double rate = 0.0;
  double value = 0.0;           // perturbation-reduction
  double baseline_value = 0.0;  // baseline on the full lattice
  double reference = 0.0;       // exact value, or the better of the two
  std::optional<double> rel_error;  // absent for a zero reference
  int64_t pr_evals = 0;         // oracle queries, marginals included
  int64_t baseline_evals = 0;
  double pr_seconds = 0.0;
  double baseline_seconds = 0.0;
};

struct OptAggregateRow {
  int grid_index = 0;
  double grid_value = 0.0;
  std::optional<double> ratio_mean;
  double t_mean = 0.0;
  double rate_mean = 0.0;
  std::optional<double> rel_error_mean;
  std::optional<double> rel_error_max;
  int defined = 0;
  int undefined = 0;
  double eval_ratio_mean = 0.0;  // pr_evals / baseline_evals
  // Timing; not written to the deterministic table.
  double time_ratio_mean = 0.0;  // T_p / T_e
  double pr_seconds_mean = 0.0;
  double baseline_seconds_mean = 0.0;
};

struct OptResult {
  ExperimentConfig config;
  std::vector<OptAggregateRow> aggregate;
  std::vector<OptRawRow> raw;
};

// Per case: one baseline solve on [{}, N] (T_e), then for every grid point
// and draw one perturbation-reduction run with the inner solver (T_p).
// The reference value is the baseline's when it is exact, otherwise the
// better of the two values. Runs serially so the timings are comparable.
// Throws ProblemTooLargeError / NodeBudgetExceededError from the solvers.
OptResult RunOptExperiment(const ExperimentConfig& config);

void WriteOptCsv(std::ostream& out, const OptResult& result);
void WriteOptRawCsv(std::ostream& out, const OptResult& result);
void WriteOptTimingCsv(std::ostream& out, const OptResult& result);

}  // namespace latred

#endif  // LATRED_EXPERIMENT_H_
