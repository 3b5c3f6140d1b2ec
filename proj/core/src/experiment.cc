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

#include "latred/experiment.h"

#include <cmath>
#include <ostream>
#include <set>

#include "latred/csv.h"
#include "latred/lattice.h"
#include "latred/parallel.h"
#include "latred/perturbation.h"
#include "latred/rng.h"

namespace latred {
namespace {

// Seed streams under the master seed.
enum Stream : uint64_t {
  kSweepNoise = 0,
  kOptNoise = 1,
  kOptInner = 2,
  kOptBaseline = 3,
};

// Starting lattice of a case and the stats used to place scales.
struct PreparedCase {
  Oracle f;
  Lattice start = Lattice::Full(1);
  std::optional<LatticeStats> stats;
};

PreparedCase Prepare(const ExperimentConfig& config, int case_id) {
  PreparedCase pc;
  pc.f = GenerateInstance(config.family, config.n,
                          config.instance_seed + case_id);
  pc.start = Lattice::Full(config.n);
  if (ReducibilityIndex(*pc.f, pc.start).reducible()) {
    pc.start = Reduce(*pc.f, pc.start, config.sense).lattice;
  }
  if (!pc.start.IsPoint()) pc.stats = ComputeLatticeStats(*pc.f, pc.start);
  return pc;
}

struct Scale {
  double t = 0.0;
  std::optional<double> ratio;
};

Scale Place(const ExperimentConfig& config, const PreparedCase& pc,
            double grid_value) {
  Scale s;
  if (config.absolute_scale) {
    s.t = grid_value;
    if (pc.stats && pc.stats->max_margin != pc.stats->min_margin) {
      s.ratio = ScaleRatio(*pc.stats, s.t);
    }
    return s;
  }
  s.ratio = grid_value;
  // A point lattice leaves nothing to perturb.
  if (pc.stats) s.t = std::max(0.0, ScaleFromRatio(*pc.stats, grid_value));
  return s;
}

struct Moments {
  double sum = 0.0;
  double sum_sq = 0.0;
  int count = 0;

  void Add(double v) {
    sum += v;
    sum_sq += v * v;
    ++count;
  }
  double mean() const { return count ? sum / count : 0.0; }
  double stderr_() const {
    if (count < 2) return 0.0;
    const double m = mean();
    const double var = std::max(0.0, (sum_sq - count * m * m) / (count - 1));
    return std::sqrt(var / count);
  }
};

std::string Seed(uint64_t v) { return std::to_string(v); }

void WriteHeaderComment(std::ostream& out, const ExperimentConfig& c) {
  out << "# family=" << FamilyName(c.family) << " n=" << c.n
      << " mode=" << SenseName(c.sense) << " cases=" << c.cases
      << " draws=" << c.draws << " seed=" << c.instance_seed
      << " master_seed=" << c.master_seed
      << " scale=" << (c.absolute_scale ? "absolute" : "ratio") << '\n';
}

}  // namespace

void ExperimentConfig::Validate() const {
  GroundSet::Of(n);
  if (grid.empty()) throw std::invalid_argument("scale grid is empty");
  for (double g : grid) {
    if (!std::isfinite(g)) throw std::invalid_argument("non-finite grid value");
    if (absolute_scale && g < 0) {
      throw std::invalid_argument("absolute scales must be >= 0");
    }
  }
  if (cases < 1) throw std::invalid_argument("cases must be >= 1");
  if (draws < 1) throw std::invalid_argument("draws must be >= 1");
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
}

ExperimentConfig ApplyConfig(const Config& config, ExperimentConfig base) {
  static const std::set<std::string> kKeys = {
      "family", "n",     "seed",   "cases", "grid",        "t",
      "draws",  "mode",  "solver", "inner", "trials",      "out",
      "raw",    "master_seed",     "node_budget", "brute_force_cap"};
  for (const auto& [key, value] : config.entries()) {
    if (!kKeys.count(key)) {
      throw std::invalid_argument("unknown config key '" + key + "'");
    }
  }
  ExperimentConfig c = std::move(base);
  if (auto v = config.GetString("family")) c.family = ParseFamily(*v);
  if (auto v = config.GetInt("n")) c.n = static_cast<int>(*v);
  if (auto v = config.GetUnsigned("seed")) c.instance_seed = *v;
  if (auto v = config.GetInt("cases")) c.cases = static_cast<int>(*v);
  if (auto v = config.GetDoubleList("grid")) {
    c.grid = *v;
    c.absolute_scale = false;
  }
  if (auto v = config.GetDoubleList("t")) {
    if (config.Has("grid")) {
      throw std::invalid_argument("'grid' and 't' are mutually exclusive");
    }
    c.grid = *v;
    c.absolute_scale = true;
  }
  if (auto v = config.GetInt("draws")) c.draws = static_cast<int>(*v);
  if (auto v = config.GetString("mode")) c.sense = ParseSense(*v);
  if (auto v = config.GetString("solver")) c.baseline.kind = ParseSolver(*v);
  if (auto v = config.GetString("inner")) c.inner.kind = ParseSolver(*v);
  if (auto v = config.GetInt("trials")) c.trials = static_cast<int>(*v);
  if (auto v = config.GetString("out")) c.out = *v;
  if (auto v = config.GetBool("raw")) c.raw = *v;
  if (auto v = config.GetUnsigned("master_seed")) c.master_seed = *v;
  if (auto v = config.GetInt("node_budget")) {
    c.baseline.node_budget = c.inner.node_budget = *v;
  }
  if (auto v = config.GetInt("brute_force_cap")) {
    c.baseline.brute_force_cap = c.inner.brute_force_cap =
        static_cast<int>(*v);
  }
  c.Validate();
  return c;
}

double RelativeError(double exact_value, double approx_value) {
  if (exact_value == 0.0) {
    throw UndefinedRelativeError("relative error undefined for a zero optimum");
  }
  return std::abs(exact_value - approx_value) / std::abs(exact_value);
}

const char* CheckpointName(int checkpoint) {
  static const char* kNames[kCheckpointCount] = {"1", "2", "3", "4", "last"};
  if (checkpoint < 0 || checkpoint >= kCheckpointCount) {
    throw std::out_of_range("checkpoint index");
  }
  return kNames[checkpoint];
}

SweepResult RunReductionSweep(const ExperimentConfig& config) {
  config.Validate();
  SweepResult result;
  result.config = config;

  std::vector<PreparedCase> cases(config.cases);
  ParallelFor(config.cases, [&](int c) { cases[c] = Prepare(config, c); });

  const int grid_size = static_cast<int>(config.grid.size());
  const int per_case = grid_size * config.draws;
  result.raw.resize(static_cast<size_t>(config.cases) * per_case);
  ParallelFor(static_cast<int>(result.raw.size()), [&](int task) {
    const int c = task / per_case;
    const int k = (task % per_case) / config.draws;
    const int d = task % config.draws;
    const PreparedCase& pc = cases[c];
    const Scale scale = Place(config, pc, config.grid[k]);

    SweepRawRow& row = result.raw[task];
    row.case_id = c;
    row.grid_index = k;
    row.draw = d;
    row.ratio = scale.ratio;
    row.t = scale.t;
    row.seed = DeriveSeed(config.master_seed,
                          {kSweepNoise, static_cast<uint64_t>(c),
                           static_cast<uint64_t>(k), static_cast<uint64_t>(d)});
    const Perturbation noise = DrawPerturbation(config.n, scale.t, row.seed);
    const auto g = PerturbedOracle(pc.f, noise);
    const ReductionTrace trace = Reduce(*g, pc.start, config.sense).trace;
    row.iterations = trace.effective_iterations();
    for (int cp = 0; cp + 1 < kCheckpointCount; ++cp) {
      row.rates[cp] = ReductionRate(trace.LatticeAfter(cp + 1));
    }
    row.rates[kCheckpointCount - 1] = ReductionRate(trace.output);
  });

  for (int k = 0; k < grid_size; ++k) {
    for (int cp = 0; cp < kCheckpointCount; ++cp) {
      Moments rate, t, ratio;
      for (const SweepRawRow& row : result.raw) {
        if (row.grid_index != k) continue;
        rate.Add(row.rates[cp]);
        t.Add(row.t);
        if (row.ratio) ratio.Add(*row.ratio);
      }
      SweepAggregateRow agg;
      agg.grid_index = k;
      agg.grid_value = config.grid[k];
      agg.checkpoint = cp;
      if (ratio.count == rate.count) agg.ratio_mean = ratio.mean();
      agg.t_mean = t.mean();
      agg.rate_mean = rate.mean();
      agg.rate_stderr = rate.stderr_();
      agg.samples = rate.count;
      result.aggregate.push_back(agg);
    }
  }
  return result;
}

void WriteSweepCsv(std::ostream& out, const SweepResult& result) {
  WriteSchemaLine(out, "reduction-sweep", 1);
  WriteHeaderComment(out, result.config);
  WriteCsvRow(out, {"family", "n", "mode", "grid_index", "grid_value",
                    "p_ratio", "t", "checkpoint", "rate_mean", "rate_stderr",
                    "samples"});
  const ExperimentConfig& c = result.config;
  for (const SweepAggregateRow& r : result.aggregate) {
    WriteCsvRow(out, {FamilyName(c.family), std::to_string(c.n),
                      SenseName(c.sense), std::to_string(r.grid_index),
                      FormatNumber(r.grid_value), FormatNumber(r.ratio_mean),
                      FormatNumber(r.t_mean), CheckpointName(r.checkpoint),
                      FormatNumber(r.rate_mean), FormatNumber(r.rate_stderr),
                      std::to_string(r.samples)});
  }
}

void WriteSweepRawCsv(std::ostream& out, const SweepResult& result) {
  WriteSchemaLine(out, "reduction-sweep-raw", 1);
  WriteHeaderComment(out, result.config);
  WriteCsvRow(out, {"case", "grid_index", "draw", "p_ratio", "t", "rate_1",
                    "rate_2", "rate_3", "rate_4", "rate_last", "iterations",
                    "seed"});
  for (const SweepRawRow& r : result.raw) {
    std::vector<std::string> cells = {
        std::to_string(r.case_id), std::to_string(r.grid_index),
        std::to_string(r.draw), FormatNumber(r.ratio), FormatNumber(r.t)};
    for (double rate : r.rates) cells.push_back(FormatNumber(rate));
    cells.push_back(std::to_string(r.iterations));
    cells.push_back(Seed(r.seed));
    WriteCsvRow(out, cells);
  }
}

OptResult RunOptExperiment(const ExperimentConfig& config) {
  config.Validate();
  OptResult result;
  result.config = config;
  const int grid_size = static_cast<int>(config.grid.size());

  for (int c = 0; c < config.cases; ++c) {
    const PreparedCase pc = Prepare(config, c);
    const Lattice full = Lattice::Full(config.n);

    SolverChoice baseline = config.baseline;
    baseline.trials = IsExact(baseline.kind) ? 1 : config.trials;
    baseline.seed = DeriveSeed(config.master_seed,
                               {kOptBaseline, static_cast<uint64_t>(c)});
    const SolveReport base = Solve(pc.f, full, config.sense, baseline);

    for (int k = 0; k < grid_size; ++k) {
      const Scale scale = Place(config, pc, config.grid[k]);
      for (int d = 0; d < config.draws; ++d) {
        const uint64_t c64 = static_cast<uint64_t>(c);
        const uint64_t k64 = static_cast<uint64_t>(k);
        const uint64_t d64 = static_cast<uint64_t>(d);
        PrOptions options;
        options.scale = scale.t;
        options.seed =
            DeriveSeed(config.master_seed, {kOptNoise, c64, k64, d64});
        options.inner = config.inner;
        options.inner.trials = IsExact(config.inner.kind) ? 1 : config.trials;
        options.inner.seed =
            DeriveSeed(config.master_seed, {kOptInner, c64, k64, d64});
        const PrResult pr =
            PerturbationReduction(pc.f, full, config.sense, options);

        OptRawRow row;
        row.case_id = c;
        row.grid_index = k;
        row.draw = d;
        row.ratio = scale.ratio;
        row.t = scale.t;
        row.rate = pr.final_rate();
        row.value = pr.value;
        row.baseline_value = base.value;
        const bool max = config.sense == Sense::kMaximize;
        row.reference =
            base.exact ? base.value
                       : (max ? std::max(base.value, pr.value)
                              : std::min(base.value, pr.value));
        if (row.reference != 0.0) {
          row.rel_error = RelativeError(row.reference, row.value);
        }
        row.pr_evals =
            pr.marginal_evaluations + pr.inner.evals + pr.inner.marginals;
        row.baseline_evals = base.evals + base.marginals;
        row.pr_seconds = pr.seconds;
        row.baseline_seconds = base.seconds;
        result.raw.push_back(row);
      }
    }
  }

  for (int k = 0; k < grid_size; ++k) {
    Moments ratio, t, rate, err, evals, time, tp, te;
    double err_max = 0.0;
    int rows = 0, undefined = 0;
    for (const OptRawRow& r : result.raw) {
      if (r.grid_index != k) continue;
      ++rows;
      if (r.ratio) ratio.Add(*r.ratio);
      t.Add(r.t);
      rate.Add(r.rate);
      if (r.rel_error) {
        err.Add(*r.rel_error);
        err_max = std::max(err_max, *r.rel_error);
      } else {
        ++undefined;
      }
      evals.Add(r.baseline_evals > 0
                    ? static_cast<double>(r.pr_evals) / r.baseline_evals
                    : 0.0);
      tp.Add(r.pr_seconds);
      te.Add(r.baseline_seconds);
      time.Add(r.baseline_seconds > 0 ? r.pr_seconds / r.baseline_seconds
                                      : 0.0);
    }
    OptAggregateRow agg;
    agg.grid_index = k;
    agg.grid_value = config.grid[k];
    if (ratio.count == rows) agg.ratio_mean = ratio.mean();
    agg.t_mean = t.mean();
    agg.rate_mean = rate.mean();
    if (err.count > 0) {
      agg.rel_error_mean = err.mean();
      agg.rel_error_max = err_max;
    }
    agg.defined = err.count;
    agg.undefined = undefined;
    agg.eval_ratio_mean = evals.mean();
    agg.time_ratio_mean = time.mean();
    agg.pr_seconds_mean = tp.mean();
    agg.baseline_seconds_mean = te.mean();
    result.aggregate.push_back(agg);
  }
  return result;
}

void WriteOptCsv(std::ostream& out, const OptResult& result) {
  WriteSchemaLine(out, "opt-experiment", 1);
  WriteHeaderComment(out, result.config);
  WriteCsvRow(out, {"family", "n", "mode", "baseline", "inner", "grid_index",
                    "grid_value", "p_ratio", "t", "rate_mean",
                    "rel_error_mean", "rel_error_max", "defined", "undefined",
                    "eval_ratio_mean"});
  const ExperimentConfig& c = result.config;
  for (const OptAggregateRow& r : result.aggregate) {
    WriteCsvRow(out, {FamilyName(c.family), std::to_string(c.n),
                      SenseName(c.sense), SolverName(c.baseline.kind),
                      SolverName(c.inner.kind), std::to_string(r.grid_index),
                      FormatNumber(r.grid_value), FormatNumber(r.ratio_mean),
                      FormatNumber(r.t_mean), FormatNumber(r.rate_mean),
                      FormatNumber(r.rel_error_mean),
                      FormatNumber(r.rel_error_max), std::to_string(r.defined),
                      std::to_string(r.undefined),
                      FormatNumber(r.eval_ratio_mean)});
  }
}

void WriteOptRawCsv(std::ostream& out, const OptResult& result) {
  WriteSchemaLine(out, "opt-experiment-raw", 1);
  WriteHeaderComment(out, result.config);
  WriteCsvRow(out, {"case", "grid_index", "draw", "p_ratio", "t", "rate",
                    "value", "baseline_value", "reference", "rel_error",
                    "pr_evals", "baseline_evals"});
  for (const OptRawRow& r : result.raw) {
    WriteCsvRow(out, {std::to_string(r.case_id), std::to_string(r.grid_index),
                      std::to_string(r.draw), FormatNumber(r.ratio),
                      FormatNumber(r.t), FormatNumber(r.rate),
                      FormatNumber(r.value), FormatNumber(r.baseline_value),
                      FormatNumber(r.reference), FormatNumber(r.rel_error),
                      std::to_string(r.pr_evals),
                      std::to_string(r.baseline_evals)});
  }
}

void WriteOptTimingCsv(std::ostream& out, const OptResult& result) {
  WriteSchemaLine(out, "opt-timing", 1);
  WriteHeaderComment(out, result.config);
  WriteCsvRow(out, {"grid_index", "grid_value", "p_ratio", "tp_mean",
                    "te_mean", "time_ratio_mean"});
  for (const OptAggregateRow& r : result.aggregate) {
    WriteCsvRow(out, {std::to_string(r.grid_index), FormatNumber(r.grid_value),
                      FormatNumber(r.ratio_mean),
                      FormatNumber(r.pr_seconds_mean),
                      FormatNumber(r.baseline_seconds_mean),
                      FormatNumber(r.time_ratio_mean)});
  }
}

}  // namespace latred
