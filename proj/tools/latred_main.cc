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

// latred: command-line front end for instance generation, reduction,
// perturbation-reduction, solving, experiment sweeps and self-checks.
//
// Exit codes: 0 success, 1 usage or runtime error, 2 property violation
// found by `verify`.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "latred/bounds.h"
#include "latred/config.h"
#include "latred/experiment.h"
#include "latred/feature_kernel.h"
#include "latred/instances.h"
#include "latred/matrix_io.h"
#include "latred/perturbation.h"
#include "latred/reduction.h"
#include "latred/solvers.h"
#include "latred/verify.h"

namespace latred {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitViolation = 2;

// Flags shared by the single-instance subcommands.
struct InstanceFlags {
  std::string family = "cut";
  int n = 10;
  uint64_t seed = 1;
  std::string features;
  double gamma = kLogDetGamma;
};

void AddInstanceFlags(CLI::App* cmd, InstanceFlags& f) {
  cmd->add_option("--family", f.family, "Objective family");
  cmd->add_option("--n", f.n, "Ground set size");
  cmd->add_option("--seed", f.seed, "Instance seed");
  cmd->add_option("--features", f.features,
                  "CSV feature file; builds a logdet instance from an RBF "
                  "kernel instead of a random one");
  cmd->add_option("--gamma", f.gamma, "RBF bandwidth for --features");
}

Oracle LoadOracle(const InstanceFlags& f) {
  if (!f.features.empty()) {
    return MakeLogDet(IngestFeatures(ReadFeatureFile(f.features), f.gamma));
  }
  return GenerateInstance(ParseFamily(f.family), f.n, f.seed);
}

// Writes to --out when given, stdout otherwise.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::runtime_error("cannot write " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

struct ScaleFlags {
  std::optional<double> t;
  std::optional<double> ratio;
};

void AddScaleFlags(CLI::App* cmd, ScaleFlags& s) {
  auto* t = cmd->add_option("--t", s.t, "Perturbation scale t >= 0");
  auto* r = cmd->add_option("--pt-ratio", s.ratio,
                            "Perturbation scale ratio P(t) = (t-m)/(M-m)");
  t->excludes(r);
}

// Resolves --t / --pt-ratio against the stats of `lattice`.
std::optional<double> ResolveScale(const ScaleFlags& s, const SetFunction& f,
                                   const Lattice& lattice) {
  if (s.t) return *s.t;
  if (!s.ratio) return std::nullopt;
  if (lattice.IsPoint()) return 0.0;
  return std::max(0.0,
                  ScaleFromRatio(ComputeLatticeStats(f, lattice), *s.ratio));
}

int RunGen(const InstanceFlags& inst, const std::string& out) {
  Output o(out);
  if (!inst.features.empty()) {
    const LogDetSpec spec =
        IngestFeatures(ReadFeatureFile(inst.features), inst.gamma);
    o.stream() << "# logdet from " << inst.features << '\n' << "# K\n";
    WriteMatrix(o.stream(), spec.k);
    return kExitOk;
  }
  WriteInstance(o.stream(),
                GenerateInstanceData(ParseFamily(inst.family), inst.n,
                                     inst.seed));
  return kExitOk;
}

int RunReduce(const InstanceFlags& inst, const ScaleFlags& scale,
              const std::string& mode, uint64_t master_seed,
              const std::string& out) {
  const Oracle f = LoadOracle(inst);
  const Sense sense = ParseSense(mode);
  const Lattice full = Lattice::Full(f->n());
  const std::optional<double> t = ResolveScale(scale, *f, full);
  Oracle target = f;
  if (t) target = PerturbedOracle(f, DrawPerturbation(f->n(), *t, master_seed));
  const ReductionResult r = Reduce(*target, full, sense);
  Output o(out);
  WriteTraceCsv(o.stream(), r.trace);
  std::cerr << "lattice " << r.lattice.ToString() << " rate "
            << r.trace.final_rate() << '\n';
  return kExitOk;
}

SolverChoice MakeChoice(const std::string& solver, int trials, uint64_t seed) {
  SolverChoice c;
  c.kind = ParseSolver(solver);
  c.trials = trials;
  c.seed = seed;
  return c;
}

int RunPerturbReduce(const InstanceFlags& inst, const ScaleFlags& scale,
                     const std::string& mode, const std::string& solver,
                     int trials, uint64_t master_seed, bool reference,
                     const std::string& out) {
  const Oracle f = LoadOracle(inst);
  const Sense sense = ParseSense(mode);
  const Lattice full = Lattice::Full(f->n());
  // Scales are placed on the lattice the pipeline perturbs.
  Lattice start = full;
  if (ReducibilityIndex(*f, full).reducible()) {
    start = Reduce(*f, full, sense).lattice;
  }
  const std::optional<double> t = ResolveScale(scale, *f, start);
  if (!t) throw CLI::ValidationError("one of --t or --pt-ratio is required");
  PrOptions options;
  options.scale = *t;
  options.seed = master_seed;
  options.inner = MakeChoice(solver, trials, master_seed + 1);
  const PrResult pr = PerturbationReduction(f, full, sense, options);

  std::optional<double> ratio;
  if (!start.IsPoint()) {
    const LatticeStats stats = ComputeLatticeStats(*f, start);
    if (stats.max_margin != stats.min_margin) ratio = ScaleRatio(stats, *t);
  }
  std::optional<double> ref;
  if (reference) ref = BruteForce(f, full, sense).value;
  Output o(out);
  WritePrResultHeader(o.stream());
  WritePrResultRow(o.stream(), pr, ratio, ref);
  return kExitOk;
}

int RunSolve(const InstanceFlags& inst, const std::string& mode,
             const std::string& solver, int trials, uint64_t master_seed,
             const std::string& out) {
  const Oracle f = LoadOracle(inst);
  const SolveReport r =
      Solve(f, Lattice::Full(f->n()), ParseSense(mode),
            MakeChoice(solver, trials, master_seed));
  Output o(out);
  WriteSolveReportHeader(o.stream());
  WriteSolveReportRow(o.stream(), r, f->n(), master_seed);
  return kExitOk;
}

// String-valued flags of the sweep subcommands; only flags given on the
// command line override the config file.
struct SweepFlags {
  std::string config;
  std::vector<std::pair<std::string, std::string>> overrides;
};

void AddSweepFlags(CLI::App* cmd, SweepFlags& f) {
  cmd->add_option("--config", f.config, "key = value experiment config");
  static const char* kFlags[][2] = {
      {"family", "Objective family"},
      {"n", "Ground set size"},
      {"seed", "Instance seed of case 0"},
      {"cases", "Number of instances"},
      {"grid", "P(t) ratio grid, 'a,b,c' or 'lo:hi:count'"},
      {"t", "Absolute scale grid, 'a,b,c' or 'lo:hi:count'"},
      {"draws", "Noise draws per grid point"},
      {"mode", "min or max"},
      {"solver", "Baseline solver"},
      {"inner", "Inner solver of perturbation-reduction"},
      {"trials", "Runs per randomized solver"},
      {"out", "Output CSV path"},
      {"master-seed", "Master seed of all noise and solver draws"},
  };
  for (const auto& flag : kFlags) {
    const std::string name = flag[0];
    std::string key = name;
    for (char& ch : key) {
      if (ch == '-') ch = '_';
    }
    cmd->add_option_function<std::string>(
        "--" + name,
        [&f, key](const std::string& v) { f.overrides.emplace_back(key, v); },
        flag[1]);
  }
  cmd->add_flag_function(
      "--raw",
      [&f](std::int64_t) { f.overrides.emplace_back("raw", "true"); },
      "Also write per-run rows to <out>.raw.csv");
}

ExperimentConfig LoadExperiment(const SweepFlags& f,
                                const ExperimentConfig& defaults) {
  Config config = f.config.empty() ? Config() : Config::Load(f.config);
  for (const auto& [key, value] : f.overrides) config.Set(key, value);
  if (config.Has("grid") && config.Has("t")) {
    // A flag on the command line replaces a grid of the other kind.
    const bool t_from_flag =
        std::any_of(f.overrides.begin(), f.overrides.end(),
                    [](const auto& kv) { return kv.first == "t"; });
    Config merged;
    for (const auto& [key, value] : config.entries()) {
      if (key != (t_from_flag ? "grid" : "t")) merged.Set(key, value);
    }
    config = merged;
  }
  return ApplyConfig(config, defaults);
}

std::string Sidecar(const std::string& out, const std::string& suffix) {
  const std::string ext = ".csv";
  if (out.size() > ext.size() &&
      out.compare(out.size() - ext.size(), ext.size(), ext) == 0) {
    return out.substr(0, out.size() - ext.size()) + suffix + ext;
  }
  return out + suffix + ext;
}

int RunSweepReduction(const SweepFlags& flags) {
  ExperimentConfig defaults;
  const ExperimentConfig cfg = LoadExperiment(flags, defaults);
  const SweepResult result = RunReductionSweep(cfg);
  Output o(cfg.out);
  WriteSweepCsv(o.stream(), result);
  if (cfg.raw) {
    if (cfg.out.empty()) {
      WriteSweepRawCsv(std::cout, result);
    } else {
      Output raw(Sidecar(cfg.out, ".raw"));
      WriteSweepRawCsv(raw.stream(), result);
    }
  }
  return kExitOk;
}

int RunSweepOpt(const SweepFlags& flags) {
  ExperimentConfig defaults;
  defaults.draws = 1;
  const ExperimentConfig cfg = LoadExperiment(flags, defaults);
  const OptResult result = RunOptExperiment(cfg);
  Output o(cfg.out);
  WriteOptCsv(o.stream(), result);
  if (cfg.out.empty()) {
    WriteOptTimingCsv(std::cerr, result);
    if (cfg.raw) WriteOptRawCsv(std::cout, result);
    return kExitOk;
  }
  Output timing(Sidecar(cfg.out, ".timing"));
  WriteOptTimingCsv(timing.stream(), result);
  if (cfg.raw) {
    Output raw(Sidecar(cfg.out, ".raw"));
    WriteOptRawCsv(raw.stream(), result);
  }
  return kExitOk;
}

int RunVerify(const std::vector<std::string>& families, int n, uint64_t seed,
              int cases) {
  VerifyOptions options;
  if (!families.empty()) {
    options.families.clear();
    for (const std::string& name : families) {
      options.families.push_back(ParseFamily(name));
    }
  }
  options.n = n;
  options.seed = seed;
  options.cases = cases;
  const VerifyReport report = RunPropertySuite(options);
  for (const std::string& v : report.violations) {
    std::cout << "VIOLATION " << v << '\n';
  }
  std::cout << report.checks << " checks, " << report.violations.size()
            << " violations\n";
  return report.ok() ? kExitOk : kExitViolation;
}

int Main(int argc, char** argv) {
  CLI::App app{"Lattice reduction and perturbation-reduction toolkit"};
  app.require_subcommand(1);

  InstanceFlags inst;
  ScaleFlags scale;
  std::string out, mode = "max", solver = "brute-force";
  int trials = 1;
  uint64_t master_seed = 0;
  bool reference = false;

  auto* gen = app.add_subcommand("gen", "Print a generated instance");
  AddInstanceFlags(gen, inst);
  gen->add_option("--out", out, "Output path");

  auto* reduce = app.add_subcommand(
      "reduce", "Reduce f (or f + noise with --t/--pt-ratio) on [{}, N]");
  AddInstanceFlags(reduce, inst);
  AddScaleFlags(reduce, scale);
  reduce->add_option("--mode", mode, "min or max");
  reduce->add_option("--master-seed", master_seed, "Noise seed");
  reduce->add_option("--out", out, "Trace CSV path");

  auto* pr = app.add_subcommand("perturb-reduce",
                                "Run perturbation-reduction once");
  AddInstanceFlags(pr, inst);
  AddScaleFlags(pr, scale);
  pr->add_option("--mode", mode, "min or max");
  pr->add_option("--solver", solver, "Inner solver");
  pr->add_option("--trials", trials, "Runs of a randomized inner solver");
  pr->add_option("--master-seed", master_seed, "Noise and solver seed");
  pr->add_flag("--reference", reference,
               "Compute the loss against a brute-force optimum");
  pr->add_option("--out", out, "Output CSV path");

  auto* solve = app.add_subcommand("solve", "Solve on the full lattice");
  AddInstanceFlags(solve, inst);
  solve->add_option("--mode", mode, "min or max");
  solve->add_option("--solver", solver, "Solver");
  solve->add_option("--trials", trials, "Runs of a randomized solver");
  solve->add_option("--master-seed", master_seed, "Solver seed");
  solve->add_option("--out", out, "Output CSV path");

  SweepFlags reduction_flags, opt_flags;
  auto* sweep_r = app.add_subcommand(
      "sweep-reduction", "Reduction rates across a perturbation-scale grid");
  AddSweepFlags(sweep_r, reduction_flags);
  auto* sweep_o = app.add_subcommand(
      "sweep-opt", "Baseline vs perturbation-reduction across a scale grid");
  AddSweepFlags(sweep_o, opt_flags);

  std::vector<std::string> verify_families;
  int verify_n = 8, verify_cases = 5;
  uint64_t verify_seed = 1;
  auto* verify = app.add_subcommand("verify", "Run the property self-checks");
  verify->add_option("--family", verify_families, "Families (default: all)");
  verify->add_option("--n", verify_n, "Ground set size");
  verify->add_option("--seed", verify_seed, "Seed of the first instance");
  verify->add_option("--cases", verify_cases, "Instances per family");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitOk : kExitError;
  }

  try {
    if (*gen) return RunGen(inst, out);
    if (*reduce) return RunReduce(inst, scale, mode, master_seed, out);
    if (*pr) {
      return RunPerturbReduce(inst, scale, mode, solver, trials, master_seed,
                              reference, out);
    }
    if (*solve) return RunSolve(inst, mode, solver, trials, master_seed, out);
    if (*sweep_r) return RunSweepReduction(reduction_flags);
    if (*sweep_o) return RunSweepOpt(opt_flags);
    if (*verify) {
      return RunVerify(verify_families, verify_n, verify_seed, verify_cases);
    }
  } catch (const CLI::ParseError& e) {
    std::cerr << "latred: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "latred: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace
}  // namespace latred

int main(int argc, char** argv) { return latred::Main(argc, argv); }
