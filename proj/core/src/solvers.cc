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

#include "latred/solvers.h"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <queue>
#include <utility>

#include "latred/rng.h"

namespace latred {
namespace {

using Clock = std::chrono::steady_clock;

bool Improves(Sense sense, double candidate, double incumbent) {
  return sense == Sense::kMaximize ? candidate > incumbent
                                   : candidate < incumbent;
}

// Best-of selection: better value first, then the smaller set.
struct Incumbent {
  explicit Incumbent(Sense s) : sense(s) {}

  Sense sense;
  bool has_value = false;
  double value = 0.0;
  ElementSet set;

  void Offer(const ElementSet& x, double v) {
    if (!has_value || Improves(sense, v, value) || (v == value && x < set)) {
      has_value = true;
      value = v;
      set = x;
    }
  }
};

// Runs `body` on the contraction of f to the lattice and fills in the common
// report fields. A point lattice short-circuits to its only member.
template <typename Body>
SolveReport RunOnLattice(const Oracle& f, const Lattice& lattice,
                         const char* solver, bool exact, Body&& body) {
  const auto start = Clock::now();
  SolveReport report;
  report.solver = solver;
  report.exact = exact;
  if (lattice.universe_size() != f->n()) {
    throw std::invalid_argument("lattice and oracle ground sets differ");
  }
  if (lattice.IsPoint()) {
    report.solution = lattice.lower();
    report.value = f->Eval(report.solution);
    report.evals = 1;
  } else {
    const auto g = ContractToLattice(f, lattice);
    const ElementSet z = body(*g, report);
    report.solution = g->Lift(z);
    report.value = g->Eval(z);
    report.evals = g->eval_count();
    report.marginals = g->marginal_count();
  }
  report.seconds =
      std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

ElementSet GreedyPass(const SetFunction& g, bool randomized, Rng& rng) {
  const int s = g.n();
  ElementSet x(s);
  ElementSet y = ElementSet::Full(s);
  for (int i = 0; i < s; ++i) {
    const double a = g.Marginal(i, x);
    const int candidate[] = {i};
    const double b = -g.RemovalMarginals(y, candidate)[0];
    bool accept;
    if (randomized) {
      const double a_plus = std::max(a, 0.0);
      const double b_plus = std::max(b, 0.0);
      const double total = a_plus + b_plus;
      accept = total == 0.0 || rng.Uniform01() < a_plus / total;
    } else {
      accept = a >= b;
    }
    if (accept) {
      x.Insert(i);
    } else {
      y.Erase(i);
    }
  }
  return x;
}

ElementSet LocalSearchRun(const SetFunction& g, Sense sense, Rng& rng) {
  const int s = g.n();
  ElementSet x(s);
  for (int i = 0; i < s; ++i) {
    if (rng.Bernoulli(0.5)) x.Insert(i);
  }
  const double direction = sense == Sense::kMaximize ? 1.0 : -1.0;
  while (true) {
    const std::vector<int> inside = x.Members();
    const std::vector<int> outside = x.Complement().Members();
    const auto add = g.Marginals(x, outside);
    const auto drop = g.RemovalMarginals(x, inside);
    int best = -1;
    double best_gain = 0.0;
    double scale = 0.0;
    auto consider = [&](int element, double change) {
      const double gain = direction * change;
      scale = std::max(scale, std::abs(change));
      if (best < 0 ? gain > 0.0 : (gain > best_gain ||
                                   (gain == best_gain && element < best))) {
        best = element;
        best_gain = gain;
      }
    };
    for (size_t k = 0; k < outside.size(); ++k) consider(outside[k], add[k]);
    for (size_t k = 0; k < inside.size(); ++k) consider(inside[k], -drop[k]);
    // Ignore improvements at rounding level so flat regions terminate.
    if (best < 0 || best_gain <= 1e-12 * (1.0 + scale)) break;
    if (x.Contains(best)) {
      x.Erase(best);
    } else {
      x.Insert(best);
    }
  }
  return x;
}

ElementSet PermutationRun(const SetFunction& g, Sense sense, Rng& rng) {
  const int s = g.n();
  std::vector<int> order(s);
  for (int i = 0; i < s; ++i) order[i] = i;
  rng.Shuffle(std::span<int>(order));
  ElementSet x(s);
  for (int i : order) {
    const double gain = g.Marginal(i, x);
    if (Improves(sense, gain, 0.0)) x.Insert(i);
  }
  return x;
}

// Repeats `run` with per-trial seeds and keeps the best set.
template <typename Run>
ElementSet BestOfTrials(const SetFunction& g, Sense sense, uint64_t seed,
                        int trials, Run&& run) {
  if (trials < 1) throw std::invalid_argument("trial count must be >= 1");
  Incumbent best{sense};
  for (int trial = 0; trial < trials; ++trial) {
    Rng rng(DeriveSeed(seed, {static_cast<uint64_t>(trial)}));
    const ElementSet z = run(rng);
    best.Offer(z, g.Eval(z));
  }
  return best.set;
}

}  // namespace

// --- contraction ------------------------------------------------------------

ContractedFunction::ContractedFunction(Oracle base, Lattice lattice)
    : SetFunction(lattice.FreeCount()),
      base_(std::move(base)),
      lattice_(std::move(lattice)),
      free_(lattice_.Free().Members()) {
  if (lattice_.universe_size() != base_->n()) {
    throw std::invalid_argument("lattice and oracle ground sets differ");
  }
}

ElementSet ContractedFunction::Lift(const ElementSet& z) const {
  CheckUniverse(z);
  ElementSet x = lattice_.lower();
  z.ForEach([&](int k) { x.Insert(free_[k]); });
  return x;
}

ElementSet ContractedFunction::Project(const ElementSet& x) const {
  ElementSet z(n());
  for (int k = 0; k < n(); ++k) {
    if (x.Contains(free_[k])) z.Insert(k);
  }
  return z;
}

std::vector<int> ContractedFunction::MapCandidates(
    std::span<const int> candidates) const {
  std::vector<int> mapped(candidates.size());
  for (size_t k = 0; k < candidates.size(); ++k) {
    mapped[k] = free_[candidates[k]];
  }
  return mapped;
}

double ContractedFunction::DoEval(const ElementSet& z) const {
  return base_->Eval(Lift(z));
}

double ContractedFunction::DoMarginal(int k, const ElementSet& z) const {
  return base_->Marginal(free_[k], Lift(z));
}

void ContractedFunction::DoMarginals(const ElementSet& z,
                                     std::span<const int> candidates,
                                     std::span<double> out) const {
  const auto gains = base_->Marginals(Lift(z), MapCandidates(candidates));
  std::copy(gains.begin(), gains.end(), out.begin());
}

void ContractedFunction::DoRemovalMarginals(const ElementSet& z,
                                            std::span<const int> candidates,
                                            std::span<double> out) const {
  const auto gains =
      base_->RemovalMarginals(Lift(z), MapCandidates(candidates));
  std::copy(gains.begin(), gains.end(), out.begin());
}

std::shared_ptr<const ContractedFunction> ContractToLattice(
    Oracle f, const Lattice& lattice) {
  if (lattice.IsPoint()) {
    throw std::invalid_argument("cannot contract onto a point lattice " +
                                lattice.ToString());
  }
  return std::make_shared<ContractedFunction>(std::move(f), lattice);
}

// --- solvers ----------------------------------------------------------------

SolveReport BruteForce(const Oracle& f, const Lattice& lattice, Sense sense,
                       int cap) {
  if (lattice.FreeCount() > cap || lattice.FreeCount() > 62) {
    throw ProblemTooLargeError(
        "brute force over " + std::to_string(lattice.FreeCount()) +
        " free elements exceeds the cap of " + std::to_string(cap));
  }
  return RunOnLattice(
      f, lattice, "brute-force", true,
      [&](const SetFunction& g, SolveReport&) {
        const int s = g.n();
        const uint64_t end = uint64_t{1} << s;
        uint64_t best_mask = 0;
        double best = g.Eval(ElementSet::FromMask(s, 0));
        for (uint64_t mask = 1; mask < end; ++mask) {
          const double v = g.Eval(ElementSet::FromMask(s, mask));
          if (Improves(sense, v, best)) {
            best = v;
            best_mask = mask;
          }
        }
        return ElementSet::FromMask(s, best_mask);
      });
}

SolveReport BruteForce(const Oracle& f, Sense sense, int cap) {
  return BruteForce(f, Lattice::Full(f->n()), sense, cap);
}

SolveReport BranchAndBoundMax(const Oracle& f, const Lattice& lattice,
                              int64_t node_budget) {
  return RunOnLattice(
      f, lattice, "bnb", true, [&](const SetFunction& g, SolveReport& report) {
        struct Node {
          Lattice lattice;
          double bound;
          uint64_t order;
        };
        auto worse = [](const Node& a, const Node& b) {
          if (a.bound != b.bound) return a.bound < b.bound;
          return a.order > b.order;
        };
        std::priority_queue<Node, std::vector<Node>, decltype(worse)> open(
            worse);
        uint64_t pushed = 0;
        open.push({Lattice::Full(g.n()),
                   std::numeric_limits<double>::infinity(), pushed++});
        Incumbent best{Sense::kMaximize};

        while (!open.empty()) {
          Node node = open.top();
          open.pop();
          if (best.has_value && node.bound <= best.value) continue;
          if (++report.nodes > node_budget) {
            throw NodeBudgetExceededError(
                "branch-and-bound exceeded its budget of " +
                std::to_string(node_budget) + " nodes");
          }
          const Lattice reduced = ReduceMax(g, node.lattice).lattice;
          const ElementSet& lower = reduced.lower();
          const ElementSet& upper = reduced.upper();
          const double f_lower = g.Eval(lower);
          best.Offer(lower, f_lower);
          if (reduced.IsPoint()) continue;
          best.Offer(upper, g.Eval(upper));

          const std::vector<int> free = reduced.Free().Members();
          const auto gains = g.Marginals(lower, free);
          const auto drops = g.RemovalMarginals(upper, free);
          double bound = f_lower;
          for (double v : gains) bound += std::max(v, 0.0);
          if (bound <= best.value) continue;

          size_t pick = 0;
          double pick_score = -1.0;
          for (size_t k = 0; k < free.size(); ++k) {
            const double score = std::abs(gains[k]) + std::abs(drops[k]);
            if (score > pick_score) {
              pick = k;
              pick_score = score;
            }
          }
          ++report.branches;
          const int i = free[pick];
          open.push({Lattice(lower.With(i), upper), bound, pushed++});
          open.push({Lattice(lower, upper.Without(i)), bound, pushed++});
        }
        return best.set;
      });
}

SolveReport BidirectionalGreedy(const Oracle& f, const Lattice& lattice,
                                bool randomized, uint64_t seed) {
  return RunOnLattice(
      f, lattice, randomized ? "greedy" : "greedy-deterministic", false,
      [&](const SetFunction& g, SolveReport&) {
        Rng rng(seed);
        return GreedyPass(g, randomized, rng);
      });
}

SolveReport RandomLocalSearch(const Oracle& f, const Lattice& lattice,
                              Sense sense, uint64_t seed, int restarts) {
  SolveReport report = RunOnLattice(
      f, lattice, "local-search", false,
      [&](const SetFunction& g, SolveReport&) {
        return BestOfTrials(g, sense, seed, restarts,
                            [&](Rng& rng) { return LocalSearchRun(g, sense, rng); });
      });
  report.trials = restarts;
  return report;
}

SolveReport RandomPermutationSolver(const Oracle& f, const Lattice& lattice,
                                    Sense sense, uint64_t seed, int trials) {
  SolveReport report = RunOnLattice(
      f, lattice, "permutation", false,
      [&](const SetFunction& g, SolveReport&) {
        return BestOfTrials(g, sense, seed, trials,
                            [&](Rng& rng) { return PermutationRun(g, sense, rng); });
      });
  report.trials = trials;
  return report;
}

const char* SolverName(SolverKind kind) {
  switch (kind) {
    case SolverKind::kBruteForce:
      return "brute-force";
    case SolverKind::kBranchAndBound:
      return "bnb";
    case SolverKind::kBidirectionalGreedy:
      return "greedy";
    case SolverKind::kRandomLocalSearch:
      return "local-search";
    case SolverKind::kRandomPermutation:
      return "permutation";
  }
  return "unknown";
}

SolverKind ParseSolver(const std::string& text) {
  if (text == "brute-force" || text == "brute") return SolverKind::kBruteForce;
  if (text == "bnb" || text == "branch-and-bound") {
    return SolverKind::kBranchAndBound;
  }
  if (text == "greedy" || text == "bidirectional-greedy") {
    return SolverKind::kBidirectionalGreedy;
  }
  if (text == "local-search") return SolverKind::kRandomLocalSearch;
  if (text == "permutation") return SolverKind::kRandomPermutation;
  throw std::invalid_argument(
      "unknown solver '" + text +
      "' (want brute-force|bnb|greedy|local-search|permutation)");
}

bool IsExact(SolverKind kind) {
  return kind == SolverKind::kBruteForce || kind == SolverKind::kBranchAndBound;
}

SolveReport Solve(const Oracle& f, const Lattice& lattice, Sense sense,
                  const SolverChoice& choice) {
  switch (choice.kind) {
    case SolverKind::kBruteForce:
      return BruteForce(f, lattice, sense, choice.brute_force_cap);
    case SolverKind::kBranchAndBound:
      if (sense != Sense::kMaximize) {
        throw std::invalid_argument("branch-and-bound only maximizes");
      }
      return BranchAndBoundMax(f, lattice, choice.node_budget);
    case SolverKind::kBidirectionalGreedy: {
      if (sense != Sense::kMaximize) {
        throw std::invalid_argument("bi-directional greedy only maximizes");
      }
      SolveReport report = RunOnLattice(
          f, lattice, "greedy", false, [&](const SetFunction& g, SolveReport&) {
            return BestOfTrials(g, sense, choice.seed, choice.trials,
                                [&](Rng& rng) { return GreedyPass(g, true, rng); });
          });
      report.trials = choice.trials;
      return report;
    }
    case SolverKind::kRandomLocalSearch:
      return RandomLocalSearch(f, lattice, sense, choice.seed, choice.trials);
    case SolverKind::kRandomPermutation:
      return RandomPermutationSolver(f, lattice, sense, choice.seed,
                                     choice.trials);
  }
  throw std::invalid_argument("unknown solver kind");
}

void WriteSolveReportHeader(std::ostream& out) {
  out << "solver,n,value,set,evals,seconds,seed,exact\n";
}

void WriteSolveReportRow(std::ostream& out, const SolveReport& report, int n,
                         uint64_t seed) {
  char value[40];
  char seconds[40];
  std::snprintf(value, sizeof(value), "%.12g", report.value);
  std::snprintf(seconds, sizeof(seconds), "%.6f", report.seconds);
  out << report.solver << ',' << n << ',' << value << ",\""
      << report.solution.ToString() << "\"," << report.evals << ',' << seconds
      << ',' << seed << ',' << (report.exact ? 1 : 0) << "\n";
}

}  // namespace latred
