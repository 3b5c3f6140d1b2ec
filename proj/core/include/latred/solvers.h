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

#ifndef LATRED_SOLVERS_H_
#define LATRED_SOLVERS_H_

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "latred/element_set.h"
#include "latred/lattice.h"
#include "latred/reduction.h"
#include "latred/set_function.h"

namespace latred {

// f'(Z) = f(S + Z) over the ground set T\S of a lattice [S, T]. Element k of
// the contracted ground set is the k-th smallest member of T\S.
class ContractedFunction final : public SetFunction {
 public:
  // Throws std::invalid_argument for a point lattice (empty ground set).
  ContractedFunction(Oracle base, Lattice lattice);

  std::string name() const override { return base_->name() + "|lattice"; }
  const Lattice& lattice() const { return lattice_; }
  const SetFunction& base() const { return *base_; }

  // S + Z as a subset of the original ground set.
  ElementSet Lift(const ElementSet& z) const;
  // X & (T\S) re-indexed onto the contracted ground set.
  ElementSet Project(const ElementSet& x) const;
  int OriginalElement(int k) const { return free_[k]; }

 protected:
  double DoEval(const ElementSet& z) const override;
  double DoMarginal(int k, const ElementSet& z) const override;
  void DoMarginals(const ElementSet& z, std::span<const int> candidates,
                   std::span<double> out) const override;
  void DoRemovalMarginals(const ElementSet& z, std::span<const int> candidates,
                          std::span<double> out) const override;

 private:
  std::vector<int> MapCandidates(std::span<const int> candidates) const;

  Oracle base_;
  Lattice lattice_;
  std::vector<int> free_;
};

std::shared_ptr<const ContractedFunction> ContractToLattice(
    Oracle f, const Lattice& lattice);

struct SolveReport {
  std::string solver;
  ElementSet solution;
  double value = 0.0;
  int64_t evals = 0;      // oracle evaluations made by the solver
  int64_t marginals = 0;  // marginal gains requested by the solver
  double seconds = 0.0;
  int trials = 1;
  bool exact = false;
  int64_t nodes = 0;     // branch-and-bound only
  int64_t branches = 0;  // branch-and-bound only
};

inline constexpr int kDefaultBruteForceCap = 24;
inline constexpr int64_t kDefaultNodeBudget = 50'000'000;

class ProblemTooLargeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NodeBudgetExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exhaustive search over the lattice. Ties go to the smallest membership
// mask. Throws ProblemTooLargeError when |T\S| exceeds `cap`.
SolveReport BruteForce(const Oracle& f, const Lattice& lattice, Sense sense,
                       int cap = kDefaultBruteForceCap);
SolveReport BruteForce(const Oracle& f, Sense sense,
                       int cap = kDefaultBruteForceCap);

// Exact best-first branch-and-bound for maximization. Every node is first
// shrunk by maximization reduction; a node [S, T] is pruned when
// f(S) + sum_{i in T\S} max(0, f(i|S)) cannot beat the incumbent; otherwise
// it branches on the free element with the largest |f(i|S)| + |f(i|T-i)|.
// Throws NodeBudgetExceededError rather than returning an inexact answer.
SolveReport BranchAndBoundMax(const Oracle& f, const Lattice& lattice,
                              int64_t node_budget = kDefaultNodeBudget);

// One pass of the bi-directional (double) greedy over T\S in index order.
// With a_i = f(i|X) and b_i = -f(i|Y-i): the deterministic rule accepts i
// iff a_i >= b_i; the randomized rule accepts with probability
// a+ / (a+ + b+), accepting when both are zero.
SolveReport BidirectionalGreedy(const Oracle& f, const Lattice& lattice,
                                bool randomized, uint64_t seed);

// Steepest single-flip local search from uniform random starts in the
// lattice, best over `restarts`.
SolveReport RandomLocalSearch(const Oracle& f, const Lattice& lattice,
                              Sense sense, uint64_t seed, int restarts);

// Per trial: scan T\S in a uniform random order starting from S and keep
// each element whose marginal strictly improves the objective. Best over
// `trials`.
SolveReport RandomPermutationSolver(const Oracle& f, const Lattice& lattice,
                                    Sense sense, uint64_t seed, int trials);

enum class SolverKind {
  kBruteForce,
  kBranchAndBound,
  kBidirectionalGreedy,
  kRandomLocalSearch,
  kRandomPermutation,
};

const char* SolverName(SolverKind kind);
// "brute-force", "bnb", "greedy", "local-search", "permutation".
SolverKind ParseSolver(const std::string& text);
bool IsExact(SolverKind kind);

struct SolverChoice {
  SolverKind kind = SolverKind::kBruteForce;
  // Independent runs for randomized solvers; the best one is kept.
  int trials = 1;
  uint64_t seed = 0;
  int brute_force_cap = kDefaultBruteForceCap;
  int64_t node_budget = kDefaultNodeBudget;
};

// Dispatches on `choice.kind`. Throws std::invalid_argument for solvers that
// do not support `sense` (branch-and-bound and bi-directional greedy are
// maximizers).
SolveReport Solve(const Oracle& f, const Lattice& lattice, Sense sense,
                  const SolverChoice& choice);

// CSV: solver,n,value,set,evals,seconds,seed,exact
void WriteSolveReportHeader(std::ostream& out);
void WriteSolveReportRow(std::ostream& out, const SolveReport& report, int n,
                         uint64_t seed);

}  // namespace latred

#endif  // LATRED_SOLVERS_H_
