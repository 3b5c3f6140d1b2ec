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

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "gtest/gtest.h"
#include "latred/families.h"
#include "latred/instances.h"
#include "latred/rng.h"
#include "latred/solvers.h"
#include "latred/submodularity.h"
#include "test_util.h"

namespace latred {
namespace {

using testing::Goal;

ElementSet Set(int n, std::initializer_list<int> members) {
  return ElementSet::FromIndices(n, members);
}

Oracle Triangle() { return MakeCut({testing::TriangleWeights()}); }

Lattice RandomLattice(Rng& rng, int n) {
  const uint64_t t = testing::FullMask(n) & ~rng.UniformInt(4);
  const uint64_t s = t & rng.UniformInt(8);
  return Lattice(ElementSet::FromMask(n, s), ElementSet::FromMask(n, t));
}

TEST(ContractTest, IdentityOnFullLattice) {
  const Oracle f = GenerateInstance(Family::kLogDet, 6, 1);
  const auto g = ContractToLattice(f, Lattice::Full(6));
  for (uint64_t m = 0; m < 64; ++m) {
    const ElementSet x = ElementSet::FromMask(6, m);
    EXPECT_EQ(g->Eval(x), f->Eval(x));
  }
}

TEST(ContractTest, DefinitionAndOptimaBijection) {
  Rng rng(4);
  for (Family family : AllFamilies()) {
    const Oracle f = GenerateInstance(family, 9, 2);
    const Lattice l = RandomLattice(rng, 9);
    if (l.IsPoint()) continue;
    const auto g = ContractToLattice(f, l);
    EXPECT_EQ(g->n(), l.FreeCount());
    EXPECT_EQ(g->Eval(ElementSet::Empty(g->n())), f->Eval(l.lower()));
    for (uint64_t m = 0; m <= testing::FullMask(g->n()); ++m) {
      const ElementSet z = ElementSet::FromMask(g->n(), m);
      EXPECT_EQ(g->Project(g->Lift(z)), z);
      EXPECT_TRUE(l.Contains(g->Lift(z)));
      EXPECT_DOUBLE_EQ(g->Eval(z), f->Eval(g->Lift(z)));
    }
    const auto over_lattice = testing::EnumerateOptima(
        testing::ViaEval(*f), l.lower().ToMask(), l.upper().ToMask(),
        Goal::kMax);
    const auto over_free = testing::EnumerateOptima(
        testing::ViaEval(*g), 0, testing::FullMask(g->n()), Goal::kMax);
    EXPECT_DOUBLE_EQ(over_lattice.value, over_free.value);
    EXPECT_TRUE(VerifySubmodularity(*g));
  }
}

TEST(ContractTest, PointLatticeThrows) {
  EXPECT_THROW(ContractToLattice(Triangle(), Lattice::Point(Set(3, {0}))),
               std::invalid_argument);
}

TEST(BruteForceTest, Examples) {
  const auto mod = MakeModular(ModularWeights({-1, 2, -3}));
  const SolveReport a = BruteForce(mod, Sense::kMaximize);
  EXPECT_EQ(a.solution, Set(3, {1}));
  EXPECT_EQ(a.value, 2.0);
  EXPECT_TRUE(a.exact);

  const SolveReport b = BruteForce(Triangle(), Sense::kMaximize);
  EXPECT_EQ(b.value, 2.0);
  EXPECT_EQ(b.solution, Set(3, {0}));

  const auto hp = MakeHalfProducts({{1, 1}, {1, 1}, {0.5, 0.5}});
  const SolveReport c = BruteForce(hp, Sense::kMaximize);
  EXPECT_EQ(c.value, 0.5);
  EXPECT_EQ(c.solution, Set(2, {0}));
}

TEST(BruteForceTest, CapIsEnforced) {
  EXPECT_THROW(BruteForce(GenerateInstance(Family::kCut, 30, 1),
                          Sense::kMaximize),
               ProblemTooLargeError);
  EXPECT_THROW(BruteForce(Triangle(), Lattice::Full(3), Sense::kMaximize, 2),
               ProblemTooLargeError);
}

TEST(BruteForceTest, MatchesEnumerationOnSubLattices) {
  Rng rng(9);
  for (Family family : AllFamilies()) {
    for (uint64_t seed = 0; seed < 5; ++seed) {
      const Oracle f = GenerateInstance(family, 8, seed);
      const Lattice l = RandomLattice(rng, 8);
      for (Sense sense : {Sense::kMinimize, Sense::kMaximize}) {
        const SolveReport r = BruteForce(f, l, sense);
        const auto o = testing::EnumerateOptima(
            testing::ViaEval(*f), l.lower().ToMask(), l.upper().ToMask(),
            sense == Sense::kMinimize ? Goal::kMin : Goal::kMax, 0.0);
        EXPECT_EQ(r.value, o.value);
        EXPECT_EQ(r.solution.ToMask(), o.sets.front());
      }
    }
  }
}

TEST(BranchAndBoundTest, ModularSolvedAtRoot) {
  const SolveReport r =
      BranchAndBoundMax(GenerateInstance(Family::kModular, 20, 1),
                        Lattice::Full(20));
  EXPECT_EQ(r.branches, 0);
  EXPECT_NEAR(r.value,
              BruteForce(GenerateInstance(Family::kModular, 20, 1),
                         Sense::kMaximize)
                  .value,
              1e-12);
}

TEST(BranchAndBoundTest, TriangleNeedsBranching) {
  const SolveReport r = BranchAndBoundMax(Triangle(), Lattice::Full(3));
  EXPECT_EQ(r.value, 2.0);
  EXPECT_GE(r.branches, 1);
  EXPECT_TRUE(r.exact);
}

TEST(BranchAndBoundTest, MatchesBruteForce) {
  Rng rng(5);
  for (Family family : AllFamilies()) {
    for (uint64_t seed = 0; seed < 10; ++seed) {
      const Oracle f = GenerateInstance(family, 12, seed);
      const Lattice l = seed % 2 ? RandomLattice(rng, 12) : Lattice::Full(12);
      const double want = BruteForce(f, l, Sense::kMaximize).value;
      const SolveReport r = BranchAndBoundMax(f, l);
      EXPECT_NEAR(r.value, want, 1e-9 * (1 + std::abs(want)));
      EXPECT_TRUE(l.Contains(r.solution));
      EXPECT_EQ(r.value, f->Eval(r.solution));
    }
  }
}

TEST(BranchAndBoundTest, NodeBudgetRaises) {
  EXPECT_THROW(BranchAndBoundMax(GenerateInstance(Family::kCut, 16, 1),
                                 Lattice::Full(16), 2),
               NodeBudgetExceededError);
}

// The pruning bound never undercuts a member of its lattice.
TEST(BranchAndBoundTest, ModularUpperBoundIsValid) {
  Rng rng(6);
  for (Family family : AllFamilies()) {
    const Oracle f = GenerateInstance(family, 8, 3);
    for (int trial = 0; trial < 10; ++trial) {
      const Lattice l = RandomLattice(rng, 8);
      double bound = f->Eval(l.lower());
      l.Free().ForEach([&](int i) {
        bound += std::max(0.0, f->Marginal(i, l.lower()));
      });
      const auto o = testing::EnumerateOptima(
          testing::ViaEval(*f), l.lower().ToMask(), l.upper().ToMask(),
          Goal::kMax, 0.0);
      EXPECT_LE(o.value, bound + 1e-9 * (1 + std::abs(bound)));
    }
  }
}

TEST(BidirectionalGreedyTest, Examples) {
  const SolveReport tri =
      BidirectionalGreedy(Triangle(), Lattice::Full(3), false, 0);
  EXPECT_EQ(tri.solution, Set(3, {0, 2}));
  EXPECT_EQ(tri.value, 2.0);

  const auto pos = MakeModular(ModularWeights({0.5, 1, 2}));
  for (uint64_t seed = 0; seed < 10; ++seed) {
    EXPECT_EQ(BidirectionalGreedy(pos, Lattice::Full(3), true, seed).solution,
              ElementSet::Full(3));
  }
}

TEST(BidirectionalGreedyTest, StaysInLattice) {
  Rng rng(3);
  const Oracle f = GenerateInstance(Family::kCut, 10, 2);
  for (int trial = 0; trial < 20; ++trial) {
    const Lattice l = RandomLattice(rng, 10);
    const SolveReport r = BidirectionalGreedy(f, l, true, trial);
    EXPECT_TRUE(l.Contains(r.solution));
    EXPECT_EQ(r.value, f->Eval(r.solution));
  }
}

TEST(LocalSearchTest, Examples) {
  const auto mod = MakeModular(ModularWeights({-1, 2, -3, 0.5}));
  for (uint64_t seed = 0; seed < 5; ++seed) {
    EXPECT_EQ(RandomLocalSearch(mod, Lattice::Full(4), Sense::kMaximize, seed,
                                1)
                  .solution,
              Set(4, {1, 3}));
    EXPECT_EQ(RandomLocalSearch(mod, Lattice::Full(4), Sense::kMinimize, seed,
                                1)
                  .solution,
              Set(4, {0, 2}));
    EXPECT_EQ(RandomLocalSearch(Triangle(), Lattice::Full(3),
                                Sense::kMaximize, seed, 1)
                  .value,
              2.0);
  }
}

// The result is a 1-flip local optimum inside the lattice.
TEST(LocalSearchTest, ResultIsLocallyOptimal) {
  Rng rng(12);
  for (Family family : AllFamilies()) {
    const Oracle f = GenerateInstance(family, 14, 1);
    const Lattice l = RandomLattice(rng, 14);
    for (Sense sense : {Sense::kMinimize, Sense::kMaximize}) {
      const SolveReport r = RandomLocalSearch(f, l, sense, 4, 3);
      ASSERT_TRUE(l.Contains(r.solution));
      const double v = f->Eval(r.solution);
      l.Free().ForEach([&](int i) {
        const ElementSet y =
            r.solution.Contains(i) ? r.solution.Without(i) : r.solution.With(i);
        const double w = f->Eval(y);
        const double slack = 1e-9 * (1 + std::abs(v));
        if (sense == Sense::kMaximize) EXPECT_LE(w, v + slack);
        else EXPECT_GE(w, v - slack);
      });
    }
  }
}

TEST(PermutationSolverTest, Examples) {
  const auto mod = MakeModular(ModularWeights({-1, 2, -3, 0.5}));
  EXPECT_EQ(RandomPermutationSolver(mod, Lattice::Full(4), Sense::kMaximize,
                                    3, 1)
                .solution,
            Set(4, {1, 3}));
  for (uint64_t seed = 0; seed < 10; ++seed) {
    const SolveReport r = RandomPermutationSolver(
        Triangle(), Lattice::Full(3), Sense::kMaximize, seed, 1);
    // After the first pick every marginal is 0, so nothing else is kept.
    EXPECT_EQ(r.value, 2.0);
    EXPECT_EQ(r.solution.Count(), 1);
  }
}

TEST(PermutationSolverTest, MoreTrialsNeverHurt) {
  const Oracle f = GenerateInstance(Family::kLogDet, 14, 6);
  double prev = -1e300;
  for (int trials = 1; trials <= 16; trials *= 2) {
    const double v = RandomPermutationSolver(f, Lattice::Full(14),
                                             Sense::kMaximize, 21, trials)
                         .value;
    EXPECT_GE(v, prev);
    prev = v;
  }
}

TEST(SolveTest, DispatchAndSeedDeterminism) {
  const Oracle f = GenerateInstance(Family::kSubsetSelection, 12, 1);
  for (const char* name : {"brute-force", "bnb", "greedy", "local-search",
                           "permutation"}) {
    SolverChoice c;
    c.kind = ParseSolver(name);
    c.trials = 3;
    c.seed = 8;
    const SolveReport a = Solve(f, Lattice::Full(12), Sense::kMaximize, c);
    const SolveReport b = Solve(f, Lattice::Full(12), Sense::kMaximize, c);
    EXPECT_EQ(a.solution, b.solution) << name;
    EXPECT_EQ(a.value, f->Eval(a.solution)) << name;
    EXPECT_EQ(a.exact, IsExact(c.kind)) << name;
    EXPECT_STREQ(SolverName(c.kind), name);
  }
  SolverChoice bnb;
  bnb.kind = SolverKind::kBranchAndBound;
  EXPECT_THROW(Solve(f, Lattice::Full(12), Sense::kMinimize, bnb),
               std::invalid_argument);
  EXPECT_THROW(ParseSolver("simplex"), std::invalid_argument);
}

TEST(SolveTest, PointLatticeShortCircuits) {
  const Lattice p = Lattice::Point(Set(3, {2}));
  for (SolverKind kind :
       {SolverKind::kBruteForce, SolverKind::kBranchAndBound,
        SolverKind::kBidirectionalGreedy, SolverKind::kRandomLocalSearch,
        SolverKind::kRandomPermutation}) {
    SolverChoice c;
    c.kind = kind;
    const SolveReport r = Solve(Triangle(), p, Sense::kMaximize, c);
    EXPECT_EQ(r.solution, Set(3, {2}));
    EXPECT_EQ(r.value, 2.0);
  }
}

TEST(SolveReportCsvTest, Row) {
  const SolveReport r = BruteForce(Triangle(), Sense::kMaximize);
  std::ostringstream out;
  WriteSolveReportHeader(out);
  WriteSolveReportRow(out, r, 3, 42);
  const std::string text = out.str();
  EXPECT_EQ(text.rfind("solver,n,value,set,evals,seconds,seed,exact\n", 0),
            0u);
  // 2^3 enumerated sets plus the readback of the reported value.
  EXPECT_NE(text.find("brute-force,3,2,\"0\",9,"), std::string::npos) << text;
  EXPECT_NE(text.find(",42,1\n"), std::string::npos) << text;
}

}  // namespace
}  // namespace latred
