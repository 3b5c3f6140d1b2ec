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
#include "latred/bounds.h"
#include "latred/families.h"
#include "latred/instances.h"
#include "latred/perturbation.h"
#include "latred/solvers.h"
#include "test_util.h"

namespace latred {
namespace {

ElementSet Set(int n, std::initializer_list<int> members) {
  return ElementSet::FromIndices(n, members);
}

Oracle Triangle() { return MakeCut({testing::TriangleWeights()}); }

TEST(ReductionRateBoundTest, TriangleExample) {
  const LatticeStats stats =
      ComputeLatticeStats(*Triangle(), Lattice::Full(3));
  const ClampedBound b = ExpectedReductionRateBound(QueryFromStats(stats, 4));
  EXPECT_DOUBLE_EQ(b.raw, 0.5);
  EXPECT_DOUBLE_EQ(b.clamped, 0.5);
}

TEST(ReductionRateBoundTest, LimitsAndClamping) {
  BoundQuery q;
  q.curvature = 2;
  q.gain_sum = 6;
  q.free_count = 3;
  q.t = 1e12;
  EXPECT_NEAR(ExpectedReductionRateBound(q).raw, 1.0, 1e-9);
  q.t = 0.5;
  EXPECT_DOUBLE_EQ(ExpectedReductionRateBound(q).raw, -3.0);
  EXPECT_DOUBLE_EQ(ExpectedReductionRateBound(q).clamped, 0.0);
  q.free_count = 0;
  EXPECT_THROW(ExpectedReductionRateBound(q), std::invalid_argument);
  q.free_count = 3;
  q.t = 0;
  EXPECT_THROW(ExpectedReductionRateBound(q), std::invalid_argument);
  LatticeStats no_curvature;
  EXPECT_THROW(QueryFromStats(no_curvature, 1.0), std::domain_error);
}

TEST(LossBoundsTest, TriangleMinimizationExample) {
  PrOptions o;
  o.injected_noise = ModularWeights({-3, 3, -3});
  const PrResult r = PrMinimize(Triangle(), Lattice::Full(3), o);
  const LossBounds b = PerformanceLossBounds(
      r.perturbation, r.perturbed_trace, ElementSet::Empty(3), 3,
      r.final_rate());
  EXPECT_DOUBLE_EQ(b.exact, 6.0);
  EXPECT_DOUBLE_EQ(b.coarse, 9.0);
}

TEST(LossBoundsTest, CoarseFormula) {
  ReductionTrace trace;
  trace.input = Lattice::Full(20);
  trace.output = Lattice::Full(20);
  Perturbation r;
  r.weights = ModularWeights(std::vector<double>(20, 0.0));
  r.scale = 0.5;
  const LossBounds b =
      PerformanceLossBounds(r, trace, ElementSet::Empty(20), 20, 0.8);
  EXPECT_DOUBLE_EQ(b.coarse, 8.0);
  EXPECT_DOUBLE_EQ(b.exact, 0.0);
}

TEST(LossBoundsTest, ReferenceOutsideInputThrows) {
  ReductionTrace trace;
  trace.input = Lattice(Set(3, {0}), ElementSet::Full(3));
  trace.output = trace.input;
  Perturbation r;
  r.weights = ModularWeights({0, 0, 0});
  EXPECT_THROW(PerformanceLossBounds(r, trace, Set(3, {1}), 3, 0.0),
               std::invalid_argument);
  EXPECT_THROW(CountMistakes(Set(3, {1}), trace), std::invalid_argument);
}

TEST(LossBoundsTest, ZeroNoiseGivesZero) {
  const Oracle f = GenerateInstance(Family::kCut, 8, 1);
  for (Sense sense : {Sense::kMinimize, Sense::kMaximize}) {
    PrOptions o;
    o.scale = 0.0;
    const PrResult r = PerturbationReduction(f, Lattice::Full(8), sense, o);
    const SolveReport ref = BruteForce(f, sense);
    const LossBounds b = PerformanceLossBounds(
        r.perturbation, r.perturbed_trace, ref.solution, 8, r.final_rate());
    EXPECT_EQ(b.exact, 0.0);
    EXPECT_EQ(r.value, ref.value);
  }
}

TEST(HighProbabilityBoundTest, Examples) {
  BoundQuery q;
  q.t = 1;
  q.n = 20;
  q.delta = 0.1;
  EXPECT_NEAR(HighProbabilityLossBound(q, 4), 13.357, 5e-4);
  EXPECT_NEAR(HighProbabilityLossBound(q, 4),
              std::sqrt(8 * (20 + std::log(10.0))), 1e-12);
  EXPECT_EQ(HighProbabilityLossBound(q, 0), 0.0);
  for (double bad : {0.0, 1.0, -0.5, 2.0}) {
    q.delta = bad;
    EXPECT_THROW(HighProbabilityLossBound(q, 1), std::invalid_argument);
  }
  q.delta = 0.1;
  EXPECT_THROW(HighProbabilityLossBound(q, -1), std::invalid_argument);
}

TEST(ExpectedMistakesTest, Examples) {
  BoundQuery q;
  q.sense = Sense::kMaximize;
  q.n = 3;
  q.midpoint = 0;
  q.optimum = 2;
  q.t = 4;
  EXPECT_DOUBLE_EQ(ExpectedMistakesBound(q), 1.0);
  q.t = 1e12;
  EXPECT_NEAR(ExpectedMistakesBound(q), 1.5, 1e-9);
  q.sense = Sense::kMinimize;
  q.midpoint = 2;
  q.optimum = 0;
  q.t = 4;
  EXPECT_DOUBLE_EQ(ExpectedMistakesBound(q), 1.0);
  q.t = 0;
  EXPECT_THROW(ExpectedMistakesBound(q), std::invalid_argument);
}

TEST(CountMistakesTest, Examples) {
  ReductionTrace trace;
  trace.sense = Sense::kMaximize;
  trace.input = Lattice::Full(3);
  trace.output = Lattice::Point(Set(3, {1}));
  trace.iterations = {{ElementSet::Empty(3), ElementSet::Full(3),
                       Set(3, {0, 2}), Set(3, {1})},
                      {Set(3, {1}), Set(3, {1}), ElementSet::Empty(3),
                       ElementSet::Empty(3)}};
  const MistakenReductionReport m = CountMistakes(Set(3, {0}), trace);
  EXPECT_EQ(m.contraction, Set(3, {1}));
  EXPECT_EQ(m.total, 2);
  EXPECT_EQ(m.per_iteration, (std::vector<int>{2}));

  const MistakenReductionReport none = CountMistakes(Set(3, {1}), trace);
  EXPECT_EQ(none.total, 0);
  EXPECT_EQ(none.contraction, Set(3, {1}));
}

// On traced runs: r(X_t \ X*) - r(X* \ Y_t) = r(X_c) - r(X*), the mistake
// total equals the per-iteration sum, and loss <= exact <= coarse.
TEST(CountMistakesTest, ContractionIdentityOnRandomRuns) {
  const int n = 9;
  for (Family family : AllFamilies()) {
    for (uint64_t seed = 0; seed < 10; ++seed) {
      const Oracle f = GenerateInstance(family, n, seed);
      for (Sense sense : {Sense::kMinimize, Sense::kMaximize}) {
        PrOptions o;
        o.scale = 0.5 + 0.2 * seed;
        o.seed = seed;
        const PrResult r = PerturbationReduction(f, Lattice::Full(n), sense, o);
        const SolveReport ref = BruteForce(f, r.exact_lattice, sense);
        const MistakenReductionReport m =
            CountMistakes(ref.solution, r.perturbed_trace);
        const ModularWeights& w = r.perturbation.weights;
        const ElementSet& x = r.lattice.lower();
        const ElementSet& y = r.lattice.upper();
        EXPECT_NEAR(w.Eval(x - ref.solution) - w.Eval(ref.solution - y),
                    w.Eval(m.contraction) - w.Eval(ref.solution), 1e-12);
        EXPECT_TRUE(r.lattice.Contains(m.contraction));
        int sum = 0;
        for (int k : m.per_iteration) sum += k;
        EXPECT_EQ(sum, m.total);

        const LossBounds b =
            PerformanceLossBounds(r.perturbation, r.perturbed_trace,
                                  ref.solution, n, r.final_rate());
        const double loss = sense == Sense::kMaximize ? ref.value - r.value
                                                      : r.value - ref.value;
        const double slack = 1e-9 * (1 + std::abs(ref.value));
        EXPECT_GE(loss, -slack);
        EXPECT_LE(loss, b.exact + slack);
        EXPECT_LE(b.exact, b.coarse + slack);
      }
    }
  }
}

TEST(SuggestScaleTest, Examples) {
  BoundQuery q;
  q.optimum = 2;
  q.midpoint = 0;
  q.n = 3;
  q.epsilon = 0.25;
  EXPECT_NEAR(SuggestScale(q, ScaleRule::kMistakeBudget), 8.0 / 3.0, 1e-12);
  q.epsilon = 0.4999;
  EXPECT_GT(SuggestScale(q, ScaleRule::kMistakeBudget), 1e3);
  q.epsilon = 0.5;
  EXPECT_THROW(SuggestScale(q, ScaleRule::kMistakeBudget),
               std::invalid_argument);
  q.delta = 0.5;
  EXPECT_DOUBLE_EQ(SuggestScale(q, ScaleRule::kApproximationRatio), 2.0);
  q.midpoint = 5;
  q.epsilon = 0.25;
  EXPECT_THROW(SuggestScale(q, ScaleRule::kMistakeBudget),
               std::invalid_argument);
  EXPECT_THROW(SuggestScale(q, ScaleRule::kApproximationRatio),
               std::invalid_argument);
}

TEST(BoundComparisonCsvTest, Format) {
  std::ostringstream out;
  WriteBoundComparisonCsv(out, {{"tri", 4, 1, "rate", 0.5, 0.61, 0.01, 1000}});
  EXPECT_EQ(out.str(),
            "# latred bound-comparison v1\n"
            "config_id,t,p_ratio,bound,bound_value,empirical_mean,"
            "empirical_stderr,draws\n"
            "tri,4,1,rate,0.5,0.61,0.01,1000\n");
}

}  // namespace
}  // namespace latred
