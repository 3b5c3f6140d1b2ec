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
#include <memory>
#include <stdexcept>
#include <thread>
#include <vector>

#include "gtest/gtest.h"
#include "latred/families.h"
#include "latred/feature_kernel.h"
#include "latred/instances.h"
#include "latred/memoized.h"
#include "latred/modular.h"
#include "latred/rng.h"
#include "latred/submodularity.h"
#include "test_util.h"

namespace latred {
namespace {

using testing::FullMask;
using testing::MaskFn;

ElementSet Set(int n, std::initializer_list<int> members) {
  return ElementSet::FromIndices(n, members);
}

const double kLog2PiE = std::log(2.0 * M_PI * M_E);

TEST(SubsetSelectionTest, Examples) {
  const auto f = MakeSubsetSelection(testing::SmallSubsetSelection());
  EXPECT_DOUBLE_EQ(f->Eval(ElementSet::Empty(3)), 0.0);
  EXPECT_NEAR(f->Eval(Set(3, {0})), 1.3, 1e-12);
  EXPECT_NEAR(f->Eval(ElementSet::Full(3)), 1.8, 1e-12);
  EXPECT_NEAR(f->Marginal(0, Set(3, {1, 2})), -0.1, 1e-12);
}

TEST(SubsetSelectionTest, RejectsBadSpecs) {
  SubsetSelectionSpec s = testing::SmallSubsetSelection();
  s.lambda = 0.4;
  EXPECT_THROW(SubsetSelectionFunction{s}, std::invalid_argument);
  s = testing::SmallSubsetSelection();
  s.m(0, 1) = 0.9;
  EXPECT_THROW(SubsetSelectionFunction{s}, std::invalid_argument);
  s = testing::SmallSubsetSelection();
  s.m(0, 1) = s.m(1, 0) = -0.5;
  EXPECT_THROW(SubsetSelectionFunction{s}, std::invalid_argument);
}

TEST(GaussianMITest, IdentityCovarianceIsConstant) {
  const int n = 4;
  const auto f = MakeGaussianMI({Matrix::Identity(n)});
  for (uint64_t m = 0; m < 16; ++m) {
    EXPECT_NEAR(f->Eval(ElementSet::FromMask(n, m)), 0.5 * n * kLog2PiE,
                1e-12);
  }
}

TEST(GaussianMITest, TwoVariableExample) {
  const auto f = MakeGaussianMI({Matrix{{1, 0.6}, {0.6, 1}}});
  EXPECT_NEAR(f->Eval(Set(2, {0})), kLog2PiE, 1e-12);
  // Joint entropy: log(2 pi e) + 1/2 log(1 - rho^2).
  EXPECT_NEAR(f->Eval(ElementSet::Empty(2)),
              kLog2PiE + 0.5 * std::log(1 - 0.36), 1e-12);
}

TEST(GaussianMITest, RejectsIndefiniteCovariance) {
  EXPECT_THROW(MakeGaussianMI({Matrix{{1, 2}, {2, 1}}}),
               NotPositiveDefiniteError);
}

TEST(LogDetTest, Examples) {
  const auto id = MakeLogDet({Matrix::Identity(3)});
  for (uint64_t m = 0; m < 8; ++m) {
    EXPECT_NEAR(id->Eval(ElementSet::FromMask(3, m)), 0.0, 1e-14);
  }
  const Matrix k{{2, 1}, {1, 2}};
  const auto f = MakeLogDet({k});
  EXPECT_NEAR(f->Eval(Set(2, {0})), std::log(4.0), 1e-12);
  EXPECT_NEAR(f->Eval(ElementSet::Empty(2)), std::log(3.0), 1e-12);
}

TEST(LogDetTest, RejectsNonPositiveDefinite) {
  EXPECT_THROW(MakeLogDet({Matrix{{1, 1}, {1, 1}}}), NotPositiveDefiniteError);
  EXPECT_THROW(MakeLogDet({Matrix{{1, 0.5}, {0.4, 1}}}),
               std::invalid_argument);
}

TEST(HalfProductsTest, Examples) {
  const auto f = MakeHalfProducts({{1, 1}, {1, 1}, {0.5, 0.5}});
  EXPECT_DOUBLE_EQ(f->Eval(ElementSet::Empty(2)), 0.0);
  EXPECT_DOUBLE_EQ(f->Eval(ElementSet::Full(2)), 0.0);
  EXPECT_DOUBLE_EQ(f->Eval(Set(2, {0})), 0.5);
}

TEST(HalfProductsTest, RejectsBadSpecs) {
  EXPECT_THROW(MakeHalfProducts({{1}, {1, 1}, {1, 1}}), std::invalid_argument);
  EXPECT_THROW(MakeHalfProducts({{1, -1}, {1, 1}, {1, 1}}),
               std::invalid_argument);
}

TEST(CutTest, TriangleExamples) {
  const auto f = MakeCut({testing::TriangleWeights()});
  EXPECT_DOUBLE_EQ(f->Eval(Set(3, {0})), 2.0);
  EXPECT_DOUBLE_EQ(f->Eval(ElementSet::Full(3)), 0.0);
  EXPECT_DOUBLE_EQ(f->Eval(Set(3, {0, 1})), 2.0);
  EXPECT_DOUBLE_EQ(f->Marginal(0, ElementSet::Empty(3)), 2.0);
}

TEST(CutTest, RejectsBadWeights) {
  Matrix w = testing::TriangleWeights();
  w(0, 0) = 1;
  EXPECT_THROW(MakeCut({w}), std::invalid_argument);
}

TEST(ModularFunctionTest, MarginalIsWeight) {
  const auto f = MakeModular(ModularWeights({-1, 2, -3}));
  EXPECT_DOUBLE_EQ(f->Marginal(1, Set(3, {0, 2})), 2.0);
  EXPECT_DOUBLE_EQ(f->Marginal(2, ElementSet::Empty(3)), -3.0);
}

TEST(MarginalTest, ElementInsideAThrows) {
  const auto f = MakeCut({testing::TriangleWeights()});
  EXPECT_THROW(f->Marginal(0, Set(3, {0})), std::invalid_argument);
  const std::vector<int> bad = {0};
  EXPECT_THROW(f->Marginals(Set(3, {0}), bad), std::invalid_argument);
  EXPECT_THROW(f->RemovalMarginals(ElementSet::Empty(3), bad),
               std::invalid_argument);
  EXPECT_THROW(f->Eval(ElementSet::Empty(4)), std::invalid_argument);
}

// Random instances agree with the direct formulas on every subset.
class FormulaTest : public ::testing::TestWithParam<Family> {};

TEST_P(FormulaTest, EvalMatchesDirectFormula) {
  const int n = 7;
  for (uint64_t seed = 1; seed <= 5; ++seed) {
    const InstanceData data = GenerateInstanceData(GetParam(), n, seed);
    const Oracle f = BuildOracle(data);
    MaskFn naive;
    if (auto* s = std::get_if<SubsetSelectionSpec>(&data.params)) {
      naive = [s](uint64_t m) {
        return testing::NaiveSubsetSelection(s->m, s->lambda, m);
      };
    } else if (auto* s = std::get_if<GaussianMISpec>(&data.params)) {
      naive = [s](uint64_t m) { return testing::NaiveGaussianMI(s->sigma, m); };
    } else if (auto* s = std::get_if<LogDetSpec>(&data.params)) {
      naive = [s](uint64_t m) { return testing::NaiveLogDetSym(s->k, m); };
    } else if (auto* s = std::get_if<HalfProductsSpec>(&data.params)) {
      naive = [s](uint64_t m) { return testing::NaiveHalfProducts(*s, m); };
    } else if (auto* s = std::get_if<CutSpec>(&data.params)) {
      naive = [s](uint64_t m) { return testing::NaiveCut(s->w, m); };
    } else {
      const auto& w = std::get<ModularWeights>(data.params);
      naive = [&w](uint64_t m) {
        double sum = 0.0;
        for (int i = 0; i < w.size(); ++i) {
          if (testing::Has(m, i)) sum += w[i];
        }
        return sum;
      };
    }
    for (uint64_t m = 0; m <= FullMask(n); ++m) {
      const double want = naive(m);
      EXPECT_NEAR(f->Eval(ElementSet::FromMask(n, m)), want,
                  1e-9 * (1 + std::abs(want)))
          << FamilyName(GetParam()) << " mask " << m;
    }
  }
}

// Fast-path marginals (single and batched, both directions) agree with the
// two-evaluation definition on 10^4 random probes.
TEST_P(FormulaTest, FastPathMarginalsMatchEvalDifference) {
  const int n = 12;
  const Oracle f = GenerateInstance(GetParam(), n, 3);
  Rng rng(17);
  int probes = 0;
  while (probes < 10000) {
    ElementSet a(n);
    for (int i = 0; i < n; ++i) {
      if (rng.Bernoulli(0.5)) a.Insert(i);
    }
    const std::vector<int> outside = a.Complement().Members();
    const std::vector<int> inside = a.Members();
    const std::vector<double> batch = f->Marginals(a, outside);
    const std::vector<double> removal = f->RemovalMarginals(a, inside);
    const double fa = f->Eval(a);
    for (size_t k = 0; k < outside.size(); ++k) {
      const double want = f->Eval(a.With(outside[k])) - fa;
      const double tol = 1e-9 * (1 + std::abs(want) + std::abs(fa));
      EXPECT_NEAR(f->Marginal(outside[k], a), want, tol);
      EXPECT_NEAR(batch[k], want, tol);
      ++probes;
    }
    for (size_t k = 0; k < inside.size(); ++k) {
      const double want = fa - f->Eval(a.Without(inside[k]));
      EXPECT_NEAR(removal[k], want, 1e-9 * (1 + std::abs(want) + std::abs(fa)));
      ++probes;
    }
  }
}

TEST_P(FormulaTest, RandomInstancesAreSubmodular) {
  for (uint64_t seed = 0; seed < 200; ++seed) {
    const Oracle f = GenerateInstance(GetParam(), 8, seed);
    const auto violation = FindSubmodularityViolation(*f);
    EXPECT_FALSE(violation.has_value())
        << FamilyName(GetParam()) << " seed " << seed;
  }
}

INSTANTIATE_TEST_SUITE_P(AllFamilies, FormulaTest,
                         ::testing::ValuesIn(AllFamilies()),
                         [](const auto& info) {
                           std::string name = FamilyName(info.param);
                           for (char& c : name) {
                             if (c == '-') c = '_';
                           }
                           return name;
                         });

TEST(SymmetryTest, SymmetricFamiliesSatisfyComplementIdentity) {
  for (Family family : {Family::kGaussianMI, Family::kLogDet, Family::kCut}) {
    const int n = 10;
    const Oracle f = GenerateInstance(family, n, 4);
    for (uint64_t m = 0; m <= FullMask(n); m += 7) {
      const ElementSet x = ElementSet::FromMask(n, m);
      EXPECT_NEAR(f->Eval(x), f->Eval(x.Complement()),
                  1e-9 * (1 + std::abs(f->Eval(x))));
    }
  }
}

TEST(SubmodularityTest, Examples) {
  EXPECT_TRUE(VerifySubmodularity(*MakeCut({testing::TriangleWeights()})));
  const auto square = MakeLambda(5, [](const ElementSet& x) {
    return static_cast<double>(x.Count() * x.Count());
  });
  const auto v = FindSubmodularityViolation(*square);
  ASSERT_TRUE(v.has_value());
  EXPECT_TRUE(v->a.IsSubsetOf(v->b));
  EXPECT_LT(v->gain_a, v->gain_b);
  EXPECT_THROW(VerifySubmodularity(*GenerateInstance(Family::kCut, 15, 1)),
               std::invalid_argument);
}

// Adding modular noise never changes the verdict.
TEST(SubmodularityTest, ModularShiftPreservesVerdict) {
  const int n = 8;
  const auto square = MakeLambda(n, [](const ElementSet& x) {
    return static_cast<double>(x.Count() * x.Count());
  });
  for (uint64_t seed = 0; seed < 20; ++seed) {
    const ModularWeights w = UniformNoise(n, 3.0, seed);
    for (const Oracle& base : {GenerateInstance(Family::kLogDet, n, seed),
                               Oracle(square)}) {
      const bool verdict = VerifySubmodularity(*base);
      const auto shifted = MakeLambda(n, [&](const ElementSet& x) {
        return base->Eval(x) + w.Eval(x);
      });
      EXPECT_EQ(VerifySubmodularity(*shifted), verdict);
    }
  }
}

TEST(CounterTest, EvalCountsOncePerCall) {
  const auto f = MakeCut({testing::TriangleWeights()});
  f->ResetCounters();
  f->Eval(ElementSet::Empty(3));
  f->Eval(ElementSet::Full(3));
  EXPECT_EQ(f->eval_count(), 2);
  const std::vector<int> all = {0, 1, 2};
  f->Marginals(ElementSet::Empty(3), all);
  EXPECT_EQ(f->marginal_count(), 3);
  // Default marginals go through Eval.
  const auto g = MakeLambda(3, [](const ElementSet& x) { return x.Count(); });
  g->Marginal(0, ElementSet::Empty(3));
  EXPECT_EQ(g->eval_count(), 2);
  EXPECT_EQ(g->marginal_count(), 1);
}

TEST(CounterTest, ConcurrentEvalsAreNotLost) {
  const Oracle f = GenerateInstance(Family::kCut, 20, 1);
  f->ResetCounters();
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&f] {
      for (int i = 0; i < 2500; ++i) f->Eval(ElementSet::Full(20));
    });
  }
  for (auto& t : threads) t.join();
  EXPECT_EQ(f->eval_count(), 10000);
}

TEST(MemoizedTest, CachesAndCounts) {
  const Oracle base = GenerateInstance(Family::kLogDet, 6, 2);
  const auto memo = std::make_shared<MemoizedFunction>(base);
  base->ResetCounters();
  const ElementSet x = Set(6, {1, 3});
  const double v = memo->Eval(x);
  EXPECT_EQ(memo->Eval(x), v);
  EXPECT_EQ(base->eval_count(), 1);
  EXPECT_EQ(memo->eval_count(), 2);
  EXPECT_EQ(memo->hits(), 1);
  EXPECT_EQ(memo->cache_size(), 1u);
  EXPECT_NEAR(memo->Marginal(0, x), base->Marginal(0, x), 1e-12);
}

TEST(MemoizedTest, ConcurrentUseIsConsistent) {
  const Oracle base = GenerateInstance(Family::kCut, 10, 2);
  const Oracle memo = Memoize(base);
  std::vector<std::thread> threads;
  std::vector<int> mismatches(4, 0);
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&, t] {
      for (uint64_t m = 0; m < 1024; ++m) {
        const ElementSet x = ElementSet::FromMask(10, m);
        if (memo->Eval(x) != base->Eval(x)) ++mismatches[t];
      }
    });
  }
  for (auto& t : threads) t.join();
  for (int c : mismatches) EXPECT_EQ(c, 0);
}

TEST(IngestFeaturesTest, OrthogonalUnitVectors) {
  const LogDetSpec spec = IngestFeatures({{1, 0}, {0, 1}}, 1.0, 0.01);
  EXPECT_NEAR(spec.k(0, 1), std::exp(-2.0), 1e-15);
  EXPECT_NEAR(spec.k(0, 0), 1.01, 1e-15);
}

TEST(IngestFeaturesTest, DuplicatePointsWithoutJitterFail) {
  EXPECT_THROW(IngestFeatures({{0.3, 0.4}, {0.3, 0.4}}, 1.0, 0.0),
               NotPositiveDefiniteError);
  EXPECT_NO_THROW(IngestFeatures({{0.3, 0.4}, {0.3, 0.4}}, 1.0, 1e-6));
}

TEST(IngestFeaturesTest, RejectsBadInput) {
  EXPECT_THROW(IngestFeatures({}, 1.0), std::invalid_argument);
  EXPECT_THROW(IngestFeatures({{1, 2}, {1}}, 1.0), std::invalid_argument);
  EXPECT_THROW(IngestFeatures({{1}}, 0.0), std::invalid_argument);
  EXPECT_THROW(IngestFeatures({{1}}, 1.0, -1.0), std::invalid_argument);
}

// Every accepted kernel has positive leading principal minors.
TEST(IngestFeaturesTest, OutputIsPositiveDefinite) {
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::vector<double>> rows(8, std::vector<double>(3));
    for (auto& r : rows) {
      for (double& v : r) v = rng.Uniform01();
    }
    const LogDetSpec spec = IngestFeatures(rows, 0.7);
    for (int k = 1; k <= 8; ++k) {
      std::vector<std::vector<double>> minor(k, std::vector<double>(k));
      for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) minor[i][j] = spec.k(i, j);
      }
      EXPECT_GT(testing::Determinant(minor), 0.0);
    }
  }
}

}  // namespace
}  // namespace latred
