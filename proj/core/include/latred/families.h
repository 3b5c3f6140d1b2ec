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
// Objective families. Every family validates its parameters on construction
// (std::invalid_argument, or NotPositiveDefiniteError for the determinant
// families) and provides closed-form marginal fast paths.
//

#ifndef LATRED_FAMILIES_H_
#define LATRED_FAMILIES_H_

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "latred/matrix.h"
#include "latred/modular.h"
#include "latred/set_function.h"

namespace latred {

// A Cholesky factorization failed.
class NotPositiveDefiniteError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// f(X) = sum_{i in N} sum_{j in X} M_ij - lambda * sum_{i,j in X} M_ij.
struct SubsetSelectionSpec {
  Matrix m;  // symmetric, entries >= 0
  double lambda = 0.7;  // in [0.5, 1]
};

// f(X) = h(X) + h(N\X) with h the differential entropy of a Gaussian with
// covariance sigma restricted to X: h(X) = 1/2 log((2 pi e)^|X| det sigma_X).
struct GaussianMISpec {
  Matrix sigma;  // symmetric positive definite
};

// f(X) = log det K_X + log det K_{N\X}, with det K_{} = 1.
struct LogDetSpec {
  Matrix k;  // symmetric positive definite
};

// f(X) = c(X) - sum_{i<j, i,j in X} a_i b_j, ordered by element index.
struct HalfProductsSpec {
  std::vector<double> a, b, c;  // nonnegative, equal length
};

// f(X) = sum_{i in X, j notin X} W_ij.
struct CutSpec {
  Matrix w;  // symmetric, nonnegative, zero diagonal
};

class ModularFunction final : public SetFunction {
 public:
  explicit ModularFunction(ModularWeights w);
  std::string name() const override { return "modular"; }
  const ModularWeights& weights() const { return w_; }

 protected:
  double DoEval(const ElementSet& x) const override;
  double DoMarginal(int i, const ElementSet& a) const override;
  void DoMarginals(const ElementSet& a, std::span<const int> candidates,
                   std::span<double> out) const override;
  void DoRemovalMarginals(const ElementSet& y, std::span<const int> candidates,
                          std::span<double> out) const override;

 private:
  ModularWeights w_;
};

class SubsetSelectionFunction final : public SetFunction {
 public:
  explicit SubsetSelectionFunction(SubsetSelectionSpec spec);
  std::string name() const override { return "subset-selection"; }
  const SubsetSelectionSpec& spec() const { return spec_; }

 protected:
  double DoEval(const ElementSet& x) const override;
  double DoMarginal(int i, const ElementSet& a) const override;
  void DoRemovalMarginals(const ElementSet& y, std::span<const int> candidates,
                          std::span<double> out) const override;

 private:
  SubsetSelectionSpec spec_;
  std::vector<double> column_sums_;
};

class HalfProductsFunction final : public SetFunction {
 public:
  explicit HalfProductsFunction(HalfProductsSpec spec);
  std::string name() const override { return "half-products"; }
  const HalfProductsSpec& spec() const { return spec_; }

 protected:
  double DoEval(const ElementSet& x) const override;
  double DoMarginal(int i, const ElementSet& a) const override;
  void DoRemovalMarginals(const ElementSet& y, std::span<const int> candidates,
                          std::span<double> out) const override;

 private:
  HalfProductsSpec spec_;
};

class CutFunction final : public SetFunction {
 public:
  explicit CutFunction(CutSpec spec);
  std::string name() const override { return "cut"; }
  const CutSpec& spec() const { return spec_; }

 protected:
  double DoEval(const ElementSet& x) const override;
  double DoMarginal(int i, const ElementSet& a) const override;
  void DoRemovalMarginals(const ElementSet& y, std::span<const int> candidates,
                          std::span<double> out) const override;

 private:
  CutSpec spec_;
  std::vector<double> degrees_;
};

// Shared machinery for the two symmetrized log-determinant objectives:
// value(X) = n * offset_per_element + scale * (log det K_X + log det K_{N\X}).
//
// Batched marginals factor K_A and K_{N\A} once per call and obtain every
// candidate's gain from Schur complements and inverse diagonals.
class SymmetricLogDetFunction : public SetFunction {
 public:
  const Matrix& kernel() const { return kernel_; }

  // log det K_X, 0 for the empty set.
  double LogDet(const ElementSet& x) const;

 protected:
  SymmetricLogDetFunction(Matrix kernel, double scale,
                          double offset_per_element);

  double DoEval(const ElementSet& x) const override;
  double DoMarginal(int i, const ElementSet& a) const override;
  void DoMarginals(const ElementSet& a, std::span<const int> candidates,
                   std::span<double> out) const override;
  void DoRemovalMarginals(const ElementSet& y, std::span<const int> candidates,
                          std::span<double> out) const override;

 private:
  Matrix kernel_;
  double scale_;
  double offset_;
};

class LogDetFunction final : public SymmetricLogDetFunction {
 public:
  explicit LogDetFunction(LogDetSpec spec);
  std::string name() const override { return "logdet"; }
};

class GaussianMIFunction final : public SymmetricLogDetFunction {
 public:
  explicit GaussianMIFunction(GaussianMISpec spec);
  std::string name() const override { return "gaussian-mi"; }
};

Oracle MakeModular(ModularWeights w);
Oracle MakeSubsetSelection(SubsetSelectionSpec spec);
Oracle MakeGaussianMI(GaussianMISpec spec);
Oracle MakeLogDet(LogDetSpec spec);
Oracle MakeHalfProducts(HalfProductsSpec spec);
Oracle MakeCut(CutSpec spec);

}  // namespace latred

#endif  // LATRED_FAMILIES_H_
