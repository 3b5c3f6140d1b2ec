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

#include "latred/families.h"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "spd.h"

namespace latred {
namespace {

void CheckSquare(const Matrix& m, const char* what) {
  if (m.size() < 1) {
    throw std::invalid_argument(std::string(what) + " must be non-empty");
  }
}

void CheckSymmetricNonnegative(const Matrix& m, const char* what) {
  CheckSquare(m, what);
  if (!m.IsSymmetric()) {
    throw std::invalid_argument(std::string(what) + " must be symmetric");
  }
  for (int i = 0; i < m.size(); ++i) {
    for (int j = 0; j < m.size(); ++j) {
      if (!(m(i, j) >= 0.0)) {
        throw std::invalid_argument(std::string(what) +
                                    " entries must be nonnegative");
      }
    }
  }
}

void CheckPositiveDefinite(const Matrix& m, const char* what) {
  CheckSquare(m, what);
  if (!m.IsSymmetric()) {
    throw std::invalid_argument(std::string(what) + " must be symmetric");
  }
  if (!internal::IsPositiveDefinite(m)) {
    throw NotPositiveDefiniteError(std::string(what) +
                                   " is not positive definite");
  }
}

}  // namespace

// --- modular ---------------------------------------------------------------

ModularFunction::ModularFunction(ModularWeights w)
    : SetFunction(w.size()), w_(std::move(w)) {}

double ModularFunction::DoEval(const ElementSet& x) const { return w_.Eval(x); }

double ModularFunction::DoMarginal(int i, const ElementSet&) const {
  return w_[i];
}

void ModularFunction::DoMarginals(const ElementSet&,
                                  std::span<const int> candidates,
                                  std::span<double> out) const {
  for (size_t k = 0; k < candidates.size(); ++k) out[k] = w_[candidates[k]];
}

void ModularFunction::DoRemovalMarginals(const ElementSet&,
                                         std::span<const int> candidates,
                                         std::span<double> out) const {
  for (size_t k = 0; k < candidates.size(); ++k) out[k] = w_[candidates[k]];
}

// --- subset selection -----------------------------------------------------

SubsetSelectionFunction::SubsetSelectionFunction(SubsetSelectionSpec spec)
    : SetFunction(spec.m.size()), spec_(std::move(spec)) {
  CheckSymmetricNonnegative(spec_.m, "subset-selection matrix");
  if (!(spec_.lambda >= 0.5 && spec_.lambda <= 1.0)) {
    throw std::invalid_argument("subset-selection lambda must be in [0.5, 1]");
  }
  const int n = spec_.m.size();
  column_sums_.assign(n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) column_sums_[j] += spec_.m(i, j);
  }
}

double SubsetSelectionFunction::DoEval(const ElementSet& x) const {
  const std::vector<int> members = x.Members();
  double coverage = 0.0;
  double redundancy = 0.0;
  for (int j : members) {
    coverage += column_sums_[j];
    for (int i : members) redundancy += spec_.m(i, j);
  }
  return coverage - spec_.lambda * redundancy;
}

double SubsetSelectionFunction::DoMarginal(int i, const ElementSet& a) const {
  double cross = 0.0;
  a.ForEach([&](int j) { cross += spec_.m(i, j); });
  return column_sums_[i] - spec_.lambda * (spec_.m(i, i) + 2.0 * cross);
}

void SubsetSelectionFunction::DoRemovalMarginals(
    const ElementSet& y, std::span<const int> candidates,
    std::span<double> out) const {
  const std::vector<int> members = y.Members();
  for (size_t k = 0; k < candidates.size(); ++k) {
    const int i = candidates[k];
    double cross = 0.0;
    for (int j : members) {
      if (j != i) cross += spec_.m(i, j);
    }
    out[k] = column_sums_[i] - spec_.lambda * (spec_.m(i, i) + 2.0 * cross);
  }
}

// --- negative half-products -------------------------------------------------

HalfProductsFunction::HalfProductsFunction(HalfProductsSpec spec)
    : SetFunction(static_cast<int>(spec.c.size())), spec_(std::move(spec)) {
  const size_t n = spec_.c.size();
  if (spec_.a.size() != n || spec_.b.size() != n) {
    throw std::invalid_argument("half-products vectors differ in length");
  }
  for (size_t i = 0; i < n; ++i) {
    if (!(spec_.a[i] >= 0.0 && spec_.b[i] >= 0.0 && spec_.c[i] >= 0.0)) {
      throw std::invalid_argument("half-products vectors must be nonnegative");
    }
  }
}

double HalfProductsFunction::DoEval(const ElementSet& x) const {
  double value = 0.0;
  double a_prefix = 0.0;  // sum of a_i over members i < j
  x.ForEach([&](int j) {
    value += spec_.c[j] - a_prefix * spec_.b[j];
    a_prefix += spec_.a[j];
  });
  return value;
}

double HalfProductsFunction::DoMarginal(int i, const ElementSet& a) const {
  double below = 0.0;  // sum a_j, j < i
  double above = 0.0;  // sum b_j, j > i
  a.ForEach([&](int j) {
    if (j < i) {
      below += spec_.a[j];
    } else {
      above += spec_.b[j];
    }
  });
  return spec_.c[i] - below * spec_.b[i] - spec_.a[i] * above;
}

void HalfProductsFunction::DoRemovalMarginals(const ElementSet& y,
                                              std::span<const int> candidates,
                                              std::span<double> out) const {
  for (size_t k = 0; k < candidates.size(); ++k) {
    const int i = candidates[k];
    double below = 0.0;
    double above = 0.0;
    y.ForEach([&](int j) {
      if (j < i) {
        below += spec_.a[j];
      } else if (j > i) {
        above += spec_.b[j];
      }
    });
    out[k] = spec_.c[i] - below * spec_.b[i] - spec_.a[i] * above;
  }
}

// --- cut --------------------------------------------------------------------

CutFunction::CutFunction(CutSpec spec)
    : SetFunction(spec.w.size()), spec_(std::move(spec)) {
  CheckSymmetricNonnegative(spec_.w, "cut weight matrix");
  const int n = spec_.w.size();
  degrees_.assign(n, 0.0);
  for (int i = 0; i < n; ++i) {
    if (spec_.w(i, i) != 0.0) {
      throw std::invalid_argument("cut weight matrix must have zero diagonal");
    }
    for (int j = 0; j < n; ++j) degrees_[i] += spec_.w(i, j);
  }
}

double CutFunction::DoEval(const ElementSet& x) const {
  const std::vector<int> inside = x.Members();
  const std::vector<int> outside = x.Complement().Members();
  double value = 0.0;
  for (int i : inside) {
    for (int j : outside) value += spec_.w(i, j);
  }
  return value;
}

double CutFunction::DoMarginal(int i, const ElementSet& a) const {
  // Edges to A stop crossing, edges to the rest of N start crossing.
  double to_a = 0.0;
  a.ForEach([&](int j) { to_a += spec_.w(i, j); });
  return degrees_[i] - 2.0 * to_a;
}

void CutFunction::DoRemovalMarginals(const ElementSet& y,
                                     std::span<const int> candidates,
                                     std::span<double> out) const {
  const std::vector<int> members = y.Members();
  for (size_t k = 0; k < candidates.size(); ++k) {
    const int i = candidates[k];
    double to_y = 0.0;
    for (int j : members) to_y += spec_.w(i, j);  // w_ii = 0
    out[k] = degrees_[i] - 2.0 * to_y;
  }
}

// --- symmetrized log-determinant ----------------------------------------------

SymmetricLogDetFunction::SymmetricLogDetFunction(Matrix kernel, double scale,
                                                 double offset_per_element)
    : SetFunction(kernel.size()),
      kernel_(std::move(kernel)),
      scale_(scale),
      offset_(offset_per_element * kernel_.size()) {}

double SymmetricLogDetFunction::LogDet(const ElementSet& x) const {
  CheckUniverse(x);
  const std::vector<int> idx = x.Members();
  return internal::LogDetPrincipal(kernel_, idx);
}

double SymmetricLogDetFunction::DoEval(const ElementSet& x) const {
  const std::vector<int> inside = x.Members();
  const std::vector<int> outside = x.Complement().Members();
  return offset_ + scale_ * (internal::LogDetPrincipal(kernel_, inside) +
                             internal::LogDetPrincipal(kernel_, outside));
}

double SymmetricLogDetFunction::DoMarginal(int i, const ElementSet& a) const {
  double out = 0.0;
  const int candidate[] = {i};
  DoMarginals(a, candidate, std::span<double>(&out, 1));
  return out;
}

void SymmetricLogDetFunction::DoMarginals(const ElementSet& a,
                                          std::span<const int> candidates,
                                          std::span<double> out) const {
  // f(i|A) = [ld K_{A+i} - ld K_A] + [ld K_{B-i} - ld K_B], B = N \ A.
  const std::vector<int> inside = a.Members();
  const std::vector<int> outside = a.Complement().Members();
  const auto grow = internal::LogSchurComplements(kernel_, inside, candidates);
  const auto shrink =
      internal::LogInverseDiagonal(kernel_, outside, candidates);
  for (size_t k = 0; k < candidates.size(); ++k) {
    out[k] = scale_ * (grow[k] + shrink[k]);
  }
}

void SymmetricLogDetFunction::DoRemovalMarginals(
    const ElementSet& y, std::span<const int> candidates,
    std::span<double> out) const {
  // f(j|Y-j) = [ld K_Y - ld K_{Y-j}] + [ld K_C - ld K_{C+j}], C = N \ Y.
  const std::vector<int> inside = y.Members();
  const std::vector<int> outside = y.Complement().Members();
  const auto shrink = internal::LogInverseDiagonal(kernel_, inside, candidates);
  const auto grow = internal::LogSchurComplements(kernel_, outside, candidates);
  for (size_t k = 0; k < candidates.size(); ++k) {
    out[k] = -scale_ * (shrink[k] + grow[k]);
  }
}

LogDetFunction::LogDetFunction(LogDetSpec spec)
    : SymmetricLogDetFunction(
          [&] {
            CheckPositiveDefinite(spec.k, "log-det kernel");
            return std::move(spec.k);
          }(),
          1.0, 0.0) {}

GaussianMIFunction::GaussianMIFunction(GaussianMISpec spec)
    : SymmetricLogDetFunction(
          [&] {
            CheckPositiveDefinite(spec.sigma, "Gaussian covariance");
            return std::move(spec.sigma);
          }(),
          0.5, 0.5 * std::log(2.0 * std::numbers::pi * std::numbers::e)) {}

Oracle MakeModular(ModularWeights w) {
  return std::make_shared<ModularFunction>(std::move(w));
}
Oracle MakeSubsetSelection(SubsetSelectionSpec spec) {
  return std::make_shared<SubsetSelectionFunction>(std::move(spec));
}
Oracle MakeGaussianMI(GaussianMISpec spec) {
  return std::make_shared<GaussianMIFunction>(std::move(spec));
}
Oracle MakeLogDet(LogDetSpec spec) {
  return std::make_shared<LogDetFunction>(std::move(spec));
}
Oracle MakeHalfProducts(HalfProductsSpec spec) {
  return std::make_shared<HalfProductsFunction>(std::move(spec));
}
Oracle MakeCut(CutSpec spec) {
  return std::make_shared<CutFunction>(std::move(spec));
}

}  // namespace latred
