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

#include "spd.h"

#include <Eigen/Cholesky>
#include <Eigen/Core>
#include <cmath>
#include <string>
#include <unordered_map>

#include "latred/families.h"

namespace latred::internal {
namespace {

Eigen::MatrixXd Gather(const Matrix& k, std::span<const int> rows,
                       std::span<const int> cols) {
  Eigen::MatrixXd out(rows.size(), cols.size());
  for (size_t r = 0; r < rows.size(); ++r) {
    for (size_t c = 0; c < cols.size(); ++c) out(r, c) = k(rows[r], cols[c]);
  }
  return out;
}

Eigen::LLT<Eigen::MatrixXd> Factor(const Matrix& k, std::span<const int> idx) {
  Eigen::LLT<Eigen::MatrixXd> llt(Gather(k, idx, idx));
  if (llt.info() != Eigen::Success) {
    throw NotPositiveDefiniteError(
        "Cholesky failed on a principal submatrix of size " +
        std::to_string(idx.size()));
  }
  return llt;
}

double CheckedLog(double v) {
  if (!(v > 0.0)) {
    throw NotPositiveDefiniteError("non-positive pivot " + std::to_string(v));
  }
  return std::log(v);
}

}  // namespace

double LogDetPrincipal(const Matrix& k, std::span<const int> idx) {
  if (idx.empty()) return 0.0;
  const auto llt = Factor(k, idx);
  const auto& l = llt.matrixLLT();
  double sum = 0.0;
  for (Eigen::Index i = 0; i < l.rows(); ++i) sum += std::log(l(i, i));
  return 2.0 * sum;
}

std::vector<double> LogSchurComplements(const Matrix& k,
                                        std::span<const int> base,
                                        std::span<const int> candidates) {
  std::vector<double> out(candidates.size());
  if (base.empty()) {
    for (size_t c = 0; c < candidates.size(); ++c) {
      out[c] = CheckedLog(k(candidates[c], candidates[c]));
    }
    return out;
  }
  const auto llt = Factor(k, base);
  Eigen::MatrixXd cross = Gather(k, base, candidates);
  llt.matrixL().solveInPlace(cross);
  for (size_t c = 0; c < candidates.size(); ++c) {
    const double schur = k(candidates[c], candidates[c]) -
                         cross.col(static_cast<Eigen::Index>(c)).squaredNorm();
    out[c] = CheckedLog(schur);
  }
  return out;
}

std::vector<double> LogInverseDiagonal(const Matrix& k,
                                       std::span<const int> base,
                                       std::span<const int> candidates) {
  std::vector<double> out(candidates.size());
  if (candidates.empty()) return out;
  const auto llt = Factor(k, base);
  const Eigen::Index m = static_cast<Eigen::Index>(base.size());
  // K^{-1} = L^{-T} L^{-1}, so (K^{-1})_cc is the squared norm of column c of
  // L^{-1}.
  Eigen::MatrixXd linv = Eigen::MatrixXd::Identity(m, m);
  llt.matrixL().solveInPlace(linv);
  std::unordered_map<int, Eigen::Index> position;
  for (Eigen::Index p = 0; p < m; ++p) position[base[p]] = p;
  for (size_t c = 0; c < candidates.size(); ++c) {
    const Eigen::Index p = position.at(candidates[c]);
    out[c] = CheckedLog(linv.col(p).squaredNorm());
  }
  return out;
}

bool IsPositiveDefinite(const Matrix& k) {
  if (k.size() == 0) return true;
  Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic,
                                 Eigen::RowMajor>>
      view(k.data(), k.size(), k.size());
  Eigen::LLT<Eigen::MatrixXd> llt(view);
  return llt.info() == Eigen::Success;
}

}  // namespace latred::internal
