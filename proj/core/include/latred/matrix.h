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

#ifndef LATRED_MATRIX_H_
#define LATRED_MATRIX_H_

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace latred {

// Dense row-major square matrix of doubles. Problem data only; the numerics
// that need factorizations convert to Eigen internally.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(int n, double fill = 0.0)
      : n_(n), data_(static_cast<size_t>(n) * n, fill) {}
  Matrix(std::initializer_list<std::initializer_list<double>> rows);

  static Matrix Identity(int n);

  int size() const { return n_; }
  double operator()(int i, int j) const { return data_[Index(i, j)]; }
  double& operator()(int i, int j) { return data_[Index(i, j)]; }
  const double* data() const { return data_.data(); }

  bool IsSymmetric(double tol = 0.0) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  size_t Index(int i, int j) const {
    return static_cast<size_t>(i) * n_ + j;
  }

  int n_ = 0;
  std::vector<double> data_;
};

inline Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows)
    : n_(static_cast<int>(rows.size())) {
  data_.reserve(static_cast<size_t>(n_) * n_);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n_) {
      throw std::invalid_argument("matrix literal is not square");
    }
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

inline Matrix Matrix::Identity(int n) {
  Matrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

inline bool Matrix::IsSymmetric(double tol) const {
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      if (std::abs((*this)(i, j) - (*this)(j, i)) > tol) return false;
    }
  }
  return true;
}

}  // namespace latred

#endif  // LATRED_MATRIX_H_
