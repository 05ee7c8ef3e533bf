// Copyright 2026 The opmodel Authors
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

#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace opmodel {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// A value failed the validation required by a typed wrapper.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Dense row-major real matrix. Used for coordinate maps, LP tableaux and
/// Gram matrices; all instances are small.
class RealMatrix {
 public:
  RealMatrix() = default;
  RealMatrix(std::size_t rows, std::size_t cols, double fill = 0.0);

  static RealMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  double operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::span<const double> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  std::span<const double> data() const { return data_; }

  RealMatrix transpose() const;
  std::vector<double> column(std::size_t j) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

RealMatrix operator*(const RealMatrix& a, const RealMatrix& b);
RealMatrix operator*(double s, const RealMatrix& a);
std::vector<double> operator*(const RealMatrix& a, std::span<const double> x);

double dot(std::span<const double> x, std::span<const double> y);
double norm2(std::span<const double> x);
double max_abs(std::span<const double> x);

/// Eigen-decomposition of a real symmetric matrix. Eigenvalues ascending;
/// column k of `vectors` belongs to `values[k]`.
struct SymmetricEigen {
  std::vector<double> values;
  RealMatrix vectors;
};

/// Cyclic Jacobi rotations until the off-diagonal mass drops below roundoff.
SymmetricEigen jacobi_eigen(const RealMatrix& symmetric);

/// Least-squares solve through the Moore-Penrose pseudoinverse.
struct LeastSquares {
  std::vector<double> x;
  std::size_t rank = 0;
  double residual = 0.0;  // Euclidean norm of A x - b
};

/// Singular values below `rel_tol * largest` count as zero.
LeastSquares least_squares(const RealMatrix& a, std::span<const double> b,
                           double rel_tol = 1e-12);

std::size_t numerical_rank(const RealMatrix& a, double rel_tol = 1e-10);

/// Unit vector spanning part of the null space of `a`, if any.
std::vector<double> null_vector(const RealMatrix& a, double rel_tol = 1e-10);

}  // namespace opmodel
