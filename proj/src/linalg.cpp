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

#include "opmodel/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace opmodel {

RealMatrix::RealMatrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

RealMatrix RealMatrix::identity(std::size_t n) {
  RealMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

RealMatrix RealMatrix::transpose() const {
  RealMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

std::vector<double> RealMatrix::column(std::size_t j) const {
  std::vector<double> c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

RealMatrix operator*(const RealMatrix& a, const RealMatrix& b) {
  if (a.cols() != b.rows())
    throw DimensionMismatch("matrix product: inner dimensions differ");
  RealMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

RealMatrix operator*(double s, const RealMatrix& a) {
  RealMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = s * a(i, j);
  return c;
}

std::vector<double> operator*(const RealMatrix& a, std::span<const double> x) {
  if (a.cols() != x.size())
    throw DimensionMismatch("matrix-vector product: size mismatch");
  std::vector<double> y(a.rows(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i) y[i] = dot(a.row(i), x);
  return y;
}

double dot(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw DimensionMismatch("dot: size mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

double norm2(std::span<const double> x) { return std::sqrt(dot(x, x)); }

double max_abs(std::span<const double> x) {
  double m = 0.0;
  for (double v : x) m = std::max(m, std::abs(v));
  return m;
}

SymmetricEigen jacobi_eigen(const RealMatrix& symmetric) {
  const std::size_t n = symmetric.rows();
  if (symmetric.cols() != n)
    throw DimensionMismatch("jacobi_eigen: matrix is not square");
  RealMatrix a = symmetric;
  RealMatrix v = RealMatrix::identity(n);

  double scale = 0.0;
  for (double x : a.data()) scale += x * x;
  scale = std::sqrt(scale);

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
    if (off == 0.0 || std::sqrt(off) <= 1e-15 * scale) break;

    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        // Past the first sweeps, drop elements below the diagonal's ulp.
        const double g = 100.0 * std::abs(apq);
        if (sweep > 3 && std::abs(a(p, p)) + g == std::abs(a(p, p)) &&
            std::abs(a(q, q)) + g == std::abs(a(q, q))) {
          a(p, q) = 0.0;
          a(q, p) = 0.0;
          continue;
        }
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });
  SymmetricEigen out{std::vector<double>(n), RealMatrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]);
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

namespace {

// Singular values of `a` (ascending) via the smaller Gram matrix.
SymmetricEigen gram_eigen(const RealMatrix& a, bool& row_side) {
  row_side = a.rows() < a.cols();
  const RealMatrix at = a.transpose();
  return jacobi_eigen(row_side ? a * at : at * a);
}

}  // namespace

LeastSquares least_squares(const RealMatrix& a, std::span<const double> b,
                           double rel_tol) {
  if (b.size() != a.rows())
    throw DimensionMismatch("least_squares: right-hand side size mismatch");
  bool row_side = false;
  const SymmetricEigen g = gram_eigen(a, row_side);
  const double top = g.values.empty() ? 0.0 : std::max(0.0, g.values.back());
  // Gram eigenvalues are squared singular values.
  const double cutoff = rel_tol * rel_tol * top;

  LeastSquares out;
  out.x.assign(a.cols(), 0.0);
  const std::size_t n = g.values.size();
  if (row_side) {
    // x = A^T (A A^T)^+ b
    std::vector<double> z(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
      if (g.values[k] <= cutoff || top == 0.0) continue;
      ++out.rank;
      const auto vk = g.vectors.column(k);
      const double coef = dot(vk, b) / g.values[k];
      for (std::size_t i = 0; i < n; ++i) z[i] += coef * vk[i];
    }
    out.x = a.transpose() * std::span<const double>(z);
  } else {
    // x = (A^T A)^+ A^T b
    const std::vector<double> atb = a.transpose() * b;
    for (std::size_t k = 0; k < n; ++k) {
      if (g.values[k] <= cutoff || top == 0.0) continue;
      ++out.rank;
      const auto vk = g.vectors.column(k);
      const double coef = dot(vk, atb) / g.values[k];
      for (std::size_t i = 0; i < n; ++i) out.x[i] += coef * vk[i];
    }
  }
  std::vector<double> r = a * std::span<const double>(out.x);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  out.residual = norm2(r);
  return out;
}

std::size_t numerical_rank(const RealMatrix& a, double rel_tol) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  bool row_side = false;
  const SymmetricEigen g = gram_eigen(a, row_side);
  const double top = std::max(0.0, g.values.back());
  if (top == 0.0) return 0;
  const double cutoff = rel_tol * rel_tol * top;
  return static_cast<std::size_t>(
      std::count_if(g.values.begin(), g.values.end(),
                    [&](double v) { return v > cutoff; }));
}

std::vector<double> null_vector(const RealMatrix& a, double rel_tol) {
  const RealMatrix ata = a.transpose() * a;
  const SymmetricEigen g = jacobi_eigen(ata);
  const double top = g.values.empty() ? 0.0 : std::max(0.0, g.values.back());
  if (g.values.empty()) return {};
  if (top == 0.0 || g.values.front() <= rel_tol * rel_tol * top)
    return g.vectors.column(0);
  return {};
}

}  // namespace opmodel
