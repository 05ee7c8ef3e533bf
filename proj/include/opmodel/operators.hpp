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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "opmodel/linalg.hpp"

namespace opmodel {

using Complex = std::complex<double>;

/// Eigenvalue positivity tolerance for states and effects.
inline constexpr double kTolPsd = 1e-9;
/// Hermiticity and trace defect tolerance.
inline constexpr double kTol = 1e-9;

/// Square dense complex matrix, row-major.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix zero(std::size_t dim) { return ComplexMatrix(dim); }
  /// |v><v| for a (not necessarily normalized) vector.
  static ComplexMatrix outer(std::span<const Complex> v);

  std::size_t dim() const { return dim_; }

  Complex& operator()(std::size_t i, std::size_t j) {
    return entries_[i * dim_ + j];
  }
  const Complex& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * dim_ + j];
  }
  std::span<const Complex> entries() const { return entries_; }

  ComplexMatrix adjoint() const;
  Complex trace() const;
  bool is_finite() const;

  /// max |x_ij - conj(x_ji)|
  double hermiticity_defect() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex s);

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> entries_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, ComplexMatrix a);
ComplexMatrix operator*(double s, ComplexMatrix a);

/// Largest entry-wise modulus of a - b.
double max_entry_distance(const ComplexMatrix& a, const ComplexMatrix& b);

/// tr[x y] without forming the product.
Complex trace_product(const ComplexMatrix& x, const ComplexMatrix& y);

/// Ascending eigenvalues of a Hermitian matrix. The Hermitian part of the
/// input is used; callers check hermiticity separately.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& x);

enum class OperatorKind { state, effect, povm_element };

struct ValidationReport {
  OperatorKind kind = OperatorKind::state;
  bool finite = true;
  double hermiticity_defect = 0.0;
  double trace_defect = 0.0;  // |tr x - 1|, states only
  double min_eigenvalue = 0.0;
  double max_eigenvalue = 0.0;
  bool passed = false;

  std::string summary() const;
};

/// Never throws for square input; returns the diagnostics.
ValidationReport validate(const ComplexMatrix& x, OperatorKind kind);

/// Trace-one positive operator.
class DensityOperator {
 public:
  /// Throws InvalidInput when validation fails.
  explicit DensityOperator(ComplexMatrix m);

  const ComplexMatrix& matrix() const { return matrix_; }
  std::size_t dim() const { return matrix_.dim(); }
  bool is_pure(double tol = kTolPsd) const;

 private:
  ComplexMatrix matrix_;
};

/// Operator with O <= a <= I.
class EffectOperator {
 public:
  explicit EffectOperator(ComplexMatrix m);

  static EffectOperator zero(std::size_t dim);
  static EffectOperator unit(std::size_t dim);

  const ComplexMatrix& matrix() const { return matrix_; }
  std::size_t dim() const { return matrix_.dim(); }

 private:
  ComplexMatrix matrix_;
};

struct PovmReport {
  std::vector<ValidationReport> elements;
  double normalization_defect = 0.0;  // max-entry norm of sum - I
  bool passed = false;
};

/// Effect-valued measure over a finite outcome set.
class Povm {
 public:
  /// Labels default to "0", "1", ...
  explicit Povm(std::vector<EffectOperator> effects,
                std::vector<std::string> labels = {});

  std::size_t size() const { return effects_.size(); }
  std::size_t dim() const { return effects_.front().dim(); }
  const EffectOperator& operator[](std::size_t k) const { return effects_[k]; }
  const std::vector<EffectOperator>& effects() const { return effects_; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Outcome distribution (tr[rho a_1], ..., tr[rho a_m]).
  std::vector<double> probabilities(const DensityOperator& rho) const;

 private:
  std::vector<EffectOperator> effects_;
  std::vector<std::string> labels_;
};

PovmReport validate_povm(std::span<const ComplexMatrix> effects);
PovmReport validate_povm(const Povm& povm);

/// Raw tr[rho a], complex.
Complex pair_raw(const DensityOperator& rho, const EffectOperator& a);
/// tr[rho a] clamped to [0, 1].
double pair(const DensityOperator& rho, const EffectOperator& a);

EffectOperator effect_complement(const EffectOperator& a);
/// a + b when a + b <= I within tolerance, nullopt otherwise.
std::optional<EffectOperator> effect_osum(const EffectOperator& a,
                                          const EffectOperator& b);
/// c <= a in the operator order, within tolerance.
bool effect_leq(const ComplexMatrix& c, const ComplexMatrix& a,
                double tol = kTolPsd);

/// Kronecker product.
ComplexMatrix tensor(const ComplexMatrix& x, const ComplexMatrix& y);

enum class Subsystem { first, second };

/// Partial trace of an operator on C^d1 (x) C^d2, keeping `keep`.
ComplexMatrix partial_trace(const ComplexMatrix& x, std::size_t d1,
                            std::size_t d2, Subsystem keep);
DensityOperator partial_trace(const DensityOperator& rho, std::size_t d1,
                              std::size_t d2, Subsystem keep);

/// Sum of singular values. With `hermitian` set the input must be Hermitian
/// (throws InvalidInput otherwise) and the absolute eigenvalues are summed.
double trace_norm(const ComplexMatrix& x, bool hermitian = true);

/// Orthonormal basis of the real space of d x d Hermitian matrices under
/// <x, y> = tr[x y]: diagonal units, then symmetric and antisymmetric
/// off-diagonal pairs.
std::vector<ComplexMatrix> hermitian_basis(std::size_t d);
/// Real coordinates of a Hermitian matrix in hermitian_basis(d). The pairing
/// tr[x y] equals the Euclidean dot product of coordinates.
std::vector<double> hermitian_coords(const ComplexMatrix& x);
ComplexMatrix from_hermitian_coords(std::size_t d,
                                    std::span<const double> coords);

}  // namespace opmodel
