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

#include "opmodel/operators.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace opmodel {

ComplexMatrix::ComplexMatrix(std::size_t dim)
    : dim_(dim), entries_(dim * dim, Complex(0.0, 0.0)) {}

ComplexMatrix::ComplexMatrix(
    std::initializer_list<std::initializer_list<Complex>> rows)
    : ComplexMatrix(rows.size()) {
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != dim_)
      throw DimensionMismatch("ComplexMatrix: rows must form a square");
    std::size_t j = 0;
    for (const Complex& v : row) (*this)(i, j++) = v;
    ++i;
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> v) {
  ComplexMatrix m(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = v[i] * std::conj(v[j]);
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) m(i, j) = std::conj((*this)(j, i));
  return m;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

bool ComplexMatrix::is_finite() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Complex& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

double ComplexMatrix::hermiticity_defect() const {
  double d = 0.0;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i; j < dim_; ++j)
      d = std::max(d, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return d;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  if (other.dim_ != dim_) throw DimensionMismatch("matrix sum");
  for (std::size_t k = 0; k < entries_.size(); ++k)
    entries_[k] += other.entries_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  if (other.dim_ != dim_) throw DimensionMismatch("matrix difference");
  for (std::size_t k = 0; k < entries_.size(); ++k)
    entries_[k] -= other.entries_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
  for (auto& z : entries_) z *= s;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) {
  return a += b;
}
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) {
  return a -= b;
}
ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
ComplexMatrix operator*(double s, ComplexMatrix a) { return a *= s; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("matrix product");
  const std::size_t d = a.dim();
  ComplexMatrix c(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k) {
      const Complex aik = a(i, k);
      for (std::size_t j = 0; j < d; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

double max_entry_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("max_entry_distance");
  double m = 0.0;
  for (std::size_t k = 0; k < a.entries().size(); ++k)
    m = std::max(m, std::abs(a.entries()[k] - b.entries()[k]));
  return m;
}

Complex trace_product(const ComplexMatrix& x, const ComplexMatrix& y) {
  if (x.dim() != y.dim())
    throw DimensionMismatch("trace_product: dimensions differ (" +
                            std::to_string(x.dim()) + " vs " +
                            std::to_string(y.dim()) + ")");
  Complex t = 0.0;
  for (std::size_t i = 0; i < x.dim(); ++i)
    for (std::size_t k = 0; k < x.dim(); ++k) t += x(i, k) * y(k, i);
  return t;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& x) {
  // H = A + iB maps to the real symmetric [[A, -B], [B, A]], whose spectrum
  // is that of H with every eigenvalue doubled.
  const std::size_t d = x.dim();
  RealMatrix big(2 * d, 2 * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const Complex h = 0.5 * (x(i, j) + std::conj(x(j, i)));
      big(i, j) = h.real();
      big(i + d, j + d) = h.real();
      big(i, j + d) = -h.imag();
      big(i + d, j) = h.imag();
    }
  const SymmetricEigen e = jacobi_eigen(big);
  std::vector<double> values(d);
  for (std::size_t k = 0; k < d; ++k)
    values[k] = 0.5 * (e.values[2 * k] + e.values[2 * k + 1]);
  return values;
}

std::string ValidationReport::summary() const {
  std::ostringstream os;
  os << (passed ? "pass" : "fail") << ": hermiticity defect "
     << hermiticity_defect;
  if (kind == OperatorKind::state) os << ", trace defect " << trace_defect;
  os << ", eigenvalues in [" << min_eigenvalue << ", " << max_eigenvalue
     << "]";
  if (!finite) os << ", non-finite entries";
  return os.str();
}

ValidationReport validate(const ComplexMatrix& x, OperatorKind kind) {
  ValidationReport r;
  r.kind = kind;
  r.finite = x.is_finite();
  if (!r.finite || x.dim() == 0) return r;
  r.hermiticity_defect = x.hermiticity_defect();
  const auto ev = hermitian_eigenvalues(x);
  r.min_eigenvalue = ev.front();
  r.max_eigenvalue = ev.back();
  bool ok = r.hermiticity_defect <= kTol && r.min_eigenvalue >= -kTolPsd;
  if (kind == OperatorKind::state) {
    r.trace_defect = std::abs(x.trace() - 1.0);
    ok = ok && r.trace_defect <= kTol;
  } else {
    ok = ok && r.max_eigenvalue <= 1.0 + kTolPsd;
  }
  r.passed = ok;
  return r;
}

DensityOperator::DensityOperator(ComplexMatrix m) : matrix_(std::move(m)) {
  const auto report = validate(matrix_, OperatorKind::state);
  if (!report.passed)
    throw InvalidInput("not a density operator: " + report.summary());
}

bool DensityOperator::is_pure(double tol) const {
  return hermitian_eigenvalues(matrix_).back() >= 1.0 - tol;
}

EffectOperator::EffectOperator(ComplexMatrix m) : matrix_(std::move(m)) {
  const auto report = validate(matrix_, OperatorKind::effect);
  if (!report.passed)
    throw InvalidInput("not an effect: " + report.summary());
}

EffectOperator EffectOperator::zero(std::size_t dim) {
  return EffectOperator(ComplexMatrix::zero(dim));
}

EffectOperator EffectOperator::unit(std::size_t dim) {
  return EffectOperator(ComplexMatrix::identity(dim));
}

PovmReport validate_povm(std::span<const ComplexMatrix> effects) {
  PovmReport r;
  if (effects.empty()) return r;
  const std::size_t d = effects.front().dim();
  ComplexMatrix sum(d);
  bool ok = true;
  for (const auto& e : effects) {
    if (e.dim() != d) {
      r.normalization_defect = INFINITY;
      return r;
    }
    r.elements.push_back(validate(e, OperatorKind::povm_element));
    ok = ok && r.elements.back().passed;
    sum += e;
  }
  r.normalization_defect = max_entry_distance(sum, ComplexMatrix::identity(d));
  r.passed = ok && r.normalization_defect <= kTol;
  return r;
}

PovmReport validate_povm(const Povm& povm) {
  std::vector<ComplexMatrix> ms;
  for (const auto& e : povm.effects()) ms.push_back(e.matrix());
  return validate_povm(ms);
}

Povm::Povm(std::vector<EffectOperator> effects, std::vector<std::string> labels)
    : effects_(std::move(effects)), labels_(std::move(labels)) {
  if (effects_.empty()) throw InvalidInput("POVM needs at least one effect");
  if (labels_.empty())
    for (std::size_t k = 0; k < effects_.size(); ++k)
      labels_.push_back(std::to_string(k));
  if (labels_.size() != effects_.size())
    throw InvalidInput("POVM label count differs from effect count");
  // Elements were validated as effects; only normalization is left.
  const std::size_t d = effects_.front().dim();
  ComplexMatrix sum(d);
  for (const auto& e : effects_) {
    if (e.dim() != d) throw DimensionMismatch("POVM effects differ in size");
    sum += e.matrix();
  }
  const double defect = max_entry_distance(sum, ComplexMatrix::identity(d));
  if (!(defect <= kTol))
    throw InvalidInput("POVM elements do not sum to I (defect " +
                       std::to_string(defect) + ")");
}

std::vector<double> Povm::probabilities(const DensityOperator& rho) const {
  std::vector<double> p;
  p.reserve(effects_.size());
  for (const auto& e : effects_) p.push_back(pair(rho, e));
  return p;
}

Complex pair_raw(const DensityOperator& rho, const EffectOperator& a) {
  return trace_product(rho.matrix(), a.matrix());
}

double pair(const DensityOperator& rho, const EffectOperator& a) {
  return std::clamp(pair_raw(rho, a).real(), 0.0, 1.0);
}

EffectOperator effect_complement(const EffectOperator& a) {
  return EffectOperator(ComplexMatrix::identity(a.dim()) - a.matrix());
}

std::optional<EffectOperator> effect_osum(const EffectOperator& a,
                                          const EffectOperator& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("effect_osum");
  ComplexMatrix s = a.matrix() + b.matrix();
  if (hermitian_eigenvalues(s).back() > 1.0 + kTolPsd) return std::nullopt;
  return EffectOperator(std::move(s));
}

bool effect_leq(const ComplexMatrix& c, const ComplexMatrix& a, double tol) {
  return hermitian_eigenvalues(a - c).front() >= -tol;
}

ComplexMatrix tensor(const ComplexMatrix& x, const ComplexMatrix& y) {
  const std::size_t dx = x.dim();
  const std::size_t dy = y.dim();
  ComplexMatrix k(dx * dy);
  for (std::size_t i = 0; i < dx; ++i)
    for (std::size_t j = 0; j < dx; ++j) {
      const Complex xij = x(i, j);
      for (std::size_t a = 0; a < dy; ++a)
        for (std::size_t b = 0; b < dy; ++b)
          k(i * dy + a, j * dy + b) = xij * y(a, b);
    }
  return k;
}

ComplexMatrix partial_trace(const ComplexMatrix& x, std::size_t d1,
                            std::size_t d2, Subsystem keep) {
  if (d1 == 0 || d2 == 0 || d1 * d2 != x.dim())
    throw DimensionMismatch("partial_trace: dimension " +
                            std::to_string(x.dim()) + " does not factor as " +
                            std::to_string(d1) + " x " + std::to_string(d2));
  if (keep == Subsystem::first) {
    ComplexMatrix r(d1);
    for (std::size_t i = 0; i < d1; ++i)
      for (std::size_t j = 0; j < d1; ++j)
        for (std::size_t a = 0; a < d2; ++a)
          r(i, j) += x(i * d2 + a, j * d2 + a);
    return r;
  }
  ComplexMatrix r(d2);
  for (std::size_t a = 0; a < d2; ++a)
    for (std::size_t b = 0; b < d2; ++b)
      for (std::size_t i = 0; i < d1; ++i) r(a, b) += x(i * d2 + a, i * d2 + b);
  return r;
}

DensityOperator partial_trace(const DensityOperator& rho, std::size_t d1,
                              std::size_t d2, Subsystem keep) {
  return DensityOperator(partial_trace(rho.matrix(), d1, d2, keep));
}

double trace_norm(const ComplexMatrix& x, bool hermitian) {
  if (hermitian) {
    if (x.hermiticity_defect() > kTol)
      throw InvalidInput("trace_norm: input flagged Hermitian is not");
    double s = 0.0;
    for (double v : hermitian_eigenvalues(x)) s += std::abs(v);
    return s;
  }
  double s = 0.0;
  for (double v : hermitian_eigenvalues(x.adjoint() * x))
    s += std::sqrt(std::max(0.0, v));
  return s;
}

std::vector<ComplexMatrix> hermitian_basis(std::size_t d) {
  std::vector<ComplexMatrix> basis;
  basis.reserve(d * d);
  for (std::size_t k = 0; k < d; ++k) {
    ComplexMatrix m(d);
    m(k, k) = 1.0;
    basis.push_back(std::move(m));
  }
  const double h = 1.0 / std::sqrt(2.0);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = j + 1; k < d; ++k) {
      ComplexMatrix s(d);
      s(j, k) = h;
      s(k, j) = h;
      basis.push_back(std::move(s));
      ComplexMatrix a(d);
      a(j, k) = Complex(0.0, -h);
      a(k, j) = Complex(0.0, h);
      basis.push_back(std::move(a));
    }
  return basis;
}

std::vector<double> hermitian_coords(const ComplexMatrix& x) {
  const std::size_t d = x.dim();
  std::vector<double> c;
  c.reserve(d * d);
  for (std::size_t k = 0; k < d; ++k) c.push_back(x(k, k).real());
  const double r2 = std::sqrt(2.0);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = j + 1; k < d; ++k) {
      // tr[x S] and tr[x A] for the symmetric / antisymmetric pair
      c.push_back(r2 * 0.5 * (x(k, j) + x(j, k)).real());
      c.push_back(r2 * 0.5 * (x(k, j) - x(j, k)).imag());
    }
  return c;
}

ComplexMatrix from_hermitian_coords(std::size_t d,
                                    std::span<const double> coords) {
  if (coords.size() != d * d)
    throw DimensionMismatch("from_hermitian_coords: expected " +
                            std::to_string(d * d) + " coordinates");
  ComplexMatrix x(d);
  for (std::size_t k = 0; k < d; ++k) x(k, k) = coords[k];
  const double h = 1.0 / std::sqrt(2.0);
  std::size_t idx = d;
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = j + 1; k < d; ++k) {
      const double s = coords[idx++];
      const double a = coords[idx++];
      x(j, k) = Complex(h * s, -h * a);
      x(k, j) = Complex(h * s, h * a);
    }
  return x;
}

}  // namespace opmodel
