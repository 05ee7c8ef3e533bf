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

#include "opmodel/qubit_cayley.hpp"

#include <cmath>

namespace opmodel::qubit {

const std::array<ComplexMatrix, 4>& pauli_basis() {
  static const std::array<ComplexMatrix, 4> basis{
      ComplexMatrix{{1.0, 0.0}, {0.0, 1.0}},
      ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}},
      ComplexMatrix{{0.0, Complex(0.0, -1.0)}, {Complex(0.0, 1.0), 0.0}},
      ComplexMatrix{{1.0, 0.0}, {0.0, -1.0}}};
  return basis;
}

double norm(const Vec3& v) {
  return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
}

CayleyCoords cayley_decompose(const ComplexMatrix& x) {
  if (x.dim() != 2) throw InvalidInput("cayley_decompose: expects a 2x2");
  if (x.hermiticity_defect() > kTol)
    throw InvalidInput("cayley_decompose: matrix is not Hermitian");
  const auto& s = pauli_basis();
  CayleyCoords c;
  c.x0 = x.trace().real();
  for (int k = 0; k < 3; ++k) c.x[k] = trace_product(x, s[k + 1]).real();
  return c;
}

ComplexMatrix cayley_matrix(double x0, const Vec3& x) {
  const auto& s = pauli_basis();
  ComplexMatrix m = x0 * s[0];
  for (int k = 0; k < 3; ++k) m += x[k] * s[k + 1];
  return 0.5 * m;
}

BlochState::BlochState(const Vec3& r) : r_(r) {
  if (!(norm(r) <= 1.0 + kTol))
    throw InvalidInput("Bloch vector has length " + std::to_string(norm(r)) +
                       " > 1");
}

bool BlochState::is_pure(double tol) const {
  return std::abs(norm(r_) - 1.0) <= tol;
}

DensityOperator BlochState::density() const {
  return DensityOperator(cayley_matrix(1.0, r_));
}

std::string DiamondCheck::describe() const {
  std::string s;
  auto add = [&](bool ok, const char* what) {
    if (ok) return;
    if (!s.empty()) s += "; ";
    s += what;
  };
  add(lower_min_ok, "(a0 - |a|)/2 >= 0 violated");
  add(lower_max_ok, "(a0 - |a|)/2 <= 1 violated");
  add(upper_min_ok, "(a0 + |a|)/2 >= 0 violated");
  add(upper_max_ok, "(a0 + |a|)/2 <= 1 violated");
  return s.empty() ? "inside the effect diamond" : s;
}

DiamondCheck check_diamond(double a0, const Vec3& a, double tol) {
  const double lo = 0.5 * (a0 - norm(a));
  const double hi = 0.5 * (a0 + norm(a));
  return {lo >= -tol, lo <= 1.0 + tol, hi >= -tol, hi <= 1.0 + tol};
}

CayleyEffect::CayleyEffect(double a0, const Vec3& a) : a0_(a0), a_(a) {
  const DiamondCheck c = check_diamond(a0, a);
  if (!c.ok()) throw InvalidInput("not a qubit effect: " + c.describe());
}

EffectOperator CayleyEffect::effect() const {
  return EffectOperator(cayley_matrix(a0_, a_));
}

DensityOperator state_from_bloch(const Vec3& r) {
  return BlochState(r).density();
}

EffectOperator effect_from_cayley(double a0, const Vec3& a) {
  return CayleyEffect(a0, a).effect();
}

double cayley_pair(const BlochState& s, const CayleyEffect& e) {
  const Vec3& r = s.r();
  const Vec3& a = e.a();
  return 0.5 * (e.a0() + a[0] * r[0] + a[1] * r[1] + a[2] * r[2]);
}

BlochState random_bloch_state(Rng& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (;;) {
    Vec3 r{u(rng), u(rng), u(rng)};
    if (norm(r) <= 1.0) return BlochState(r);
  }
}

CayleyEffect random_cayley_effect(Rng& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_real_distribution<double> u02(0.0, 2.0);
  for (;;) {
    const double a0 = u02(rng);
    Vec3 a{u(rng), u(rng), u(rng)};
    if (check_diamond(a0, a, 0.0).ok()) return CayleyEffect(a0, a);
  }
}

}  // namespace opmodel::qubit
