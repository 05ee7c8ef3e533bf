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

#include <array>
#include <string>

#include "opmodel/operators.hpp"
#include "opmodel/sampling.hpp"

namespace opmodel::qubit {

/// I, sigma_1, sigma_2, sigma_3.
const std::array<ComplexMatrix, 4>& pauli_basis();

/// x0 = tr[x], x_k = tr[x sigma_k], so that x = (x0 I + x.sigma) / 2.
struct CayleyCoords {
  double x0 = 0.0;
  Vec3 x{0.0, 0.0, 0.0};
};

/// Throws InvalidInput for non-Hermitian or non-2x2 input.
CayleyCoords cayley_decompose(const ComplexMatrix& x);
/// (x0 I + x.sigma) / 2
ComplexMatrix cayley_matrix(double x0, const Vec3& x);

double norm(const Vec3& v);

/// Point (1, r) of the Bloch ball.
class BlochState {
 public:
  /// Throws InvalidInput when |r| > 1 + tol.
  explicit BlochState(const Vec3& r);

  double r0() const { return 1.0; }
  const Vec3& r() const { return r_; }
  bool is_pure(double tol = kTol) const;
  DensityOperator density() const;
  std::array<double, 4> coords() const { return {1.0, r_[0], r_[1], r_[2]}; }

 private:
  Vec3 r_;
};

/// The four inequalities 0 <= (a0 -+ |a|)/2 <= 1 bounding the effect diamond.
struct DiamondCheck {
  bool lower_min_ok = true;  // (a0 - |a|)/2 >= 0
  bool lower_max_ok = true;  // (a0 - |a|)/2 <= 1
  bool upper_min_ok = true;  // (a0 + |a|)/2 >= 0
  bool upper_max_ok = true;  // (a0 + |a|)/2 <= 1

  bool ok() const {
    return lower_min_ok && lower_max_ok && upper_min_ok && upper_max_ok;
  }
  std::string describe() const;
};

DiamondCheck check_diamond(double a0, const Vec3& a, double tol = kTol);

/// Point (a0, a) of the effect diamond.
class CayleyEffect {
 public:
  /// Throws InvalidInput naming the failed inequality.
  CayleyEffect(double a0, const Vec3& a);

  double a0() const { return a0_; }
  const Vec3& a() const { return a_; }
  EffectOperator effect() const;
  std::array<double, 4> coords() const { return {a0_, a_[0], a_[1], a_[2]}; }

 private:
  double a0_;
  Vec3 a_;
};

DensityOperator state_from_bloch(const Vec3& r);
EffectOperator effect_from_cayley(double a0, const Vec3& a);

/// (a0 + a.r) / 2
double cayley_pair(const BlochState& s, const CayleyEffect& e);

/// Uniform on the ball: rejection from the cube.
BlochState random_bloch_state(Rng& rng);
/// Uniform on the diamond: rejection from [0,2] x [-1,1]^3.
CayleyEffect random_cayley_effect(Rng& rng);

}  // namespace opmodel::qubit
