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
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "opmodel/cmodel.hpp"
#include "opmodel/maps.hpp"
#include "opmodel/operators.hpp"
#include "opmodel/sampling.hpp"

// Discretized canonical classical extension: probability measures on pure
// states, reduced to density operators by rho = sum_i w_i omega_i, with
// effects lifted to the functions f_a(omega) = tr[omega a].
namespace opmodel::canonical {

/// Finite sample of the pure-state space of C^d.
struct PureStateMesh {
  std::size_t dim = 0;
  std::vector<ComplexMatrix> points;  // rank-one projectors
  std::string generator;

  std::size_t size() const { return points.size(); }
};

/// n near-uniform Fibonacci-lattice points on the Bloch sphere.
std::vector<Vec3> fibonacci_sphere(std::size_t n);

/// Qubit mesh from fibonacci_sphere(n). Throws InvalidInput for n < 4.
PureStateMesh bloch_mesh(std::size_t n);
/// Haar-random pure states of C^d, deterministic for a given seed.
PureStateMesh haar_mesh(std::size_t d, std::size_t n, std::uint64_t seed);

struct Atom {
  ComplexMatrix state;
  double weight;
};

/// Finitely supported probability measure on pure states.
class AtomicMeasure {
 public:
  /// Throws InvalidInput unless every atom is a pure state of a common
  /// dimension and the weights form a probability vector.
  explicit AtomicMeasure(std::vector<Atom> atoms);

  static AtomicMeasure dirac(ComplexMatrix omega);
  /// lambda * mu1 + (1 - lambda) * mu2
  static AtomicMeasure mixture(double lambda, const AtomicMeasure& mu1,
                               const AtomicMeasure& mu2);

  const std::vector<Atom>& atoms() const { return atoms_; }
  std::size_t dim() const { return atoms_.front().state.dim(); }

  /// Merges atoms whose projectors are within `tol` in trace norm, the
  /// finite version of identifying points with equal reductions.
  AtomicMeasure quotient(double tol = 1e-9) const;
  /// Equality as measures, after quotienting both sides.
  bool same_measure(const AtomicMeasure& other, double tol = 1e-9) const;

 private:
  std::vector<Atom> atoms_;
};

/// The reduction map: sum_i w_i omega_i.
DensityOperator reduce(const AtomicMeasure& mu);

/// Classical effect omega -> tr[omega a].
class LiftedEffect {
 public:
  explicit LiftedEffect(EffectOperator a) : effect_(std::move(a)) {}

  double operator()(const ComplexMatrix& omega) const;
  std::vector<double> on_mesh(const PureStateMesh& mesh) const;
  const EffectOperator& effect() const { return effect_; }

 private:
  EffectOperator effect_;
};

LiftedEffect lift_effect(const EffectOperator& a);

/// <mu, f> = sum_i w_i f(omega_i)
double lifted_pairing(const AtomicMeasure& mu, const LiftedEffect& f);

/// K(omega, X) = tr[omega E(X)]
class PureStateKernel {
 public:
  explicit PureStateKernel(Povm povm) : povm_(std::move(povm)) {}

  std::vector<double> row(const ComplexMatrix& omega) const;
  double value(const ComplexMatrix& omega, classical::OutcomeSet x) const;
  /// Outcome distribution of mu pushed through the kernel.
  std::vector<double> pushforward(const AtomicMeasure& mu) const;
  const Povm& povm() const { return povm_; }

 private:
  Povm povm_;
};

/// Mesh points x outcomes.
classical::MarkovKernel kernel_of_povm(const Povm& povm,
                                       const PureStateMesh& mesh);

/// Reduction from classical(mesh size) onto the quantum model, in hermitian
/// coordinates; its dual is a -> (f_a(omega_i))_i.
maps::AffineStateMap reduction_map(const PureStateMesh& mesh);

struct FuzzinessProfile {
  double min = 0.0;
  double max = 0.0;
  std::size_t argmin = 0;
  std::size_t argmax = 0;
  std::array<std::size_t, 10> deciles{};  // counts in [k/10, (k+1)/10)

  bool all_deciles_populated() const;
  /// min <= 1e-3, max >= 1 - 1e-3 and no empty decile.
  bool sharp_signature() const;
};

/// Values of f_P over the mesh. P must be a projection other than O and I,
/// unless `allow_fuzzy` is set, which waives idempotence (O and I stay
/// rejected). Throws InvalidInput on misuse.
FuzzinessProfile fuzziness_profile(const EffectOperator& p,
                                   const PureStateMesh& mesh,
                                   bool allow_fuzzy = false);

struct PreimageDemo {
  AtomicMeasure mu1;
  AtomicMeasure mu2;
  ComplexMatrix rho;
  double reduce_gap = 0.0;         // max entry |R mu1 - R mu2|
  bool measures_differ = false;
  std::size_t effect_samples = 0;
  double max_pairing_gap = 0.0;    // over lifted effects
  double separating_mu1 = 0.0;     // indicator of supp(mu1)
  double separating_mu2 = 0.0;
};

/// mu1 = (d_|0> + d_|1>)/2 and mu2 = (d_|+> + d_|->)/2, both reducing to I/2.
PreimageDemo preimage_multiplicity_demo(std::size_t effect_samples = 500,
                                        std::uint64_t seed = 7);

/// (|01> - |10>) / sqrt(2) as a projector.
ComplexMatrix singlet();

struct ChshResult {
  /// E(a,b), E(a,b'), E(a',b), E(a',b')
  std::array<double, 4> correlations{};
  std::array<double, 4> quantum_correlations{};
  /// joint[c][o]: outcome o = (s,t) in order (+,+), (+,-), (-,+), (-,-)
  std::array<std::array<double, 4>, 4> joint{};
  double s_value = 0.0;
  double s_quantum = 0.0;
  double agreement_gap = 0.0;
};

/// CHSH value of the singlet, computed from pure-state kernels of the
/// product POVMs {(I + s u.sigma)/2 (x) (I + t v.sigma)/2} evaluated at the
/// singlet atom. Throws InvalidInput for non-unit directions.
ChshResult chsh_classical(const Vec3& a, const Vec3& a_prime, const Vec3& b,
                          const Vec3& b_prime);

struct ChshSweep {
  std::size_t count = 0;
  double max_s = 0.0;
  double max_gap = 0.0;  // classical vs quantum
};

ChshSweep chsh_random_sweep(std::size_t count, std::uint64_t seed);

/// Direction (sin t, 0, cos t) for an angle in degrees.
Vec3 xz_direction(double degrees);

}  // namespace opmodel::canonical
