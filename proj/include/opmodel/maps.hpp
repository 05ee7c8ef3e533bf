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
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "opmodel/linalg.hpp"
#include "opmodel/operators.hpp"
#include "opmodel/sampling.hpp"

namespace opmodel::maps {

inline constexpr double kTolLp = 1e-8;

enum class ModelKind { classical, qubit, qudit };
enum class EffectSetKind { hypercube, operator_interval };

/// A finite statistical model <S, E>.
struct FiniteModelSpec {
  ModelKind kind = ModelKind::classical;
  std::size_t size = 1;  // n for classical, d otherwise

  static FiniteModelSpec classical(std::size_t n);
  static FiniteModelSpec qubit();
  static FiniteModelSpec qudit(std::size_t d);
  /// qubit() for d == 2, qudit(d) otherwise.
  static FiniteModelSpec quantum(std::size_t d);

  EffectSetKind effect_set() const;
  bool is_quantum() const { return kind != ModelKind::classical; }
  std::string describe() const;
  bool operator==(const FiniteModelSpec&) const = default;
};

/// How states and effects of a model are written as real vectors.
///  simplex:   probability / [0,1] vectors, pairing = dot product
///  cayley:    (1, r) and (a0, a), pairing = dot product / 2
///  hermitian: coordinates in hermitian_basis(d), pairing = dot product
enum class Coordinates { simplex, cayley, hermitian };

std::string to_string(Coordinates c);
std::string to_string(ModelKind k);

struct ModelSide {
  FiniteModelSpec model;
  Coordinates coords = Coordinates::simplex;

  /// Throws InvalidInput for incompatible combinations (e.g. cayley on a
  /// qutrit or simplex on a quantum model).
  ModelSide(FiniteModelSpec m, Coordinates c);

  std::size_t coord_dim() const;
  double pairing(std::span<const double> state,
                 std::span<const double> effect) const;
  bool is_state(std::span<const double> x, double tol = kTol) const;
  bool is_effect(std::span<const double> x, double tol = kTol) const;

  /// Quantum sides only.
  std::vector<double> encode(const ComplexMatrix& x) const;
  ComplexMatrix decode(std::span<const double> x) const;

  std::vector<double> unit_effect() const;
  std::vector<double> zero_effect() const;
  bool operator==(const ModelSide&) const = default;
};

/// Linear action on state coordinates, x -> L x, between two models.
struct AffineStateMap {
  std::string name;
  ModelSide source;
  ModelSide target;
  RealMatrix linear;  // target.coord_dim() x source.coord_dim()

  AffineStateMap(std::string name, ModelSide source, ModelSide target,
                 RealMatrix linear);
  std::vector<double> apply(std::span<const double> state) const;
};

/// Phi* acting on effect coordinates of Phi's target, landing in Phi's
/// source: <Phi x, y> = <x, Phi* y>.
struct DualEffectMap {
  ModelSide domain;
  ModelSide codomain;
  RealMatrix linear;  // codomain.coord_dim() x domain.coord_dim()

  std::vector<double> apply(std::span<const double> effect) const;
};

DualEffectMap dual_of(const AffineStateMap& phi);

enum class Feasibility { feasible, infeasible, inconclusive };
std::string to_string(Feasibility f);

struct Representability {
  Feasibility status = Feasibility::inconclusive;
  std::vector<double> preimage;     // when feasible
  std::vector<double> certificate;  // separating functional when infeasible
  /// <y, target> - max_{a' in domain effects} <y, Phi* a'>; > 0 certifies
  /// infeasibility.
  double certificate_gap = 0.0;
  double residual = 0.0;
  std::string note;
};

/// Does some effect a' of the dual's domain satisfy Phi* a' = target?
/// Hypercube domains are decided by linear feasibility; operator-interval
/// domains need a bijective dual and are decided by the explicit inverse.
Representability effect_representable(std::span<const double> target_effect,
                                      const DualEffectMap& dual,
                                      double tol_lp = kTolLp);

struct SampledPoint {
  std::string label;
  std::vector<double> coords;
};

using EffectSampler =
    std::function<std::vector<SampledPoint>(std::size_t count, Rng& rng)>;

/// Extreme effects of a side: all hypercube vertices for classical n <= 12
/// (otherwise `count` random vertices); O, I and `count` random projections
/// for quantum sides (Bloch-sphere projections for qubits).
std::vector<SampledPoint> extreme_effects(const ModelSide& side,
                                          std::size_t count, Rng& rng);
EffectSampler extreme_effect_sampler(const ModelSide& side);

/// Generic (mostly interior) effects.
std::vector<SampledPoint> random_effects(const ModelSide& side,
                                         std::size_t count, Rng& rng);

/// Vertices (classical) plus `count` random states. Quantum states are pure
/// states shrunk toward I/d by the factor `radius`.
std::vector<SampledPoint> sample_states(const ModelSide& side,
                                        std::size_t count, Rng& rng,
                                        double radius = 1.0);

enum class Verdict { good, not_good, inconclusive };
std::string to_string(Verdict v);

struct Witness {
  std::string check;  // "effect", "state-image", "dual-validity", ...
  std::string label;
  std::vector<double> coords;
  Feasibility status = Feasibility::inconclusive;
  double certificate_gap = 0.0;
  double residual = 0.0;
  std::vector<double> certificate;
  std::string note;
};

struct EmbeddingReport {
  std::string map_name;
  std::string kind;  // "embedding" or "extension"
  Verdict verdict = Verdict::inconclusive;
  std::size_t rank = 0;
  std::size_t required_rank = 0;
  std::size_t feasible = 0;
  std::size_t infeasible = 0;
  std::size_t inconclusive = 0;
  double tol = kTol;
  double tol_lp = kTolLp;
  std::uint64_t seed = 0;
  std::vector<Witness> witnesses;
  std::string note;
};

/// Decides whether Phi is a good embedding: injective, sends states to
/// states, and every sampled extreme effect of the source model lies in the
/// dual image of the target effect set.
EmbeddingReport good_embedding_report(const AffineStateMap& phi,
                                      const EffectSampler& sampler,
                                      std::size_t count, std::uint64_t seed,
                                      double tol_lp = kTolLp);

struct ExtensionOptions {
  std::size_t count = 100;
  std::uint64_t seed = 1;
  /// Target states are sampled inside this radius (1 = pure states).
  double interior_radius = 1.0;
  std::vector<SampledPoint> extra_target_states;
  double tol_lp = kTolLp;
};

/// Decides whether the reduction R (extended -> original) is a good
/// extension: R onto the sampled original states, R* injective, and R*
/// sends sampled original effects into the extended effect set.
EmbeddingReport good_extension_report(const AffineStateMap& reduction,
                                      const ExtensionOptions& options);

AffineStateMap identity_map(const ModelSide& side);
/// Qubit density matrices (hermitian coordinates) to (1, r).
AffineStateMap cayley_embedding();
/// (1, r) back to hermitian coordinates.
AffineStateMap inverse_cayley();

/// Tetrahedral informationally complete qubit POVM (I + n_k.sigma) / 4.
Povm sic_qubit_povm();
/// rho -> (tr[rho a_1], ..., tr[rho a_m])
AffineStateMap povm_embedding(const Povm& povm);
/// Rank of the m x d^2 effect coordinate matrix; d^2 means the POVM is
/// informationally complete.
std::size_t povm_rank(const Povm& povm);

class NotInformationallyComplete : public Error {
 public:
  using Error::Error;
};

struct Reconstruction {
  ComplexMatrix estimate;
  double residual = 0.0;  // || M x - probs ||
  bool exact = true;      // residual within tolerance
  ValidationReport validation;
};

/// Linear-inversion tomography. Throws NotInformationallyComplete for
/// rank-deficient POVMs.
Reconstruction reconstruct_state(const Povm& povm,
                                 std::span<const double> probabilities);

struct CompoundExtension {
  std::size_t d_sys;
  std::size_t d_anc;
  AffineStateMap reduction;  // partial trace over the ancilla
  DualEffectMap dual;        // a -> a (x) I
};

CompoundExtension compound_extension(std::size_t d_sys, std::size_t d_anc);
/// a (x) I
EffectOperator lift_to_compound(const EffectOperator& a, std::size_t d_anc);

}  // namespace opmodel::maps
