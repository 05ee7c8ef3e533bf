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

#include "opmodel/canonical.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "opmodel/qubit_cayley.hpp"

namespace opmodel::canonical {

std::vector<Vec3> fibonacci_sphere(std::size_t n) {
  std::vector<Vec3> pts;
  pts.reserve(n);
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (std::size_t i = 0; i < n; ++i) {
    const double z =
        1.0 - (2.0 * static_cast<double>(i) + 1.0) / static_cast<double>(n);
    const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = golden * static_cast<double>(i);
    pts.push_back({rho * std::cos(phi), rho * std::sin(phi), z});
  }
  return pts;
}

PureStateMesh bloch_mesh(std::size_t n) {
  if (n < 4)
    throw InvalidInput("bloch_mesh needs at least 4 points, got " +
                       std::to_string(n));
  PureStateMesh mesh{2, {}, "fibonacci-sphere(" + std::to_string(n) + ")"};
  mesh.points.reserve(n);
  for (const auto& r : fibonacci_sphere(n))
    mesh.points.push_back(qubit::cayley_matrix(1.0, r));
  return mesh;
}

PureStateMesh haar_mesh(std::size_t d, std::size_t n, std::uint64_t seed) {
  if (d < 2 || n < 1) throw InvalidInput("haar_mesh needs d >= 2 and n >= 1");
  Rng rng(seed);
  PureStateMesh mesh{d, {},
                     "seeded-haar(" + std::to_string(n) + "," +
                         std::to_string(seed) + ")"};
  for (std::size_t i = 0; i < n; ++i)
    mesh.points.push_back(random_pure_state(d, rng));
  return mesh;
}

AtomicMeasure::AtomicMeasure(std::vector<Atom> atoms)
    : atoms_(std::move(atoms)) {
  if (atoms_.empty()) throw InvalidInput("atomic measure needs an atom");
  const std::size_t d = atoms_.front().state.dim();
  double total = 0.0;
  for (const auto& a : atoms_) {
    if (a.state.dim() != d)
      throw DimensionMismatch("atoms live in different dimensions");
    if (!(a.weight >= 0.0)) throw InvalidInput("negative atom weight");
    const auto report = validate(a.state, OperatorKind::state);
    if (!report.passed || report.max_eigenvalue < 1.0 - kTolPsd)
      throw InvalidInput("atom is not a pure state: " + report.summary());
    total += a.weight;
  }
  if (std::abs(total - 1.0) > kTol)
    throw InvalidInput("atom weights sum to " + std::to_string(total));
}

AtomicMeasure AtomicMeasure::dirac(ComplexMatrix omega) {
  return AtomicMeasure({{std::move(omega), 1.0}});
}

AtomicMeasure AtomicMeasure::mixture(double lambda, const AtomicMeasure& mu1,
                                     const AtomicMeasure& mu2) {
  if (lambda < 0.0 || lambda > 1.0)
    throw InvalidInput("mixture weight outside [0,1]");
  std::vector<Atom> atoms;
  for (const auto& a : mu1.atoms_) atoms.push_back({a.state, lambda * a.weight});
  for (const auto& a : mu2.atoms_)
    atoms.push_back({a.state, (1.0 - lambda) * a.weight});
  return AtomicMeasure(std::move(atoms));
}

AtomicMeasure AtomicMeasure::quotient(double tol) const {
  std::vector<Atom> merged;
  for (const auto& a : atoms_) {
    auto it = std::find_if(merged.begin(), merged.end(), [&](const Atom& m) {
      return trace_norm(m.state - a.state) < tol;
    });
    if (it == merged.end())
      merged.push_back(a);
    else
      it->weight += a.weight;
  }
  std::erase_if(merged, [](const Atom& a) { return a.weight == 0.0; });
  return AtomicMeasure(std::move(merged));
}

bool AtomicMeasure::same_measure(const AtomicMeasure& other,
                                 double tol) const {
  const AtomicMeasure x = quotient(tol);
  const AtomicMeasure y = other.quotient(tol);
  if (x.atoms_.size() != y.atoms_.size() || x.dim() != y.dim()) return false;
  for (const auto& a : x.atoms_) {
    const auto it = std::find_if(y.atoms_.begin(), y.atoms_.end(),
                                 [&](const Atom& b) {
                                   return trace_norm(a.state - b.state) < tol;
                                 });
    if (it == y.atoms_.end() || std::abs(it->weight - a.weight) > tol)
      return false;
  }
  return true;
}

DensityOperator reduce(const AtomicMeasure& mu) {
  ComplexMatrix rho(mu.dim());
  for (const auto& a : mu.atoms()) rho += a.weight * a.state;
  return DensityOperator(std::move(rho));
}

double LiftedEffect::operator()(const ComplexMatrix& omega) const {
  return trace_product(omega, effect_.matrix()).real();
}

std::vector<double> LiftedEffect::on_mesh(const PureStateMesh& mesh) const {
  std::vector<double> f;
  f.reserve(mesh.size());
  for (const auto& w : mesh.points) f.push_back((*this)(w));
  return f;
}

LiftedEffect lift_effect(const EffectOperator& a) { return LiftedEffect(a); }

double lifted_pairing(const AtomicMeasure& mu, const LiftedEffect& f) {
  double s = 0.0;
  for (const auto& a : mu.atoms()) s += a.weight * f(a.state);
  return s;
}

std::vector<double> PureStateKernel::row(const ComplexMatrix& omega) const {
  if (omega.dim() != povm_.dim())
    throw DimensionMismatch("kernel row: state and POVM dimensions differ");
  std::vector<double> r;
  r.reserve(povm_.size());
  for (const auto& e : povm_.effects())
    r.push_back(trace_product(omega, e.matrix()).real());
  return r;
}

double PureStateKernel::value(const ComplexMatrix& omega,
                              classical::OutcomeSet x) const {
  const auto r = row(omega);
  double s = 0.0;
  for (std::size_t k = 0; k < r.size(); ++k)
    if ((x >> k) & 1U) s += r[k];
  return s;
}

std::vector<double> PureStateKernel::pushforward(const AtomicMeasure& mu) const {
  std::vector<double> q(povm_.size(), 0.0);
  for (const auto& a : mu.atoms()) {
    const auto r = row(a.state);
    for (std::size_t k = 0; k < r.size(); ++k) q[k] += a.weight * r[k];
  }
  return q;
}

classical::MarkovKernel kernel_of_povm(const Povm& povm,
                                       const PureStateMesh& mesh) {
  if (povm.dim() != mesh.dim)
    throw DimensionMismatch("kernel_of_povm: POVM acts on C^" +
                            std::to_string(povm.dim()) + ", mesh on C^" +
                            std::to_string(mesh.dim));
  const PureStateKernel k(povm);
  RealMatrix m(mesh.size(), povm.size());
  for (std::size_t i = 0; i < mesh.size(); ++i) {
    const auto r = k.row(mesh.points[i]);
    for (std::size_t j = 0; j < r.size(); ++j)
      m(i, j) = std::clamp(r[j], 0.0, 1.0);
  }
  return classical::MarkovKernel(std::move(m));
}

maps::AffineStateMap reduction_map(const PureStateMesh& mesh) {
  using maps::Coordinates;
  using maps::FiniteModelSpec;
  const maps::ModelSide src(FiniteModelSpec::classical(mesh.size()),
                            Coordinates::simplex);
  const maps::ModelSide dst(FiniteModelSpec::quantum(mesh.dim),
                            Coordinates::hermitian);
  RealMatrix l(mesh.dim * mesh.dim, mesh.size());
  for (std::size_t j = 0; j < mesh.size(); ++j) {
    const auto c = hermitian_coords(mesh.points[j]);
    for (std::size_t i = 0; i < c.size(); ++i) l(i, j) = c[i];
  }
  return maps::AffineStateMap("misra-bugajski", src, dst, std::move(l));
}

bool FuzzinessProfile::all_deciles_populated() const {
  return std::all_of(deciles.begin(), deciles.end(),
                     [](std::size_t c) { return c > 0; });
}

bool FuzzinessProfile::sharp_signature() const {
  return min <= 1e-3 && max >= 1.0 - 1e-3 && all_deciles_populated();
}

FuzzinessProfile fuzziness_profile(const EffectOperator& p,
                                   const PureStateMesh& mesh,
                                   bool allow_fuzzy) {
  const std::size_t d = p.dim();
  if (d != mesh.dim) throw DimensionMismatch("fuzziness_profile: dimension");
  if (mesh.points.empty()) throw InvalidInput("fuzziness_profile: empty mesh");
  if (max_entry_distance(p.matrix(), ComplexMatrix::zero(d)) <= kTol ||
      max_entry_distance(p.matrix(), ComplexMatrix::identity(d)) <= kTol)
    throw InvalidInput("fuzziness_profile: O and I have constant profiles");
  if (!allow_fuzzy &&
      max_entry_distance(p.matrix() * p.matrix(), p.matrix()) > kTol)
    throw InvalidInput("fuzziness_profile: effect is not a projection");

  const LiftedEffect f(p);
  FuzzinessProfile out;
  out.min = INFINITY;
  out.max = -INFINITY;
  for (std::size_t i = 0; i < mesh.size(); ++i) {
    const double v = f(mesh.points[i]);
    if (v < out.min) {
      out.min = v;
      out.argmin = i;
    }
    if (v > out.max) {
      out.max = v;
      out.argmax = i;
    }
    const double c = std::clamp(v, 0.0, 1.0);
    ++out.deciles[std::min<std::size_t>(9, static_cast<std::size_t>(10.0 * c))];
  }
  return out;
}

namespace {

ComplexMatrix ket_projector(Complex a, Complex b) {
  const std::array<Complex, 2> v{a, b};
  return ComplexMatrix::outer(v);
}

}  // namespace

PreimageDemo preimage_multiplicity_demo(std::size_t effect_samples,
                                        std::uint64_t seed) {
  const double h = 1.0 / std::sqrt(2.0);
  AtomicMeasure mu1({{ket_projector(1.0, 0.0), 0.5},
                     {ket_projector(0.0, 1.0), 0.5}});
  AtomicMeasure mu2({{ket_projector(h, h), 0.5}, {ket_projector(h, -h), 0.5}});
  const DensityOperator r1 = reduce(mu1);
  const DensityOperator r2 = reduce(mu2);

  PreimageDemo demo{mu1, mu2, r1.matrix()};
  demo.reduce_gap = max_entry_distance(r1.matrix(), r2.matrix());
  demo.measures_differ = !mu1.same_measure(mu2);
  demo.effect_samples = effect_samples;

  Rng rng(seed);
  for (std::size_t s = 0; s < effect_samples; ++s) {
    const LiftedEffect f(EffectOperator(random_effect(2, rng)));
    demo.max_pairing_gap = std::max(
        demo.max_pairing_gap,
        std::abs(lifted_pairing(mu1, f) - lifted_pairing(mu2, f)));
  }

  // Indicator of supp(mu1): a classical effect outside the range of R*.
  auto indicator = [&](const ComplexMatrix& omega) {
    for (const auto& a : mu1.atoms())
      if (trace_norm(a.state - omega) < 1e-9) return 1.0;
    return 0.0;
  };
  for (const auto& a : mu1.atoms())
    demo.separating_mu1 += a.weight * indicator(a.state);
  for (const auto& a : mu2.atoms())
    demo.separating_mu2 += a.weight * indicator(a.state);
  return demo;
}

ComplexMatrix singlet() {
  const double h = 1.0 / std::sqrt(2.0);
  const std::array<Complex, 4> v{0.0, h, -h, 0.0};
  return ComplexMatrix::outer(v);
}

Vec3 xz_direction(double degrees) {
  const double t = degrees * std::numbers::pi / 180.0;
  return {std::sin(t), 0.0, std::cos(t)};
}

namespace {

Povm product_povm(const Vec3& u, const Vec3& v) {
  std::vector<EffectOperator> effects;
  for (double s : {1.0, -1.0})
    for (double t : {1.0, -1.0}) {
      const ComplexMatrix pu = qubit::cayley_matrix(1.0, {s * u[0], s * u[1], s * u[2]});
      const ComplexMatrix pv = qubit::cayley_matrix(1.0, {t * v[0], t * v[1], t * v[2]});
      effects.push_back(EffectOperator(tensor(pu, pv)));
    }
  return Povm(std::move(effects), {"++", "+-", "-+", "--"});
}

ComplexMatrix spin_observable(const Vec3& u) {
  const auto& s = qubit::pauli_basis();
  return u[0] * s[1] + u[1] * s[2] + u[2] * s[3];
}

void check_unit(const Vec3& u) {
  if (std::abs(qubit::norm(u) - 1.0) > 1e-9)
    throw InvalidInput("CHSH setting is not a unit vector (length " +
                       std::to_string(qubit::norm(u)) + ")");
}

}  // namespace

ChshResult chsh_classical(const Vec3& a, const Vec3& a_prime, const Vec3& b,
                          const Vec3& b_prime) {
  for (const auto* u : {&a, &a_prime, &b, &b_prime}) check_unit(*u);
  static const AtomicMeasure state = AtomicMeasure::dirac(singlet());
  static const ComplexMatrix singlet_m = singlet();
  const std::array<std::pair<const Vec3*, const Vec3*>, 4> pairs{
      {{&a, &b}, {&a, &b_prime}, {&a_prime, &b}, {&a_prime, &b_prime}}};
  constexpr std::array<double, 4> sign{1.0, -1.0, -1.0, 1.0};  // s * t

  ChshResult r;
  for (std::size_t c = 0; c < 4; ++c) {
    const PureStateKernel kernel(product_povm(*pairs[c].first, *pairs[c].second));
    const auto dist = kernel.pushforward(state);
    double e = 0.0;
    for (std::size_t o = 0; o < 4; ++o) {
      r.joint[c][o] = dist[o];
      e += sign[o] * dist[o];
    }
    r.correlations[c] = e;
    r.quantum_correlations[c] =
        trace_product(singlet_m, tensor(spin_observable(*pairs[c].first),
                                        spin_observable(*pairs[c].second)))
            .real();
  }
  const auto& e = r.correlations;
  const auto& q = r.quantum_correlations;
  r.s_value = std::abs(e[0] + e[1] + e[2] - e[3]);
  r.s_quantum = std::abs(q[0] + q[1] + q[2] - q[3]);
  for (std::size_t c = 0; c < 4; ++c)
    r.agreement_gap = std::max(r.agreement_gap, std::abs(e[c] - q[c]));
  r.agreement_gap = std::max(r.agreement_gap, std::abs(r.s_value - r.s_quantum));
  return r;
}

ChshSweep chsh_random_sweep(std::size_t count, std::uint64_t seed) {
  Rng rng(seed);
  ChshSweep sweep;
  sweep.count = count;
  for (std::size_t i = 0; i < count; ++i) {
    const Vec3 a = random_unit_vector(rng);
    const Vec3 a2 = random_unit_vector(rng);
    const Vec3 b = random_unit_vector(rng);
    const Vec3 b2 = random_unit_vector(rng);
    const ChshResult r = chsh_classical(a, a2, b, b2);
    sweep.max_s = std::max(sweep.max_s, r.s_value);
    sweep.max_gap = std::max(sweep.max_gap, r.agreement_gap);
  }
  return sweep;
}

}  // namespace opmodel::canonical
