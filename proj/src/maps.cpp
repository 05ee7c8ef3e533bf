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

#include "opmodel/maps.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "opmodel/qubit_cayley.hpp"
#include "opmodel/simplex.hpp"

namespace opmodel::maps {

FiniteModelSpec FiniteModelSpec::classical(std::size_t n) {
  if (n < 1) throw InvalidInput("classical model needs n >= 1");
  return {ModelKind::classical, n};
}

FiniteModelSpec FiniteModelSpec::qubit() { return {ModelKind::qubit, 2}; }

FiniteModelSpec FiniteModelSpec::qudit(std::size_t d) {
  if (d < 2) throw InvalidInput("quantum model needs d >= 2");
  return {ModelKind::qudit, d};
}

FiniteModelSpec FiniteModelSpec::quantum(std::size_t d) {
  return d == 2 ? qubit() : qudit(d);
}

EffectSetKind FiniteModelSpec::effect_set() const {
  return kind == ModelKind::classical ? EffectSetKind::hypercube
                                      : EffectSetKind::operator_interval;
}

std::string FiniteModelSpec::describe() const {
  switch (kind) {
    case ModelKind::classical:
      return "classical(" + std::to_string(size) + ")";
    case ModelKind::qubit:
      return "qubit";
    case ModelKind::qudit:
      return "qudit(" + std::to_string(size) + ")";
  }
  return "?";
}

std::string to_string(Coordinates c) {
  switch (c) {
    case Coordinates::simplex:
      return "simplex";
    case Coordinates::cayley:
      return "cayley";
    case Coordinates::hermitian:
      return "hermitian";
  }
  return "?";
}

std::string to_string(ModelKind k) {
  switch (k) {
    case ModelKind::classical:
      return "classical";
    case ModelKind::qubit:
      return "qubit";
    case ModelKind::qudit:
      return "qudit";
  }
  return "?";
}

std::string to_string(Feasibility f) {
  switch (f) {
    case Feasibility::feasible:
      return "feasible";
    case Feasibility::infeasible:
      return "infeasible";
    case Feasibility::inconclusive:
      return "inconclusive";
  }
  return "?";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::good:
      return "good";
    case Verdict::not_good:
      return "not-good";
    case Verdict::inconclusive:
      return "inconclusive";
  }
  return "?";
}

ModelSide::ModelSide(FiniteModelSpec m, Coordinates c) : model(m), coords(c) {
  const bool ok =
      (m.kind == ModelKind::classical && c == Coordinates::simplex) ||
      (m.kind == ModelKind::qubit &&
       (c == Coordinates::cayley || c == Coordinates::hermitian)) ||
      (m.kind == ModelKind::qudit && c == Coordinates::hermitian);
  if (!ok)
    throw InvalidInput("coordinate convention " + to_string(c) +
                       " does not apply to " + m.describe());
}

std::size_t ModelSide::coord_dim() const {
  switch (coords) {
    case Coordinates::simplex:
      return model.size;
    case Coordinates::cayley:
      return 4;
    case Coordinates::hermitian:
      return model.size * model.size;
  }
  return 0;
}

double ModelSide::pairing(std::span<const double> state,
                          std::span<const double> effect) const {
  const double d = dot(state, effect);
  return coords == Coordinates::cayley ? 0.5 * d : d;
}

namespace {

void check_dim(const ModelSide& side, std::span<const double> x) {
  if (x.size() != side.coord_dim())
    throw DimensionMismatch("expected " + std::to_string(side.coord_dim()) +
                            " coordinates for " + side.model.describe() +
                            ", got " + std::to_string(x.size()));
}

// Amount by which x violates the effect set (0 inside).
double effect_violation(const ModelSide& side, std::span<const double> x) {
  check_dim(side, x);
  switch (side.coords) {
    case Coordinates::simplex: {
      double v = 0.0;
      for (double a : x) v = std::max({v, -a, a - 1.0});
      return v;
    }
    case Coordinates::cayley: {
      const double len = qubit::norm({x[1], x[2], x[3]});
      const double lo = 0.5 * (x[0] - len);
      const double hi = 0.5 * (x[0] + len);
      return std::max({0.0, -lo, lo - 1.0, -hi, hi - 1.0});
    }
    case Coordinates::hermitian: {
      const auto ev = hermitian_eigenvalues(side.decode(x));
      return std::max({0.0, -ev.front(), ev.back() - 1.0});
    }
  }
  return INFINITY;
}

double state_violation(const ModelSide& side, std::span<const double> x) {
  check_dim(side, x);
  switch (side.coords) {
    case Coordinates::simplex: {
      double v = 0.0;
      double sum = 0.0;
      for (double p : x) {
        v = std::max(v, -p);
        sum += p;
      }
      return std::max(v, std::abs(sum - 1.0));
    }
    case Coordinates::cayley: {
      const double len = qubit::norm({x[1], x[2], x[3]});
      return std::max({0.0, std::abs(x[0] - 1.0), len - 1.0});
    }
    case Coordinates::hermitian: {
      const ComplexMatrix m = side.decode(x);
      const auto ev = hermitian_eigenvalues(m);
      return std::max(
          {0.0, -ev.front(), std::abs(m.trace().real() - 1.0)});
    }
  }
  return INFINITY;
}

std::string format_vector(std::span<const double> v) {
  std::ostringstream os;
  os.precision(6);
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ")";
  return os.str();
}

}  // namespace

bool ModelSide::is_state(std::span<const double> x, double tol) const {
  return state_violation(*this, x) <= tol;
}

bool ModelSide::is_effect(std::span<const double> x, double tol) const {
  return effect_violation(*this, x) <= tol;
}

std::vector<double> ModelSide::encode(const ComplexMatrix& x) const {
  if (!model.is_quantum() || x.dim() != model.size)
    throw DimensionMismatch("cannot encode a " + std::to_string(x.dim()) +
                            "-dimensional operator for " + model.describe());
  if (coords == Coordinates::cayley) {
    const auto c = qubit::cayley_decompose(x);
    return {c.x0, c.x[0], c.x[1], c.x[2]};
  }
  return hermitian_coords(x);
}

ComplexMatrix ModelSide::decode(std::span<const double> x) const {
  if (!model.is_quantum())
    throw InvalidInput("classical coordinates have no operator form");
  check_dim(*this, x);
  if (coords == Coordinates::cayley)
    return qubit::cayley_matrix(x[0], {x[1], x[2], x[3]});
  return from_hermitian_coords(model.size, x);
}

std::vector<double> ModelSide::unit_effect() const {
  if (coords == Coordinates::simplex) return std::vector<double>(model.size, 1);
  return encode(ComplexMatrix::identity(model.size));
}

std::vector<double> ModelSide::zero_effect() const {
  return std::vector<double>(coord_dim(), 0.0);
}

AffineStateMap::AffineStateMap(std::string name_, ModelSide source_,
                               ModelSide target_, RealMatrix linear_)
    : name(std::move(name_)),
      source(source_),
      target(target_),
      linear(std::move(linear_)) {
  if (linear.rows() != target.coord_dim() ||
      linear.cols() != source.coord_dim())
    throw DimensionMismatch(
        "map matrix is " + std::to_string(linear.rows()) + "x" +
        std::to_string(linear.cols()) + " but the models need " +
        std::to_string(target.coord_dim()) + "x" +
        std::to_string(source.coord_dim()));
}

std::vector<double> AffineStateMap::apply(std::span<const double> state) const {
  return linear * state;
}

std::vector<double> DualEffectMap::apply(std::span<const double> effect) const {
  return linear * effect;
}

DualEffectMap dual_of(const AffineStateMap& phi) {
  // <L x, y>_T = w_T x^T L^T y must equal <x, L* y>_S = w_S x^T L* y.
  auto weight = [](const ModelSide& s) {
    return s.coords == Coordinates::cayley ? 0.5 : 1.0;
  };
  const double ratio = weight(phi.target) / weight(phi.source);
  return {phi.target, phi.source, ratio * phi.linear.transpose()};
}

Representability effect_representable(std::span<const double> target_effect,
                                      const DualEffectMap& dual,
                                      double tol_lp) {
  check_dim(dual.codomain, target_effect);
  Representability out;
  const RealMatrix& l = dual.linear;

  if (dual.domain.model.effect_set() == EffectSetKind::hypercube) {
    lp::FeasibilityProblem problem{
        l, std::vector<double>(target_effect.begin(), target_effect.end()),
        std::vector<double>(l.cols(), 1.0)};
    const auto res = lp::solve_feasibility(problem, tol_lp);
    if (res.status == lp::Status::feasible) {
      out.preimage = res.x;
      std::vector<double> r = l * std::span<const double>(res.x);
      for (std::size_t i = 0; i < r.size(); ++i) r[i] -= target_effect[i];
      out.residual = max_abs(r);
      if (out.residual <= tol_lp && dual.domain.is_effect(res.x, tol_lp)) {
        out.status = Feasibility::feasible;
        out.note = "hypercube preimage found by linear feasibility";
      } else {
        out.note = "simplex returned a preimage that fails verification";
      }
      return out;
    }
    if (res.status == lp::Status::infeasible) {
      std::vector<double> y = res.farkas_eq;
      const double scale = max_abs(y);
      if (scale > 0.0)
        for (double& v : y) v /= scale;
      // max over the hypercube of <y, L a'> is the sum of positive parts.
      const std::vector<double> lty = l.transpose() * std::span<const double>(y);
      double best = 0.0;
      for (double v : lty) best += std::max(0.0, v);
      out.certificate = y;
      out.certificate_gap = dot(y, target_effect) - best;
      if (out.certificate_gap > tol_lp) {
        out.status = Feasibility::infeasible;
        out.note = "separating functional certifies that no hypercube "
                   "effect maps onto the target";
      } else {
        out.note = "phase one reported infeasibility but the dual ray did "
                   "not verify";
      }
      return out;
    }
    out.note = "simplex failed to terminate";
    return out;
  }

  // Operator-interval domain: only bijective duals are decidable here.
  if (l.rows() != l.cols() || numerical_rank(l) != l.cols()) {
    out.note = "dual map is not bijective; operator-interval feasibility is "
               "not polyhedral";
    return out;
  }
  const auto ls = least_squares(l, target_effect);
  out.preimage = ls.x;
  out.residual = ls.residual;
  if (ls.residual > tol_lp) {
    out.note = "inverse image does not reproduce the target";
    return out;
  }
  const double violation = effect_violation(dual.domain, ls.x);
  if (violation <= tol_lp) {
    out.status = Feasibility::feasible;
    out.note = "unique preimage under the bijective dual is an effect";
  } else {
    out.status = Feasibility::infeasible;
    out.certificate_gap = violation;
    out.note = "unique preimage under the bijective dual leaves the effect "
               "set by " + std::to_string(violation);
  }
  return out;
}

namespace {

std::string bit_label(std::size_t mask, std::size_t n) {
  std::string s(n, '0');
  for (std::size_t k = 0; k < n; ++k)
    if ((mask >> k) & 1U) s[k] = '1';
  return s;
}

}  // namespace

std::vector<SampledPoint> extreme_effects(const ModelSide& side,
                                          std::size_t count, Rng& rng) {
  std::vector<SampledPoint> out;
  const std::size_t n = side.model.size;
  if (side.coords == Coordinates::simplex) {
    if (n <= 12) {
      for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        std::vector<double> v(n, 0.0);
        for (std::size_t k = 0; k < n; ++k)
          if ((mask >> k) & 1U) v[k] = 1.0;
        out.push_back({"vertex " + bit_label(mask, n), std::move(v)});
      }
      return out;
    }
    std::bernoulli_distribution coin(0.5);
    out.push_back({"O", side.zero_effect()});
    out.push_back({"I", side.unit_effect()});
    for (std::size_t s = 0; s < count; ++s) {
      std::vector<double> v(n, 0.0);
      for (auto& x : v) x = coin(rng) ? 1.0 : 0.0;
      out.push_back({"random vertex", std::move(v)});
    }
    return out;
  }
  out.push_back({"O", side.zero_effect()});
  out.push_back({"I", side.unit_effect()});
  std::uniform_int_distribution<std::size_t> rank(1, n - 1);
  for (std::size_t s = 0; s < count; ++s) {
    if (side.model.kind == ModelKind::qubit) {
      const Vec3 u = random_unit_vector(rng);
      out.push_back({"projection u=" + format_vector(u),
                     side.encode(qubit::cayley_matrix(1.0, u))});
    } else {
      const std::size_t r = rank(rng);
      out.push_back({"rank-" + std::to_string(r) + " projection",
                     side.encode(random_projection(n, r, rng))});
    }
  }
  return out;
}

EffectSampler extreme_effect_sampler(const ModelSide& side) {
  return [side](std::size_t count, Rng& rng) {
    return extreme_effects(side, count, rng);
  };
}

std::vector<SampledPoint> random_effects(const ModelSide& side,
                                         std::size_t count, Rng& rng) {
  std::vector<SampledPoint> out;
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  for (std::size_t s = 0; s < count; ++s) {
    if (side.coords == Coordinates::simplex) {
      std::vector<double> v(side.model.size);
      for (auto& x : v) x = u01(rng);
      out.push_back({"random effect", std::move(v)});
    } else if (side.coords == Coordinates::cayley) {
      const auto e = qubit::random_cayley_effect(rng);
      const auto c = e.coords();
      out.push_back({"random effect", {c.begin(), c.end()}});
    } else {
      out.push_back(
          {"random effect", side.encode(random_effect(side.model.size, rng))});
    }
  }
  return out;
}

std::vector<SampledPoint> sample_states(const ModelSide& side,
                                        std::size_t count, Rng& rng,
                                        double radius) {
  std::vector<SampledPoint> out;
  const std::size_t n = side.model.size;
  if (side.coords == Coordinates::simplex) {
    for (std::size_t k = 0; k < n && k < 64; ++k) {
      std::vector<double> v(n, 0.0);
      v[k] = 1.0;
      out.push_back({"vertex " + std::to_string(k), std::move(v)});
    }
    std::exponential_distribution<double> e(1.0);
    for (std::size_t s = 0; s < count; ++s) {
      std::vector<double> v(n);
      double sum = 0.0;
      for (auto& x : v) sum += (x = e(rng));
      for (auto& x : v) x /= sum;
      out.push_back({"random state", std::move(v)});
    }
    return out;
  }
  const ComplexMatrix mixed =
      (1.0 / static_cast<double>(n)) * ComplexMatrix::identity(n);
  for (std::size_t s = 0; s < count; ++s) {
    const ComplexMatrix psi = random_pure_state(n, rng);
    out.push_back({radius >= 1.0 ? "pure state" : "shrunken pure state",
                   side.encode(radius * psi + (1.0 - radius) * mixed)});
  }
  return out;
}

namespace {

void tally(EmbeddingReport& r, Feasibility f) {
  switch (f) {
    case Feasibility::feasible:
      ++r.feasible;
      break;
    case Feasibility::infeasible:
      ++r.infeasible;
      break;
    case Feasibility::inconclusive:
      ++r.inconclusive;
      break;
  }
}

void finish_verdict(EmbeddingReport& r, bool structural_failure) {
  if (structural_failure || r.infeasible > 0)
    r.verdict = Verdict::not_good;
  else if (r.inconclusive > 0)
    r.verdict = Verdict::inconclusive;
  else
    r.verdict = Verdict::good;
}

constexpr const char* kDensityNote =
    "finite dimension: the dual image of the compact effect set is closed, "
    "so density in the effect set reduces to membership";

}  // namespace

EmbeddingReport good_embedding_report(const AffineStateMap& phi,
                                      const EffectSampler& sampler,
                                      std::size_t count, std::uint64_t seed,
                                      double tol_lp) {
  Rng rng(seed);
  EmbeddingReport report;
  report.map_name = phi.name;
  report.kind = "embedding";
  report.seed = seed;
  report.tol_lp = tol_lp;
  report.note = kDensityNote;
  bool structural_failure = false;

  report.rank = numerical_rank(phi.linear);
  report.required_rank = phi.source.coord_dim();
  if (report.rank < report.required_rank) {
    structural_failure = true;
    report.witnesses.push_back({"injectivity", "kernel vector",
                                null_vector(phi.linear),
                                Feasibility::infeasible, 0.0, 0.0, {},
                                "state map is not injective"});
  }

  for (const auto& s : sample_states(phi.source, std::min<std::size_t>(count, 50), rng)) {
    const auto img = phi.apply(s.coords);
    const double v = state_violation(phi.target, img);
    if (v > report.tol) {
      structural_failure = true;
      report.witnesses.push_back({"state-image", s.label, s.coords,
                                  Feasibility::infeasible, v, 0.0, {},
                                  "image is not a target state"});
    }
  }

  const DualEffectMap dual = dual_of(phi);
  auto targets = extreme_effects(phi.target, std::min<std::size_t>(count, 50), rng);
  for (auto& e : random_effects(phi.target, std::min<std::size_t>(count, 50), rng))
    targets.push_back(std::move(e));
  for (const auto& e : targets) {
    const double v = effect_violation(phi.source, dual.apply(e.coords));
    if (v > report.tol) {
      structural_failure = true;
      report.witnesses.push_back({"dual-validity", e.label, e.coords,
                                  Feasibility::infeasible, v, 0.0, {},
                                  "dual image is not a source effect"});
    }
  }

  for (const auto& s : sampler(count, rng)) {
    const auto r = effect_representable(s.coords, dual, tol_lp);
    tally(report, r.status);
    report.witnesses.push_back({"effect", s.label, s.coords, r.status,
                                r.certificate_gap, r.residual, r.certificate,
                                r.note});
  }
  finish_verdict(report, structural_failure);
  return report;
}

EmbeddingReport good_extension_report(const AffineStateMap& reduction,
                                      const ExtensionOptions& options) {
  Rng rng(options.seed);
  EmbeddingReport report;
  report.map_name = reduction.name;
  report.kind = "extension";
  report.seed = options.seed;
  report.tol_lp = options.tol_lp;
  report.note = kDensityNote;
  bool structural_failure = false;
  const RealMatrix& l = reduction.linear;

  report.rank = numerical_rank(l);
  report.required_rank = reduction.target.coord_dim();
  if (report.rank < report.required_rank) {
    structural_failure = true;
    report.witnesses.push_back({"dual-injectivity", "kernel vector of R*",
                                null_vector(l.transpose()),
                                Feasibility::infeasible, 0.0, 0.0, {},
                                "R* is not injective on effects"});
  }

  auto targets = sample_states(reduction.target, options.count, rng,
                               options.interior_radius);
  for (const auto& s : options.extra_target_states) targets.push_back(s);

  for (const auto& t : targets) {
    Witness w;
    w.check = "surjectivity";
    w.label = t.label;
    w.coords = t.coords;
    if (reduction.source.coords == Coordinates::simplex) {
      RealMatrix a(l.rows() + 1, l.cols());
      for (std::size_t i = 0; i < l.rows(); ++i)
        for (std::size_t j = 0; j < l.cols(); ++j) a(i, j) = l(i, j);
      for (std::size_t j = 0; j < l.cols(); ++j) a(l.rows(), j) = 1.0;
      std::vector<double> b = t.coords;
      b.push_back(1.0);
      const auto res = lp::solve_feasibility({a, b, {}}, options.tol_lp);
      if (res.status == lp::Status::feasible) {
        w.status = Feasibility::feasible;
        w.residual = res.residual;
      } else if (res.status == lp::Status::infeasible) {
        std::vector<double> y = res.farkas_eq;
        const double scale = max_abs(y);
        if (scale > 0.0)
          for (double& v : y) v /= scale;
        const auto aty = a.transpose() * std::span<const double>(y);
        const double worst = *std::max_element(aty.begin(), aty.end());
        w.certificate_gap = dot(y, b) - std::max(0.0, worst);
        w.certificate = y;
        w.status = (worst <= options.tol_lp && w.certificate_gap > options.tol_lp)
                       ? Feasibility::infeasible
                       : Feasibility::inconclusive;
        w.note = "no probability vector on the extended model reduces to "
                 "this state";
      } else {
        w.note = "simplex failed";
      }
    } else {
      const auto ls = least_squares(l, t.coords);
      w.residual = ls.residual;
      if (ls.residual <= options.tol_lp &&
          state_violation(reduction.source, ls.x) <= report.tol) {
        w.status = Feasibility::feasible;
      } else {
        w.note = "minimum-norm preimage is not a state; another preimage "
                 "may exist";
      }
    }
    tally(report, w.status);
    if (w.status != Feasibility::feasible)
      report.witnesses.push_back(std::move(w));
  }

  const DualEffectMap dual = dual_of(reduction);
  auto effects = extreme_effects(reduction.target, options.count, rng);
  for (auto& e : random_effects(reduction.target, options.count, rng))
    effects.push_back(std::move(e));
  for (const auto& e : effects) {
    const double v = effect_violation(reduction.source, dual.apply(e.coords));
    const Feasibility f =
        v <= report.tol ? Feasibility::feasible : Feasibility::infeasible;
    tally(report, f);
    if (f != Feasibility::feasible)
      report.witnesses.push_back({"effect-lift", e.label, e.coords, f, v, 0.0,
                                  {}, "R* image leaves the extended effect set"});
  }
  finish_verdict(report, structural_failure);
  return report;
}

AffineStateMap identity_map(const ModelSide& side) {
  return AffineStateMap("identity", side, side,
                        RealMatrix::identity(side.coord_dim()));
}

AffineStateMap cayley_embedding() {
  const ModelSide herm(FiniteModelSpec::qubit(), Coordinates::hermitian);
  const ModelSide cay(FiniteModelSpec::qubit(), Coordinates::cayley);
  RealMatrix l(4, 4);
  const auto& s = qubit::pauli_basis();
  for (std::size_t k = 0; k < 4; ++k) {
    const auto row = hermitian_coords(s[k]);
    for (std::size_t j = 0; j < 4; ++j) l(k, j) = row[j];
  }
  return AffineStateMap("cayley", herm, cay, std::move(l));
}

AffineStateMap inverse_cayley() {
  const AffineStateMap fwd = cayley_embedding();
  // Pauli coordinates are orthogonal with squared norm 2.
  return AffineStateMap("inverse-cayley", fwd.target, fwd.source,
                        0.5 * fwd.linear.transpose());
}

Povm sic_qubit_povm() {
  const double s = 1.0 / std::sqrt(3.0);
  const Vec3 dirs[4] = {{s, s, s}, {s, -s, -s}, {-s, s, -s}, {-s, -s, s}};
  std::vector<EffectOperator> effects;
  for (const auto& n : dirs)
    effects.push_back(EffectOperator(qubit::cayley_matrix(0.5, {0.5 * n[0], 0.5 * n[1], 0.5 * n[2]})));
  return Povm(std::move(effects), {"1", "2", "3", "4"});
}

namespace {

RealMatrix effect_coordinate_matrix(const Povm& povm) {
  const std::size_t d = povm.dim();
  RealMatrix m(povm.size(), d * d);
  for (std::size_t k = 0; k < povm.size(); ++k) {
    const auto row = hermitian_coords(povm[k].matrix());
    for (std::size_t j = 0; j < row.size(); ++j) m(k, j) = row[j];
  }
  return m;
}

}  // namespace

AffineStateMap povm_embedding(const Povm& povm) {
  const ModelSide src(FiniteModelSpec::quantum(povm.dim()),
                      Coordinates::hermitian);
  const ModelSide dst(FiniteModelSpec::classical(povm.size()),
                      Coordinates::simplex);
  return AffineStateMap("povm-embedding", src, dst,
                        effect_coordinate_matrix(povm));
}

std::size_t povm_rank(const Povm& povm) {
  return numerical_rank(effect_coordinate_matrix(povm));
}

Reconstruction reconstruct_state(const Povm& povm,
                                 std::span<const double> probabilities) {
  if (probabilities.size() != povm.size())
    throw DimensionMismatch("reconstruct_state: " +
                            std::to_string(probabilities.size()) +
                            " probabilities for " +
                            std::to_string(povm.size()) + " outcomes");
  const std::size_t d = povm.dim();
  const RealMatrix m = effect_coordinate_matrix(povm);
  const std::size_t rank = numerical_rank(m);
  if (rank < d * d)
    throw NotInformationallyComplete(
        "POVM effects span rank " + std::to_string(rank) + " < " +
        std::to_string(d * d) + ": not informationally complete");
  const auto ls = least_squares(m, probabilities);
  Reconstruction out;
  out.estimate = from_hermitian_coords(d, ls.x);
  out.residual = ls.residual;
  out.exact = ls.residual <= kTol;
  out.validation = validate(out.estimate, OperatorKind::state);
  return out;
}

CompoundExtension compound_extension(std::size_t d_sys, std::size_t d_anc) {
  if (d_sys < 2 || d_anc < 2)
    throw InvalidInput("compound_extension needs both dimensions >= 2");
  const std::size_t big = d_sys * d_anc;
  const ModelSide src(FiniteModelSpec::quantum(big), Coordinates::hermitian);
  const ModelSide dst(FiniteModelSpec::quantum(d_sys), Coordinates::hermitian);
  RealMatrix l(d_sys * d_sys, big * big);
  const auto basis = hermitian_basis(big);
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const auto col = hermitian_coords(
        partial_trace(basis[j], d_sys, d_anc, Subsystem::first));
    for (std::size_t i = 0; i < col.size(); ++i) l(i, j) = col[i];
  }
  AffineStateMap reduction("partial-trace", src, dst, std::move(l));
  DualEffectMap dual = dual_of(reduction);
  return {d_sys, d_anc, std::move(reduction), std::move(dual)};
}

EffectOperator lift_to_compound(const EffectOperator& a, std::size_t d_anc) {
  return EffectOperator(tensor(a.matrix(), ComplexMatrix::identity(d_anc)));
}

}  // namespace opmodel::maps
