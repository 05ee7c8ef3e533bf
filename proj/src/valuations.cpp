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

#include "opmodel/valuations.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "opmodel/sampling.hpp"

namespace opmodel::valuations {

std::vector<EffectOperator> effect_operator_basis(std::size_t d) {
  if (d < 2) throw InvalidInput("effect_operator_basis needs d >= 2");
  const double scale = 1.0 / static_cast<double>(d * d);
  std::vector<ComplexMatrix> family;
  family.push_back(ComplexMatrix::identity(d));
  for (std::size_t k = 0; k + 1 < d; ++k) {
    ComplexMatrix p(d);
    p(k, k) = 1.0;
    family.push_back(std::move(p));
  }
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = j + 1; k < d; ++k) {
      for (Complex phase : {Complex(1.0, 0.0), Complex(0.0, 1.0)}) {
        std::vector<Complex> v(d, 0.0);
        v[j] = 1.0 / std::sqrt(2.0);
        v[k] = phase / std::sqrt(2.0);
        family.push_back(ComplexMatrix::outer(v));
      }
    }
  std::vector<EffectOperator> out;
  for (auto& m : family) out.push_back(EffectOperator(scale * std::move(m)));
  return out;
}

EffectValuation valuation_from_rule(std::size_t d, const ValuationRule& rule,
                                    const std::vector<EffectOperator>& family) {
  EffectValuation v{d, {}};
  v.assignment.emplace_back(ComplexMatrix::zero(d), rule(ComplexMatrix::zero(d)));
  v.assignment.emplace_back(ComplexMatrix::identity(d),
                            rule(ComplexMatrix::identity(d)));
  for (const auto& e : family) v.assignment.emplace_back(e.matrix(), rule(e.matrix()));
  return v;
}

ValuationRule trace_rule(const ComplexMatrix& rho) {
  return [rho](const ComplexMatrix& a) { return trace_product(rho, a).real(); };
}

ValuationReconstruction state_from_valuation(const EffectValuation& v,
                                             double tol) {
  const std::size_t d = v.dim;
  if (d < 1 || v.assignment.empty())
    throw InvalidInput("state_from_valuation: empty valuation");
  RealMatrix m(v.assignment.size(), d * d);
  std::vector<double> values;
  for (std::size_t k = 0; k < v.assignment.size(); ++k) {
    const auto& [effect, value] = v.assignment[k];
    if (effect.dim() != d) throw DimensionMismatch("valuation effect dimension");
    const auto row = hermitian_coords(effect);
    for (std::size_t j = 0; j < row.size(); ++j) m(k, j) = row[j];
    values.push_back(value);
  }
  const auto ls = least_squares(m, values);
  if (ls.rank < d * d)
    throw RankDeficientFamily("valuation family spans rank " +
                              std::to_string(ls.rank) + " < " +
                              std::to_string(d * d));
  if (ls.residual > tol)
    throw InconsistentValuation(
        "valuation is not linear on its family (residual " +
        std::to_string(ls.residual) + ")");

  ValuationReconstruction out;
  out.estimate = from_hermitian_coords(d, ls.x);
  out.residual = ls.residual;
  out.validation = validate(out.estimate, OperatorKind::state);
  out.is_state = out.validation.passed;
  if (!out.is_state) {
    if (out.validation.min_eigenvalue < -kTolPsd)
      out.diagnostic = "reconstructed operator has negative eigenvalue " +
                       std::to_string(out.validation.min_eigenvalue) +
                       ": the valuation is not a generalized probability "
                       "measure";
    else
      out.diagnostic = "reconstructed operator has trace " +
                       std::to_string(out.estimate.trace().real()) +
                       ": the valuation is not normalized";
  }
  return out;
}

AdditivityReport verify_additivity(std::size_t d, const ValuationRule& v,
                                   std::size_t trials, std::uint64_t seed,
                                   double tol) {
  Rng rng(seed);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  AdditivityReport r;
  r.trials = trials;
  r.tolerance = tol;
  r.note = "finite dimension: sigma-additivity reduces to finite additivity";
  for (std::size_t t = 0; t < trials; ++t) {
    // a + b <= I: a <= s I and b <= (1 - s) I.
    const double s = u01(rng);
    const ComplexMatrix a = s * random_effect(d, rng);
    const ComplexMatrix b = (1.0 - s) * random_effect(d, rng);
    const double defect = std::abs(v(a + b) - v(a) - v(b));
    if (defect > r.max_defect) {
      r.max_defect = defect;
      r.worst_trial = t;
    }
  }
  r.passed = r.max_defect <= tol;
  return r;
}

}  // namespace opmodel::valuations
