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
#include <string>
#include <vector>

#include "opmodel/operators.hpp"

namespace opmodel::valuations {

/// Values assigned to a finite family of effects.
struct EffectValuation {
  std::size_t dim = 0;
  std::vector<std::pair<ComplexMatrix, double>> assignment;
};

using ValuationRule = std::function<double(const ComplexMatrix&)>;

/// d^2 linearly independent effects spanning the Hermitian operators, each
/// scaled by 1/d^2 so the family sums to an effect: I, the diagonal
/// projectors |k><k| (k < d-1), and the projectors onto (|j> + |k>)/sqrt2
/// and (|j> + i|k>)/sqrt2. For d = 2 this is I, (I+s3)/2, (I+s1)/2, (I+s2)/2.
std::vector<EffectOperator> effect_operator_basis(std::size_t d);

/// Evaluates `rule` on the family (plus O and I).
EffectValuation valuation_from_rule(std::size_t d, const ValuationRule& rule,
                                    const std::vector<EffectOperator>& family);

/// v(a) = tr[rho a]
ValuationRule trace_rule(const ComplexMatrix& rho);

class RankDeficientFamily : public Error {
 public:
  using Error::Error;
};
class InconsistentValuation : public Error {
 public:
  using Error::Error;
};

struct ValuationReconstruction {
  ComplexMatrix estimate;
  double residual = 0.0;
  ValidationReport validation;
  bool is_state = false;
  /// Empty when the estimate is a density operator.
  std::string diagnostic;
};

/// Unique operator x with tr[x a_k] = v(a_k) on the assignment. Throws
/// RankDeficientFamily when the effects do not span, InconsistentValuation
/// when the least-squares residual exceeds `tol`.
ValuationReconstruction state_from_valuation(const EffectValuation& v,
                                             double tol = 1e-9);

struct AdditivityReport {
  std::size_t trials = 0;
  double max_defect = 0.0;
  std::size_t worst_trial = 0;
  double tolerance = 1e-9;
  bool passed = false;
  /// In finite dimension countable additivity adds nothing to finite
  /// additivity; the report checks the finite form.
  std::string note;
};

/// Checks v(a + b) = v(a) + v(b) on `trials` random pairs with a + b <= I.
AdditivityReport verify_additivity(std::size_t d, const ValuationRule& v,
                                   std::size_t trials, std::uint64_t seed,
                                   double tol = 1e-9);

}  // namespace opmodel::valuations
