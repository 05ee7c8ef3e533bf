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
#include <limits>
#include <vector>

#include "opmodel/linalg.hpp"

namespace opmodel::lp {

/// Feasibility of { x : A x = b, 0 <= x <= upper }. An infinite upper bound
/// leaves the variable unbounded above.
struct FeasibilityProblem {
  RealMatrix a;
  std::vector<double> b;
  std::vector<double> upper;  // empty = all +inf
};

enum class Status { feasible, infeasible, failed };

/// Phase-one outcome. For `infeasible`, `farkas_eq` / `farkas_upper` hold a
/// dual ray (y, z) with y^T A_j + z_j <= 0, z <= 0 and y^T b + z^T u > 0,
/// which certifies that no feasible x exists.
struct FeasibilityResult {
  Status status = Status::failed;
  std::vector<double> x;
  std::vector<double> farkas_eq;
  std::vector<double> farkas_upper;
  double phase_one_objective = 0.0;
  double residual = 0.0;  // max |A x - b| for feasible results
  std::size_t iterations = 0;
};

/// Dense tableau simplex, phase one only, Bland's rule for both entering and
/// leaving variables. `tol` bounds the constraint residual of an accepted x.
FeasibilityResult solve_feasibility(const FeasibilityProblem& problem,
                                    double tol = 1e-8);

}  // namespace opmodel::lp
