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

#include "opmodel/simplex.hpp"

#include <algorithm>
#include <cmath>

namespace opmodel::lp {

namespace {

constexpr double kPivotTol = 1e-11;
constexpr std::size_t kMaxIterations = 100000;

}  // namespace

FeasibilityResult solve_feasibility(const FeasibilityProblem& problem,
                                    double tol) {
  const std::size_t m_eq = problem.a.rows();
  const std::size_t n = problem.a.cols();
  if (problem.b.size() != m_eq)
    throw DimensionMismatch("solve_feasibility: b has wrong size");
  if (!problem.upper.empty() && problem.upper.size() != n)
    throw DimensionMismatch("solve_feasibility: upper has wrong size");

  std::vector<std::size_t> bounded;  // variables with a finite upper bound
  for (std::size_t j = 0; j < problem.upper.size(); ++j)
    if (std::isfinite(problem.upper[j])) bounded.push_back(j);

  FeasibilityResult result;
  for (std::size_t j : bounded)
    if (problem.upper[j] < 0.0) {
      // x_j <= u_j < 0 contradicts x_j >= 0: z = -e_j is a certificate.
      result.status = Status::infeasible;
      result.farkas_eq.assign(m_eq, 0.0);
      result.farkas_upper.assign(n, 0.0);
      result.farkas_upper[j] = -1.0;
      result.phase_one_objective = -problem.upper[j];
      return result;
    }

  // Columns: x (n) | slacks of bound rows (nb) | artificials of eq rows.
  const std::size_t nb = bounded.size();
  const std::size_t rows = m_eq + nb;
  const std::size_t art0 = n + nb;
  const std::size_t cols = art0 + m_eq;
  const std::size_t rhs = cols;
  RealMatrix t(rows, cols + 1);
  std::vector<double> sign(m_eq, 1.0);
  std::vector<std::size_t> basis(rows);

  for (std::size_t i = 0; i < m_eq; ++i) {
    sign[i] = problem.b[i] < 0.0 ? -1.0 : 1.0;
    for (std::size_t j = 0; j < n; ++j) t(i, j) = sign[i] * problem.a(i, j);
    t(i, art0 + i) = 1.0;
    t(i, rhs) = sign[i] * problem.b[i];
    basis[i] = art0 + i;
  }
  for (std::size_t r = 0; r < nb; ++r) {
    const std::size_t i = m_eq + r;
    t(i, bounded[r]) = 1.0;
    t(i, n + r) = 1.0;
    t(i, rhs) = problem.upper[bounded[r]];
    basis[i] = n + r;
  }

  // Reduced costs of the phase-one objective sum(artificials).
  std::vector<double> cost(cols + 1, 0.0);
  for (std::size_t j = art0; j < cols; ++j) cost[j] = 1.0;
  for (std::size_t i = 0; i < m_eq; ++i)
    for (std::size_t j = 0; j <= cols; ++j) cost[j] -= t(i, j);

  auto pivot = [&](std::size_t pr, std::size_t pc) {
    const double p = t(pr, pc);
    for (std::size_t j = 0; j <= cols; ++j) t(pr, j) /= p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == pr) continue;
      const double f = t(i, pc);
      if (f == 0.0) continue;
      for (std::size_t j = 0; j <= cols; ++j) t(i, j) -= f * t(pr, j);
    }
    const double f = cost[pc];
    if (f != 0.0)
      for (std::size_t j = 0; j <= cols; ++j) cost[j] -= f * t(pr, j);
    basis[pr] = pc;
  };

  bool optimal = false;
  for (; result.iterations < kMaxIterations; ++result.iterations) {
    // Bland: lowest-index improving column; artificials never re-enter.
    std::size_t enter = cols;
    for (std::size_t j = 0; j < art0; ++j)
      if (cost[j] < -kPivotTol) {
        enter = j;
        break;
      }
    if (enter == cols) {
      optimal = true;
      break;
    }
    std::size_t leave = rows;
    double best = 0.0;
    for (std::size_t i = 0; i < rows; ++i) {
      const double a = t(i, enter);
      if (a <= kPivotTol) continue;
      const double ratio = t(i, rhs) / a;
      if (leave == rows || ratio < best - 1e-14 ||
          (std::abs(ratio - best) <= 1e-14 && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    // Phase one is bounded below by zero, so a ratio row always exists.
    if (leave == rows) break;
    pivot(leave, enter);
  }
  if (!optimal) return result;

  result.phase_one_objective = -cost[rhs];
  result.x.assign(n, 0.0);
  for (std::size_t i = 0; i < rows; ++i)
    if (basis[i] < n) result.x[basis[i]] = std::max(0.0, t(i, rhs));

  double residual = 0.0;
  for (std::size_t i = 0; i < m_eq; ++i) {
    double s = -problem.b[i];
    for (std::size_t j = 0; j < n; ++j) s += problem.a(i, j) * result.x[j];
    residual = std::max(residual, std::abs(s));
  }
  for (std::size_t j : bounded)
    residual = std::max(residual, result.x[j] - problem.upper[j]);
  result.residual = residual;

  if (residual <= tol) {
    result.status = Status::feasible;
    return result;
  }
  if (result.phase_one_objective > tol) {
    result.status = Status::infeasible;
    // y'_i = 1 - rc(artificial i), z'_r = -rc(slack r)
    result.farkas_eq.resize(m_eq);
    for (std::size_t i = 0; i < m_eq; ++i)
      result.farkas_eq[i] = sign[i] * (1.0 - cost[art0 + i]);
    result.farkas_upper.assign(n, 0.0);
    for (std::size_t r = 0; r < nb; ++r)
      result.farkas_upper[bounded[r]] = -cost[n + r];
    return result;
  }
  return result;  // failed: neither clearly feasible nor clearly infeasible
}

}  // namespace opmodel::lp
