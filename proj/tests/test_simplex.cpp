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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "opmodel/simplex.hpp"
#include "opmodel/sampling.hpp"

using namespace opmodel;
using namespace opmodel::lp;

namespace {

RealMatrix random_matrix(std::size_t m, std::size_t n, Rng& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  RealMatrix a(m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = u(rng);
  return a;
}

void check_feasible_point(const FeasibilityProblem& p,
                          const FeasibilityResult& r, double tol) {
  REQUIRE(r.x.size() == p.a.cols());
  for (std::size_t j = 0; j < r.x.size(); ++j) {
    CHECK(r.x[j] >= -tol);
    if (!p.upper.empty()) CHECK(r.x[j] <= p.upper[j] + tol);
  }
  for (std::size_t i = 0; i < p.a.rows(); ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < p.a.cols(); ++j) s += p.a(i, j) * r.x[j];
    CHECK(std::abs(s - p.b[i]) <= tol);
  }
}

// Checks the Farkas conditions directly from the problem data.
void check_certificate(const FeasibilityProblem& p, const FeasibilityResult& r) {
  const std::size_t n = p.a.cols();
  REQUIRE(r.farkas_eq.size() == p.a.rows());
  const bool bounded = !p.upper.empty();
  double value = 0.0;
  for (std::size_t i = 0; i < p.a.rows(); ++i) value += r.farkas_eq[i] * p.b[i];
  for (std::size_t j = 0; j < n; ++j) {
    double col = 0.0;
    for (std::size_t i = 0; i < p.a.rows(); ++i) col += r.farkas_eq[i] * p.a(i, j);
    const double z = bounded ? r.farkas_upper.at(j) : 0.0;
    CHECK(z <= 1e-12);
    CHECK(col + z <= 1e-9);
    if (bounded) value += z * p.upper[j];
  }
  CHECK(value > 1e-9);
}

}  // namespace

TEST_CASE("simple feasible and infeasible systems", "[simplex]") {
  FeasibilityProblem p;
  p.a = RealMatrix(1, 2);
  p.a(0, 0) = 1.0;
  p.a(0, 1) = 1.0;
  p.b = {1.5};
  p.upper = {1.0, 1.0};
  auto r = solve_feasibility(p);
  REQUIRE(r.status == Status::feasible);
  check_feasible_point(p, r, 1e-9);

  p.b = {2.5};
  r = solve_feasibility(p);
  REQUIRE(r.status == Status::infeasible);
  check_certificate(p, r);

  p.b = {-0.5};
  r = solve_feasibility(p);
  REQUIRE(r.status == Status::infeasible);
  check_certificate(p, r);
}

TEST_CASE("unbounded variables", "[simplex]") {
  FeasibilityProblem p;
  p.a = RealMatrix(2, 2);
  p.a(0, 0) = 1.0;
  p.a(0, 1) = -1.0;
  p.a(1, 0) = 1.0;
  p.a(1, 1) = 1.0;
  p.b = {3.0, 5.0};
  auto r = solve_feasibility(p);
  REQUIRE(r.status == Status::feasible);
  CHECK(r.x[0] == Catch::Approx(4.0).margin(1e-9));
  CHECK(r.x[1] == Catch::Approx(1.0).margin(1e-9));

  p.b = {3.0, -1.0};
  r = solve_feasibility(p);
  REQUIRE(r.status == Status::infeasible);
  check_certificate(p, r);
}

TEST_CASE("degenerate system terminates under Bland's rule", "[simplex]") {
  // Beale's cycling example as an equality system with slacks, b = 0 rows
  // make every basis degenerate.
  FeasibilityProblem p;
  p.a = RealMatrix(3, 7);
  const double rows[3][7] = {{0.25, -8.0, -1.0, 9.0, 1.0, 0.0, 0.0},
                             {0.5, -12.0, -0.5, 3.0, 0.0, 1.0, 0.0},
                             {0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 1.0}};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 7; ++j) p.a(i, j) = rows[i][j];
  p.b = {0.0, 0.0, 1.0};
  const auto r = solve_feasibility(p);
  REQUIRE(r.status == Status::feasible);
  check_feasible_point(p, r, 1e-9);
  CHECK(r.iterations < 100);
}

TEST_CASE("random feasible systems are solved", "[simplex][property]") {
  Rng rng(21);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int t = 0; t < 300; ++t) {
    const std::size_t m = 1 + t % 6;
    const std::size_t n = m + 1 + t % 7;
    FeasibilityProblem p;
    p.a = random_matrix(m, n, rng);
    std::vector<double> x0(n);
    for (auto& v : x0) v = u(rng);
    // Some coordinates sit on a bound to create degeneracy.
    if (t % 3 == 0) x0[0] = 0.0;
    if (t % 5 == 0) x0[n - 1] = 1.0;
    p.b.assign(m, 0.0);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) p.b[i] += p.a(i, j) * x0[j];
    if (t % 2) p.upper.assign(n, 1.0);
    const auto r = solve_feasibility(p);
    REQUIRE(r.status == Status::feasible);
    check_feasible_point(p, r, 1e-8);
    CHECK(r.residual <= 1e-8);
  }
}

TEST_CASE("random infeasible systems carry a Farkas certificate", "[simplex][property]") {
  Rng rng(22);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int infeasible = 0;
  for (int t = 0; t < 300; ++t) {
    const std::size_t m = 2 + t % 5;
    const std::size_t n = m + t % 4;
    FeasibilityProblem p;
    p.a = random_matrix(m, n, rng);
    p.upper.assign(n, 1.0);
    // Right-hand sides far outside the zonotope A [0,1]^n.
    p.b.assign(m, 0.0);
    for (std::size_t i = 0; i < m; ++i) p.b[i] = (u(rng) < 0.5 ? -1.0 : 1.0) * (n + 1.0);
    const auto r = solve_feasibility(p);
    REQUIRE(r.status == Status::infeasible);
    check_certificate(p, r);
    ++infeasible;
  }
  CHECK(infeasible == 300);
}

TEST_CASE("verdict agrees with a vertex enumeration oracle", "[simplex][property]") {
  // One equality row over [0,1]^n: feasible iff b lies between the sums of
  // the negative and of the positive coefficients.
  Rng rng(23);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int t = 0; t < 500; ++t) {
    const std::size_t n = 1 + t % 6;
    FeasibilityProblem p;
    p.a = random_matrix(1, n, rng);
    p.upper.assign(n, 1.0);
    double lo = 0.0;
    double hi = 0.0;
    for (std::size_t j = 0; j < n; ++j) (p.a(0, j) < 0 ? lo : hi) += p.a(0, j);
    p.b = {u(rng)};
    if (std::abs(p.b[0] - lo) < 1e-6 || std::abs(p.b[0] - hi) < 1e-6) continue;
    const bool expect = p.b[0] >= lo && p.b[0] <= hi;
    const auto r = solve_feasibility(p);
    CHECK((r.status == Status::feasible) == expect);
    if (r.status == Status::infeasible) check_certificate(p, r);
  }
}
