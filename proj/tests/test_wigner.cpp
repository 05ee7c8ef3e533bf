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
#include <numbers>

#include "opmodel/wigner.hpp"
#include "oracles.hpp"

using namespace opmodel;
using namespace opmodel::wigner;

namespace {

const double kInvPi = 1.0 / std::numbers::pi;

struct Fixture {
  Grid q = symmetric_grid(8.0, 256);
  Grid p = symmetric_grid(8.0, 256);
  WignerTable w0 = wigner_transform(gaussian_state(q), p);
  WignerTable w1 = wigner_transform(hermite1_state(q), p);
};

const Fixture& fixture() {
  static const Fixture f;
  return f;
}

template <typename F>
double max_table_error(const WignerTable& w, F oracle_fn) {
  double err = 0.0;
  for (std::size_t i = 0; i < w.q.n; ++i)
    for (std::size_t j = 0; j < w.p.n; ++j)
      err = std::max(err, std::abs(w(i, j) - oracle_fn(w.q[i], w.p[j])));
  return err;
}

double max_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double err = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) err = std::max(err, std::abs(a[k] - b[k]));
  return err;
}

}  // namespace

TEST_CASE("grids and wave functions", "[wigner]") {
  const auto g = symmetric_grid(8.0, 256);
  CHECK(g[0] == -8.0);
  CHECK(g[128] == 0.0);
  CHECK(g.step == 0.0625);
  CHECK_THROWS_AS(symmetric_grid(0.0, 16), InvalidInput);
  CHECK_THROWS_AS(symmetric_grid(8.0, 1), InvalidInput);

  const auto psi0 = gaussian_state(g);
  const auto psi1 = hermite1_state(g);
  CHECK(psi0.norm_squared() == Catch::Approx(1.0).margin(1e-6));
  CHECK(psi1.norm_squared() == Catch::Approx(1.0).margin(1e-6));
  CHECK(std::abs(psi1.values[128]) <= 1e-15);
  CHECK(std::abs(psi0.values[128]) == Catch::Approx(std::pow(std::numbers::pi, -0.25)).margin(1e-14));

  auto bad = psi0;
  for (auto& v : bad.values) v *= 2.0;
  CHECK_THROWS_AS(wigner_transform(bad, g), InvalidInput);
}

TEST_CASE("Wigner values at the origin", "[wigner]") {
  const auto& f = fixture();
  CHECK(f.w0(128, 128) == Catch::Approx(kInvPi).margin(1e-3));
  CHECK(f.w1(128, 128) == Catch::Approx(-kInvPi).margin(1e-3));
  CHECK(f.w0.max_imag_residue <= 1e-8);
  CHECK(f.w1.max_imag_residue <= 1e-8);
}

TEST_CASE("Wigner tables match the analytic functions", "[wigner]") {
  const auto& f = fixture();
  CHECK(max_table_error(f.w0, oracle::gauss_wigner) <= 1e-6);
  CHECK(max_table_error(f.w1, oracle::hermite1_wigner) <= 1e-6);
  CHECK(f.w0.integral() == Catch::Approx(1.0).margin(1e-4));
  CHECK(f.w1.integral() == Catch::Approx(1.0).margin(1e-4));
}

TEST_CASE("negativity certificates", "[wigner]") {
  const auto& f = fixture();
  const auto n1 = negativity_certificate(f.w1);
  CHECK(n1.min_value <= -0.9 * kInvPi);
  CHECK(n1.min_value == Catch::Approx(-kInvPi).margin(1e-3));
  CHECK(std::abs(n1.q) <= f.q.step);
  CHECK(std::abs(n1.p) <= f.p.step);
  CHECK(n1.rules_out_classical_embedding);

  const auto n0 = negativity_certificate(f.w0);
  CHECK(n0.min_value >= -1e-6);
  CHECK_FALSE(n0.rules_out_classical_embedding);

  const auto coherent = wigner_transform(gaussian_state(f.q, 1.5, -2.0), f.p);
  CHECK(negativity_certificate(coherent).min_value >= -1e-6);
  CHECK(max_table_error(coherent, [](double q, double p) {
          return oracle::gauss_wigner(q - 1.5, p + 2.0);
        }) <= 1e-6);
}

TEST_CASE("marginals", "[wigner]") {
  const auto& f = fixture();
  const auto m0 = wigner_marginals(f.w0);
  const auto m1 = wigner_marginals(f.w1);
  const double rpi = std::sqrt(std::numbers::pi);
  double err0 = 0.0;
  double err1 = 0.0;
  double errp0 = 0.0;
  double errp1 = 0.0;
  for (std::size_t i = 0; i < f.q.n; ++i) {
    const double q = f.q[i];
    err0 = std::max(err0, std::abs(m0.position[i] - std::exp(-q * q) / rpi));
    err1 = std::max(err1, std::abs(m1.position[i] - 2.0 * q * q * std::exp(-q * q) / rpi));
  }
  for (std::size_t j = 0; j < f.p.n; ++j) {
    const double p = f.p[j];
    errp0 = std::max(errp0, std::abs(m0.momentum[j] - std::exp(-p * p) / rpi));
    errp1 = std::max(errp1, std::abs(m1.momentum[j] - 2.0 * p * p * std::exp(-p * p) / rpi));
  }
  CHECK(err0 <= 1e-4);
  CHECK(err1 <= 1e-4);
  CHECK(errp0 <= 1e-4);
  CHECK(errp1 <= 1e-4);
  CHECK(std::abs(m1.position[128]) <= 1e-4);

  CHECK(max_diff(m0.position, position_density(gaussian_state(f.q))) <= 1e-4);
  CHECK(max_diff(m1.momentum, momentum_density(hermite1_state(f.q), f.p)) <= 1e-4);

  double total = 0.0;
  for (double v : m1.position) total += v * f.q.step;
  CHECK(total == Catch::Approx(1.0).margin(1e-4));
}

TEST_CASE("mixtures are affine", "[wigner][property]") {
  const auto& f = fixture();
  const auto m = mix(0.5, f.w0, f.w1);
  CHECK(m.integral() == Catch::Approx(1.0).margin(1e-4));
  const auto mm = wigner_marginals(m);
  const auto p0 = position_density(gaussian_state(f.q));
  const auto p1 = position_density(hermite1_state(f.q));
  double err = 0.0;
  for (std::size_t i = 0; i < f.q.n; ++i)
    err = std::max(err, std::abs(mm.position[i] - 0.5 * (p0[i] + p1[i])));
  CHECK(err <= 1e-4);
  CHECK_THROWS_AS(mix(0.5, f.w0, wigner_transform(gaussian_state(symmetric_grid(6.0, 64)),
                                                  symmetric_grid(6.0, 64))),
                  DimensionMismatch);
}

TEST_CASE("overlap identity", "[wigner][property]") {
  const auto& f = fixture();
  CHECK(std::abs(overlap(f.w0, f.w1)) <= 1e-3);
  CHECK(overlap(f.w0, f.w0) == Catch::Approx(1.0).margin(1e-3));
}
