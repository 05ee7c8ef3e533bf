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

#include <random>

#include "opmodel/cmodel.hpp"
#include "opmodel/sampling.hpp"

using namespace opmodel;
using namespace opmodel::classical;

namespace {

std::vector<double> random_simplex(std::size_t n, Rng& rng) {
  std::exponential_distribution<double> e(1.0);
  std::vector<double> p(n);
  double s = 0.0;
  for (auto& v : p) s += (v = e(rng));
  for (auto& v : p) v /= s;
  return p;
}

RealMatrix random_kernel(std::size_t n, std::size_t m, Rng& rng) {
  RealMatrix k(n, m);
  for (std::size_t i = 0; i < n; ++i) {
    const auto row = random_simplex(m, rng);
    for (std::size_t j = 0; j < m; ++j) k(i, j) = row[j];
  }
  return k;
}

// Kernel whose entries are multiples of 1/8, so every sum is exact.
RealMatrix dyadic_kernel(std::size_t n, std::size_t m, Rng& rng) {
  RealMatrix k(n, m);
  std::uniform_int_distribution<std::size_t> pick(0, m - 1);
  for (std::size_t i = 0; i < n; ++i)
    for (int unit = 0; unit < 8; ++unit) k(i, pick(rng)) += 0.125;
  return k;
}

double subset_sum(const ClassicalState& q, OutcomeSet x) {
  double s = 0.0;
  for (std::size_t j = 0; j < q.size(); ++j)
    if ((x >> j) & 1U) s += q[j];
  return s;
}

}  // namespace

TEST_CASE("outcome spaces", "[cmodel]") {
  const FiniteOutcomeSpace omega(4);
  CHECK(omega.size() == 4);
  CHECK(omega.labels() == std::vector<std::string>{"1", "2", "3", "4"});
  CHECK_THROWS_AS(FiniteOutcomeSpace(2, {"a", "a"}), InvalidInput);
  CHECK_THROWS_AS(FiniteOutcomeSpace(3, {"a", "b"}), InvalidInput);
  CHECK_THROWS_AS(FiniteOutcomeSpace(0), InvalidInput);
}

TEST_CASE("classical states clamp tiny negatives", "[cmodel]") {
  const ClassicalState p({0.5, 0.5 + 1e-12, -1e-12});
  CHECK(p.clamped());
  CHECK(p[2] == 0.0);
  CHECK_FALSE(ClassicalState({0.5, 0.5}).clamped());
  CHECK_THROWS_AS(ClassicalState({1.1, -0.1}), InvalidInput);
  CHECK_THROWS_AS(ClassicalState({0.5, 0.4}), InvalidInput);
  CHECK_THROWS_AS(ClassicalEffect({0.5, 1.2}), InvalidInput);
}

TEST_CASE("classical pairing examples", "[cmodel]") {
  const ClassicalEffect a({0.3, 0.6, 0.9, 0.1});
  CHECK(classical_pair(ClassicalState::vertex(4, 0), a) == 0.3);
  CHECK(classical_pair(ClassicalState::uniform(4), ClassicalEffect::unit(4)) ==
        Catch::Approx(1.0).margin(1e-15));
  CHECK(classical_pair(ClassicalState({0.1, 0.2, 0.3, 0.4}),
                       ClassicalEffect({0.0, 1.0, 1.0, 0.0})) ==
        Catch::Approx(0.5).margin(1e-15));
  CHECK_THROWS_AS(classical_pair(ClassicalState::uniform(3), a), DimensionMismatch);
}

TEST_CASE("kernel pushforward examples", "[cmodel]") {
  const ClassicalState p({0.1, 0.2, 0.3, 0.4});
  const MarkovKernel id(RealMatrix::identity(4));
  const auto same = kernel_pushforward(id, p);
  for (std::size_t k = 0; k < 4; ++k) CHECK(same[k] == p[k]);

  RealMatrix fuzz(4, 2);
  for (std::size_t i = 0; i < 4; ++i) fuzz(i, 0) = fuzz(i, 1) = 0.5;
  const auto flat = kernel_pushforward(MarkovKernel(fuzz), p);
  CHECK(flat[0] == Catch::Approx(0.5).margin(1e-15));
  CHECK(flat[1] == Catch::Approx(0.5).margin(1e-15));

  const auto k = kernel_from_function({{0, 0, 1, 1}}, 2);
  const auto q = kernel_pushforward(k, p);
  CHECK(q[0] == Catch::Approx(0.3).margin(1e-15));
  CHECK(q[1] == Catch::Approx(0.7).margin(1e-15));
  CHECK_THROWS_AS(kernel_pushforward(k, ClassicalState::uniform(3)),
                  DimensionMismatch);
}

TEST_CASE("kernel effects", "[cmodel]") {
  Rng rng(1);
  const MarkovKernel k(random_kernel(4, 3, rng));
  const auto unit = kernel_effect(k, all_outcomes(3));
  for (std::size_t i = 0; i < 4; ++i) CHECK(unit[i] == Catch::Approx(1.0).margin(1e-15));
  const auto zero = kernel_effect(k, 0);
  for (std::size_t i = 0; i < 4; ++i) CHECK(zero[i] == 0.0);

  const auto f = kernel_from_function({{0, 1, 1, 2}}, 3);
  const auto ind = kernel_effect(f, 0b010);
  const std::vector<double> expect{0.0, 1.0, 1.0, 0.0};
  for (std::size_t i = 0; i < 4; ++i) CHECK(ind[i] == expect[i]);
  CHECK_THROWS_AS(kernel_effect(k, 0b1000), InvalidInput);
}

TEST_CASE("kernels from functions", "[cmodel]") {
  const auto id = kernel_from_function({{0, 1, 2, 3}}, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) CHECK(id(i, j) == (i == j ? 1.0 : 0.0));
  const auto constant = kernel_from_function({{0, 0, 0}}, 1);
  CHECK(constant.outcomes() == 1);
  for (std::size_t i = 0; i < 3; ++i) CHECK(constant(i, 0) == 1.0);
  const auto two = kernel_from_function({{0, 0, 1, 1}}, 2);
  const double rows[4][2] = {{1, 0}, {1, 0}, {0, 1}, {0, 1}};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 2; ++j) CHECK(two(i, j) == rows[i][j]);
  CHECK(two.is_deterministic());
  CHECK_THROWS_AS(kernel_from_function({{0, 2}}, 2), InvalidInput);

  RealMatrix bad(1, 2);
  bad(0, 0) = 0.7;
  CHECK_THROWS_AS(MarkovKernel(bad), InvalidInput);
}

TEST_CASE("classical effect algebra", "[cmodel]") {
  const auto c = classical_complement(ClassicalEffect::unit(4));
  for (std::size_t k = 0; k < 4; ++k) CHECK(c[k] == 0.0);
  const ClassicalEffect half({0.5, 0.5, 0.5, 0.5});
  const auto s = classical_osum(half, half);
  REQUIRE(s.has_value());
  for (std::size_t k = 0; k < 4; ++k) CHECK((*s)[k] == 1.0);
  const ClassicalEffect a({0.7, 0.0, 0.0, 0.0});
  CHECK_FALSE(classical_osum(a, a).has_value());
}

TEST_CASE("vertex decomposition", "[cmodel]") {
  const auto v = vertex_decomposition(ClassicalState::vertex(4, 0));
  REQUIRE(v.size() == 1);
  CHECK(v[0].vertex == 0);
  CHECK(v[0].weight == 1.0);
  const auto u = vertex_decomposition(ClassicalState::uniform(4));
  REQUIRE(u.size() == 4);
  for (std::size_t k = 0; k < 4; ++k) {
    CHECK(u[k].vertex == k);
    CHECK(u[k].weight == 0.25);
  }
  const auto w = vertex_decomposition(ClassicalState({0.1, 0.2, 0.3, 0.4}));
  REQUIRE(w.size() == 4);
  const double expect[4] = {0.1, 0.2, 0.3, 0.4};
  for (std::size_t k = 0; k < 4; ++k) CHECK(w[k].weight == expect[k]);
}

TEST_CASE("kernel and effect are dual", "[cmodel][property]") {
  Rng rng(2);
  for (std::size_t m = 1; m <= 6; ++m) {
    for (int t = 0; t < 20; ++t) {
      const std::size_t n = 1 + t % 5;
      // Dyadic data: both summation orders are exact, so equality is bitwise.
      const MarkovKernel kd(dyadic_kernel(n, m, rng));
      std::vector<double> pd(n, 0.0);
      std::uniform_int_distribution<std::size_t> pick(0, n - 1);
      for (int unit = 0; unit < 16; ++unit) pd[pick(rng)] += 1.0 / 16.0;
      const ClassicalState p_dyadic(pd);
      const MarkovKernel k(random_kernel(n, m, rng));
      const ClassicalState p(random_simplex(n, rng));
      for (OutcomeSet x = 0; x <= all_outcomes(m); ++x) {
        CHECK(classical_pair(p_dyadic, kernel_effect(kd, x)) ==
              subset_sum(kernel_pushforward(kd, p_dyadic), x));
        CHECK(std::abs(classical_pair(p, kernel_effect(k, x)) -
                       subset_sum(kernel_pushforward(k, p), x)) <= 1e-14);
      }
    }
  }
}

TEST_CASE("pushforward respects composition", "[cmodel][property]") {
  Rng rng(3);
  for (int t = 0; t < 200; ++t) {
    const MarkovKernel k1(random_kernel(5, 4, rng));
    const MarkovKernel k2(random_kernel(4, 3, rng));
    const ClassicalState p(random_simplex(5, rng));
    const auto two_step = kernel_pushforward(k2, kernel_pushforward(k1, p));
    const auto direct = kernel_pushforward(compose(k1, k2), p);
    for (std::size_t j = 0; j < 3; ++j)
      CHECK(std::abs(two_step[j] - direct[j]) <= 1e-12);
  }
}

TEST_CASE("sharp kernels are extreme", "[cmodel][property]") {
  Rng rng(4);
  std::uniform_int_distribution<std::size_t> pick(0, 2);
  std::uniform_real_distribution<double> lam(0.01, 0.99);
  for (int t = 0; t < 200; ++t) {
    SharpRandomVariable f1{{pick(rng), pick(rng), pick(rng), pick(rng)}};
    SharpRandomVariable f2{{pick(rng), pick(rng), pick(rng), pick(rng)}};
    const auto k1 = kernel_from_function(f1, 3);
    const auto k2 = kernel_from_function(f2, 3);
    CHECK(k1.is_deterministic());
    const double l = lam(rng);
    RealMatrix mix(4, 3);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 3; ++j) mix(i, j) = l * k1(i, j) + (1 - l) * k2(i, j);
    const MarkovKernel km(mix);
    bool has_fuzzy = false;
    for (double v : km.matrix().data()) has_fuzzy = has_fuzzy || (v > 0.0 && v < 1.0);
    CHECK(has_fuzzy == (f1.map != f2.map));
    CHECK(km.is_deterministic() == (f1.map == f2.map));
  }
}

TEST_CASE("functional order is componentwise order", "[cmodel][property]") {
  Rng rng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int t = 0; t < 500; ++t) {
    const std::size_t n = 2 + t % 4;
    std::vector<double> av(n);
    std::vector<double> bv(n);
    for (std::size_t k = 0; k < n; ++k) {
      av[k] = u(rng);
      // Bias toward comparable pairs so both branches are exercised.
      bv[k] = t % 2 ? std::min(1.0, av[k] + 0.5 * u(rng)) : u(rng);
    }
    const ClassicalEffect a(av);
    const ClassicalEffect b(bv);
    // a <= b on every state iff it holds on the vertices (Dirac states).
    bool on_states = true;
    for (std::size_t k = 0; k < n; ++k)
      on_states = on_states && classical_pair(ClassicalState::vertex(n, k), a) <=
                                   classical_pair(ClassicalState::vertex(n, k), b);
    for (int s = 0; s < 50 && on_states; ++s) {
      const ClassicalState p(random_simplex(n, rng));
      CHECK(classical_pair(p, a) <= classical_pair(p, b) + 1e-12);
    }
    CHECK(classical_leq(a, b, 0.0) == on_states);
  }
}
