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

#include "opmodel/wigner.hpp"

#include <cmath>
#include <numbers>

namespace opmodel::wigner {

Grid symmetric_grid(double extent, std::size_t n) {
  if (!(extent > 0.0) || n < 2)
    throw InvalidInput("grid needs a positive extent and at least 2 points");
  return {-extent, 2.0 * extent / static_cast<double>(n), n};
}

double WaveFunction::norm_squared() const {
  double s = 0.0;
  for (const auto& z : values) s += std::norm(z);
  return s * grid.step;
}

WaveFunction gaussian_state(const Grid& grid, double q0, double p0) {
  const double c = std::pow(std::numbers::pi, -0.25);
  WaveFunction psi{grid, std::vector<Complex>(grid.n)};
  for (std::size_t k = 0; k < grid.n; ++k) {
    const double q = grid[k];
    psi.values[k] = c * std::exp(-0.5 * (q - q0) * (q - q0)) *
                    std::polar(1.0, p0 * q);
  }
  return psi;
}

WaveFunction hermite1_state(const Grid& grid) {
  const double c = std::pow(std::numbers::pi, -0.25) * std::sqrt(2.0);
  WaveFunction psi{grid, std::vector<Complex>(grid.n)};
  for (std::size_t k = 0; k < grid.n; ++k) {
    const double q = grid[k];
    psi.values[k] = c * q * std::exp(-0.5 * q * q);
  }
  return psi;
}

double WignerTable::integral() const {
  double s = 0.0;
  for (double v : values) s += v;
  return s * q.step * p.step;
}

WignerTable wigner_transform(const WaveFunction& psi, const Grid& p_grid) {
  if (std::abs(psi.norm_squared() - 1.0) > 1e-6)
    throw InvalidInput("wave function is not normalized (|psi|^2 = " +
                       std::to_string(psi.norm_squared()) + ")");
  const Grid& q = psi.grid;
  const std::size_t n = q.n;
  const std::size_t m = p_grid.n;
  WignerTable w{q, p_grid, std::vector<double>(n * m, 0.0), 0.0};

  // y = k dq keeps q +- y on the grid; values past the ends are zero.
  std::vector<Complex> phase(m * n);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t k = 0; k < n; ++k)
      phase[j * n + k] =
          std::polar(1.0, 2.0 * p_grid[j] * static_cast<double>(k) * q.step);

  std::vector<Complex> corr(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t kmax = std::min(i, n - 1 - i);
    for (std::size_t k = 0; k <= kmax; ++k)
      corr[k] = std::conj(psi.values[i + k]) * psi.values[i - k];
    for (std::size_t j = 0; j < m; ++j) {
      // k and -k contribute complex conjugate pairs.
      Complex s = corr[0];
      for (std::size_t k = 1; k <= kmax; ++k) {
        const Complex back = std::conj(psi.values[i - k]) * psi.values[i + k];
        s += corr[k] * phase[j * n + k] + back * std::conj(phase[j * n + k]);
      }
      s *= q.step / std::numbers::pi;
      w.values[i * m + j] = s.real();
      w.max_imag_residue = std::max(w.max_imag_residue, std::abs(s.imag()));
    }
  }
  return w;
}

WignerTable mix(double lambda, const WignerTable& w1, const WignerTable& w2) {
  if (w1.values.size() != w2.values.size())
    throw DimensionMismatch("mix: tables have different grids");
  WignerTable out = w1;
  for (std::size_t k = 0; k < out.values.size(); ++k)
    out.values[k] = lambda * w1.values[k] + (1.0 - lambda) * w2.values[k];
  return out;
}

Marginals wigner_marginals(const WignerTable& w) {
  Marginals m{std::vector<double>(w.q.n, 0.0), std::vector<double>(w.p.n, 0.0)};
  for (std::size_t i = 0; i < w.q.n; ++i)
    for (std::size_t j = 0; j < w.p.n; ++j) {
      m.position[i] += w(i, j) * w.p.step;
      m.momentum[j] += w(i, j) * w.q.step;
    }
  return m;
}

std::vector<double> position_density(const WaveFunction& psi) {
  std::vector<double> d;
  d.reserve(psi.values.size());
  for (const auto& z : psi.values) d.push_back(std::norm(z));
  return d;
}

std::vector<double> momentum_density(const WaveFunction& psi, const Grid& p) {
  const double c = psi.grid.step / std::sqrt(2.0 * std::numbers::pi);
  std::vector<double> d(p.n);
  for (std::size_t j = 0; j < p.n; ++j) {
    Complex s = 0.0;
    for (std::size_t k = 0; k < psi.grid.n; ++k)
      s += psi.values[k] * std::polar(1.0, -p[j] * psi.grid[k]);
    d[j] = std::norm(c * s);
  }
  return d;
}

NegativityCertificate negativity_certificate(const WignerTable& w) {
  NegativityCertificate c;
  c.min_value = INFINITY;
  for (std::size_t i = 0; i < w.q.n; ++i)
    for (std::size_t j = 0; j < w.p.n; ++j)
      if (w(i, j) < c.min_value) {
        c.min_value = w(i, j);
        c.q = w.q[i];
        c.p = w.p[j];
      }
  c.rules_out_classical_embedding = c.min_value < -0.25;
  return c;
}

double overlap(const WignerTable& w1, const WignerTable& w2) {
  if (w1.values.size() != w2.values.size())
    throw DimensionMismatch("overlap: tables have different grids");
  double s = 0.0;
  for (std::size_t k = 0; k < w1.values.size(); ++k)
    s += w1.values[k] * w2.values[k];
  return 2.0 * std::numbers::pi * s * w1.q.step * w1.p.step;
}

}  // namespace opmodel::wigner
