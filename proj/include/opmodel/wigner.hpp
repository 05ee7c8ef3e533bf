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
#include <vector>

#include "opmodel/operators.hpp"

// Phase-space representation with hbar = 1:
//   W(q, p) = (1/pi) int psi*(q + y) psi(q - y) exp(2 i p y) dy.
namespace opmodel::wigner {

/// Uniform grid {lo + k * step : k = 0..n-1}.
struct Grid {
  double lo = 0.0;
  double step = 1.0;
  std::size_t n = 0;

  double operator[](std::size_t k) const {
    return lo + static_cast<double>(k) * step;
  }
};

/// n points on [-extent, extent) with step 2 extent / n; contains 0 for even n.
Grid symmetric_grid(double extent, std::size_t n);

struct WaveFunction {
  Grid grid;
  std::vector<Complex> values;

  /// sum |psi|^2 dq
  double norm_squared() const;
};

/// pi^{-1/4} exp(-(q - q0)^2 / 2) exp(i p0 q); q0 = p0 = 0 is the ground state.
WaveFunction gaussian_state(const Grid& grid, double q0 = 0.0, double p0 = 0.0);
/// First excited oscillator state pi^{-1/4} sqrt2 q exp(-q^2 / 2).
WaveFunction hermite1_state(const Grid& grid);

/// Row-major table W[i * p.n + j] = W(q_i, p_j).
struct WignerTable {
  Grid q;
  Grid p;
  std::vector<double> values;
  double max_imag_residue = 0.0;

  double operator()(std::size_t i, std::size_t j) const {
    return values[i * p.n + j];
  }
  /// Riemann sum of W dq dp.
  double integral() const;
};

/// Throws InvalidInput when |psi| deviates from 1 by more than 1e-6.
WignerTable wigner_transform(const WaveFunction& psi, const Grid& p_grid);

/// lambda W1 + (1 - lambda) W2 on a shared grid.
WignerTable mix(double lambda, const WignerTable& w1, const WignerTable& w2);

struct Marginals {
  std::vector<double> position;  // int W dp, on the q grid
  std::vector<double> momentum;  // int W dq, on the p grid
};

Marginals wigner_marginals(const WignerTable& w);

/// |psi(q)|^2
std::vector<double> position_density(const WaveFunction& psi);
/// |psi_hat(p)|^2, psi_hat(p) = (2 pi)^{-1/2} int psi(q) exp(-i p q) dq.
std::vector<double> momentum_density(const WaveFunction& psi, const Grid& p);

struct NegativityCertificate {
  double min_value = 0.0;
  double q = 0.0;
  double p = 0.0;
  /// min < -0.25: W is not a probability density.
  bool rules_out_classical_embedding = false;
};

NegativityCertificate negativity_certificate(const WignerTable& w);

/// 2 pi int int W1 W2 dq dp, equal to |<psi1|psi2>|^2 for pure states.
double overlap(const WignerTable& w1, const WignerTable& w2);

}  // namespace opmodel::wigner
