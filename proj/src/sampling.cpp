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

#include "opmodel/sampling.hpp"

#include <cmath>
#include <vector>

namespace opmodel {

namespace {

Complex gaussian_complex(Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  const double re = n(rng);
  const double im = n(rng);
  return {re, im};
}

}  // namespace

Vec3 random_unit_vector(Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  for (;;) {
    Vec3 v{n(rng), n(rng), n(rng)};
    const double r = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    if (r < 1e-12) continue;
    return {v[0] / r, v[1] / r, v[2] / r};
  }
}

ComplexMatrix random_unitary(std::size_t d, Rng& rng) {
  std::vector<std::vector<Complex>> cols(d, std::vector<Complex>(d));
  for (auto& c : cols)
    for (auto& z : c) z = gaussian_complex(rng);
  // modified Gram-Schmidt
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t j = 0; j < k; ++j) {
      Complex proj = 0.0;
      for (std::size_t i = 0; i < d; ++i)
        proj += std::conj(cols[j][i]) * cols[k][i];
      for (std::size_t i = 0; i < d; ++i) cols[k][i] -= proj * cols[j][i];
    }
    double nrm = 0.0;
    for (const auto& z : cols[k]) nrm += std::norm(z);
    nrm = std::sqrt(nrm);
    for (auto& z : cols[k]) z /= nrm;
  }
  ComplexMatrix u(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) u(i, j) = cols[j][i];
  return u;
}

ComplexMatrix random_pure_state(std::size_t d, Rng& rng) {
  std::vector<Complex> v(d);
  double nrm = 0.0;
  for (auto& z : v) {
    z = gaussian_complex(rng);
    nrm += std::norm(z);
  }
  nrm = std::sqrt(nrm);
  for (auto& z : v) z /= nrm;
  return ComplexMatrix::outer(v);
}

ComplexMatrix random_density(std::size_t d, Rng& rng) {
  ComplexMatrix g(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) g(i, j) = gaussian_complex(rng);
  ComplexMatrix rho = g * g.adjoint();
  const double t = rho.trace().real();
  rho *= 1.0 / t;
  // exact Hermitian symmetry
  return 0.5 * (rho + rho.adjoint());
}

ComplexMatrix random_effect(std::size_t d, Rng& rng) {
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  const ComplexMatrix u = random_unitary(d, rng);
  ComplexMatrix diag(d);
  for (std::size_t k = 0; k < d; ++k) diag(k, k) = u01(rng);
  ComplexMatrix a = u * diag * u.adjoint();
  return 0.5 * (a + a.adjoint());
}

ComplexMatrix random_projection(std::size_t d, std::size_t rank, Rng& rng) {
  const ComplexMatrix u = random_unitary(d, rng);
  ComplexMatrix p(d);
  for (std::size_t k = 0; k < rank; ++k)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        p(i, j) += u(i, k) * std::conj(u(j, k));
  return 0.5 * (p + p.adjoint());
}

ComplexMatrix random_hermitian(std::size_t d, Rng& rng) {
  ComplexMatrix g(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) g(i, j) = gaussian_complex(rng);
  return 0.5 * (g + g.adjoint());
}

}  // namespace opmodel
