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

#include <array>
#include <cstddef>
#include <cstdint>
#include <random>

#include "opmodel/operators.hpp"

namespace opmodel {

using Rng = std::mt19937_64;
using Vec3 = std::array<double, 3>;

/// Uniform direction on the unit sphere.
Vec3 random_unit_vector(Rng& rng);

/// Haar-distributed unitary (Gram-Schmidt on a complex Ginibre matrix).
ComplexMatrix random_unitary(std::size_t d, Rng& rng);

/// Haar-random pure state |psi><psi|.
ComplexMatrix random_pure_state(std::size_t d, Rng& rng);

/// Full-rank mixed state G G^dagger / tr, G complex Ginibre.
ComplexMatrix random_density(std::size_t d, Rng& rng);

/// U diag(l) U^dagger with l uniform in [0,1] and U Haar.
ComplexMatrix random_effect(std::size_t d, Rng& rng);

/// Rank-`rank` orthogonal projection with Haar-random range.
ComplexMatrix random_projection(std::size_t d, std::size_t rank, Rng& rng);

/// Random Hermitian matrix with i.i.d. Gaussian entries.
ComplexMatrix random_hermitian(std::size_t d, Rng& rng);

}  // namespace opmodel
