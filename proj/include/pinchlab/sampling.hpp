// Copyright 2026 The pinchlab Authors
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

#include <cstdint>
#include <random>

#include "pinchlab/linalg.hpp"

namespace pinchlab {

using Rng = std::mt19937_64;

/// Independent stream seed for item `index` under a root seed (splitmix64).
std::uint64_t derive_seed(std::uint64_t root, std::uint64_t index) noexcept;

/// Entries (g + i·g')/√2 with g, g' standard normal.
ComplexMatrix gaussian_matrix(Eigen::Index rows, Eigen::Index cols, Rng& rng);

/// Uniform on the complex unit sphere (normalized complex Gaussian).
ComplexVector random_unit_vector(Eigen::Index n, Rng& rng);

/// Haar-distributed unitary via QR of a Gaussian matrix with the phases of
/// R's diagonal absorbed into Q.
ComplexMatrix haar_unitary(Eigen::Index n, Rng& rng);

ComplexMatrix random_hermitian(Eigen::Index n, Rng& rng);

/// G·G* for a Gaussian G, normalized to unit trace.
ComplexMatrix random_psd(Eigen::Index n, Rng& rng);

}  // namespace pinchlab
