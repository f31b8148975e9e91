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

#include "pinchlab/sampling.hpp"

#include <cmath>

namespace pinchlab {

std::uint64_t derive_seed(std::uint64_t root, std::uint64_t index) noexcept {
  std::uint64_t z = root + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

ComplexMatrix gaussian_matrix(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  const double s = 1.0 / std::sqrt(2.0);
  ComplexMatrix m(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j) {
    for (Eigen::Index i = 0; i < rows; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      m(i, j) = Complex(s * re, s * im);
    }
  }
  return m;
}

ComplexVector random_unit_vector(Eigen::Index n, Rng& rng) {
  for (;;) {
    ComplexVector v = gaussian_matrix(n, 1, rng).col(0);
    const double len = v.norm();
    if (len > 1e-300) return v / len;
  }
}

ComplexMatrix haar_unitary(Eigen::Index n, Rng& rng) {
  if (n == 0) return ComplexMatrix(0, 0);
  const ComplexMatrix g = gaussian_matrix(n, n, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(n, n);
  const ComplexMatrix& r = qr.matrixQR();
  for (Eigen::Index j = 0; j < n; ++j) {
    const double mag = std::abs(r(j, j));
    if (mag > 0.0) q.col(j) *= r(j, j) / mag;
  }
  return q;
}

ComplexMatrix random_hermitian(Eigen::Index n, Rng& rng) {
  return hermitian_part(gaussian_matrix(n, n, rng));
}

ComplexMatrix random_psd(Eigen::Index n, Rng& rng) {
  const ComplexMatrix g = gaussian_matrix(n, n, rng);
  ComplexMatrix p = g * g.adjoint();
  const double tr = p.trace().real();
  if (tr > 0.0) p /= tr;
  return hermitian_part(p);
}

}  // namespace pinchlab
