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

#include <vector>

#include "pinchlab/linalg.hpp"
#include "pinchlab/sampling.hpp"

namespace pinchlab {

/// Q ≅ I_k ⊕ 0_m ⊕ ⨁_j [[1, σ_j], [0, 0]] under the unitary `basis`,
/// i.e. basis*·Q·basis equals canonical_matrix().
struct IdempotentCanonicalForm {
  Eigen::Index k = 0;
  Eigen::Index m = 0;
  std::vector<double> sigmas;  // descending
  ComplexMatrix basis;

  Eigen::Index dim() const { return k + m + 2 * static_cast<Eigen::Index>(sigmas.size()); }
  ComplexMatrix canonical_matrix() const;
};

struct SelfAdjointDefect {
  double pos_norm = 0.0;
  double neg_norm = 0.0;
  bool holds = false;
};

/// Canonical matrix I_k ⊕ 0_m ⊕ ⨁ [[1, σ_j], [0, 0]].
ComplexMatrix canonical_idempotent(Eigen::Index k, Eigen::Index m,
                                   const std::vector<double>& sigmas);

/// [[1, 0], [a, 0]].
ComplexMatrix make_ma(double a);

bool is_idempotent(const ComplexMatrix& q, double tol = kDefaultTol);

IdempotentCanonicalForm idempotent_canonical(const ComplexMatrix& q,
                                             double tol = kDefaultTol);

/// Norms of the positive and negative parts of Q + Q*.
SelfAdjointDefect self_adjoint_defect(const ComplexMatrix& q,
                                      double tol = kDefaultTol);

/// λ_max((X + X*)/2) < −tol.
bool is_stable(const ComplexMatrix& x, double tol = kDefaultTol);

struct GeneratedIdempotent {
  Eigen::Index k = 0;
  Eigen::Index m = 0;
  std::vector<double> sigmas;  // descending
  ComplexMatrix conjugator;
  ComplexMatrix q;
};

/// Random idempotent of dimension ≤ max_dim: draws (k, m, σ's) and conjugates
/// the canonical matrix by a Haar unitary. σ_j are uniform on [0.1, 5].
GeneratedIdempotent random_idempotent(Eigen::Index max_dim, Rng& rng);

}  // namespace pinchlab
