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

// Desk-scale pinching realizations. A target X (diagonal, or a direct sum of
// normal strict contractions) is placed on the leading coordinates of
// U·A·U* with A = ⊕ M_a. Each eigenvalue x of X gets its own copy of M_a and
// a witness h with ⟨h, M_a h⟩ = x; the orthogonal vector in the same copy
// lands in a "slack" block whose compression is forced to I − X_i, since
// every copy of M_a has trace 1.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include <json.hpp>

#include "pinchlab/expectation.hpp"
#include "pinchlab/linalg.hpp"
#include "pinchlab/numrange.hpp"

namespace pinchlab {

struct PinchingPlan {
  Eigen::Index ambient_dim = 0;
  double a = 0.0;
  ComplexMatrix unitary;
  MasaPartition partition;
  OperatorModel source;
  Eigen::Index copies = 0;
  /// Coordinates (0-based) carrying the prescribed target, in order.
  std::vector<Eigen::Index> prescribed_positions;
  /// Number of leading partition blocks that are prescribed; the rest are slack.
  std::size_t prescribed_blocks = 0;
  std::vector<ComplexMatrix> targets;
  /// Block pinching of U·A·U* with respect to `partition`.
  ComplexMatrix realized;

  ComplexMatrix ambient() const { return source.truncation(copies); }
  ComplexMatrix conjugated() const;
  Eigen::Index prescribed_dim() const {
    return static_cast<Eigen::Index>(prescribed_positions.size());
  }
  /// ⊕ targets.
  ComplexMatrix target() const;
  std::vector<ComplexMatrix> prescribed_compressions() const;
  std::vector<ComplexMatrix> slack_compressions() const;
};

struct RealizeOptions {
  /// Defaults to default_a().
  std::optional<double> a;
  /// Cyclic shift of which copy of M_a hosts which eigenvalue. Different
  /// variants share the ambient operator and target but not the unitary.
  std::size_t variant = 0;
};

/// a*·(1 + 1e−6), keeping witnesses strictly inside W(M_a).
double default_a();

/// Throws kValueOutOfDisc when some |x_i| ≥ 1.
PinchingPlan realize_diagonal(std::span<const Complex> values,
                              const RealizeOptions& opts = {});

/// Throws kNotNormal for a non-normal block and kValueOutOfDisc when a
/// block's spectral radius reaches 1.
PinchingPlan realize_normal_blocks(std::span<const ComplexMatrix> blocks,
                                   const RealizeOptions& opts = {});

struct TwoOrbitAverage {
  ComplexMatrix u;
  ComplexMatrix v;
  ComplexMatrix average;
  /// Operator norm of the larger off-diagonal block of `average`.
  double offdiag_norm = 0.0;
};

/// With U₀AU₀* = [[X, R], [S, T]] split at the prescribed/slack boundary and
/// J = I ⊕ −I, averaging the conjugates by U₀ and J·U₀ cancels R and S.
TwoOrbitAverage two_orbit_average(const PinchingPlan& plan);

struct StrongApproximation {
  /// permutation[s] = image of source coordinate s of X ⊕ T.
  std::vector<Eigen::Index> permutation;
  ComplexMatrix w;
  ComplexMatrix x_n;
  /// errors[j] = ‖X_n e_j − (X e_j ⊕ 0)‖ for j < m.
  std::vector<double> errors;
};

/// W_n fixes e_j ⊕ 0 for j < n and sends the remaining sources, taken in the
/// interleaved order e_0⊕0, 0⊕e_0, e_1⊕0, 0⊕e_1, ..., to coordinates n, n+1,
/// ... in ascending order. X_n = W_n (X ⊕ T) W_n* is formed by index
/// permutation, so matching entries are copied exactly.
StrongApproximation strong_approx(const ComplexMatrix& x, const ComplexMatrix& t,
                                  Eigen::Index n);

/// max_i |λ_i↓(A) − λ_i↓(X)|, the least ‖UAU* − X‖ over unitaries U.
double hermitian_orbit_distance(const ComplexMatrix& a, const ComplexMatrix& x,
                                double tol = kDefaultTol);

nlohmann::json plan_to_json(const PinchingPlan& plan);
PinchingPlan plan_from_json(const nlohmann::json& j);

}  // namespace pinchlab
