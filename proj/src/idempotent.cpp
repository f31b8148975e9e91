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

#include "pinchlab/idempotent.hpp"

#include <algorithm>
#include <functional>

#include "pinchlab/error.hpp"

namespace pinchlab {

ComplexMatrix IdempotentCanonicalForm::canonical_matrix() const {
  return canonical_idempotent(k, m, sigmas);
}

ComplexMatrix canonical_idempotent(Eigen::Index k, Eigen::Index m,
                                   const std::vector<double>& sigmas) {
  const auto p = static_cast<Eigen::Index>(sigmas.size());
  const Eigen::Index n = k + m + 2 * p;
  ComplexMatrix c = ComplexMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < k; ++i) c(i, i) = 1.0;
  for (Eigen::Index j = 0; j < p; ++j) {
    const Eigen::Index o = k + m + 2 * j;
    c(o, o) = 1.0;
    c(o, o + 1) = sigmas[static_cast<std::size_t>(j)];
  }
  return c;
}

ComplexMatrix make_ma(double a) {
  if (!(a > 0.0)) fail(ErrorCode::kDomainError, "make_ma: a must be positive");
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = 1.0;
  m(1, 0) = a;
  return m;
}

bool is_idempotent(const ComplexMatrix& q, double tol) {
  if (q.rows() != q.cols() || !all_finite(q)) return false;
  const double norm = operator_norm(q);
  return operator_norm(q * q - q) <= tol * (1.0 + norm * norm);
}

IdempotentCanonicalForm idempotent_canonical(const ComplexMatrix& q, double tol) {
  require_square(q, "idempotent_canonical");
  if (!is_idempotent(q, tol)) {
    fail(ErrorCode::kNotIdempotent, "idempotent_canonical: ‖Q² − Q‖ exceeds tolerance");
  }
  const Eigen::Index n = q.rows();
  IdempotentCanonicalForm form;
  if (n == 0) {
    form.basis = ComplexMatrix(0, 0);
    return form;
  }

  // Orthonormal bases of ran Q and its complement, in which Q = [[I, B], [0, 0]].
  const auto outer = svd(q);
  const Eigen::Index r = numerical_rank(outer.singular_values, tol);
  const ComplexMatrix range = outer.left.leftCols(r);
  const ComplexMatrix complement = outer.left.rightCols(n - r);
  const ComplexMatrix coupling = range.adjoint() * q * complement;

  // B = U Σ V*; rotating both bases by U and V leaves Σ in the corner.
  const auto inner = svd(coupling);
  const double sigma_floor = tol * std::max(1.0, outer.singular_values(0));
  Eigen::Index p = 0;
  while (p < inner.singular_values.size() && inner.singular_values(p) > sigma_floor) ++p;

  const ComplexMatrix rot_range = range * inner.left;
  const ComplexMatrix rot_comp = complement * inner.right;

  form.k = r - p;
  form.m = (n - r) - p;
  form.sigmas.reserve(static_cast<std::size_t>(p));
  form.basis.resize(n, n);
  Eigen::Index col = 0;
  for (Eigen::Index j = p; j < r; ++j) form.basis.col(col++) = rot_range.col(j);
  for (Eigen::Index j = p; j < n - r; ++j) form.basis.col(col++) = rot_comp.col(j);
  for (Eigen::Index j = 0; j < p; ++j) {
    form.sigmas.push_back(inner.singular_values(j));
    form.basis.col(col++) = rot_range.col(j);
    form.basis.col(col++) = rot_comp.col(j);
  }
  return form;
}

SelfAdjointDefect self_adjoint_defect(const ComplexMatrix& q, double tol) {
  require_square(q, "self_adjoint_defect");
  if (!is_idempotent(q, tol)) {
    fail(ErrorCode::kNotIdempotent, "self_adjoint_defect: ‖Q² − Q‖ exceeds tolerance");
  }
  SelfAdjointDefect out;
  if (q.rows() > 0) {
    const auto parts = pos_neg_parts(q + q.adjoint(), tol);
    out.pos_norm = operator_norm(parts.positive);
    out.neg_norm = operator_norm(parts.negative);
  }
  out.holds = out.pos_norm >= out.neg_norm - 1e-10;
  return out;
}

bool is_stable(const ComplexMatrix& x, double tol) {
  require_square(x, "is_stable");
  if (x.rows() == 0) return false;
  return max_eigenvalue(hermitian_part(x)) < -tol;
}

GeneratedIdempotent random_idempotent(Eigen::Index max_dim, Rng& rng) {
  if (max_dim < 1) fail(ErrorCode::kInvalidArgument, "random_idempotent: max_dim must be >= 1");
  std::uniform_int_distribution<Eigen::Index> dim_dist(1, max_dim);
  const Eigen::Index n = dim_dist(rng);
  std::uniform_int_distribution<Eigen::Index> block_dist(0, n / 2);
  const Eigen::Index p = block_dist(rng);
  std::uniform_int_distribution<Eigen::Index> k_dist(0, n - 2 * p);
  GeneratedIdempotent g;
  g.k = k_dist(rng);
  g.m = n - 2 * p - g.k;
  std::uniform_real_distribution<double> sigma_dist(0.1, 5.0);
  for (Eigen::Index j = 0; j < p; ++j) g.sigmas.push_back(sigma_dist(rng));
  std::stable_sort(g.sigmas.begin(), g.sigmas.end(), std::greater<>());
  g.conjugator = haar_unitary(n, rng);
  g.q = g.conjugator * canonical_idempotent(g.k, g.m, g.sigmas) * g.conjugator.adjoint();
  return g;
}

}  // namespace pinchlab
