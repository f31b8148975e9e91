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

#include "pinchlab/linalg.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "pinchlab/error.hpp"

namespace pinchlab {

bool all_finite(const ComplexMatrix& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) {
        return false;
      }
    }
  }
  return true;
}

void require_finite(const ComplexMatrix& m, const char* what) {
  if (!all_finite(m)) {
    fail(ErrorCode::kInvalidArgument,
         std::string(what) + ": matrix has non-finite entries");
  }
}

void require_square(const ComplexMatrix& m, const char* what) {
  if (m.rows() != m.cols()) {
    fail(ErrorCode::kDimensionMismatch,
         std::string(what) + ": expected a square matrix, got " +
             std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

bool is_hermitian(const ComplexMatrix& h, double tol) {
  if (h.rows() != h.cols()) return false;
  return (h - h.adjoint()).norm() <= tol * h.norm();
}

bool is_unitary(const ComplexMatrix& u, double tol) {
  if (u.rows() != u.cols()) return false;
  const auto n = u.rows();
  return (u.adjoint() * u - ComplexMatrix::Identity(n, n)).norm() <= tol;
}

bool is_normal(const ComplexMatrix& x, double tol) {
  if (x.rows() != x.cols()) return false;
  const double scale = x.squaredNorm();
  return (x * x.adjoint() - x.adjoint() * x).norm() <= tol * scale;
}

ComplexMatrix hermitian_part(const ComplexMatrix& x) {
  return (x + x.adjoint()) * 0.5;
}

ComplexMatrix direct_sum(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out = ComplexMatrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  out.topLeftCorner(a.rows(), a.cols()) = a;
  out.bottomRightCorner(b.rows(), b.cols()) = b;
  return out;
}

HermitianSpectrum hermitian_eig(const ComplexMatrix& h, double tol) {
  require_square(h, "hermitian_eig");
  if (h.rows() == 0) return {RealVector(0), ComplexMatrix(0, 0)};
  if (!is_hermitian(h, tol)) {
    fail(ErrorCode::kNotHermitian, "hermitian_eig: input is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) {
    fail(ErrorCode::kNoConvergence, "hermitian_eig: eigensolver did not converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

double max_eigenvalue(const ComplexMatrix& h, double tol) {
  if (h.rows() == 0) return -std::numeric_limits<double>::infinity();
  const auto spec = hermitian_eig(h, tol);
  return spec.eigenvalues(spec.eigenvalues.size() - 1);
}

SingularValueDecomposition svd(const ComplexMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) {
    return {ComplexMatrix::Identity(m.rows(), m.rows()), RealVector(0),
            ComplexMatrix::Identity(m.cols(), m.cols())};
  }
  Eigen::JacobiSVD<ComplexMatrix> solver(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  if (solver.info() != Eigen::Success) {
    fail(ErrorCode::kNoConvergence, "svd: Jacobi iteration did not converge");
  }
  return {solver.matrixU(), solver.singularValues(), solver.matrixV()};
}

double operator_norm(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<ComplexMatrix> solver(m);
  return solver.singularValues()(0);
}

Eigen::Index numerical_rank(const RealVector& singular_values, double tol) {
  if (singular_values.size() == 0) return 0;
  const double threshold = tol * singular_values(0);
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < singular_values.size(); ++i) {
    if (singular_values(i) > threshold) ++rank;
  }
  return rank;
}

ComplexMatrix complete_orthonormal(std::span<const ComplexVector> partial,
                                   Eigen::Index dim, double tol) {
  const auto k = static_cast<Eigen::Index>(partial.size());
  if (k > dim) {
    fail(ErrorCode::kNotOrthonormal,
         "complete_orthonormal: more vectors than the ambient dimension");
  }
  if (k == 0) return ComplexMatrix::Identity(dim, dim);

  ComplexMatrix given(dim, k);
  for (Eigen::Index j = 0; j < k; ++j) {
    if (partial[j].size() != dim) {
      fail(ErrorCode::kDimensionMismatch,
           "complete_orthonormal: vector length differs from dim");
    }
    given.col(j) = partial[j];
  }
  const ComplexMatrix gram = given.adjoint() * given;
  if ((gram - ComplexMatrix::Identity(k, k)).cwiseAbs().maxCoeff() > tol) {
    fail(ErrorCode::kNotOrthonormal,
         "complete_orthonormal: Gram matrix deviates from the identity");
  }

  // The trailing columns of the full Householder Q span the orthogonal
  // complement of the given columns.
  Eigen::HouseholderQR<ComplexMatrix> qr(given);
  const ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(dim, dim);
  ComplexMatrix out(dim, dim);
  out.leftCols(k) = given;
  out.rightCols(dim - k) = q.rightCols(dim - k);
  return out;
}

PosNegParts pos_neg_parts(const ComplexMatrix& h, double tol) {
  require_square(h, "pos_neg_parts");
  const auto n = h.rows();
  if (n == 0) return {ComplexMatrix(0, 0), ComplexMatrix(0, 0)};
  const auto spec = hermitian_eig(h, tol);
  const RealVector pos = spec.eigenvalues.cwiseMax(0.0);
  const RealVector neg = (-spec.eigenvalues).cwiseMax(0.0);
  const auto& v = spec.eigenvectors;
  ComplexMatrix p = v * pos.cast<Complex>().asDiagonal() * v.adjoint();
  ComplexMatrix q = v * neg.cast<Complex>().asDiagonal() * v.adjoint();
  return {hermitian_part(p), hermitian_part(q)};
}

ComplexVector general_eigenvalues(const ComplexMatrix& m) {
  require_square(m, "general_eigenvalues");
  if (m.rows() == 0) return ComplexVector(0);
  Eigen::ComplexEigenSolver<ComplexMatrix> solver(m, false);
  if (solver.info() != Eigen::Success) {
    fail(ErrorCode::kNoConvergence, "general_eigenvalues: did not converge");
  }
  return solver.eigenvalues();
}

}  // namespace pinchlab
