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

#include <complex>
#include <span>

#include <Eigen/Dense>

namespace pinchlab {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Relative tolerance used when a caller does not supply one.
inline constexpr double kDefaultTol = 1e-10;

/// Eigen-decomposition of a Hermitian matrix. Eigenvalues ascend and the
/// columns of `eigenvectors` are the matching orthonormal eigenvectors.
struct HermitianSpectrum {
  RealVector eigenvalues;
  ComplexMatrix eigenvectors;
};

/// M = left * diag(singular_values) * right^*, singular values descending.
/// Both factors are square unitaries.
struct SingularValueDecomposition {
  ComplexMatrix left;
  RealVector singular_values;
  ComplexMatrix right;
};

struct PosNegParts {
  ComplexMatrix positive;
  ComplexMatrix negative;
};

bool all_finite(const ComplexMatrix& m);
void require_finite(const ComplexMatrix& m, const char* what);
void require_square(const ComplexMatrix& m, const char* what);

/// Frobenius-norm test ‖H − H*‖ ≤ tol·‖H‖.
bool is_hermitian(const ComplexMatrix& h, double tol = kDefaultTol);
bool is_unitary(const ComplexMatrix& u, double tol = kDefaultTol);
bool is_normal(const ComplexMatrix& x, double tol = kDefaultTol);

/// (X + X*)/2, exactly Hermitian in floating point.
ComplexMatrix hermitian_part(const ComplexMatrix& x);

ComplexMatrix direct_sum(const ComplexMatrix& a, const ComplexMatrix& b);

/// Throws kNotHermitian when the precondition fails and kNoConvergence when
/// the underlying QR iteration gives up.
HermitianSpectrum hermitian_eig(const ComplexMatrix& h, double tol = kDefaultTol);

/// Largest eigenvalue of a Hermitian matrix (−inf for 0×0).
double max_eigenvalue(const ComplexMatrix& h, double tol = kDefaultTol);

SingularValueDecomposition svd(const ComplexMatrix& m);

/// Largest singular value; 0 for empty matrices.
double operator_norm(const ComplexMatrix& m);

/// Numerical rank with the scale-invariant threshold tol·σ_max.
Eigen::Index numerical_rank(const RealVector& singular_values,
                            double tol = kDefaultTol);

/// Extends pairwise orthonormal vectors to a unitary of size `dim`, keeping
/// them verbatim as the leading columns.
ComplexMatrix complete_orthonormal(std::span<const ComplexVector> partial,
                                   Eigen::Index dim, double tol = kDefaultTol);

/// Jordan decomposition H = H₊ − H₋ with H₊, H₋ ⪰ 0 and H₊H₋ = 0.
PosNegParts pos_neg_parts(const ComplexMatrix& h, double tol = kDefaultTol);

/// Eigenvalues of an arbitrary square matrix, unordered.
ComplexVector general_eigenvalues(const ComplexMatrix& m);

}  // namespace pinchlab
