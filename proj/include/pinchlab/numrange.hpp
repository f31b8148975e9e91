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

// Numerical range W(A) = {⟨h, Ah⟩ : ‖h‖ = 1} through its support function
//
//   h_A(θ) = max Re(e^{−iθ} W(A)) = λ_max((e^{−iθ}A + e^{iθ}A*)/2),
//
// whose top eigenvector is a witness for a boundary point. Every
// containment answer below is a certificate at a finite set of directions
// θ_k = 2πk/resolution with an explicit additive margin, not an exact
// decision at the boundary.

#include <array>
#include <cstddef>
#include <vector>

#include "pinchlab/linalg.hpp"

namespace pinchlab {

inline constexpr std::size_t kDefaultResolution = 720;

struct SupportResult {
  double support = 0.0;
  ComplexVector witness;
};

struct BoundarySample {
  double theta = 0.0;
  double support = 0.0;
  Complex point;
  ComplexVector witness;
};

struct NumericalRangeBoundary {
  std::vector<BoundarySample> samples;
};

/// Elliptical range of a 2×2 matrix: foci at the eigenvalues.
struct EllipseParams {
  Complex center;
  std::array<Complex, 2> foci;
  double semi_major = 0.0;
  double semi_minor = 0.0;

  /// Direction of the major axis (argument of foci[0] − foci[1]).
  double axis_angle() const;
  double support(double theta) const;
  /// Unsigned distance from z to the boundary curve (the segment itself when
  /// semi_minor is zero).
  double distance_to_boundary(Complex z) const;
};

/// Periodic block operator scale·(F ⊕ B ⊕ B ⊕ ...). Its essential numerical
/// range is the closure of W(scale·B).
struct OperatorModel {
  ComplexMatrix exceptional = ComplexMatrix(0, 0);
  ComplexMatrix repeated;
  Complex scale{1.0, 0.0};

  void validate() const;
  /// scale·(F ⊕ B ⊕ ... ⊕ B) with `copies` repetitions of B.
  ComplexMatrix truncation(Eigen::Index copies) const;
};

struct Circle {
  double center = 0.0;
  double radius = 0.0;
};

struct OptimalConstant {
  double a_star = 0.0;
  double r_star_sq = 0.0;
  double norm = 0.0;
  double closed_a_star = 0.0;
  double closed_r_star_sq = 0.0;
  double closed_norm = 0.0;

  double max_discrepancy() const;
};

struct Inflation {
  double c = 0.0;
  ComplexMatrix similarity;
  ComplexMatrix inverse;
  ComplexMatrix conjugated;
  EllipseParams ellipse;
};

SupportResult nr_support(const ComplexMatrix& a, double theta);

NumericalRangeBoundary nr_boundary(const ComplexMatrix& a, std::size_t resolution,
                                   unsigned threads = 1);

/// Support values at θ_k = 2πk/resolution, built once for repeated queries.
class SupportTable {
 public:
  SupportTable(const ComplexMatrix& a, std::size_t resolution, unsigned threads = 1);

  std::size_t resolution() const { return support_.size(); }
  double support(std::size_t k) const { return support_[k]; }
  double min_support() const;
  /// Re(e^{−iθ_k}z) ≤ h(θ_k) + margin for every sampled k.
  bool contains(Complex z, double margin) const;
  /// Largest Re(e^{−iθ_k}z) − h(θ_k) over the samples.
  double max_violation(Complex z) const;

 private:
  std::vector<double> support_;
  std::vector<Complex> directions_;
};

bool nr_contains(const ComplexMatrix& a, Complex z, double margin,
                 std::size_t resolution = kDefaultResolution);

/// Whether the closed disc of the given radius about 0 lies in W(a), i.e.
/// the sampled support never drops below the radius.
bool disc_in_nr(const ComplexMatrix& a, double radius,
                std::size_t resolution = kDefaultResolution);

EllipseParams nr_ellipse_2x2(const ComplexMatrix& a);

/// Sampled Hausdorff deviation between a sweep and an ellipse: the larger of
/// the worst support-function gap and the worst distance from a swept
/// boundary point to the ellipse.
double boundary_ellipse_deviation(const NumericalRangeBoundary& boundary,
                                  const EllipseParams& ellipse);

/// Γ_r, the circle of points ⟨h, M_a h⟩ with |h₁| = r: center r², radius
/// a·r·√(1−r²).
Circle ma_circle(double a, double r);

/// Unit h with ⟨h, M_a h⟩ = z. Locates r with z ∈ Γ_r by bisection on a
/// sign change of |z − r²| − a·r·√(1−r²); tangential contacts fall back to
/// minimizing that function. Throws kNotInRange when z is not in W(M_a).
ComplexVector ma_witness(double a, Complex z);

/// Least a with the unit disc inside W(M_a): golden-section search over
/// r ∈ (0, 1) for the a(r) = (1 + r²)/(r√(1 − r²)) at which −1 ∈ Γ_r,
/// reported next to the closed forms.
OptimalConstant optimal_a();

/// Representative block whose closed numerical range is W_e(model).
ComplexMatrix we_of_model(const OperatorModel& model);

/// Upper-triangular similarity T = [[1, c], [0, 1]] such that W(T·D·T⁻¹)
/// contains the disc of the given radius about the midpoint of diag(D).
Inflation inflate_2x2(const ComplexMatrix& d, double radius);

}  // namespace pinchlab
