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

#include "pinchlab/numrange.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <thread>

#include "pinchlab/error.hpp"
#include "pinchlab/idempotent.hpp"

namespace pinchlab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double theta_at(std::size_t k, std::size_t resolution) {
  return kTwoPi * static_cast<double>(k) / static_cast<double>(resolution);
}

// Runs body(k) for k in [0, count) on up to `threads` workers, each owning a
// contiguous chunk so the output layout never depends on the schedule.
template <typename Body>
void parallel_for(std::size_t count, unsigned threads, Body&& body) {
  const std::size_t workers = std::min<std::size_t>(std::max(threads, 1u), count);
  if (workers <= 1) {
    for (std::size_t k = 0; k < count; ++k) body(k);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  const std::size_t chunk = (count + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(count, begin + chunk);
    pool.emplace_back([begin, end, &body] {
      for (std::size_t k = begin; k < end; ++k) body(k);
    });
  }
}

// Robust root of F(s) = (r0·z0/(s + r0))² + (z1/(s + 1))² − 1 for the
// point-to-ellipse projection.
double ellipse_root(double r0, double z0, double z1, double g) {
  const double n0 = r0 * z0;
  double s0 = z1 - 1.0;
  double s1 = g < 0.0 ? 0.0 : std::hypot(n0, z1) - 1.0;
  double s = 0.0;
  for (int i = 0; i < 1100; ++i) {
    s = 0.5 * (s0 + s1);
    if (s == s0 || s == s1) break;
    const double ratio0 = n0 / (s + r0);
    const double ratio1 = z1 / (s + 1.0);
    const double f = ratio0 * ratio0 + ratio1 * ratio1 - 1.0;
    if (f > 0.0) {
      s0 = s;
    } else if (f < 0.0) {
      s1 = s;
    } else {
      break;
    }
  }
  return s;
}

// Distance from (y0, y1), y0, y1 ≥ 0, to the ellipse with semi-axes
// e0 ≥ e1 > 0 aligned with the coordinate axes.
double ellipse_distance_quadrant(double e0, double e1, double y0, double y1) {
  if (y1 > 0.0) {
    if (y0 > 0.0) {
      const double z0 = y0 / e0;
      const double z1 = y1 / e1;
      const double g = z0 * z0 + z1 * z1 - 1.0;
      if (g == 0.0) return 0.0;
      const double r0 = (e0 / e1) * (e0 / e1);
      const double sbar = ellipse_root(r0, z0, z1, g);
      const double x0 = r0 * y0 / (sbar + r0);
      const double x1 = y1 / (sbar + 1.0);
      return std::hypot(x0 - y0, x1 - y1);
    }
    return std::abs(y1 - e1);
  }
  const double numer0 = e0 * y0;
  const double denom0 = e0 * e0 - e1 * e1;
  if (numer0 < denom0) {
    const double xde0 = numer0 / denom0;
    const double x0 = e0 * xde0;
    const double x1 = e1 * std::sqrt(std::max(0.0, 1.0 - xde0 * xde0));
    return std::hypot(x0 - y0, x1);
  }
  return std::abs(y0 - e0);
}

}  // namespace

double EllipseParams::axis_angle() const {
  const Complex d = foci[0] - foci[1];
  return std::abs(d) > 0.0 ? std::arg(d) : 0.0;
}

double EllipseParams::support(double theta) const {
  const double psi = theta - axis_angle();
  const double c = std::cos(psi);
  const double s = std::sin(psi);
  return std::real(std::polar(1.0, -theta) * center) +
         std::sqrt(semi_major * semi_major * c * c + semi_minor * semi_minor * s * s);
}

double EllipseParams::distance_to_boundary(Complex z) const {
  const Complex local = (z - center) * std::polar(1.0, -axis_angle());
  const double x = std::abs(local.real());
  const double y = std::abs(local.imag());
  if (semi_minor <= 0.0) {
    return std::hypot(std::max(x - semi_major, 0.0), y);
  }
  return ellipse_distance_quadrant(semi_major, semi_minor, x, y);
}

void OperatorModel::validate() const {
  require_square(exceptional, "OperatorModel exceptional summand");
  require_square(repeated, "OperatorModel repeated block");
  if (repeated.rows() == 0) {
    fail(ErrorCode::kInvalidArgument, "OperatorModel: repeated block must be non-empty");
  }
  require_finite(exceptional, "OperatorModel exceptional summand");
  require_finite(repeated, "OperatorModel repeated block");
  if (!std::isfinite(scale.real()) || !std::isfinite(scale.imag())) {
    fail(ErrorCode::kInvalidArgument, "OperatorModel: scale must be finite");
  }
}

ComplexMatrix OperatorModel::truncation(Eigen::Index copies) const {
  validate();
  const auto f = exceptional.rows();
  const auto b = repeated.rows();
  ComplexMatrix out = ComplexMatrix::Zero(f + copies * b, f + copies * b);
  out.topLeftCorner(f, f) = scale * exceptional;
  for (Eigen::Index i = 0; i < copies; ++i) {
    out.block(f + i * b, f + i * b, b, b) = scale * repeated;
  }
  return out;
}

double OptimalConstant::max_discrepancy() const {
  return std::max({std::abs(a_star - closed_a_star),
                   std::abs(r_star_sq - closed_r_star_sq),
                   std::abs(norm - closed_norm)});
}

SupportResult nr_support(const ComplexMatrix& a, double theta) {
  require_square(a, "nr_support");
  if (a.rows() == 0) {
    return {-std::numeric_limits<double>::infinity(), ComplexVector(0)};
  }
  const ComplexMatrix rotated = std::polar(1.0, -theta) * a;
  const auto spec = hermitian_eig(hermitian_part(rotated));
  const auto top = spec.eigenvalues.size() - 1;
  return {spec.eigenvalues(top), spec.eigenvectors.col(top)};
}

NumericalRangeBoundary nr_boundary(const ComplexMatrix& a, std::size_t resolution,
                                   unsigned threads) {
  if (resolution < 3) {
    fail(ErrorCode::kInvalidArgument, "nr_boundary: resolution must be at least 3");
  }
  require_square(a, "nr_boundary");
  NumericalRangeBoundary out;
  if (a.rows() == 0) return out;
  out.samples.resize(resolution);
  parallel_for(resolution, threads, [&](std::size_t k) {
    const double theta = theta_at(k, resolution);
    auto s = nr_support(a, theta);
    const Complex point = s.witness.dot(a * s.witness);
    out.samples[k] = {theta, s.support, point, std::move(s.witness)};
  });
  return out;
}

SupportTable::SupportTable(const ComplexMatrix& a, std::size_t resolution,
                           unsigned threads) {
  if (resolution < 3) {
    fail(ErrorCode::kInvalidArgument, "SupportTable: resolution must be at least 3");
  }
  require_square(a, "SupportTable");
  if (a.rows() == 0) return;
  support_.resize(resolution);
  directions_.resize(resolution);
  parallel_for(resolution, threads, [&](std::size_t k) {
    const double theta = theta_at(k, resolution);
    directions_[k] = std::polar(1.0, -theta);
    support_[k] = max_eigenvalue(hermitian_part(directions_[k] * a));
  });
}

double SupportTable::min_support() const {
  if (support_.empty()) return -std::numeric_limits<double>::infinity();
  return *std::min_element(support_.begin(), support_.end());
}

double SupportTable::max_violation(Complex z) const {
  double worst = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < support_.size(); ++k) {
    worst = std::max(worst, std::real(directions_[k] * z) - support_[k]);
  }
  return worst;
}

bool SupportTable::contains(Complex z, double margin) const {
  if (support_.empty()) return false;
  return max_violation(z) <= margin;
}

bool nr_contains(const ComplexMatrix& a, Complex z, double margin,
                 std::size_t resolution) {
  if (margin < 0.0) fail(ErrorCode::kInvalidArgument, "nr_contains: margin must be >= 0");
  return SupportTable(a, resolution).contains(z, margin);
}

bool disc_in_nr(const ComplexMatrix& a, double radius, std::size_t resolution) {
  if (!(radius > 0.0)) fail(ErrorCode::kInvalidArgument, "disc_in_nr: radius must be > 0");
  return SupportTable(a, resolution).min_support() >= radius;
}

EllipseParams nr_ellipse_2x2(const ComplexMatrix& a) {
  if (a.rows() != 2 || a.cols() != 2) {
    fail(ErrorCode::kDimensionMismatch, "nr_ellipse_2x2: input must be 2x2");
  }
  require_finite(a, "nr_ellipse_2x2");
  const Complex tr = a.trace();
  const Complex det = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
  const Complex disc = std::sqrt(tr * tr - 4.0 * det);
  const Complex l1 = 0.5 * (tr + disc);
  const Complex l2 = 0.5 * (tr - disc);
  const double excess = a.squaredNorm() - std::norm(l1) - std::norm(l2);
  EllipseParams e;
  e.center = 0.5 * tr;
  e.foci = {l1, l2};
  e.semi_minor = 0.5 * std::sqrt(std::max(0.0, excess));
  e.semi_major = std::sqrt(e.semi_minor * e.semi_minor + std::norm(l1 - l2) / 4.0);
  return e;
}

double boundary_ellipse_deviation(const NumericalRangeBoundary& boundary,
                                  const EllipseParams& ellipse) {
  double worst = 0.0;
  for (const auto& s : boundary.samples) {
    worst = std::max(worst, std::abs(s.support - ellipse.support(s.theta)));
    worst = std::max(worst, ellipse.distance_to_boundary(s.point));
  }
  return worst;
}

Circle ma_circle(double a, double r) {
  if (!(a > 0.0)) fail(ErrorCode::kDomainError, "ma_circle: a must be positive");
  if (!(r >= 0.0 && r <= 1.0)) fail(ErrorCode::kDomainError, "ma_circle: r must lie in [0, 1]");
  return {r * r, a * r * std::sqrt(1.0 - r * r)};
}

ComplexVector ma_witness(double a, Complex z) {
  if (!(a > 0.0)) fail(ErrorCode::kDomainError, "ma_witness: a must be positive");
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    fail(ErrorCode::kNotInRange, "ma_witness: target is not finite");
  }
  const auto gap = [&](double r) {
    return std::abs(z - r * r) - a * r * std::sqrt(std::max(0.0, 1.0 - r * r));
  };
  const auto build = [&](double r) {
    const double rr = std::clamp(r, 0.0, 1.0);
    const Complex offset = z - rr * rr;
    const double phase = std::abs(offset) > 0.0 ? std::arg(offset) : 0.0;
    ComplexVector h(2);
    h << std::polar(rr, phase), Complex(std::sqrt(std::max(0.0, 1.0 - rr * rr)), 0.0);
    return h;
  };

  if (z == Complex(1.0, 0.0)) return build(1.0);

  constexpr int kGrid = 4096;
  double prev_r = 0.0;
  double prev_g = gap(0.0);
  if (prev_g == 0.0) return build(0.0);
  double best_r = 0.0;
  double best_g = prev_g;
  int best_i = 0;
  for (int i = 1; i <= kGrid; ++i) {
    const double r = static_cast<double>(i) / kGrid;
    const double g = gap(r);
    if (g == 0.0) return build(r);
    if (g < 0.0) {
      // First sign change: bisect until the bracket stops shrinking.
      double lo = prev_r;
      double hi = r;
      for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const double gm = gap(mid);
        if (gm == 0.0) {
          lo = hi = mid;
          break;
        }
        (gm > 0.0 ? lo : hi) = mid;
      }
      const double root = std::abs(gap(lo)) <= std::abs(gap(hi)) ? lo : hi;
      return build(root);
    }
    if (g < best_g) {
      best_g = g;
      best_r = r;
      best_i = i;
    }
    prev_r = r;
    prev_g = g;
  }

  // No sign change: z can only touch some Γ_r tangentially.
  double lo = std::max(0, best_i - 1) / static_cast<double>(kGrid);
  double hi = std::min(kGrid, best_i + 1) / static_cast<double>(kGrid);
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double g1 = gap(x1);
  double g2 = gap(x2);
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    if (g1 < g2) {
      hi = x2;
      x2 = x1;
      g2 = g1;
      x1 = hi - inv_phi * (hi - lo);
      g1 = gap(x1);
    } else {
      lo = x1;
      x1 = x2;
      g1 = g2;
      x2 = lo + inv_phi * (hi - lo);
      g2 = gap(x2);
    }
  }
  const double r_min = g1 < g2 ? x1 : x2;
  const double g_min = std::min({g1, g2, best_g});
  const double tol = 1e-10 * (1.0 + std::abs(z));
  if (std::abs(g_min) > tol) {
    fail(ErrorCode::kNotInRange, "ma_witness: point is not in W(M_a)");
  }
  return build(g_min == best_g ? best_r : r_min);
}

OptimalConstant optimal_a() {
  const auto a_of = [](double r) { return (1.0 + r * r) / (r * std::sqrt(1.0 - r * r)); };
  // Quotient-rule derivative of a_of; only its sign is used.
  const auto slope = [](double r) {
    const double s = std::sqrt(1.0 - r * r);
    const double num = 1.0 + r * r;
    const double den = r * s;
    const double den_prime = s - r * r / s;
    return 2.0 * r * den - num * den_prime;
  };

  double lo = 1e-6;
  double hi = 1.0 - 1e-6;
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = a_of(x1);
  double f2 = a_of(x2);
  while (hi - lo > 1e-9) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = a_of(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = a_of(x2);
    }
  }

  // Near the minimum a(r) is flat to rounding, so golden-section alone
  // pins r only to ~1e−8. Finish by bisecting on the sign of a'(r).
  double blo = std::max(1e-6, lo - 1e-6);
  double bhi = std::min(1.0 - 1e-6, hi + 1e-6);
  double r = 0.5 * (lo + hi);
  if (slope(blo) < 0.0 && slope(bhi) > 0.0) {
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (blo + bhi);
      if (mid <= blo || mid >= bhi) break;
      (slope(mid) < 0.0 ? blo : bhi) = mid;
    }
    r = 0.5 * (blo + bhi);
  }

  OptimalConstant out;
  out.r_star_sq = r * r;
  out.a_star = a_of(r);
  out.norm = operator_norm(make_ma(out.a_star));
  const double sqrt5 = std::sqrt(5.0);
  out.closed_r_star_sq = sqrt5 - 2.0;
  out.closed_a_star = std::sqrt(4.0 + 2.0 * sqrt5);
  out.closed_norm = std::sqrt(5.0 + 2.0 * sqrt5);
  return out;
}

ComplexMatrix we_of_model(const OperatorModel& model) {
  model.validate();
  return model.scale * model.repeated;
}

Inflation inflate_2x2(const ComplexMatrix& d, double radius) {
  if (d.rows() != 2 || d.cols() != 2) {
    fail(ErrorCode::kDimensionMismatch, "inflate_2x2: input must be 2x2");
  }
  require_finite(d, "inflate_2x2");
  if (!(radius >= 0.0)) fail(ErrorCode::kInvalidArgument, "inflate_2x2: radius must be >= 0");
  const double scale = d.cwiseAbs().maxCoeff();
  if (std::abs(d(0, 1)) > 1e-12 * scale || std::abs(d(1, 0)) > 1e-12 * scale) {
    fail(ErrorCode::kInvalidArgument, "inflate_2x2: input must be diagonal");
  }
  const double gap = std::abs(d(0, 0) - d(1, 1));
  if (!(gap > 0.0)) {
    fail(ErrorCode::kDegenerateSpectrum, "inflate_2x2: diagonal entries coincide");
  }
  // The conjugate [[d1, c(d2 − d1)], [0, d2]] has semi-minor axis c·|d1 − d2|/2.
  Inflation out;
  out.c = 2.0 * radius / gap;
  out.similarity = ComplexMatrix::Identity(2, 2);
  out.similarity(0, 1) = out.c;
  out.inverse = ComplexMatrix::Identity(2, 2);
  out.inverse(0, 1) = -out.c;
  ComplexMatrix diag = ComplexMatrix::Zero(2, 2);
  diag(0, 0) = d(0, 0);
  diag(1, 1) = d(1, 1);
  out.conjugated = out.similarity * diag * out.inverse;
  out.ellipse = nr_ellipse_2x2(out.conjugated);
  return out;
}

}  // namespace pinchlab
