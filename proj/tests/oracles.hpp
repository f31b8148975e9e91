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

// Reference computations for the tests. Nothing here calls the library's
// eigensolvers: Hermitian spectra come from a plain cyclic Jacobi sweep and
// 2x2 quantities from closed forms.

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Ascending eigenvalues of a Hermitian matrix by cyclic complex Jacobi.
inline std::vector<double> jacobi_eigenvalues(Matrix a) {
  const Eigen::Index n = a.rows();
  a = (0.5 * (a + a.adjoint())).eval();
  const double scale = std::max(1.0, a.norm());
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) off += std::norm(a(p, q));
    }
    if (std::sqrt(off) <= 1e-15 * scale) break;
    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double b = std::abs(a(p, q));
        if (b == 0.0) continue;
        const Complex phase = a(p, q) / b;
        const double alpha = a(p, p).real();
        const double beta = a(q, q).real();
        const double theta = 0.5 * std::atan2(2.0 * b, alpha - beta);
        const double c = std::cos(theta);
        const double s = std::sin(theta);
        // G acts on coordinates p, q: first remove the phase of a(p, q), then
        // rotate. Apply A <- G* A G by touching rows and columns p, q only.
        const Complex gpp = c, gpq = -s;
        const Complex gqp = s * std::conj(phase), gqq = c * std::conj(phase);
        for (Eigen::Index i = 0; i < n; ++i) {
          const Complex aip = a(i, p), aiq = a(i, q);
          a(i, p) = aip * gpp + aiq * gqp;
          a(i, q) = aip * gpq + aiq * gqq;
        }
        for (Eigen::Index j = 0; j < n; ++j) {
          const Complex apj = a(p, j), aqj = a(q, j);
          a(p, j) = std::conj(gpp) * apj + std::conj(gqp) * aqj;
          a(q, j) = std::conj(gpq) * apj + std::conj(gqq) * aqj;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
      }
    }
  }
  std::vector<double> out(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = a(i, i).real();
  std::sort(out.begin(), out.end());
  return out;
}

inline double lambda_max(const Matrix& h) {
  const auto ev = jacobi_eigenvalues(h);
  return ev.empty() ? 0.0 : ev.back();
}

inline double lambda_min(const Matrix& h) {
  const auto ev = jacobi_eigenvalues(h);
  return ev.empty() ? 0.0 : ev.front();
}

inline double spectral_norm(const Matrix& m) {
  return std::sqrt(std::max(0.0, lambda_max(m.adjoint() * m)));
}

// Largest eigenvalue of [[p, q], [conj(q), s]].
inline double lambda_max_2x2(double p, Complex q, double s) {
  return 0.5 * (p + s) + std::sqrt(0.25 * (p - s) * (p - s) + std::norm(q));
}

// Support of W(A) in direction theta for a 2x2 A, in closed form.
inline double support_2x2(const Matrix& a, double theta) {
  const Matrix h = 0.5 * (std::polar(1.0, -theta) * a + std::polar(1.0, theta) * a.adjoint());
  return lambda_max_2x2(h(0, 0).real(), h(0, 1), h(1, 1).real());
}

inline Complex rayleigh(const Matrix& a, const Vector& h) {
  return h.dot(a * h) / h.squaredNorm();
}

// a(r) = (1 + r^2) / (r sqrt(1 - r^2)): the least a with -1 on the circle Gamma_r.
inline double a_of_r(double r) { return (1.0 + r * r) / (r * std::sqrt(1.0 - r * r)); }

// Unit disc inside W(M_a), decided from the ellipse with foci 0 and 1,
// semi-axes sqrt(1 + a^2)/2 and a/2, by testing n points of the unit circle.
inline bool ellipse_contains_unit_disc(double a, int n = 20000) {
  const double major = 0.5 * std::sqrt(1.0 + a * a);
  const double minor = 0.5 * a;
  for (int k = 0; k < n; ++k) {
    const double phi = 2.0 * M_PI * k / n;
    const double x = std::cos(phi) - 0.5;
    const double y = std::sin(phi);
    if (x * x / (major * major) + y * y / (minor * minor) > 1.0 + 1e-12) return false;
  }
  return true;
}

}  // namespace oracle
