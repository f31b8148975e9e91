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

// Acceptance runner: one PASS/FAIL line per criterion. A line passes only
// when the library's own check passes and an independent recomputation in
// this file agrees with it. All tolerances are fixed below.
//
//   acceptance [--seed N] [--allow-known-discrepancies]
//
// With --allow-known-discrepancies the exit status ignores the criteria in
// kKnownDiscrepancies; their lines still print FAIL.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <Eigen/QR>

#include "oracles.hpp"
#include "pinchlab/channel.hpp"
#include "pinchlab/expectation.hpp"
#include "pinchlab/idempotent.hpp"
#include "pinchlab/numrange.hpp"
#include "pinchlab/pinching.hpp"
#include "pinchlab/verify.hpp"

namespace {

using pinchlab::Complex;
using pinchlab::ComplexMatrix;
using pinchlab::ComplexVector;
using Clock = std::chrono::steady_clock;

// Criteria whose stated reference values cannot be met: the closed forms for
// the minimum of a(r) = (1 + r^2)/(r sqrt(1 - r^2)) do not match its actual
// minimum (a'(r) has the sign of 3r^2 - 1, so the minimum is 2 sqrt 2 at
// r^2 = 1/3), and the threshold check is stated at that same closed form.
const std::set<int> kKnownDiscrepancies = {1, 2};

constexpr double kEps = 2.220446049250313e-16;

struct Verdict {
  bool ok = false;
  std::string detail;
};

std::string format(const char* f, double a = 0, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

// Own sampling so that test inputs do not come from the library generators.
struct Sampler {
  std::mt19937_64 rng;
  std::normal_distribution<double> normal{0.0, 1.0};
  std::uniform_real_distribution<double> unit{0.0, 1.0};

  explicit Sampler(std::uint64_t seed) : rng(seed ^ 0x5eed5eed5eedULL) {}

  ComplexMatrix gaussian(Eigen::Index r, Eigen::Index c) {
    ComplexMatrix m(r, c);
    for (Eigen::Index i = 0; i < r; ++i) {
      for (Eigen::Index j = 0; j < c; ++j) m(i, j) = Complex(normal(rng), normal(rng)) / std::sqrt(2.0);
    }
    return m;
  }
  ComplexVector unit_vector(Eigen::Index n) {
    ComplexVector v = gaussian(n, 1);
    return v / v.norm();
  }
  ComplexMatrix haar(Eigen::Index n) {
    Eigen::HouseholderQR<ComplexMatrix> qr(gaussian(n, n));
    ComplexMatrix q = qr.householderQ();
    const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index j = 0; j < n; ++j) {
      const double mag = std::abs(r(j, j));
      if (mag > 0.0) q.col(j) *= r(j, j) / mag;
    }
    return q;
  }
  Eigen::Index index(Eigen::Index lo, Eigen::Index hi) {
    return std::uniform_int_distribution<Eigen::Index>(lo, hi)(rng);
  }
  Complex in_disc(double max_modulus) {
    return std::polar(max_modulus * std::sqrt(unit(rng)), 2.0 * M_PI * unit(rng));
  }
  pinchlab::MasaPartition partition(Eigen::Index n) {
    std::vector<Eigen::Index> perm(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::string text;
    for (std::size_t i = 0; i < perm.size(); ++i) {
      if (i > 0) text += (unit(rng) < 0.5 ? ';' : ',');
      text += std::to_string(perm[i] + 1);
    }
    return pinchlab::MasaPartition::parse(text, n);
  }
};

double frobenius_offdiag(const ComplexMatrix& m, const std::vector<bool>& side) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (side[static_cast<std::size_t>(i)] != side[static_cast<std::size_t>(j)]) s += std::norm(m(i, j));
    }
  }
  return std::sqrt(s);
}

ComplexMatrix block_pinch(const ComplexMatrix& z, const pinchlab::MasaPartition& masa) {
  ComplexMatrix out = ComplexMatrix::Zero(z.rows(), z.cols());
  for (const auto& b : masa.blocks) {
    for (auto i : b) {
      for (auto j : b) out(i, j) = z(i, j);
    }
  }
  return out;
}

// ---- criterion oracles ----------------------------------------------------

Verdict oracle_optimal_constant(const pinchlab::OptimalConstant& oc) {
  // Grid scan then ternary search on a(r); a is unimodal on (0, 1).
  double best_r = 0.5, best = oracle::a_of_r(0.5);
  for (int k = 1; k < 100000; ++k) {
    const double r = k / 100000.0;
    if (oracle::a_of_r(r) < best) best = oracle::a_of_r(best_r = r);
  }
  double lo = best_r - 1e-5, hi = best_r + 1e-5;
  for (int it = 0; it < 200; ++it) {
    const double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
    if (oracle::a_of_r(m1) < oracle::a_of_r(m2)) {
      hi = m2;
    } else {
      lo = m1;
    }
  }
  const double r = 0.5 * (lo + hi);
  const double a = oracle::a_of_r(r);
  const double s5 = std::sqrt(5.0);
  const bool agrees_with_library = std::abs(a - oc.a_star) <= 1e-9 && std::abs(r * r - oc.r_star_sq) <= 1e-7;
  const double claim_gap = std::max({std::abs(a * a - (4.0 + 2.0 * s5)), std::abs(r * r - (s5 - 2.0)),
                                     std::abs(std::sqrt(1.0 + a * a) - std::sqrt(5.0 + 2.0 * s5))});
  Verdict v;
  v.ok = agrees_with_library && claim_gap <= 1e-9;
  v.detail = format("independent min a=%.12f at r^2=%.12f; gap to closed forms %.3e", a, r * r, claim_gap) +
             (agrees_with_library ? ", matches library minimizer" : ", DISAGREES with library minimizer");
  return v;
}

Verdict oracle_disc_threshold(const pinchlab::OptimalConstant& oc) {
  const double a = oc.closed_a_star;
  const bool above = oracle::ellipse_contains_unit_disc(a * (1.0 + 1e-3));
  const bool below = oracle::ellipse_contains_unit_disc(a * (1.0 - 1e-3));
  double lo = 1.0, hi = 5.0;
  for (int it = 0; it < 60; ++it) {
    const double mid = 0.5 * (lo + hi);
    (oracle::ellipse_contains_unit_disc(mid, 4000) ? hi : lo) = mid;
  }
  const double r2 = oc.closed_r_star_sq;
  const double touch = std::abs((1.0 + r2) - a * std::sqrt(r2) * std::sqrt(1.0 - r2));
  Verdict v;
  v.ok = above && !below && touch <= 1e-9;
  v.detail = std::string("ellipse geometry at closed a*: (1+1e-3) ") + (above ? "contains" : "misses") +
             ", (1-1e-3) " + (below ? "contains" : "misses") +
             format("; least containing a by bisection %.8f", 0.5 * (lo + hi));
  return v;
}

Verdict oracle_ellipse(Sampler& s) {
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const ComplexMatrix a = s.gaussian(2, 2);
    const double scale = 1.0 + oracle::spectral_norm(a);
    // Foci from the quadratic formula, semi-minor from the Frobenius defect.
    const Complex tr = a.trace(), det = a.determinant();
    const Complex disc = std::sqrt(tr * tr - 4.0 * det);
    const Complex f1 = 0.5 * (tr + disc), f2 = 0.5 * (tr - disc);
    const double minor = 0.5 * std::sqrt(std::max(0.0, a.squaredNorm() - std::norm(f1) - std::norm(f2)));
    const double major = std::hypot(minor, 0.5 * std::abs(f1 - f2));
    const auto b = pinchlab::nr_boundary(a, pinchlab::kDefaultResolution);
    for (const auto& smp : b.samples) {
      worst = std::max(worst, std::abs(smp.support - oracle::support_2x2(a, smp.theta)) / scale);
      const double focal = std::abs(smp.point - f1) + std::abs(smp.point - f2);
      worst = std::max(worst, 0.5 * std::abs(focal - 2.0 * major) / scale);
    }
  }
  return {worst <= 1e-6, format("closed-form support and focal-sum residual %.3e over 100 matrices", worst)};
}

std::vector<pinchlab::PinchingPlan> oracle_plans(Sampler& s) {
  std::vector<pinchlab::PinchingPlan> plans;
  for (int t = 0; t < 40; ++t) {
    std::vector<Complex> v(static_cast<std::size_t>(s.index(1, 16)));
    for (auto& x : v) x = s.in_disc(0.99);
    pinchlab::RealizeOptions opts;
    opts.variant = static_cast<std::size_t>(s.index(0, 16));
    plans.push_back(pinchlab::realize_diagonal(v, opts));
  }
  for (int t = 0; t < 10; ++t) {
    std::vector<ComplexMatrix> blocks;
    for (Eigen::Index b = 0, nb = s.index(1, 4); b < nb; ++b) {
      const Eigen::Index k = s.index(1, 3);
      const ComplexMatrix u = s.haar(k);
      ComplexMatrix d = ComplexMatrix::Zero(k, k);
      for (Eigen::Index i = 0; i < k; ++i) d(i, i) = s.in_disc(0.99);
      blocks.push_back(u * d * u.adjoint());
    }
    plans.push_back(pinchlab::realize_normal_blocks(blocks));
  }
  return plans;
}

Verdict oracle_realization(const std::vector<pinchlab::PinchingPlan>& plans) {
  double entry = 0.0, unitarity = 0.0, spectrum = 0.0;
  for (const auto& p : plans) {
    const ComplexMatrix c = p.unitary * p.ambient() * p.unitary.adjoint();
    const Eigen::Index n = p.unitary.rows();
    unitarity = std::max(unitarity, (p.unitary.adjoint() * p.unitary - ComplexMatrix::Identity(n, n)).norm());
    // Read each prescribed block straight off the conjugated matrix.
    Eigen::Index offset = 0;
    for (const auto& x : p.targets) {
      for (Eigen::Index i = 0; i < x.rows(); ++i) {
        for (Eigen::Index j = 0; j < x.cols(); ++j) {
          const auto pi = p.prescribed_positions[static_cast<std::size_t>(offset + i)];
          const auto pj = p.prescribed_positions[static_cast<std::size_t>(offset + j)];
          entry = std::max(entry, std::abs(c(pi, pj) - x(i, j)));
        }
      }
      offset += x.rows();
    }
    // Spectrum {0^k, 1^k} for a 2k-dimensional operator: C^2 = C and tr C = k.
    spectrum = std::max({spectrum, (c * c - c).norm(), std::abs(c.trace() - 0.5 * static_cast<double>(n))});
  }
  Verdict v;
  v.ok = entry <= 1e-10 && unitarity <= 1e-10 && spectrum <= 1e-8;
  v.detail = std::to_string(plans.size()) + format(" own targets: entries %.2e, unitarity %.2e", entry, unitarity) +
             format(", idempotent/trace residual %.2e", spectrum);
  return v;
}

Verdict oracle_averaging(const std::vector<pinchlab::PinchingPlan>& plans) {
  double worst = 0.0, unit = 0.0;
  for (const auto& p : plans) {
    const auto avg = pinchlab::two_orbit_average(p);
    const ComplexMatrix a = p.ambient();
    const ComplexMatrix direct = 0.5 * (avg.u * a * avg.u.adjoint() + avg.v * a * avg.v.adjoint());
    std::vector<bool> side(static_cast<std::size_t>(a.rows()), false);
    for (auto i : p.prescribed_positions) side[static_cast<std::size_t>(i)] = true;
    worst = std::max(worst, frobenius_offdiag(direct, side));
    const Eigen::Index n = a.rows();
    unit = std::max({unit, (avg.u.adjoint() * avg.u - ComplexMatrix::Identity(n, n)).norm(),
                     (avg.v.adjoint() * avg.v - ComplexMatrix::Identity(n, n)).norm()});
  }
  return {worst <= 1e-10 && unit <= 1e-10,
          format("recomputed average: off-diagonal Frobenius %.2e, unitarity %.2e", worst, unit)};
}

Verdict oracle_strong_approx(Sampler& s) {
  std::size_t aligned = 0, mismatched = 0;
  double worst = 0.0;
  for (Eigen::Index m = 1; m <= 8; ++m) {
    for (Eigen::Index band = 0; band <= 2; ++band) {
      ComplexMatrix x = s.gaussian(m, m);
      for (Eigen::Index i = 0; i < m; ++i) {
        for (Eigen::Index j = 0; j < m; ++j) {
          if (std::abs(i - j) > band) x(i, j) = 0.0;
        }
      }
      const ComplexMatrix t = s.gaussian(m, m);
      for (Eigen::Index n = 0; n <= m; ++n) {
        const auto sa = pinchlab::strong_approx(x, t, n);
        // Own permutation: e_j (+) 0 stays for j < n, the rest fill n, n+1, ...
        // in the interleaved order e_j (+) 0, 0 (+) e_j.
        std::vector<Eigen::Index> perm(static_cast<std::size_t>(2 * m));
        Eigen::Index next = n;
        for (Eigen::Index j = 0; j < m; ++j) {
          if (j < n) {
            perm[static_cast<std::size_t>(j)] = j;
          } else {
            perm[static_cast<std::size_t>(j)] = next++;
          }
          perm[static_cast<std::size_t>(m + j)] = next++;
        }
        ComplexMatrix w = ComplexMatrix::Zero(2 * m, 2 * m);
        for (Eigen::Index src = 0; src < 2 * m; ++src) w(perm[static_cast<std::size_t>(src)], src) = 1.0;
        ComplexMatrix sum = ComplexMatrix::Zero(2 * m, 2 * m);
        sum.topLeftCorner(m, m) = x;
        sum.bottomRightCorner(m, m) = t;
        const ComplexMatrix xn = w * sum * w.transpose();
        if (xn != sa.x_n) ++mismatched;
        for (Eigen::Index j = 0; j < n; ++j) {
          if (j + band >= n && n != m) continue;
          ComplexVector target = ComplexVector::Zero(2 * m);
          target.head(m) = x.col(j);
          worst = std::max(worst, (xn.col(j) - target).norm());
          ++aligned;
        }
      }
    }
  }
  return {mismatched == 0 && worst == 0.0,
          format("own permutation product: %.0f mismatched X_n, max aligned error %.1e over %.0f columns",
                 static_cast<double>(mismatched), worst, static_cast<double>(aligned))};
}

Verdict oracle_obstruction() {
  ComplexMatrix t = ComplexMatrix::Zero(3, 3);
  t(1, 0) = t(2, 1) = t(0, 2) = 1.0;
  ComplexMatrix a = ComplexMatrix::Zero(12, 12);
  for (int k = 0; k < 4; ++k) a.block(3 * k, 3 * k, 3, 3) = 2.0 * t;
  const ComplexMatrix h = 0.5 * (a + a.adjoint());
  const auto ev = oracle::jacobi_eigenvalues(h);
  double d = 0.0;
  for (double e : ev) d = std::max(d, std::abs(e - 0.5));
  const double lib = pinchlab::hermitian_orbit_distance(h, 0.5 * ComplexMatrix::Identity(12, 12));
  const double tol = 16.0 * kEps * 2.0;
  return {std::abs(d - 1.5) <= tol && std::abs(lib - d) <= tol,
          format("Jacobi spectrum [%.15f, %.15f], distance %.17g", ev.front(), ev.back(), d)};
}

Verdict oracle_reduction(Sampler& s) {
  double worst_combo = 0.0, worst_support = -1e300;
  for (int t = 0; t < 500; ++t) {
    const Eigen::Index n = s.index(1, 8);
    const auto masa = s.partition(n);
    const ComplexMatrix z = s.gaussian(n, n);
    const ComplexMatrix e = block_pinch(z, masa);
    const double scale = 1.0 + z.norm();
    // Rayleigh quotients of E(Z) are convex combinations of Rayleigh quotients of Z.
    for (int k = 0; k < 40; ++k) {
      const ComplexVector h = s.unit_vector(n);
      Complex combo = 0.0;
      for (std::size_t b = 0; b < masa.blocks.size(); ++b) {
        ComplexVector hb = ComplexVector::Zero(n);
        for (auto i : masa.blocks[b]) hb(i) = h(i);
        if (hb.squaredNorm() > 0.0) combo += hb.squaredNorm() * oracle::rayleigh(z, hb);
      }
      worst_combo = std::max(worst_combo, std::abs(combo - oracle::rayleigh(e, h)) / scale);
    }
    // Support functions: h_E(theta) <= h_Z(theta) by eigenvalue interlacing.
    for (int k = 0; k < 16; ++k) {
      const Complex rot = std::polar(1.0, -2.0 * M_PI * k / 16.0);
      const ComplexMatrix hz = 0.5 * (rot * z + std::conj(rot) * z.adjoint());
      const ComplexMatrix he = 0.5 * (rot * e + std::conj(rot) * e.adjoint());
      worst_support = std::max(worst_support, (oracle::lambda_max(he) - oracle::lambda_max(hz)) / scale);
    }
  }
  return {worst_combo <= 1e-12 && worst_support <= 1e-10,
          format("500 own pairs: convex-combination residual %.2e, support excess %.2e", worst_combo,
                 worst_support)};
}

Verdict oracle_idempotents(Sampler& s) {
  double recon = 0.0, norm_law = 0.0, data = 0.0;
  int counterexamples = 0;
  for (int t = 0; t < 500; ++t) {
    const Eigen::Index k = s.index(0, 3), m = s.index(0, 3), p = s.index(0, 3);
    const Eigen::Index n = std::max<Eigen::Index>(1, k + m + 2 * p);
    std::vector<double> sig;
    for (Eigen::Index j = 0; j < p; ++j) sig.push_back(0.1 + 4.9 * s.unit(s.rng));
    std::sort(sig.rbegin(), sig.rend());
    ComplexMatrix c = ComplexMatrix::Zero(n, n);
    for (Eigen::Index i = 0; i < k; ++i) c(i, i) = 1.0;
    for (Eigen::Index j = 0; j < p; ++j) {
      const Eigen::Index o = k + m + 2 * j;
      c(o, o) = 1.0;
      c(o, o + 1) = sig[static_cast<std::size_t>(j)];
    }
    const ComplexMatrix u = s.haar(n);
    const ComplexMatrix q = u * c * u.adjoint();
    const double scale = 1.0 + oracle::spectral_norm(q);
    const auto form = pinchlab::idempotent_canonical(q);
    recon = std::max(recon, (form.basis.adjoint() * q * form.basis - form.canonical_matrix()).norm() / scale);
    const Eigen::Index expected_m = (k + m + 2 * p == 0) ? 1 : m;
    if (form.k != k || form.m != expected_m || form.sigmas.size() != sig.size()) {
      data = std::max(data, 1.0);
    } else {
      for (std::size_t j = 0; j < sig.size(); ++j) data = std::max(data, std::abs(form.sigmas[j] - sig[j]) / scale);
    }
    const double qn = oracle::spectral_norm(q);
    const double law = sig.empty() ? std::min(std::abs(qn), std::abs(qn - 1.0)) : std::abs(qn - std::sqrt(1.0 + sig[0] * sig[0]));
    norm_law = std::max(norm_law, law / scale);
    const auto ev = oracle::jacobi_eigenvalues(q + q.adjoint());
    if (std::max(0.0, ev.back()) < std::max(0.0, -ev.front()) - 1e-10) ++counterexamples;
  }
  return {recon <= 1e-9 && norm_law <= 1e-9 && data <= 1e-8 && counterexamples == 0,
          format("own generator: reconstruction %.2e, norm law %.2e, data %.2e", recon, norm_law, data) +
              format(", %.0f defect counterexamples", counterexamples)};
}

Verdict oracle_channels(Sampler& s) {
  // Pinching channel against a hand-written block pinching and a hand-built Choi matrix.
  const auto masa = pinchlab::MasaPartition::parse("1,2;3;4,5,6");
  const auto pinch = pinchlab::pinching_channel(masa);
  double pinch_gap = 0.0;
  for (int t = 0; t < 20; ++t) {
    const ComplexMatrix z = s.gaussian(6, 6);
    pinch_gap = std::max(pinch_gap, (pinch.apply(z) - block_pinch(z, masa)).norm());
  }
  auto choi_min = [](const pinchlab::ChannelSpec& spec) {
    const Eigen::Index n = spec.input_dim, m = spec.output_dim;
    ComplexMatrix c = ComplexMatrix::Zero(n * m, n * m);
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) {
        ComplexMatrix e = ComplexMatrix::Zero(n, n);
        e(i, j) = 1.0;
        c.block(i * m, j * m, m, m) = spec.apply(e);
      }
    }
    return oracle::lambda_min(c);
  };
  double pinch_tp = 0.0;
  for (Eigen::Index i = 0; i < 6; ++i) {
    for (Eigen::Index j = 0; j < 6; ++j) {
      ComplexMatrix e = ComplexMatrix::Zero(6, 6);
      e(i, j) = 1.0;
      pinch_tp = std::max(pinch_tp, std::abs(pinch.apply(e).trace() - e.trace()));
    }
  }
  const double pinch_unital = (pinch.apply(ComplexMatrix::Identity(6, 6)) - ComplexMatrix::Identity(6, 6)).norm();
  const double pinch_choi = choi_min(pinch);

  std::vector<pinchlab::PinchingPlan> plans;
  for (std::size_t v = 0; v < 3; ++v) {
    pinchlab::RealizeOptions opts;
    opts.variant = v;
    plans.push_back(pinchlab::realize_diagonal(std::vector<Complex>{0.5, Complex(0.0, -0.5)}, opts));
  }
  const auto mix = pinchlab::compression_mixture_channel(plans);
  const ComplexMatrix x = plans[0].target();
  const double reproduce = (mix.apply(plans[0].ambient()) - x).norm();
  const Eigen::Index n = mix.input_dim;
  const double mix_unital =
      (mix.apply(ComplexMatrix::Identity(n, n)) - ComplexMatrix::Identity(mix.output_dim, mix.output_dim)).norm();
  const double mix_choi = choi_min(mix);
  double tp_violation = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    ComplexMatrix e = ComplexMatrix::Zero(n, n);
    e(i, i) = 1.0;
    tp_violation = std::max(tp_violation, std::abs(mix.apply(e).trace() - 1.0));
  }
  const bool ok = pinch_gap == 0.0 && pinch_tp <= 1e-10 && pinch_unital <= 1e-10 && pinch_choi >= -1e-9 &&
                  reproduce <= 1e-10 && mix_unital <= 1e-10 && mix_choi >= -1e-9 && tp_violation > 1e-3;
  return {ok, format("hand-built: pinching choi_min %.2e, mixture choi_min %.2e, ", pinch_choi, mix_choi) +
                  format("|Phi(A)-X| %.2e, worst |tr Phi(E_ii) - 1| = %.3f", reproduce, tp_violation)};
}

}  // namespace

int main(int argc, char** argv) {
  std::uint64_t seed = 7;
  bool allow_known = false;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) {
      seed = std::strtoull(argv[++i], nullptr, 10);
    } else if (std::strcmp(argv[i], "--allow-known-discrepancies") == 0) {
      allow_known = true;
    } else {
      std::fprintf(stderr, "usage: %s [--seed N] [--allow-known-discrepancies]\n", argv[0]);
      return 64;
    }
  }

  const auto start = Clock::now();
  pinchlab::VerifyConfig config;
  config.seed = seed;
  const auto results = pinchlab::verify_all(config);

  Sampler sampler(seed);
  const auto oc = pinchlab::optimal_a();
  const auto plans = oracle_plans(sampler);
  std::vector<Verdict> verdicts;
  verdicts.push_back(oracle_optimal_constant(oc));
  verdicts.push_back(oracle_disc_threshold(oc));
  verdicts.push_back(oracle_ellipse(sampler));
  verdicts.push_back(oracle_realization(plans));
  verdicts.push_back(oracle_averaging(plans));
  verdicts.push_back(oracle_strong_approx(sampler));
  verdicts.push_back(oracle_obstruction());
  verdicts.push_back(oracle_reduction(sampler));
  verdicts.push_back(oracle_idempotents(sampler));
  verdicts.push_back(oracle_channels(sampler));
  const double total = std::chrono::duration<double>(Clock::now() - start).count();
  verdicts.push_back({total < 60.0, format("library suite %.2fs, with cross-checks %.2fs", results.back().seconds, total)});

  int unexpected = 0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    const bool pass = r.passed && verdicts[i].ok;
    std::printf("%s  %2d. %s\n      library: %s\n      oracle:  %s\n", pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                r.detail.c_str(), verdicts[i].detail.c_str());
    if (!pass && !(allow_known && kKnownDiscrepancies.count(r.id))) ++unexpected;
  }
  if (allow_known) {
    std::printf("known discrepancies tolerated in exit status: 1, 2 (closed-form constants)\n");
  }
  return unexpected == 0 ? 0 : 1;
}
