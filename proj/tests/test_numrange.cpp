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

#include <cmath>
#include <numbers>

#include "doctest.h"
#include "oracles.hpp"
#include "pinchlab/boundary_io.hpp"
#include "pinchlab/error.hpp"
#include "pinchlab/idempotent.hpp"
#include "pinchlab/numrange.hpp"
#include "pinchlab/sampling.hpp"

using namespace pinchlab;

namespace {

ComplexMatrix nilpotent2() {
  ComplexMatrix a = ComplexMatrix::Zero(2, 2);
  a(1, 0) = 2.0;
  return a;
}

ComplexMatrix three_cycle() {
  ComplexMatrix t = ComplexMatrix::Zero(3, 3);
  t(1, 0) = 1.0;
  t(2, 1) = 1.0;
  t(0, 2) = 1.0;
  return t;
}

}  // namespace

TEST_CASE("nr_support examples") {
  for (double theta : {0.0, 0.7, 2.0, 4.5}) {
    CHECK(std::abs(nr_support(nilpotent2(), theta).support - 1.0) < 1e-12);
  }
  const auto id = nr_support(ComplexMatrix::Identity(2, 2), 0.0);
  CHECK(std::abs(id.support - 1.0) < 1e-14);

  ComplexMatrix d = ComplexMatrix::Zero(2, 2);
  d(1, 1) = 3.0;
  const auto s = nr_support(d, 0.0);
  CHECK(std::abs(s.support - 3.0) < 1e-14);
  CHECK(std::abs(std::abs(s.witness(1)) - 1.0) < 1e-12);
}

TEST_CASE("nr_support dominates sampled Rayleigh quotients") {
  Rng rng(21);
  for (int t = 0; t < 5; ++t) {
    const ComplexMatrix a = gaussian_matrix(4, 4, rng);
    for (int k = 0; k < 1000; ++k) {
      const double theta = 2.0 * std::numbers::pi * k / 1000.0;
      const ComplexVector h = random_unit_vector(4, rng);
      const Complex w = oracle::rayleigh(a, h);
      CHECK((std::polar(1.0, -theta) * w).real() <= nr_support(a, theta).support + 1e-12);
    }
  }
}

TEST_CASE("nr_boundary examples") {
  const auto disc = nr_boundary(nilpotent2(), 360);
  REQUIRE(disc.samples.size() == 360);
  for (const auto& s : disc.samples) CHECK(std::abs(std::abs(s.point) - 1.0) < 1e-8);

  const Complex w = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
  ComplexMatrix tri = ComplexMatrix::Zero(3, 3);
  tri(0, 0) = 1.0;
  tri(1, 1) = w;
  tri(2, 2) = std::conj(w);
  const auto b = nr_boundary(tri, 720);
  CHECK(std::abs(b.samples[0].support - 1.0) < 1e-12);
  // Each boundary point lies in the triangle conv{1, w, conj w}.
  for (const auto& s : b.samples) {
    for (int k = 0; k < 3; ++k) {
      const double dir = std::numbers::pi / 3.0 + 2.0 * std::numbers::pi * k / 3.0;
      CHECK((std::polar(1.0, -dir) * s.point).real() <= 0.5 + 1e-12);
    }
  }

  for (const auto& s : nr_boundary(ComplexMatrix::Zero(3, 3), 16).samples) {
    CHECK(std::abs(s.point) == 0.0);
  }
}

TEST_CASE("nr_boundary is identical across thread counts") {
  Rng rng(3);
  const ComplexMatrix a = gaussian_matrix(5, 5, rng);
  const auto serial = nr_boundary(a, 101, 1);
  const auto parallel = nr_boundary(a, 101, 4);
  for (std::size_t k = 0; k < 101; ++k) {
    CHECK(serial.samples[k].support == parallel.samples[k].support);
    CHECK(serial.samples[k].point == parallel.samples[k].point);
  }
}

TEST_CASE("nr_contains examples and diagonal entries") {
  CHECK(nr_contains(make_ma(1.0), 0.0, 1e-8));
  CHECK(nr_contains(make_ma(1.0), 1.0, 1e-8));
  CHECK_FALSE(nr_contains(nilpotent2(), 1.1, 1e-8));

  Rng rng(4);
  for (int t = 0; t < 20; ++t) {
    const ComplexMatrix z = gaussian_matrix(1 + t % 6, 1 + t % 6, rng);
    for (Eigen::Index i = 0; i < z.rows(); ++i) CHECK(nr_contains(z, z(i, i), 1e-8));
  }
}

TEST_CASE("disc_in_nr examples") {
  const double closed = std::sqrt(4.0 + 2.0 * std::sqrt(5.0));
  CHECK(disc_in_nr(make_ma(closed), 0.999));
  CHECK_FALSE(disc_in_nr(make_ma(2.0), 1.0));
  CHECK(disc_in_nr(2.0 * three_cycle(), 0.99));
  CHECK_FALSE(disc_in_nr(2.0 * three_cycle(), 1.01));
}

TEST_CASE("disc threshold of M_a agrees with the ellipse geometry") {
  // Containment first holds at a = 2*sqrt(2): the leftmost point of the
  // ellipse, (1 - sqrt(1 + a^2))/2, reaches -1 exactly there.
  const double threshold = 2.0 * std::sqrt(2.0);
  for (double f : {1.0 - 1e-3, 1.0 + 1e-3}) {
    const double a = threshold * f;
    CHECK(disc_in_nr(make_ma(a), 1.0, 10000) == oracle::ellipse_contains_unit_disc(a));
  }
  CHECK(oracle::ellipse_contains_unit_disc(threshold * (1.0 + 1e-3)));
  CHECK_FALSE(oracle::ellipse_contains_unit_disc(threshold * (1.0 - 1e-3)));
}

TEST_CASE("nr_ellipse_2x2 examples") {
  const auto disc = nr_ellipse_2x2(nilpotent2());
  CHECK(std::abs(disc.center) < 1e-15);
  CHECK(std::abs(disc.semi_minor - 1.0) < 1e-14);
  CHECK(std::abs(disc.semi_major - 1.0) < 1e-14);

  ComplexMatrix d = ComplexMatrix::Zero(2, 2);
  d(0, 0) = 0.3;
  d(1, 1) = Complex(-1.0, 2.0);
  CHECK(nr_ellipse_2x2(d).semi_minor < 1e-14);

  const auto m1 = nr_ellipse_2x2(make_ma(1.0));
  CHECK(std::abs(m1.semi_minor - 0.5) < 1e-14);
  const bool foci_ok = (std::abs(m1.foci[0] - 1.0) < 1e-14 && std::abs(m1.foci[1]) < 1e-14) ||
                       (std::abs(m1.foci[1] - 1.0) < 1e-14 && std::abs(m1.foci[0]) < 1e-14);
  CHECK(foci_ok);

  CHECK_THROWS_AS(nr_ellipse_2x2(ComplexMatrix::Identity(3, 3)), Error);
}

TEST_CASE("ellipse support matches the closed-form 2x2 support") {
  Rng rng(8);
  for (int t = 0; t < 100; ++t) {
    const ComplexMatrix a = gaussian_matrix(2, 2, rng);
    const auto e = nr_ellipse_2x2(a);
    const auto b = nr_boundary(a, 720);
    CHECK(boundary_ellipse_deviation(b, e) <= 1e-6 * (1.0 + operator_norm(a)));
    for (int k = 0; k < 12; ++k) {
      const double theta = 0.5 * k;
      CHECK(std::abs(e.support(theta) - oracle::support_2x2(a, theta)) < 1e-9 * (1.0 + operator_norm(a)));
    }
  }
}

TEST_CASE("ma_circle examples and circle-union consistency") {
  const Circle c0 = ma_circle(2.0, 0.0);
  CHECK(c0.center == 0.0);
  CHECK(c0.radius == 0.0);
  const Circle c1 = ma_circle(2.0, 1.0);
  CHECK(c1.center == 1.0);
  CHECK(std::abs(c1.radius) < 1e-15);

  const double s5 = std::sqrt(5.0);
  const Circle g = ma_circle(std::sqrt(4.0 + 2.0 * s5), std::sqrt(s5 - 2.0));
  CHECK(std::abs(g.center - (s5 - 2.0)) < 1e-12);
  CHECK(std::abs(g.radius - (s5 - 1.0)) < 1e-12);
  CHECK(std::abs(std::abs(-1.0 - g.center) - g.radius) < 1e-12);

  CHECK_THROWS_AS(ma_circle(1.0, 1.5), Error);

  Rng rng(12);
  std::uniform_real_distribution<double> ua(0.5, 5.0), ur(0.0, 1.0), uphi(0.0, 2.0 * std::numbers::pi);
  for (int t = 0; t < 100; ++t) {
    const double a = ua(rng);
    const Circle c = ma_circle(a, ur(rng));
    const Complex z = c.center + std::polar(c.radius, uphi(rng));
    CHECK(nr_contains(make_ma(a), z, 1e-8));
  }
}

TEST_CASE("ma_witness") {
  const ComplexVector h0 = ma_witness(2.0, 0.0);
  CHECK(std::abs(h0(0)) < 1e-15);
  CHECK(std::abs(std::abs(h0(1)) - 1.0) < 1e-15);
  const ComplexVector h1 = ma_witness(2.0, 1.0);
  CHECK(std::abs(std::abs(h1(0)) - 1.0) < 1e-15);

  const double a = std::sqrt(4.0 + 2.0 * std::sqrt(5.0));
  const ComplexVector h = ma_witness(a, 0.5);
  CHECK(std::abs(h.norm() - 1.0) < 1e-14);
  CHECK(std::abs(oracle::rayleigh(make_ma(a), h) - 0.5) < 1e-10);

  Rng rng(13);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int t = 0; t < 200; ++t) {
    const Complex z(u(rng), u(rng));
    if (std::abs(z) >= 0.999) continue;
    const ComplexVector w = ma_witness(2.9, z);
    CHECK(std::abs(oracle::rayleigh(make_ma(2.9), w) - z) < 1e-10);
  }
  CHECK_THROWS_AS(ma_witness(1.0, Complex(-3.0, 0.0)), Error);
}

TEST_CASE("optimal_a finds the minimum of a(r)") {
  const auto oc = optimal_a();
  // Independent minimization: a'(r) has the sign of 3r^2 - 1.
  const double r_root = 1.0 / std::sqrt(3.0);
  CHECK(std::abs(oc.r_star_sq - r_root * r_root) < 1e-9);
  CHECK(std::abs(oc.a_star - oracle::a_of_r(r_root)) < 1e-9);
  CHECK(std::abs(oc.norm - std::sqrt(1.0 + oc.a_star * oc.a_star)) < 1e-12);
  for (int k = 1; k < 2000; ++k) CHECK(oracle::a_of_r(k / 2000.0) >= oc.a_star - 1e-12);

  const double s5 = std::sqrt(5.0);
  CHECK(oc.closed_r_star_sq == doctest::Approx(s5 - 2.0).epsilon(1e-15));
  CHECK(oc.closed_a_star * oc.closed_a_star == doctest::Approx(4.0 + 2.0 * s5).epsilon(1e-14));
  CHECK(oc.closed_norm == doctest::Approx(std::sqrt(5.0 + 2.0 * s5)).epsilon(1e-15));
}

TEST_CASE("we_of_model") {
  OperatorModel m;
  m.repeated = make_ma(3.0);
  CHECK(disc_in_nr(we_of_model(m), 1.0));

  OperatorModel scalar;
  scalar.exceptional = ComplexMatrix::Constant(1, 1, 5.0);
  scalar.repeated = ComplexMatrix::Identity(2, 2);
  const auto b = nr_boundary(we_of_model(scalar), 32);
  for (const auto& s : b.samples) CHECK(std::abs(s.point - 1.0) < 1e-14);

  OperatorModel cyc;
  cyc.repeated = three_cycle();
  cyc.scale = 2.0;
  CHECK(disc_in_nr(we_of_model(cyc), 0.99));
  CHECK(cyc.truncation(3).rows() == 9);
  CHECK(scalar.truncation(2).rows() == 5);
}

TEST_CASE("inflate_2x2") {
  ComplexMatrix d = ComplexMatrix::Zero(2, 2);
  d(0, 0) = 1.0;
  d(1, 1) = -1.0;
  const auto inf = inflate_2x2(d, 1.0);
  CHECK(std::abs(inf.c - 1.0) < 1e-15);
  CHECK(std::abs(inf.conjugated(0, 1) - Complex(-2.0, 0.0)) < 1e-14);
  CHECK(std::abs(inf.ellipse.semi_minor - 1.0) < 1e-14);
  CHECK(operator_norm(inf.similarity * d * inf.inverse - inf.conjugated) < 1e-14);
  CHECK(disc_in_nr(inf.conjugated, 0.999));

  const auto none = inflate_2x2(d, 0.0);
  CHECK(none.c == 0.0);
  CHECK(operator_norm(none.similarity - ComplexMatrix::Identity(2, 2)) == 0.0);

  // Bounded conditioning when the eigenvalue gap stays above beta.
  Rng rng(14);
  std::uniform_real_distribution<double> u(-0.45, 0.45);
  const double beta = 0.2;
  for (int t = 0; t < 100; ++t) {
    ComplexMatrix dn = ComplexMatrix::Zero(2, 2);
    dn(0, 0) = Complex(u(rng), u(rng));
    dn(1, 1) = Complex(u(rng), u(rng));
    if (std::abs(dn(0, 0) - dn(1, 1)) <= beta) continue;
    const auto i = inflate_2x2(dn, 1.0);
    CHECK(operator_norm(i.similarity) + operator_norm(i.inverse) <= 2.0 * (2.0 + 2.0 / beta));
  }

  ComplexMatrix same = ComplexMatrix::Identity(2, 2);
  CHECK_THROWS_AS(inflate_2x2(same, 1.0), Error);
}

TEST_CASE("boundary CSV and SVG") {
  const auto b = nr_boundary(nilpotent2(), 8);
  const std::string csv = boundary_to_csv(b);
  CHECK(csv.rfind("theta,support,re,im\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 9);
  const std::string svg = boundary_to_svg(b);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
}
