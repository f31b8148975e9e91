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

#include "pinchlab/pinching.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pinchlab/error.hpp"
#include "pinchlab/idempotent.hpp"
#include "pinchlab/matrix_json.hpp"

namespace pinchlab {

namespace {

double closed_form_a_star() { return std::sqrt(4.0 + 2.0 * std::sqrt(5.0)); }

ComplexMatrix sub_block(const ComplexMatrix& m, const std::vector<Eigen::Index>& idx) {
  const auto d = static_cast<Eigen::Index>(idx.size());
  ComplexMatrix out(d, d);
  for (Eigen::Index r = 0; r < d; ++r) {
    for (Eigen::Index c = 0; c < d; ++c) out(r, c) = m(idx[r], idx[c]);
  }
  return out;
}

struct Diagonalized {
  ComplexMatrix basis;  // X = basis · diag(values) · basis*
  ComplexVector values;
};

Diagonalized diagonalize_normal(const ComplexMatrix& x) {
  if (x.rows() == 1) return {ComplexMatrix::Identity(1, 1), x.col(0)};
  Eigen::ComplexSchur<ComplexMatrix> schur(x);
  if (schur.info() != Eigen::Success) {
    fail(ErrorCode::kNoConvergence, "realize_normal_blocks: Schur iteration failed");
  }
  return {schur.matrixU(), schur.matrixT().diagonal()};
}

}  // namespace

double default_a() { return closed_form_a_star() * (1.0 + 1e-6); }

ComplexMatrix PinchingPlan::conjugated() const {
  return unitary * ambient() * unitary.adjoint();
}

ComplexMatrix PinchingPlan::target() const {
  ComplexMatrix out(0, 0);
  for (const auto& t : targets) out = direct_sum(out, t);
  return out;
}

std::vector<ComplexMatrix> PinchingPlan::prescribed_compressions() const {
  std::vector<ComplexMatrix> out;
  for (std::size_t b = 0; b < prescribed_blocks; ++b) {
    out.push_back(sub_block(realized, partition.blocks[b]));
  }
  return out;
}

std::vector<ComplexMatrix> PinchingPlan::slack_compressions() const {
  std::vector<ComplexMatrix> out;
  for (std::size_t b = prescribed_blocks; b < partition.blocks.size(); ++b) {
    out.push_back(sub_block(realized, partition.blocks[b]));
  }
  return out;
}

PinchingPlan realize_diagonal(std::span<const Complex> values, const RealizeOptions& opts) {
  std::vector<ComplexMatrix> blocks;
  blocks.reserve(values.size());
  for (const auto x : values) {
    if (!(std::abs(x) < 1.0)) {
      fail(ErrorCode::kValueOutOfDisc, "realize_diagonal: every |x_i| must be < 1");
    }
    blocks.push_back(ComplexMatrix::Constant(1, 1, x));
  }
  return realize_normal_blocks(blocks, opts);
}

PinchingPlan realize_normal_blocks(std::span<const ComplexMatrix> blocks,
                                   const RealizeOptions& opts) {
  const double a = opts.a.value_or(default_a());
  if (!(a >= closed_form_a_star() * (1.0 - 1e-12))) {
    fail(ErrorCode::kDomainError, "realize: a must be at least a* = sqrt(4 + 2 sqrt 5)");
  }

  std::vector<Diagonalized> diag;
  Eigen::Index total = 0;
  for (const auto& x : blocks) {
    require_square(x, "realize_normal_blocks");
    require_finite(x, "realize_normal_blocks");
    if (x.rows() == 0) fail(ErrorCode::kInvalidArgument, "realize_normal_blocks: empty block");
    if (!is_normal(x, 1e-10)) {
      fail(ErrorCode::kNotNormal, "realize_normal_blocks: block is not normal");
    }
    auto d = diagonalize_normal(x);
    if (!(d.values.cwiseAbs().maxCoeff() < 1.0)) {
      fail(ErrorCode::kValueOutOfDisc, "realize_normal_blocks: spectral radius must be < 1");
    }
    total += x.rows();
    diag.push_back(std::move(d));
  }

  const Eigen::Index n = total;
  const Eigen::Index dim = 2 * n;
  const auto variant = static_cast<Eigen::Index>(n > 0 ? opts.variant % n : 0);

  // Columns of `dilation` are the vectors whose compressions we read off;
  // the plan unitary is its adjoint.
  ComplexMatrix dilation = ComplexMatrix::Zero(dim, dim);
  PinchingPlan plan;
  plan.a = a;
  plan.ambient_dim = dim;
  plan.copies = n;
  plan.source.repeated = make_ma(a);
  plan.partition.dim = dim;

  Eigen::Index offset = 0;
  std::vector<std::vector<Eigen::Index>> slack_blocks;
  for (std::size_t b = 0; b < diag.size(); ++b) {
    const auto& d = diag[b];
    const Eigen::Index size = d.values.size();
    ComplexMatrix witnesses = ComplexMatrix::Zero(dim, size);
    ComplexMatrix complements = ComplexMatrix::Zero(dim, size);
    for (Eigen::Index e = 0; e < size; ++e) {
      const Eigen::Index host = (offset + e + variant) % n;
      const ComplexVector h = ma_witness(a, d.values(e));
      witnesses(2 * host, e) = h(0);
      witnesses(2 * host + 1, e) = h(1);
      complements(2 * host, e) = -std::conj(h(1));
      complements(2 * host + 1, e) = std::conj(h(0));
    }
    // V' = V·W* turns the diagonal compression D into W·D·W* = X.
    dilation.middleCols(offset, size) = witnesses * d.basis.adjoint();
    dilation.middleCols(n + offset, size) = complements * d.basis.adjoint();

    std::vector<Eigen::Index> prescribed;
    std::vector<Eigen::Index> slack;
    for (Eigen::Index e = 0; e < size; ++e) {
      prescribed.push_back(offset + e);
      slack.push_back(n + offset + e);
      plan.prescribed_positions.push_back(offset + e);
    }
    plan.partition.blocks.push_back(std::move(prescribed));
    plan.partition.labels.push_back("prescribed");
    slack_blocks.push_back(std::move(slack));
    plan.targets.push_back(blocks[b]);
    offset += size;
  }
  plan.prescribed_blocks = plan.partition.blocks.size();
  for (auto& s : slack_blocks) {
    plan.partition.blocks.push_back(std::move(s));
    plan.partition.labels.push_back("slack");
  }
  plan.partition.validate();

  plan.unitary = dilation.adjoint();
  plan.realized = conditional_expectation(plan.conjugated(), plan.partition);
  return plan;
}

TwoOrbitAverage two_orbit_average(const PinchingPlan& plan) {
  const ComplexMatrix a = plan.ambient();
  const Eigen::Index n = plan.prescribed_dim();
  const Eigen::Index dim = plan.ambient_dim;
  RealVector signs = RealVector::Constant(dim, -1.0);
  for (const auto p : plan.prescribed_positions) signs(p) = 1.0;

  TwoOrbitAverage out;
  out.u = plan.unitary;
  out.v = signs.cast<Complex>().asDiagonal() * plan.unitary;
  out.average = 0.5 * (out.u * a * out.u.adjoint() + out.v * a * out.v.adjoint());

  std::vector<Eigen::Index> lead = plan.prescribed_positions;
  std::vector<Eigen::Index> rest;
  for (Eigen::Index i = 0; i < dim; ++i) {
    if (signs(i) < 0.0) rest.push_back(i);
  }
  ComplexMatrix upper(n, dim - n);
  ComplexMatrix lower(dim - n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < dim - n; ++c) {
      upper(r, c) = out.average(lead[r], rest[c]);
      lower(c, r) = out.average(rest[c], lead[r]);
    }
  }
  out.offdiag_norm = std::max(operator_norm(upper), operator_norm(lower));
  return out;
}

StrongApproximation strong_approx(const ComplexMatrix& x, const ComplexMatrix& t,
                                  Eigen::Index n) {
  require_square(x, "strong_approx");
  require_square(t, "strong_approx");
  const Eigen::Index m = x.rows();
  if (t.rows() != m) fail(ErrorCode::kDimensionMismatch, "strong_approx: X and T differ in size");
  if (n < 0 || n > m) fail(ErrorCode::kInvalidArgument, "strong_approx: need 0 <= n <= m");

  StrongApproximation out;
  out.permutation.assign(static_cast<std::size_t>(2 * m), -1);
  for (Eigen::Index j = 0; j < n; ++j) out.permutation[j] = j;
  Eigen::Index next = n;
  for (Eigen::Index j = 0; j < m; ++j) {
    if (j >= n) out.permutation[j] = next++;
    out.permutation[m + j] = next++;
  }

  const ComplexMatrix block = direct_sum(x, t);
  out.w = ComplexMatrix::Zero(2 * m, 2 * m);
  out.x_n = ComplexMatrix::Zero(2 * m, 2 * m);
  for (Eigen::Index s = 0; s < 2 * m; ++s) {
    out.w(out.permutation[s], s) = 1.0;
    for (Eigen::Index c = 0; c < 2 * m; ++c) {
      out.x_n(out.permutation[s], out.permutation[c]) = block(s, c);
    }
  }
  for (Eigen::Index j = 0; j < m; ++j) {
    ComplexVector expected = ComplexVector::Zero(2 * m);
    expected.head(m) = x.col(j);
    out.errors.push_back((out.x_n.col(j) - expected).norm());
  }
  return out;
}

double hermitian_orbit_distance(const ComplexMatrix& a, const ComplexMatrix& x, double tol) {
  require_square(a, "hermitian_orbit_distance");
  require_square(x, "hermitian_orbit_distance");
  if (a.rows() != x.rows()) {
    fail(ErrorCode::kDimensionMismatch, "hermitian_orbit_distance: dimensions differ");
  }
  if (!is_hermitian(a, tol) || !is_hermitian(x, tol)) {
    fail(ErrorCode::kNotHermitian, "hermitian_orbit_distance: inputs must be Hermitian");
  }
  if (a.rows() == 0) return 0.0;
  // Both spectra come back ascending, which pairs them exactly as the
  // descending orders do.
  const RealVector la = hermitian_eig(a, tol).eigenvalues;
  const RealVector lx = hermitian_eig(x, tol).eigenvalues;
  return (la - lx).cwiseAbs().maxCoeff();
}

nlohmann::json plan_to_json(const PinchingPlan& plan) {
  nlohmann::json targets = nlohmann::json::array();
  for (const auto& t : plan.targets) targets.push_back(matrix_to_json(t));
  nlohmann::json positions = nlohmann::json::array();
  for (const auto p : plan.prescribed_positions) positions.push_back(p + 1);
  return {
      {"ambient_dim", plan.ambient_dim},
      {"a", plan.a},
      {"unitary", matrix_to_json(plan.unitary)},
      {"partition", partition_to_json(plan.partition)},
      {"source",
       {{"exceptional", matrix_to_json(plan.source.exceptional)},
        {"repeated", matrix_to_json(plan.source.repeated)},
        {"scale", complex_to_json(plan.source.scale)},
        {"copies", plan.copies}}},
      {"prescribed_positions", std::move(positions)},
      {"prescribed_blocks", plan.prescribed_blocks},
      {"targets", std::move(targets)},
      {"realized", matrix_to_json(plan.realized)},
  };
}

PinchingPlan plan_from_json(const nlohmann::json& j) {
  PinchingPlan plan;
  try {
    plan.ambient_dim = j.at("ambient_dim").get<Eigen::Index>();
    plan.a = j.at("a").get<double>();
    plan.unitary = matrix_from_json(j.at("unitary"));
    plan.partition = partition_from_json(j.at("partition"));
    const auto& src = j.at("source");
    plan.source.exceptional = matrix_from_json(src.at("exceptional"));
    plan.source.repeated = matrix_from_json(src.at("repeated"));
    plan.source.scale = complex_from_json(src.at("scale"));
    plan.copies = src.at("copies").get<Eigen::Index>();
    for (const auto& p : j.at("prescribed_positions")) {
      plan.prescribed_positions.push_back(p.get<Eigen::Index>() - 1);
    }
    plan.prescribed_blocks = j.at("prescribed_blocks").get<std::size_t>();
    for (const auto& t : j.at("targets")) plan.targets.push_back(matrix_from_json(t));
    plan.realized = matrix_from_json(j.at("realized"));
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::kParseError, std::string("plan JSON: ") + e.what());
  }
  plan.source.validate();
  const Eigen::Index dim = plan.source.exceptional.rows() + plan.copies * plan.source.repeated.rows();
  if (plan.ambient_dim != dim || plan.unitary.rows() != dim || plan.unitary.cols() != dim ||
      plan.partition.dim != dim || plan.realized.rows() != dim ||
      plan.prescribed_blocks > plan.partition.blocks.size()) {
    fail(ErrorCode::kParseError, "plan JSON: inconsistent dimensions");
  }
  for (const auto p : plan.prescribed_positions) {
    if (p < 0 || p >= dim) fail(ErrorCode::kParseError, "plan JSON: prescribed position out of range");
  }
  return plan;
}

}  // namespace pinchlab
