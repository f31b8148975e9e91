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

#include "pinchlab/channel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "pinchlab/error.hpp"
#include "pinchlab/matrix_json.hpp"
#include "pinchlab/sampling.hpp"

namespace pinchlab {

namespace {

constexpr double kUnitalTol = 1e-10;
constexpr double kTraceTol = 1e-10;
constexpr double kChoiTol = 1e-9;
constexpr double kPositiveTol = 1e-10;

}  // namespace

std::string channel_kind_name(ChannelKind kind) {
  return kind == ChannelKind::kPinching ? "pinching" : "compression_mixture";
}

ChannelKind channel_kind_from_name(const std::string& name) {
  if (name == "pinching") return ChannelKind::kPinching;
  if (name == "compression_mixture" || name == "mixture") return ChannelKind::kCompressionMixture;
  fail(ErrorCode::kParseError, "unknown channel kind '" + name + "'");
}

void ChannelSpec::validate() const {
  if (factors.empty()) fail(ErrorCode::kInvalidArgument, "channel: no factors");
  for (const auto& f : factors) {
    if (!(f.weight > 0.0) || !std::isfinite(f.weight)) {
      fail(ErrorCode::kInvalidArgument, "channel: weights must be positive");
    }
    if (f.matrix.rows() != output_dim || f.matrix.cols() != input_dim) {
      fail(ErrorCode::kDimensionMismatch, "channel: factor shape differs from output x input");
    }
    require_finite(f.matrix, "channel factor");
  }
  if (kind == ChannelKind::kPinching) {
    if (input_dim != output_dim) {
      fail(ErrorCode::kDimensionMismatch, "pinching channel: input and output dims differ");
    }
    ComplexMatrix sum = ComplexMatrix::Zero(input_dim, input_dim);
    for (const auto& f : factors) {
      if (f.weight != 1.0) fail(ErrorCode::kInvalidArgument, "pinching channel: weights must be 1");
      if ((f.matrix * f.matrix - f.matrix).norm() > kUnitalTol ||
          !is_hermitian(f.matrix, kUnitalTol)) {
        fail(ErrorCode::kInvalidArgument, "pinching channel: factors must be projections");
      }
      sum += f.matrix;
    }
    if ((sum - ComplexMatrix::Identity(input_dim, input_dim)).norm() > kUnitalTol) {
      fail(ErrorCode::kInvalidArgument, "pinching channel: projections do not sum to I");
    }
  } else {
    double total = 0.0;
    for (const auto& f : factors) {
      total += f.weight;
      const ComplexMatrix mm = f.matrix * f.matrix.adjoint();
      if ((mm - ComplexMatrix::Identity(output_dim, output_dim)).norm() > kUnitalTol) {
        fail(ErrorCode::kInvalidArgument, "mixture channel: factors must be co-isometries");
      }
    }
    if (std::abs(total - 1.0) > 1e-12) {
      fail(ErrorCode::kWeightsNotNormalized, "mixture channel: weights must sum to 1");
    }
  }
}

ComplexMatrix ChannelSpec::apply(const ComplexMatrix& z) const {
  if (z.rows() != input_dim || z.cols() != input_dim) {
    fail(ErrorCode::kDimensionMismatch, "channel apply: input has the wrong size");
  }
  ComplexMatrix out = ComplexMatrix::Zero(output_dim, output_dim);
  for (const auto& f : factors) out += f.weight * (f.matrix * z * f.matrix.adjoint());
  return out;
}

ChannelSpec pinching_channel(const MasaPartition& masa) {
  masa.validate();
  ChannelSpec spec;
  spec.kind = ChannelKind::kPinching;
  spec.input_dim = spec.output_dim = masa.dim;
  for (std::size_t b = 0; b < masa.blocks.size(); ++b) {
    spec.factors.push_back({1.0, masa.projection(b)});
  }
  return spec;
}

std::vector<double> ladder_weights(std::size_t count) {
  std::vector<double> w;
  for (std::size_t i = 1; i <= count; ++i) w.push_back(std::ldexp(1.0, -static_cast<int>(i)));
  if (!w.empty()) w.back() *= 2.0;
  return w;
}

ChannelSpec compression_mixture_channel(std::span<const PinchingPlan> plans,
                                        std::span<const double> weights) {
  if (plans.empty()) fail(ErrorCode::kInvalidArgument, "mixture channel: no plans");
  std::vector<double> w(weights.begin(), weights.end());
  if (w.empty()) w = ladder_weights(plans.size());
  if (w.size() != plans.size()) {
    fail(ErrorCode::kInvalidArgument, "mixture channel: one weight per plan required");
  }
  for (const double x : w) {
    if (!(x > 0.0)) fail(ErrorCode::kInvalidArgument, "mixture channel: weights must be positive");
  }
  if (std::abs(std::accumulate(w.begin(), w.end(), 0.0) - 1.0) > 1e-12) {
    fail(ErrorCode::kWeightsNotNormalized, "mixture channel: weights must sum to 1");
  }

  const ComplexMatrix target = plans.front().target();
  ChannelSpec spec;
  spec.kind = ChannelKind::kCompressionMixture;
  spec.input_dim = plans.front().ambient_dim;
  spec.output_dim = plans.front().prescribed_dim();
  for (std::size_t i = 0; i < plans.size(); ++i) {
    const auto& plan = plans[i];
    if (plan.ambient_dim != spec.input_dim || plan.prescribed_dim() != spec.output_dim) {
      fail(ErrorCode::kTargetMismatch, "mixture channel: plans differ in shape");
    }
    const ComplexMatrix t = plan.target();
    if (t.rows() != target.rows() || (t - target).cwiseAbs().maxCoeff() > 1e-10) {
      fail(ErrorCode::kTargetMismatch, "mixture channel: plans realize different targets");
    }
    ComplexMatrix rows(spec.output_dim, spec.input_dim);
    for (Eigen::Index r = 0; r < spec.output_dim; ++r) {
      rows.row(r) = plan.unitary.row(plan.prescribed_positions[static_cast<std::size_t>(r)]);
    }
    spec.factors.push_back({w[i], std::move(rows)});
  }
  return spec;
}

ChoiMatrix choi_matrix(const ChannelSpec& spec) {
  const Eigen::Index n = spec.input_dim;
  const Eigen::Index d = spec.output_dim;
  ChoiMatrix out;
  out.matrix = ComplexMatrix::Zero(n * d, n * d);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      ComplexMatrix unit = ComplexMatrix::Zero(n, n);
      unit(i, j) = 1.0;
      out.matrix.block(i * d, j * d, d, d) = spec.apply(unit);
    }
  }
  out.min_eigenvalue =
      n * d == 0 ? 0.0 : hermitian_eig(hermitian_part(out.matrix)).eigenvalues(0);
  return out;
}

ChannelReport verify_channel(const ChannelSpec& spec, std::size_t trials, std::uint64_t seed) {
  if (trials < 1) fail(ErrorCode::kInvalidArgument, "verify_channel: trials must be >= 1");
  spec.validate();
  const Eigen::Index n = spec.input_dim;
  const Eigen::Index d = spec.output_dim;
  ChannelReport report;

  report.unital_error =
      operator_norm(spec.apply(ComplexMatrix::Identity(n, n)) - ComplexMatrix::Identity(d, d));
  report.unital = report.unital_error <= kUnitalTol;

  // Matrix units first: a block-asymmetric violation shows up on some E_ij
  // even when random inputs average it away.
  double worst_unit = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      ComplexMatrix unit = ComplexMatrix::Zero(n, n);
      unit(i, j) = 1.0;
      const double v = std::abs(spec.apply(unit).trace() - unit.trace());
      if (v > worst_unit) {
        worst_unit = v;
        report.trace_witness = unit;
        report.trace_witness_label =
            "E_" + std::to_string(i + 1) + "," + std::to_string(j + 1);
      }
    }
  }
  report.trace_violation = worst_unit;
  const bool unit_failure = worst_unit > kTraceTol;

  Rng rng(seed);
  double min_out = std::numeric_limits<double>::infinity();
  for (std::size_t t = 0; t < trials; ++t) {
    const ComplexMatrix z = gaussian_matrix(n, n, rng);
    const double v = std::abs(spec.apply(z).trace() - z.trace()) / std::max(1.0, z.norm());
    if (v > report.trace_violation) {
      report.trace_violation = v;
      if (!unit_failure) {
        report.trace_witness = z;
        report.trace_witness_label = "random #" + std::to_string(t);
      }
    }
    const ComplexMatrix p = random_psd(n, rng);
    if (d > 0) min_out = std::min(min_out, hermitian_eig(hermitian_part(spec.apply(p))).eigenvalues(0));
  }
  report.trace_preserving = report.trace_violation <= kTraceTol;
  if (report.trace_preserving) report.trace_witness_label.clear();
  report.min_output_eig = d > 0 ? min_out : 0.0;
  report.positive_on_samples = report.min_output_eig >= -kPositiveTol;

  report.choi_min_eig = choi_matrix(spec).min_eigenvalue;
  report.completely_positive = report.choi_min_eig >= -kChoiTol;

  report.declared_invariants_hold = report.unital && report.completely_positive &&
                                    report.positive_on_samples &&
                                    (spec.kind != ChannelKind::kPinching || report.trace_preserving);
  return report;
}

nlohmann::json channel_to_json(const ChannelSpec& spec) {
  nlohmann::json factors = nlohmann::json::array();
  for (const auto& f : spec.factors) {
    factors.push_back({{"weight", f.weight}, {"matrix", matrix_to_json(f.matrix)}});
  }
  return {{"kind", channel_kind_name(spec.kind)},
          {"input_dim", spec.input_dim},
          {"output_dim", spec.output_dim},
          {"factors", std::move(factors)}};
}

ChannelSpec channel_from_json(const nlohmann::json& j) {
  ChannelSpec spec;
  try {
    spec.kind = channel_kind_from_name(j.at("kind").get<std::string>());
    spec.input_dim = j.at("input_dim").get<Eigen::Index>();
    spec.output_dim = j.at("output_dim").get<Eigen::Index>();
    for (const auto& f : j.at("factors")) {
      spec.factors.push_back({f.at("weight").get<double>(), matrix_from_json(f.at("matrix"))});
    }
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::kParseError, std::string("channel JSON: ") + e.what());
  }
  spec.validate();
  return spec;
}

nlohmann::json report_to_json(const ChannelReport& r) {
  nlohmann::json out = {
      {"unital", r.unital},
      {"unital_error", r.unital_error},
      {"trace_preserving", r.trace_preserving},
      {"trace_violation", r.trace_violation},
      {"choi_min_eig", r.choi_min_eig},
      {"completely_positive", r.completely_positive},
      {"positive_on_samples", r.positive_on_samples},
      {"min_output_eig", r.min_output_eig},
      {"declared_invariants_hold", r.declared_invariants_hold},
  };
  if (!r.trace_preserving) {
    out["trace_witness"] = {{"label", r.trace_witness_label},
                            {"matrix", matrix_to_json(r.trace_witness)}};
  }
  return out;
}

}  // namespace pinchlab
