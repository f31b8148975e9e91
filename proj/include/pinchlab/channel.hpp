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

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "pinchlab/expectation.hpp"
#include "pinchlab/linalg.hpp"
#include "pinchlab/pinching.hpp"

namespace pinchlab {

enum class ChannelKind { kPinching, kCompressionMixture };

std::string channel_kind_name(ChannelKind kind);
ChannelKind channel_kind_from_name(const std::string& name);

struct ChannelFactor {
  double weight = 1.0;
  ComplexMatrix matrix;  // output_dim × input_dim
};

/// Z ↦ Σ w_i · M_i·Z·M_i*.
struct ChannelSpec {
  Eigen::Index input_dim = 0;
  Eigen::Index output_dim = 0;
  std::vector<ChannelFactor> factors;
  ChannelKind kind = ChannelKind::kPinching;

  /// Checks shapes, positive weights and the kind's structural invariants.
  void validate() const;
  ComplexMatrix apply(const ComplexMatrix& z) const;
};

struct ChoiMatrix {
  ComplexMatrix matrix;
  double min_eigenvalue = 0.0;
};

ChannelSpec pinching_channel(const MasaPartition& masa);

/// w_i = 2^{−i} for i < count, last weight doubled so the ladder sums to 1.
std::vector<double> ladder_weights(std::size_t count);

/// Σ w_i·M_i·T·M_i* with M_i the prescribed rows of plan i's unitary. An
/// empty `weights` selects ladder_weights(plans.size()).
ChannelSpec compression_mixture_channel(std::span<const PinchingPlan> plans,
                                        std::span<const double> weights = {});

/// Σ_{ij} E_ij ⊗ Φ(E_ij).
ChoiMatrix choi_matrix(const ChannelSpec& spec);

struct ChannelReport {
  bool unital = false;
  double unital_error = 0.0;
  bool trace_preserving = false;
  double trace_violation = 0.0;
  /// Worst-violating input; a matrix unit whenever any matrix unit fails.
  ComplexMatrix trace_witness;
  std::string trace_witness_label;
  double choi_min_eig = 0.0;
  bool completely_positive = false;
  bool positive_on_samples = false;
  double min_output_eig = 0.0;
  /// The checks the channel's kind promises: unital + trace preserving +
  /// CP for pinchings, unital + CP for compression mixtures.
  bool declared_invariants_hold = false;
};

ChannelReport verify_channel(const ChannelSpec& spec, std::size_t trials,
                             std::uint64_t seed = 0);

nlohmann::json channel_to_json(const ChannelSpec& spec);
ChannelSpec channel_from_json(const nlohmann::json& j);
nlohmann::json report_to_json(const ChannelReport& report);

}  // namespace pinchlab
