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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pinchlab/linalg.hpp"
#include "pinchlab/numrange.hpp"
#include "pinchlab/sampling.hpp"

namespace pinchlab {

/// A discrete masa, given as an ordered partition of the coordinates
/// 0..dim−1 into blocks. Its conditional expectation is the block pinching
/// Z ↦ Σ P_i Z P_i with P_i the coordinate projection of block i.
struct MasaPartition {
  Eigen::Index dim = 0;
  std::vector<std::vector<Eigen::Index>> blocks;
  std::vector<std::string> labels;  // empty, or one per block

  /// Parses the 1-based grammar "1;2;3,4". When `dim` is given it must match
  /// the largest index.
  static MasaPartition parse(std::string_view text,
                             std::optional<Eigen::Index> dim = std::nullopt);
  static MasaPartition singletons(Eigen::Index dim);
  static MasaPartition trivial(Eigen::Index dim);

  /// Throws kInvalidArgument unless the blocks are disjoint, non-empty and
  /// cover every coordinate.
  void validate() const;
  std::string to_string() const;
  ComplexMatrix projection(std::size_t block) const;
  std::size_t block_of(Eigen::Index coordinate) const;
};

/// Random shuffle of the coordinates cut into contiguous runs.
MasaPartition random_partition(Eigen::Index dim, Rng& rng);

nlohmann::json partition_to_json(const MasaPartition& p);
MasaPartition partition_from_json(const nlohmann::json& j);

ComplexMatrix conditional_expectation(const ComplexMatrix& z, const MasaPartition& masa);

struct ReductionReport {
  bool passed = true;
  std::size_t samples_checked = 0;
  std::size_t boundary_checked = 0;
  /// Largest Re(e^{−iθ}w) − h_Z(θ) seen; ≤ margin on a pass.
  double worst_violation = 0.0;
  std::optional<Complex> witness_point;
  ComplexVector witness_vector;
};

struct ReductionOptions {
  double margin = 1e-8;
  std::size_t resolution = kDefaultResolution;
  std::uint64_t seed = 0;
};

/// Samples ⟨h, E(Z)h⟩ for random unit h and sweeps the boundary of W(E(Z)),
/// certifying every point against the support function of W(Z).
ReductionReport check_reduction(const ComplexMatrix& z, const MasaPartition& masa,
                                std::size_t samples, const ReductionOptions& opts = {});

}  // namespace pinchlab
