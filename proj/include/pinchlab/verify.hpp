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

// End-to-end checks behind `pinchlab verify-all`. Each check owns its
// tolerances and time limits; none of them is tunable from outside.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace pinchlab {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  /// Worst observed deviation (or elapsed seconds for pure timing checks).
  double metric = 0.0;
  double threshold = 0.0;
  double seconds = 0.0;
  std::string detail;
  /// The metric is a duration, so it is withheld from reproducible output.
  bool metric_is_time = false;
};

struct VerifyConfig {
  std::uint64_t seed = 7;
};

CriterionResult check_optimal_constant();
CriterionResult check_disc_threshold();
CriterionResult check_ellipse_oracle(std::uint64_t seed);
CriterionResult check_realization_exactness(std::uint64_t seed);
CriterionResult check_averaging_identity(std::uint64_t seed);
CriterionResult check_strong_approximation(std::uint64_t seed);
CriterionResult check_obstruction();
CriterionResult check_reduction_suite(std::uint64_t seed);
CriterionResult check_idempotent_suite(std::uint64_t seed);
CriterionResult check_channel_suite(std::uint64_t seed);

/// Runs checks 1–10 in order and appends the total wall-time check (11).
std::vector<CriterionResult> verify_all(const VerifyConfig& config = {});

/// Timings vary run to run, so they are left out unless requested.
nlohmann::json results_to_json(const std::vector<CriterionResult>& results,
                               bool include_timing = false);
/// One "PASS|FAIL  <id>. <name>  ..." line per result.
std::string results_to_table(const std::vector<CriterionResult>& results);

}  // namespace pinchlab
