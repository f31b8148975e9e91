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

#include <string>

#include "pinchlab/numrange.hpp"

namespace pinchlab {

/// Header `theta,support,re,im`, one row per sample, shortest round-trip
/// doubles.
std::string boundary_to_csv(const NumericalRangeBoundary& boundary);

/// Closed polyline through the boundary points with the unit circle and axes
/// drawn for scale.
std::string boundary_to_svg(const NumericalRangeBoundary& boundary);

}  // namespace pinchlab
