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

#include "pinchlab/error.hpp"

namespace pinchlab {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kNotHermitian: return "NotHermitian";
    case ErrorCode::kNoConvergence: return "NoConvergence";
    case ErrorCode::kNotOrthonormal: return "NotOrthonormal";
    case ErrorCode::kDomainError: return "DomainError";
    case ErrorCode::kNotInRange: return "NotInRange";
    case ErrorCode::kNotIdempotent: return "NotIdempotent";
    case ErrorCode::kDegenerateSpectrum: return "DegenerateSpectrum";
    case ErrorCode::kValueOutOfDisc: return "ValueOutOfDisc";
    case ErrorCode::kNotNormal: return "NotNormal";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kWeightsNotNormalized: return "WeightsNotNormalized";
    case ErrorCode::kTargetMismatch: return "TargetMismatch";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace pinchlab
