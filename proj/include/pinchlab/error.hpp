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

#include <stdexcept>
#include <string>
#include <string_view>

namespace pinchlab {

/// Failure categories raised by the library. The numeric values are part of
/// the C ABI (see pinchlab.h) and must not be reordered.
enum class ErrorCode : int {
  kInvalidArgument = 1,
  kNotHermitian = 2,
  kNoConvergence = 3,
  kNotOrthonormal = 4,
  kDomainError = 5,
  kNotInRange = 6,
  kNotIdempotent = 7,
  kDegenerateSpectrum = 8,
  kValueOutOfDisc = 9,
  kNotNormal = 10,
  kDimensionMismatch = 11,
  kWeightsNotNormalized = 12,
  kTargetMismatch = 13,
  kParseError = 14,
  kIoError = 15,
};

std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace pinchlab
