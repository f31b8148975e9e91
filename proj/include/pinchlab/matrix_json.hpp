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

// Matrix JSON: {"rows": n, "cols": m, "data": [[re, im], ...]} in row-major
// order. Doubles are written in shortest round-trip form, so a parse of the
// emitted text reproduces every finite entry bit for bit.

#include <string>

#include <json.hpp>

#include "pinchlab/linalg.hpp"

namespace pinchlab {

nlohmann::json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j);

std::string matrix_to_string(const ComplexMatrix& m);
ComplexMatrix matrix_from_string(const std::string& text);

nlohmann::json complex_to_json(Complex z);
/// Accepts [re, im] or a bare real number.
Complex complex_from_json(const nlohmann::json& j);

}  // namespace pinchlab
