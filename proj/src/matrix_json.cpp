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

#include "pinchlab/matrix_json.hpp"

#include <cmath>

#include "pinchlab/error.hpp"

namespace pinchlab {

nlohmann::json complex_to_json(Complex z) {
  return nlohmann::json::array({z.real(), z.imag()});
}

Complex complex_from_json(const nlohmann::json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    fail(ErrorCode::kParseError, "complex value must be [re, im] or a number");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

nlohmann::json matrix_to_json(const ComplexMatrix& m) {
  require_finite(m, "matrix_to_json");
  nlohmann::json data = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      data.push_back(complex_to_json(m(i, j)));
    }
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

ComplexMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") ||
      !j.contains("data")) {
    fail(ErrorCode::kParseError, "matrix JSON needs rows, cols and data");
  }
  if (!j["rows"].is_number_unsigned() || !j["cols"].is_number_unsigned()) {
    fail(ErrorCode::kParseError, "matrix rows/cols must be non-negative integers");
  }
  const auto rows = j["rows"].get<Eigen::Index>();
  const auto cols = j["cols"].get<Eigen::Index>();
  const auto& data = j["data"];
  if (!data.is_array() || static_cast<Eigen::Index>(data.size()) != rows * cols) {
    fail(ErrorCode::kParseError, "matrix data length must equal rows*cols");
  }
  ComplexMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index c = 0; c < cols; ++c) {
      m(i, c) = complex_from_json(data[static_cast<std::size_t>(i * cols + c)]);
    }
  }
  if (!all_finite(m)) fail(ErrorCode::kParseError, "matrix has non-finite entries");
  return m;
}

std::string matrix_to_string(const ComplexMatrix& m) {
  return matrix_to_json(m).dump();
}

ComplexMatrix matrix_from_string(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorCode::kParseError, e.what());
  }
  return matrix_from_json(j);
}

}  // namespace pinchlab
