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

#include "pinchlab/expectation.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

#include "pinchlab/error.hpp"
#include "pinchlab/sampling.hpp"

namespace pinchlab {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

MasaPartition MasaPartition::parse(std::string_view text, std::optional<Eigen::Index> dim) {
  MasaPartition p;
  Eigen::Index largest = 0;
  for (auto block_text : split(text, ';')) {
    block_text = trim(block_text);
    if (block_text.empty()) fail(ErrorCode::kParseError, "blocks: empty block");
    std::vector<Eigen::Index> block;
    for (auto item : split(block_text, ',')) {
      item = trim(item);
      long long value = 0;
      const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
      if (ec != std::errc() || ptr != item.data() + item.size() || value < 1) {
        fail(ErrorCode::kParseError,
             "blocks: expected a positive 1-based index, got '" + std::string(item) + "'");
      }
      block.push_back(static_cast<Eigen::Index>(value - 1));
      largest = std::max<Eigen::Index>(largest, value);
    }
    p.blocks.push_back(std::move(block));
  }
  p.dim = dim.value_or(largest);
  p.validate();
  return p;
}

MasaPartition MasaPartition::singletons(Eigen::Index dim) {
  MasaPartition p;
  p.dim = dim;
  for (Eigen::Index i = 0; i < dim; ++i) p.blocks.push_back({i});
  return p;
}

MasaPartition MasaPartition::trivial(Eigen::Index dim) {
  MasaPartition p;
  p.dim = dim;
  if (dim > 0) {
    p.blocks.emplace_back();
    for (Eigen::Index i = 0; i < dim; ++i) p.blocks.back().push_back(i);
  }
  return p;
}

void MasaPartition::validate() const {
  if (dim < 0) fail(ErrorCode::kInvalidArgument, "partition: negative dimension");
  if (!labels.empty() && labels.size() != blocks.size()) {
    fail(ErrorCode::kInvalidArgument, "partition: label count differs from block count");
  }
  std::vector<char> seen(static_cast<std::size_t>(dim), 0);
  for (const auto& block : blocks) {
    if (block.empty()) fail(ErrorCode::kInvalidArgument, "partition: empty block");
    for (const auto i : block) {
      if (i < 0 || i >= dim) {
        fail(ErrorCode::kInvalidArgument, "partition: index out of range");
      }
      if (seen[static_cast<std::size_t>(i)]++) {
        fail(ErrorCode::kInvalidArgument, "partition: blocks overlap");
      }
    }
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
    fail(ErrorCode::kInvalidArgument, "partition: blocks do not cover every coordinate");
  }
}

std::string MasaPartition::to_string() const {
  std::string out;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (b) out += ';';
    for (std::size_t i = 0; i < blocks[b].size(); ++i) {
      if (i) out += ',';
      out += std::to_string(blocks[b][i] + 1);
    }
  }
  return out;
}

ComplexMatrix MasaPartition::projection(std::size_t block) const {
  ComplexMatrix p = ComplexMatrix::Zero(dim, dim);
  for (const auto i : blocks.at(block)) p(i, i) = 1.0;
  return p;
}

std::size_t MasaPartition::block_of(Eigen::Index coordinate) const {
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (std::find(blocks[b].begin(), blocks[b].end(), coordinate) != blocks[b].end()) return b;
  }
  fail(ErrorCode::kInvalidArgument, "partition: coordinate not covered");
}

MasaPartition random_partition(Eigen::Index dim, Rng& rng) {
  std::vector<Eigen::Index> order(static_cast<std::size_t>(dim));
  for (Eigen::Index i = 0; i < dim; ++i) order[static_cast<std::size_t>(i)] = i;
  std::shuffle(order.begin(), order.end(), rng);
  MasaPartition p;
  p.dim = dim;
  std::bernoulli_distribution cut(0.5);
  for (Eigen::Index i = 0; i < dim; ++i) {
    if (i == 0 || cut(rng)) p.blocks.emplace_back();
    p.blocks.back().push_back(order[static_cast<std::size_t>(i)]);
  }
  return p;
}

nlohmann::json partition_to_json(const MasaPartition& p) {
  nlohmann::json blocks = nlohmann::json::array();
  for (const auto& block : p.blocks) {
    nlohmann::json b = nlohmann::json::array();
    for (const auto i : block) b.push_back(i + 1);
    blocks.push_back(std::move(b));
  }
  nlohmann::json out = {{"dim", p.dim}, {"blocks", std::move(blocks)}};
  if (!p.labels.empty()) out["labels"] = p.labels;
  return out;
}

MasaPartition partition_from_json(const nlohmann::json& j) {
  MasaPartition p;
  try {
    p.dim = j.at("dim").get<Eigen::Index>();
    for (const auto& block : j.at("blocks")) {
      std::vector<Eigen::Index> b;
      for (const auto& i : block) b.push_back(i.get<Eigen::Index>() - 1);
      p.blocks.push_back(std::move(b));
    }
    if (j.contains("labels")) p.labels = j["labels"].get<std::vector<std::string>>();
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::kParseError, std::string("partition JSON: ") + e.what());
  }
  p.validate();
  return p;
}

ComplexMatrix conditional_expectation(const ComplexMatrix& z, const MasaPartition& masa) {
  require_square(z, "conditional_expectation");
  if (z.rows() != masa.dim) {
    fail(ErrorCode::kDimensionMismatch,
         "conditional_expectation: matrix dimension differs from the partition");
  }
  ComplexMatrix out = ComplexMatrix::Zero(z.rows(), z.cols());
  for (const auto& block : masa.blocks) {
    for (const auto r : block) {
      for (const auto c : block) out(r, c) = z(r, c);
    }
  }
  return out;
}

ReductionReport check_reduction(const ComplexMatrix& z, const MasaPartition& masa,
                                std::size_t samples, const ReductionOptions& opts) {
  if (samples < 1) fail(ErrorCode::kInvalidArgument, "check_reduction: samples must be >= 1");
  const ComplexMatrix e = conditional_expectation(z, masa);
  ReductionReport report;
  report.worst_violation = -std::numeric_limits<double>::infinity();
  if (z.rows() == 0) return report;

  const SupportTable table(z, opts.resolution);
  const auto record = [&](Complex w, const ComplexVector& h) {
    const double v = table.max_violation(w);
    if (v > report.worst_violation) report.worst_violation = v;
    if (v > opts.margin && report.passed) {
      report.passed = false;
      report.witness_point = w;
      report.witness_vector = h;
    }
  };

  for (std::size_t s = 0; s < samples; ++s) {
    Rng rng(derive_seed(opts.seed, s));
    const ComplexVector h = random_unit_vector(z.rows(), rng);
    record(h.dot(e * h), h);
    ++report.samples_checked;
  }
  for (const auto& b : nr_boundary(e, opts.resolution).samples) {
    record(b.point, b.witness);
    ++report.boundary_checked;
  }
  return report;
}

}  // namespace pinchlab
