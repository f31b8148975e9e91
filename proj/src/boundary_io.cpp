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

#include "pinchlab/boundary_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

namespace pinchlab {

namespace {

void append_double(std::string& out, double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  out.append(buf, res.ptr);
}

}  // namespace

std::string boundary_to_csv(const NumericalRangeBoundary& boundary) {
  std::string out = "theta,support,re,im\n";
  for (const auto& s : boundary.samples) {
    append_double(out, s.theta);
    out += ',';
    append_double(out, s.support);
    out += ',';
    append_double(out, s.point.real());
    out += ',';
    append_double(out, s.point.imag());
    out += '\n';
  }
  return out;
}

std::string boundary_to_svg(const NumericalRangeBoundary& boundary) {
  double extent = 1.0;
  for (const auto& s : boundary.samples) {
    extent = std::max({extent, std::abs(s.point.real()), std::abs(s.point.imag())});
  }
  extent *= 1.1;
  constexpr double kSize = 480.0;
  const double scale = kSize / (2.0 * extent);
  const auto px = [&](double x) { return kSize / 2.0 + scale * x; };
  const auto py = [&](double y) { return kSize / 2.0 - scale * y; };

  std::ostringstream os;
  os.precision(6);
  os << std::fixed;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\"" << kSize
     << "\" viewBox=\"0 0 " << kSize << ' ' << kSize << "\">\n";
  os << "  <line x1=\"0\" y1=\"" << py(0) << "\" x2=\"" << kSize << "\" y2=\"" << py(0)
     << "\" stroke=\"#bbb\"/>\n";
  os << "  <line x1=\"" << px(0) << "\" y1=\"0\" x2=\"" << px(0) << "\" y2=\"" << kSize
     << "\" stroke=\"#bbb\"/>\n";
  os << "  <circle cx=\"" << px(0) << "\" cy=\"" << py(0) << "\" r=\"" << scale
     << "\" fill=\"none\" stroke=\"#888\" stroke-dasharray=\"4 3\"/>\n";
  os << "  <polygon fill=\"rgba(70,130,180,0.25)\" stroke=\"steelblue\" points=\"";
  for (const auto& s : boundary.samples) {
    os << px(s.point.real()) << ',' << py(s.point.imag()) << ' ';
  }
  os << "\"/>\n</svg>\n";
  return os.str();
}

}  // namespace pinchlab
