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

// Command-line front end over the pinchlab C API.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pinchlab/pinchlab.h"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitVerification = 2;
constexpr int kExitUsage = 64;

struct ApiFailure {
  pl_status status;
  std::string message;
};

struct UsageFailure {
  std::string message;
};

void check(pl_status status) {
  if (status != PL_OK) throw ApiFailure{status, pl_last_error()};
}

struct MatrixDeleter {
  void operator()(pl_matrix* m) const { pl_matrix_free(m); }
};
struct BoundaryDeleter {
  void operator()(pl_boundary* b) const { pl_boundary_free(b); }
};
struct MasaDeleter {
  void operator()(pl_masa* m) const { pl_masa_free(m); }
};
struct PlanDeleter {
  void operator()(pl_plan* p) const { pl_plan_free(p); }
};
struct ChannelDeleter {
  void operator()(pl_channel* c) const { pl_channel_free(c); }
};
using Matrix = std::unique_ptr<pl_matrix, MatrixDeleter>;
using Boundary = std::unique_ptr<pl_boundary, BoundaryDeleter>;
using Masa = std::unique_ptr<pl_masa, MasaDeleter>;
using Plan = std::unique_ptr<pl_plan, PlanDeleter>;
using Channel = std::unique_ptr<pl_channel, ChannelDeleter>;

// Takes ownership of a string allocated by the library.
std::string take(char* s) {
  std::string out(s ? s : "");
  pl_string_free(s);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ApiFailure{PL_ERR_IO, "cannot open " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ApiFailure{PL_ERR_IO, "cannot write " + path};
  out << text;
  if (text.empty() || text.back() != '\n') out << '\n';
}

json parse_json(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ApiFailure{PL_ERR_PARSE, origin + ": " + e.what()};
  }
}

Matrix load_matrix(const std::string& path) {
  pl_matrix* m = nullptr;
  check(pl_matrix_from_json(read_file(path).c_str(), &m));
  return Matrix(m);
}

Matrix matrix_from_value(const json& value) {
  pl_matrix* m = nullptr;
  check(pl_matrix_from_json(value.dump().c_str(), &m));
  return Matrix(m);
}

json matrix_value(const pl_matrix* m) {
  char* s = nullptr;
  check(pl_matrix_to_json(m, &s));
  return json::parse(take(s));
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

unsigned thread_cap() {
  if (const char* env = std::getenv("PINCHLAB_THREADS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0') return static_cast<unsigned>(v);
    throw UsageFailure{"PINCHLAB_THREADS must be a non-negative integer"};
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

struct Globals {
  std::uint64_t seed = 7;
  std::size_t resolution = 720;
  double tol = 1e-10;
  double margin = 1e-8;
  bool reproducible = false;
};

// Report objects carry a timestamp unless the run is reproducible.
std::string report_text(json report, const Globals& g) {
  if (!g.reproducible) report["generated_at"] = utc_timestamp();
  return report.dump(2);
}

std::vector<double> parse_values(const json& values) {
  if (!values.is_array()) throw ApiFailure{PL_ERR_PARSE, "values must be a JSON array"};
  std::vector<double> out;
  for (const auto& v : values) {
    if (v.is_number()) {
      out.push_back(v.get<double>());
      out.push_back(0.0);
    } else if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
      out.push_back(v[0].get<double>());
      out.push_back(v[1].get<double>());
    } else {
      throw ApiFailure{PL_ERR_PARSE, "each value must be a number or [re, im]"};
    }
  }
  return out;
}

double parse_a(const std::string& text) {
  if (text == "auto") return 0.0;
  try {
    std::size_t used = 0;
    const double a = std::stod(text, &used);
    if (used == text.size() && a > 0.0) return a;
  } catch (const std::exception&) {
  }
  throw UsageFailure{"--a must be 'auto' or a positive number"};
}

std::vector<double> parse_weights(const std::string& text) {
  std::vector<double> w;
  if (text == "auto") return w;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      w.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageFailure{"--weights must be 'auto' or comma-separated numbers"};
    }
  }
  return w;
}

std::vector<Plan> load_plans(const std::string& path) {
  const json doc = parse_json(read_file(path), path);
  std::vector<Plan> plans;
  auto add = [&](const json& j) {
    pl_plan* p = nullptr;
    check(pl_plan_from_json(j.dump().c_str(), &p));
    plans.emplace_back(p);
  };
  if (doc.is_array()) {
    for (const auto& j : doc) add(j);
  } else {
    add(doc);
  }
  return plans;
}

int run_numrange(const Globals& g, const std::string& input, const std::string& output,
                 const std::string& svg) {
  const Matrix a = load_matrix(input);
  pl_boundary* raw = nullptr;
  check(pl_nr_boundary(a.get(), g.resolution, thread_cap(), &raw));
  const Boundary b(raw);
  char* csv = nullptr;
  check(pl_boundary_to_csv(b.get(), &csv));
  write_output(output, take(csv));
  if (!svg.empty()) {
    char* text = nullptr;
    check(pl_boundary_to_svg(b.get(), &text));
    write_output(svg, take(text));
  }
  return kExitOk;
}

int run_disc_check(const Globals& g, const std::string& input, double ma, double radius) {
  Matrix a;
  pl_matrix* raw = nullptr;
  if (!input.empty()) {
    a = load_matrix(input);
  } else {
    check(pl_make_ma(ma, &raw));
    a.reset(raw);
  }
  int contained = 0;
  check(pl_disc_in_nr(a.get(), radius, g.resolution, &contained));
  const json out = {{"radius", radius}, {"resolution", g.resolution}, {"contained", contained != 0}};
  std::cout << out.dump(2) << '\n';
  return contained ? kExitOk : kExitVerification;
}

int run_optimal_a() {
  pl_optimal_constant oc{};
  check(pl_optimal_a(&oc));
  const json out = {{"a_star", oc.a_star},
                    {"r_star_sq", oc.r_star_sq},
                    {"norm", oc.norm},
                    {"closed_form", {{"a_star", oc.closed_a_star},
                                     {"r_star_sq", oc.closed_r_star_sq},
                                     {"norm", oc.closed_norm}}}};
  std::cout << out.dump(2) << '\n';
  return kExitOk;
}

int run_idempotent(const Globals& g, const std::string& action, const std::string& input,
                   const std::string& output) {
  const Matrix q = load_matrix(input);
  if (action == "canon") {
    char* text = nullptr;
    check(pl_idempotent_canonical(q.get(), g.tol, &text));
    write_output(output, json::parse(take(text)).dump(2));
    return kExitOk;
  }
  pl_defect d{};
  check(pl_self_adjoint_defect(q.get(), g.tol, &d));
  const json out = {{"pos_norm", d.pos_norm}, {"neg_norm", d.neg_norm}, {"holds", d.holds != 0}};
  write_output(output, out.dump(2));
  return kExitOk;
}

int run_realize(const std::string& values_path, bool block_mode, const std::string& a_text,
                std::size_t variant, std::size_t count, const std::string& output) {
  const double a = parse_a(a_text);
  const json values = parse_json(read_file(values_path), values_path);
  std::vector<Matrix> blocks;
  std::vector<const pl_matrix*> block_ptrs;
  std::vector<double> diag;
  if (block_mode) {
    if (!values.is_array()) throw ApiFailure{PL_ERR_PARSE, "block values must be a JSON array"};
    for (const auto& v : values) {
      blocks.push_back(matrix_from_value(v));
      block_ptrs.push_back(blocks.back().get());
    }
  } else {
    diag = parse_values(values);
  }
  json plans = json::array();
  for (std::size_t i = 0; i < count; ++i) {
    pl_plan* raw = nullptr;
    if (block_mode) {
      check(pl_realize_normal_blocks(block_ptrs.data(), block_ptrs.size(), a, variant + i, &raw));
    } else {
      check(pl_realize_diagonal(diag.data(), diag.size() / 2, a, variant + i, &raw));
    }
    const Plan plan(raw);
    char* text = nullptr;
    check(pl_plan_to_json(plan.get(), &text));
    plans.push_back(json::parse(take(text)));
  }
  write_output(output, (count == 1 ? plans[0] : plans).dump(2));
  return kExitOk;
}

int run_average(const std::string& plan_path, const std::string& output) {
  pl_plan* raw = nullptr;
  check(pl_plan_from_json(read_file(plan_path).c_str(), &raw));
  const Plan plan(raw);
  pl_matrix *u = nullptr, *v = nullptr, *avg = nullptr;
  double offdiag = 0.0;
  check(pl_two_orbit_average(plan.get(), &u, &v, &avg, &offdiag));
  const Matrix mu(u), mv(v), mavg(avg);
  const json out = {{"u", matrix_value(mu.get())},
                    {"v", matrix_value(mv.get())},
                    {"average", matrix_value(mavg.get())},
                    {"offdiag_norm", offdiag}};
  write_output(output, out.dump(2));
  return kExitOk;
}

int run_expect(const Globals& g, const std::string& action, const std::string& input,
               const std::string& blocks, std::size_t samples, const std::string& output) {
  const Matrix z = load_matrix(input);
  pl_masa* raw = nullptr;
  check(pl_masa_parse(blocks.c_str(), pl_matrix_rows(z.get()), &raw));
  const Masa masa(raw);
  if (action == "check") {
    char* text = nullptr;
    int passed = 0;
    check(pl_check_reduction(z.get(), masa.get(), samples, g.seed, g.margin, g.resolution, &text,
                             &passed));
    write_output(output, report_text(json::parse(take(text)), g));
    return passed ? kExitOk : kExitVerification;
  }
  pl_matrix* e = nullptr;
  check(pl_conditional_expectation(z.get(), masa.get(), &e));
  const Matrix me(e);
  write_output(output, matrix_value(me.get()).dump(2));
  return kExitOk;
}

int run_channel(const Globals& g, const std::string& action, const std::string& kind,
                const std::string& plans_path, const std::string& blocks,
                const std::string& weights_text, const std::string& input,
                const std::string& matrix_path, std::size_t trials, const std::string& output) {
  if (action == "build") {
    pl_channel* raw = nullptr;
    if (kind == "pinching") {
      if (blocks.empty()) throw UsageFailure{"channel build --kind pinching needs --blocks"};
      pl_masa* m = nullptr;
      check(pl_masa_parse(blocks.c_str(), 0, &m));
      const Masa masa(m);
      check(pl_channel_pinching(masa.get(), &raw));
    } else {
      if (plans_path.empty()) throw UsageFailure{"channel build --kind mixture needs --plans"};
      const std::vector<Plan> plans = load_plans(plans_path);
      std::vector<const pl_plan*> ptrs;
      for (const auto& p : plans) ptrs.push_back(p.get());
      const std::vector<double> w = parse_weights(weights_text);
      if (!w.empty() && w.size() != ptrs.size()) {
        throw UsageFailure{"--weights must list one weight per plan"};
      }
      check(pl_channel_mixture(ptrs.data(), ptrs.size(), w.empty() ? nullptr : w.data(), &raw));
    }
    const Channel ch(raw);
    char* text = nullptr;
    check(pl_channel_to_json(ch.get(), &text));
    write_output(output, json::parse(take(text)).dump(2));
    return kExitOk;
  }

  if (input.empty()) throw UsageFailure{"channel " + action + " needs --input"};
  pl_channel* raw = nullptr;
  check(pl_channel_from_json(read_file(input).c_str(), &raw));
  const Channel ch(raw);
  if (action == "apply") {
    if (matrix_path.empty()) throw UsageFailure{"channel apply needs --matrix"};
    const Matrix z = load_matrix(matrix_path);
    pl_matrix* out = nullptr;
    check(pl_channel_apply(ch.get(), z.get(), &out));
    const Matrix mo(out);
    write_output(output, matrix_value(mo.get()).dump(2));
    return kExitOk;
  }
  char* text = nullptr;
  int ok = 0;
  check(pl_channel_verify(ch.get(), trials, g.seed, &text, &ok));
  write_output(output, report_text(json::parse(take(text)), g));
  return ok ? kExitOk : kExitVerification;
}

int run_obstruction(const std::string& a_path, const std::string& x_path) {
  const Matrix a = load_matrix(a_path);
  const Matrix x = load_matrix(x_path);
  double d = 0.0;
  check(pl_hermitian_orbit_distance(a.get(), x.get(), &d));
  std::cout << json{{"distance", d}}.dump(2) << '\n';
  return kExitOk;
}

int run_verify_all(const Globals& g, bool timing, const std::string& output) {
  char* text = nullptr;
  char* table = nullptr;
  int all = 0;
  check(pl_verify_all(g.seed, timing ? 1 : 0, &text, &table, &all));
  std::cout << take(table);
  const std::string report = report_text(json::parse(take(text)), g);
  if (!output.empty()) write_output(output, report);
  return all ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pinchlab: numerical ranges, idempotents, pinchings and channels"};
  app.set_version_flag("--version", std::string(pl_version()));
  app.require_subcommand(1);

  Globals g;
  app.add_option("--seed", g.seed, "Random seed")->capture_default_str();
  app.add_option("--resolution", g.resolution, "Boundary sweep resolution")
      ->check(CLI::Range(std::size_t{3}, std::size_t{100000000}))
      ->capture_default_str();
  app.add_option("--tol", g.tol, "Numerical tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--margin", g.margin, "Containment margin")->capture_default_str();
  app.add_flag("--reproducible", g.reproducible, "Omit the generated_at timestamp");

  std::string input, output, svg, blocks, plan_path, values_path, a_text = "auto";
  std::string kind = "pinching", plans_path, weights_text = "auto", a_matrix, x_matrix;
  std::string action, matrix_path;
  double ma = 0.0, radius = 1.0;
  std::size_t samples = 1000, trials = 500, variant = 0, count = 1;
  bool block_mode = false, timing = false;

  auto* numrange = app.add_subcommand("numrange", "Sample the numerical range boundary");
  numrange->add_option("--input", input, "Matrix JSON")->required();
  numrange->add_option("--output", output, "CSV path (stdout if omitted)");
  numrange->add_option("--svg", svg, "Optional SVG rendering");

  auto* disc = app.add_subcommand("disc-check", "Test whether a disc lies in W(A)");
  auto* disc_input = disc->add_option("--input", input, "Matrix JSON");
  disc->add_option("--ma", ma, "Use M_a with this a")->excludes(disc_input);
  disc->add_option("--radius", radius, "Disc radius")->required();

  auto* opt = app.add_subcommand("optimal-a", "Optimal constant of the M_a family");

  auto* idem = app.add_subcommand("idempotent", "Idempotent canonical form and defect");
  idem->add_option("action", action, "canon | defect")
      ->required()
      ->check(CLI::IsMember({"canon", "defect"}));
  idem->add_option("--input", input, "Matrix JSON")->required();
  idem->add_option("--output", output, "Output path (stdout if omitted)");

  auto* realize = app.add_subcommand("realize", "Realize prescribed values as a pinching");
  realize->add_option("--values", values_path, "JSON array of values or blocks")->required();
  realize->add_flag("--block-mode", block_mode, "Values are normal matrix blocks");
  realize->add_option("--a", a_text, "'auto' or a value at least a*")->capture_default_str();
  realize->add_option("--variant", variant, "Host copy offset")->capture_default_str();
  realize->add_option("--count", count, "Emit this many consecutive variants")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  realize->add_option("--output", output, "Plan JSON path (stdout if omitted)");

  auto* average = app.add_subcommand("average", "Two-orbit average of a plan");
  average->add_option("--plan", plan_path, "Plan JSON")->required();
  average->add_option("--output", output, "Output path (stdout if omitted)");

  auto* expect = app.add_subcommand("expect", "Conditional expectation onto a masa");
  expect->add_option("action", action, "apply (default) | check")
      ->check(CLI::IsMember({"apply", "check"}));
  expect->add_option("--input", input, "Matrix JSON")->required();
  expect->add_option("--blocks", blocks, "Blocks such as \"1;2;3,4\"")->required();
  expect->add_option("--samples", samples, "Samples for check")->capture_default_str();
  expect->add_option("--output", output, "Output path (stdout if omitted)");

  auto* channel = app.add_subcommand("channel", "Build, apply or verify a channel");
  channel->add_option("action", action, "build | apply | verify")
      ->required()
      ->check(CLI::IsMember({"build", "apply", "verify"}));
  channel->add_option("--kind", kind, "pinching | mixture")
      ->check(CLI::IsMember({"pinching", "mixture"}))
      ->capture_default_str();
  channel->add_option("--plans", plans_path, "Plan JSON (object or array)");
  channel->add_option("--blocks", blocks, "Blocks for a pinching channel");
  channel->add_option("--weights", weights_text, "'auto' or comma-separated weights")
      ->capture_default_str();
  channel->add_option("--input", input, "Channel JSON");
  channel->add_option("--matrix", matrix_path, "Matrix JSON for apply");
  channel->add_option("--trials", trials, "Random trials for verify")->capture_default_str();
  channel->add_option("--output", output, "Output path (stdout if omitted)");

  auto* obstruction = app.add_subcommand("obstruction", "Distance between Hermitian orbits");
  obstruction->add_option("--A", a_matrix, "Matrix JSON")->required();
  obstruction->add_option("--X", x_matrix, "Matrix JSON")->required();

  auto* verify = app.add_subcommand("verify-all", "Run the acceptance suite");
  verify->add_flag("--timing", timing, "Include timings in the JSON report");
  verify->add_option("--output", output, "JSON report path");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (disc->parsed() && input.empty() && disc->count("--ma") == 0) {
      throw UsageFailure{"disc-check needs --input or --ma"};
    }
    if (numrange->parsed()) return run_numrange(g, input, output, svg);
    if (disc->parsed()) return run_disc_check(g, input, ma, radius);
    if (opt->parsed()) return run_optimal_a();
    if (idem->parsed()) return run_idempotent(g, action, input, output);
    if (realize->parsed()) {
      return run_realize(values_path, block_mode, a_text, variant, count, output);
    }
    if (average->parsed()) return run_average(plan_path, output);
    if (expect->parsed()) return run_expect(g, action, input, blocks, samples, output);
    if (channel->parsed()) {
      return run_channel(g, action, kind, plans_path, blocks, weights_text, input, matrix_path,
                         trials, output);
    }
    if (obstruction->parsed()) return run_obstruction(a_matrix, x_matrix);
    if (verify->parsed()) return run_verify_all(g, timing, output);
  } catch (const UsageFailure& e) {
    std::cerr << "usage error: " << e.message << '\n';
    return kExitUsage;
  } catch (const ApiFailure& e) {
    std::cerr << "error: " << pl_status_name(e.status) << ": " << e.message << '\n';
    return kExitDomain;
  }
  return kExitUsage;
}
