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

#include "pinchlab/pinchlab.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "pinchlab/boundary_io.hpp"
#include "pinchlab/channel.hpp"
#include "pinchlab/error.hpp"
#include "pinchlab/expectation.hpp"
#include "pinchlab/idempotent.hpp"
#include "pinchlab/matrix_json.hpp"
#include "pinchlab/numrange.hpp"
#include "pinchlab/pinching.hpp"
#include "pinchlab/verify.hpp"

struct pl_matrix {
  pinchlab::ComplexMatrix m;
};
struct pl_boundary {
  pinchlab::NumericalRangeBoundary b;
};
struct pl_masa {
  pinchlab::MasaPartition p;
};
struct pl_plan {
  pinchlab::PinchingPlan p;
};
struct pl_channel {
  pinchlab::ChannelSpec c;
};

namespace {

using pinchlab::Complex;
using pinchlab::ComplexMatrix;
using pinchlab::ErrorCode;

thread_local std::string g_last_error;

template <typename Body>
pl_status guarded(Body&& body) noexcept {
  try {
    body();
    return PL_OK;
  } catch (const pinchlab::Error& e) {
    g_last_error = e.what();
    return static_cast<pl_status>(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return PL_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return PL_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return PL_ERR_INTERNAL;
  }
}

void require(bool condition, const char* what) {
  if (!condition) pinchlab::fail(ErrorCode::kInvalidArgument, what);
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

pl_matrix* wrap(ComplexMatrix m) { return new pl_matrix{std::move(m)}; }

nlohmann::json parse_json(const char* text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    pinchlab::fail(ErrorCode::kParseError, e.what());
  }
}

}  // namespace

extern "C" {

const char* pl_last_error(void) { return g_last_error.c_str(); }

const char* pl_status_name(pl_status status) {
  if (status == PL_OK) return "Ok";
  if (status == PL_ERR_INTERNAL) return "Internal";
  return pinchlab::error_code_name(static_cast<ErrorCode>(status)).data();
}

void pl_string_free(char* s) { std::free(s); }

const char* pl_version(void) { return "0.1.0"; }

pl_status pl_matrix_create(size_t rows, size_t cols, const double* data, pl_matrix** out) {
  return guarded([&] {
    require(out != nullptr, "pl_matrix_create: out is NULL");
    ComplexMatrix m = ComplexMatrix::Zero(static_cast<Eigen::Index>(rows),
                                          static_cast<Eigen::Index>(cols));
    if (data) {
      for (size_t i = 0; i < rows; ++i) {
        for (size_t j = 0; j < cols; ++j) {
          const size_t k = 2 * (i * cols + j);
          m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = Complex(data[k], data[k + 1]);
        }
      }
    }
    pinchlab::require_finite(m, "pl_matrix_create");
    *out = wrap(std::move(m));
  });
}

pl_status pl_matrix_from_json(const char* json, pl_matrix** out) {
  return guarded([&] {
    require(json && out, "pl_matrix_from_json: NULL argument");
    *out = wrap(pinchlab::matrix_from_string(json));
  });
}

pl_status pl_matrix_to_json(const pl_matrix* m, char** out) {
  return guarded([&] {
    require(m && out, "pl_matrix_to_json: NULL argument");
    *out = dup_string(pinchlab::matrix_to_string(m->m));
  });
}

pl_status pl_matrix_clone(const pl_matrix* m, pl_matrix** out) {
  return guarded([&] {
    require(m && out, "pl_matrix_clone: NULL argument");
    *out = wrap(m->m);
  });
}

size_t pl_matrix_rows(const pl_matrix* m) { return m ? static_cast<size_t>(m->m.rows()) : 0; }
size_t pl_matrix_cols(const pl_matrix* m) { return m ? static_cast<size_t>(m->m.cols()) : 0; }

pl_status pl_matrix_get(const pl_matrix* m, size_t row, size_t col, double* re, double* im) {
  return guarded([&] {
    require(m && re && im, "pl_matrix_get: NULL argument");
    if (row >= pl_matrix_rows(m) || col >= pl_matrix_cols(m)) {
      pinchlab::fail(ErrorCode::kInvalidArgument, "pl_matrix_get: index out of range");
    }
    const Complex z = m->m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
    *re = z.real();
    *im = z.imag();
  });
}

pl_status pl_matrix_operator_norm(const pl_matrix* m, double* out) {
  return guarded([&] {
    require(m && out, "pl_matrix_operator_norm: NULL argument");
    *out = pinchlab::operator_norm(m->m);
  });
}

void pl_matrix_free(pl_matrix* m) { delete m; }

pl_status pl_nr_support(const pl_matrix* a, double theta, double* support, pl_matrix** witness) {
  return guarded([&] {
    require(a && support, "pl_nr_support: NULL argument");
    auto s = pinchlab::nr_support(a->m, theta);
    *support = s.support;
    if (witness) *witness = wrap(ComplexMatrix(s.witness));
  });
}

pl_status pl_nr_boundary(const pl_matrix* a, size_t resolution, unsigned threads,
                         pl_boundary** out) {
  return guarded([&] {
    require(a && out, "pl_nr_boundary: NULL argument");
    *out = new pl_boundary{pinchlab::nr_boundary(a->m, resolution, threads)};
  });
}

size_t pl_boundary_size(const pl_boundary* b) { return b ? b->b.samples.size() : 0; }

pl_status pl_boundary_sample(const pl_boundary* b, size_t index, double* theta, double* support,
                             double* re, double* im) {
  return guarded([&] {
    require(b && theta && support && re && im, "pl_boundary_sample: NULL argument");
    const auto& s = b->b.samples.at(index);
    *theta = s.theta;
    *support = s.support;
    *re = s.point.real();
    *im = s.point.imag();
  });
}

pl_status pl_boundary_to_csv(const pl_boundary* b, char** out) {
  return guarded([&] {
    require(b && out, "pl_boundary_to_csv: NULL argument");
    *out = dup_string(pinchlab::boundary_to_csv(b->b));
  });
}

pl_status pl_boundary_to_svg(const pl_boundary* b, char** out) {
  return guarded([&] {
    require(b && out, "pl_boundary_to_svg: NULL argument");
    *out = dup_string(pinchlab::boundary_to_svg(b->b));
  });
}

void pl_boundary_free(pl_boundary* b) { delete b; }

pl_status pl_nr_contains(const pl_matrix* a, double re, double im, double margin,
                         size_t resolution, int* out) {
  return guarded([&] {
    require(a && out, "pl_nr_contains: NULL argument");
    *out = pinchlab::nr_contains(a->m, Complex(re, im), margin, resolution) ? 1 : 0;
  });
}

pl_status pl_disc_in_nr(const pl_matrix* a, double radius, size_t resolution, int* out) {
  return guarded([&] {
    require(a && out, "pl_disc_in_nr: NULL argument");
    *out = pinchlab::disc_in_nr(a->m, radius, resolution) ? 1 : 0;
  });
}

pl_status pl_nr_ellipse_2x2(const pl_matrix* a, pl_ellipse* out) {
  return guarded([&] {
    require(a && out, "pl_nr_ellipse_2x2: NULL argument");
    const auto e = pinchlab::nr_ellipse_2x2(a->m);
    *out = {e.center.real(),   e.center.imag(),   e.foci[0].real(), e.foci[0].imag(),
            e.foci[1].real(),  e.foci[1].imag(),  e.semi_major,     e.semi_minor};
  });
}

pl_status pl_ma_circle(double a, double r, double* center, double* radius) {
  return guarded([&] {
    require(center && radius, "pl_ma_circle: NULL argument");
    const auto c = pinchlab::ma_circle(a, r);
    *center = c.center;
    *radius = c.radius;
  });
}

pl_status pl_ma_witness(double a, double re, double im, double h[4]) {
  return guarded([&] {
    require(h != nullptr, "pl_ma_witness: NULL argument");
    const auto w = pinchlab::ma_witness(a, Complex(re, im));
    h[0] = w(0).real();
    h[1] = w(0).imag();
    h[2] = w(1).real();
    h[3] = w(1).imag();
  });
}

pl_status pl_optimal_a(pl_optimal_constant* out) {
  return guarded([&] {
    require(out != nullptr, "pl_optimal_a: NULL argument");
    const auto oc = pinchlab::optimal_a();
    *out = {oc.a_star, oc.r_star_sq, oc.norm, oc.closed_a_star, oc.closed_r_star_sq, oc.closed_norm};
  });
}

pl_status pl_we_of_model(const pl_matrix* exceptional, const pl_matrix* repeated, double scale_re,
                         double scale_im, pl_matrix** out) {
  return guarded([&] {
    require(repeated && out, "pl_we_of_model: NULL argument");
    pinchlab::OperatorModel model;
    if (exceptional) model.exceptional = exceptional->m;
    model.repeated = repeated->m;
    model.scale = Complex(scale_re, scale_im);
    *out = wrap(pinchlab::we_of_model(model));
  });
}

pl_status pl_inflate_2x2(const pl_matrix* d, double radius, double* c, pl_matrix** similarity,
                         pl_matrix** conjugated) {
  return guarded([&] {
    require(d && c, "pl_inflate_2x2: NULL argument");
    auto inf = pinchlab::inflate_2x2(d->m, radius);
    *c = inf.c;
    if (similarity) *similarity = wrap(std::move(inf.similarity));
    if (conjugated) *conjugated = wrap(std::move(inf.conjugated));
  });
}

pl_status pl_make_ma(double a, pl_matrix** out) {
  return guarded([&] {
    require(out != nullptr, "pl_make_ma: NULL argument");
    *out = wrap(pinchlab::make_ma(a));
  });
}

pl_status pl_is_idempotent(const pl_matrix* q, double tol, int* out) {
  return guarded([&] {
    require(q && out, "pl_is_idempotent: NULL argument");
    *out = pinchlab::is_idempotent(q->m, tol) ? 1 : 0;
  });
}

pl_status pl_idempotent_canonical(const pl_matrix* q, double tol, char** json) {
  return guarded([&] {
    require(q && json, "pl_idempotent_canonical: NULL argument");
    const auto form = pinchlab::idempotent_canonical(q->m, tol);
    const nlohmann::json j = {{"k", form.k},
                              {"m", form.m},
                              {"sigmas", form.sigmas},
                              {"basis", pinchlab::matrix_to_json(form.basis)}};
    *json = dup_string(j.dump());
  });
}

pl_status pl_self_adjoint_defect(const pl_matrix* q, double tol, pl_defect* out) {
  return guarded([&] {
    require(q && out, "pl_self_adjoint_defect: NULL argument");
    const auto d = pinchlab::self_adjoint_defect(q->m, tol);
    *out = {d.pos_norm, d.neg_norm, d.holds ? 1 : 0};
  });
}

pl_status pl_is_stable(const pl_matrix* x, double tol, int* out) {
  return guarded([&] {
    require(x && out, "pl_is_stable: NULL argument");
    *out = pinchlab::is_stable(x->m, tol) ? 1 : 0;
  });
}

pl_status pl_masa_parse(const char* blocks, size_t dim, pl_masa** out) {
  return guarded([&] {
    require(blocks && out, "pl_masa_parse: NULL argument");
    std::optional<Eigen::Index> d;
    if (dim > 0) d = static_cast<Eigen::Index>(dim);
    *out = new pl_masa{pinchlab::MasaPartition::parse(blocks, d)};
  });
}

size_t pl_masa_dim(const pl_masa* masa) { return masa ? static_cast<size_t>(masa->p.dim) : 0; }

void pl_masa_free(pl_masa* masa) { delete masa; }

pl_status pl_conditional_expectation(const pl_matrix* z, const pl_masa* masa, pl_matrix** out) {
  return guarded([&] {
    require(z && masa && out, "pl_conditional_expectation: NULL argument");
    *out = wrap(pinchlab::conditional_expectation(z->m, masa->p));
  });
}

pl_status pl_check_reduction(const pl_matrix* z, const pl_masa* masa, size_t samples,
                             uint64_t seed, double margin, size_t resolution, char** json,
                             int* passed) {
  return guarded([&] {
    require(z && masa && json && passed, "pl_check_reduction: NULL argument");
    pinchlab::ReductionOptions opts;
    opts.seed = seed;
    opts.margin = margin;
    opts.resolution = resolution;
    const auto r = pinchlab::check_reduction(z->m, masa->p, samples, opts);
    nlohmann::json j = {{"passed", r.passed},
                        {"samples_checked", r.samples_checked},
                        {"boundary_checked", r.boundary_checked},
                        {"worst_violation", r.worst_violation},
                        {"margin", margin}};
    if (r.witness_point) j["witness_point"] = pinchlab::complex_to_json(*r.witness_point);
    *json = dup_string(j.dump());
    *passed = r.passed ? 1 : 0;
  });
}

pl_status pl_realize_diagonal(const double* values, size_t count, double a, size_t variant,
                              pl_plan** out) {
  return guarded([&] {
    require(out && (values || count == 0), "pl_realize_diagonal: NULL argument");
    std::vector<Complex> v(count);
    for (size_t i = 0; i < count; ++i) v[i] = Complex(values[2 * i], values[2 * i + 1]);
    pinchlab::RealizeOptions opts;
    if (a > 0.0) opts.a = a;
    opts.variant = variant;
    *out = new pl_plan{pinchlab::realize_diagonal(v, opts)};
  });
}

pl_status pl_realize_normal_blocks(const pl_matrix* const* blocks, size_t count, double a,
                                   size_t variant, pl_plan** out) {
  return guarded([&] {
    require(out && (blocks || count == 0), "pl_realize_normal_blocks: NULL argument");
    std::vector<ComplexMatrix> b;
    for (size_t i = 0; i < count; ++i) {
      require(blocks[i] != nullptr, "pl_realize_normal_blocks: NULL block");
      b.push_back(blocks[i]->m);
    }
    pinchlab::RealizeOptions opts;
    if (a > 0.0) opts.a = a;
    opts.variant = variant;
    *out = new pl_plan{pinchlab::realize_normal_blocks(b, opts)};
  });
}

pl_status pl_plan_from_json(const char* json, pl_plan** out) {
  return guarded([&] {
    require(json && out, "pl_plan_from_json: NULL argument");
    *out = new pl_plan{pinchlab::plan_from_json(parse_json(json))};
  });
}

pl_status pl_plan_to_json(const pl_plan* plan, char** out) {
  return guarded([&] {
    require(plan && out, "pl_plan_to_json: NULL argument");
    *out = dup_string(pinchlab::plan_to_json(plan->p).dump());
  });
}

pl_status pl_plan_unitary(const pl_plan* plan, pl_matrix** out) {
  return guarded([&] {
    require(plan && out, "pl_plan_unitary: NULL argument");
    *out = wrap(plan->p.unitary);
  });
}

pl_status pl_plan_realized(const pl_plan* plan, pl_matrix** out) {
  return guarded([&] {
    require(plan && out, "pl_plan_realized: NULL argument");
    *out = wrap(plan->p.realized);
  });
}

pl_status pl_plan_ambient(const pl_plan* plan, pl_matrix** out) {
  return guarded([&] {
    require(plan && out, "pl_plan_ambient: NULL argument");
    *out = wrap(plan->p.ambient());
  });
}

pl_status pl_plan_target(const pl_plan* plan, pl_matrix** out) {
  return guarded([&] {
    require(plan && out, "pl_plan_target: NULL argument");
    *out = wrap(plan->p.target());
  });
}

void pl_plan_free(pl_plan* plan) { delete plan; }

pl_status pl_two_orbit_average(const pl_plan* plan, pl_matrix** u, pl_matrix** v,
                               pl_matrix** average, double* offdiag_norm) {
  return guarded([&] {
    require(plan != nullptr, "pl_two_orbit_average: NULL plan");
    auto avg = pinchlab::two_orbit_average(plan->p);
    if (u) *u = wrap(std::move(avg.u));
    if (v) *v = wrap(std::move(avg.v));
    if (average) *average = wrap(std::move(avg.average));
    if (offdiag_norm) *offdiag_norm = avg.offdiag_norm;
  });
}

pl_status pl_strong_approx(const pl_matrix* x, const pl_matrix* t, size_t n, pl_matrix** w,
                           pl_matrix** x_n, double* errors) {
  return guarded([&] {
    require(x && t && errors, "pl_strong_approx: NULL argument");
    auto sa = pinchlab::strong_approx(x->m, t->m, static_cast<Eigen::Index>(n));
    std::copy(sa.errors.begin(), sa.errors.end(), errors);
    if (w) *w = wrap(std::move(sa.w));
    if (x_n) *x_n = wrap(std::move(sa.x_n));
  });
}

pl_status pl_hermitian_orbit_distance(const pl_matrix* a, const pl_matrix* x, double* out) {
  return guarded([&] {
    require(a && x && out, "pl_hermitian_orbit_distance: NULL argument");
    *out = pinchlab::hermitian_orbit_distance(a->m, x->m);
  });
}

pl_status pl_channel_pinching(const pl_masa* masa, pl_channel** out) {
  return guarded([&] {
    require(masa && out, "pl_channel_pinching: NULL argument");
    *out = new pl_channel{pinchlab::pinching_channel(masa->p)};
  });
}

pl_status pl_channel_mixture(const pl_plan* const* plans, size_t count, const double* weights,
                             pl_channel** out) {
  return guarded([&] {
    require(plans && out, "pl_channel_mixture: NULL argument");
    std::vector<pinchlab::PinchingPlan> p;
    for (size_t i = 0; i < count; ++i) {
      require(plans[i] != nullptr, "pl_channel_mixture: NULL plan");
      p.push_back(plans[i]->p);
    }
    std::vector<double> w;
    if (weights) w.assign(weights, weights + count);
    *out = new pl_channel{pinchlab::compression_mixture_channel(p, w)};
  });
}

pl_status pl_channel_from_json(const char* json, pl_channel** out) {
  return guarded([&] {
    require(json && out, "pl_channel_from_json: NULL argument");
    *out = new pl_channel{pinchlab::channel_from_json(parse_json(json))};
  });
}

pl_status pl_channel_to_json(const pl_channel* ch, char** out) {
  return guarded([&] {
    require(ch && out, "pl_channel_to_json: NULL argument");
    *out = dup_string(pinchlab::channel_to_json(ch->c).dump());
  });
}

pl_status pl_channel_apply(const pl_channel* ch, const pl_matrix* z, pl_matrix** out) {
  return guarded([&] {
    require(ch && z && out, "pl_channel_apply: NULL argument");
    *out = wrap(ch->c.apply(z->m));
  });
}

pl_status pl_channel_verify(const pl_channel* ch, size_t trials, uint64_t seed, char** json,
                            int* ok) {
  return guarded([&] {
    require(ch && json && ok, "pl_channel_verify: NULL argument");
    const auto report = pinchlab::verify_channel(ch->c, trials, seed);
    nlohmann::json j = pinchlab::report_to_json(report);
    j["kind"] = pinchlab::channel_kind_name(ch->c.kind);
    *json = dup_string(j.dump());
    *ok = report.declared_invariants_hold ? 1 : 0;
  });
}

void pl_channel_free(pl_channel* ch) { delete ch; }

pl_status pl_verify_all(uint64_t seed, int include_timing, char** json, char** table,
                        int* all_passed) {
  return guarded([&] {
    require(all_passed != nullptr, "pl_verify_all: NULL argument");
    pinchlab::VerifyConfig config;
    config.seed = seed;
    const auto results = pinchlab::verify_all(config);
    const auto j = pinchlab::results_to_json(results, include_timing != 0);
    if (json) *json = dup_string(j.dump());
    if (table) *table = dup_string(pinchlab::results_to_table(results));
    *all_passed = j["all_passed"].get<bool>() ? 1 : 0;
  });
}

}  // extern "C"
