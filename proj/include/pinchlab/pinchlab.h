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

#ifndef PINCHLAB_PINCHLAB_H
#define PINCHLAB_PINCHLAB_H

/*
 * C interface to libpinchlab.
 *
 * Objects are opaque handles created by pl_*_create / pl_*_from_json style
 * calls and released with the matching pl_*_free. Every fallible call returns
 * a pl_status; on failure a description is available from pl_last_error()
 * until the next failing call on the same thread. Strings returned through
 * `char**` out-parameters are heap allocated and must be released with
 * pl_string_free. Complex arrays are interleaved (re, im) pairs.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(PINCHLAB_BUILDING)
#define PL_API __attribute__((visibility("default")))
#else
#define PL_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pl_status {
  PL_OK = 0,
  PL_ERR_INVALID_ARGUMENT = 1,
  PL_ERR_NOT_HERMITIAN = 2,
  PL_ERR_NO_CONVERGENCE = 3,
  PL_ERR_NOT_ORTHONORMAL = 4,
  PL_ERR_DOMAIN = 5,
  PL_ERR_NOT_IN_RANGE = 6,
  PL_ERR_NOT_IDEMPOTENT = 7,
  PL_ERR_DEGENERATE_SPECTRUM = 8,
  PL_ERR_VALUE_OUT_OF_DISC = 9,
  PL_ERR_NOT_NORMAL = 10,
  PL_ERR_DIMENSION_MISMATCH = 11,
  PL_ERR_WEIGHTS_NOT_NORMALIZED = 12,
  PL_ERR_TARGET_MISMATCH = 13,
  PL_ERR_PARSE = 14,
  PL_ERR_IO = 15,
  PL_ERR_INTERNAL = 99
} pl_status;

typedef struct pl_matrix pl_matrix;
typedef struct pl_boundary pl_boundary;
typedef struct pl_masa pl_masa;
typedef struct pl_plan pl_plan;
typedef struct pl_channel pl_channel;

typedef struct pl_ellipse {
  double center_re, center_im;
  double focus1_re, focus1_im;
  double focus2_re, focus2_im;
  double semi_major;
  double semi_minor;
} pl_ellipse;

typedef struct pl_optimal_constant {
  double a_star;
  double r_star_sq;
  double norm;
  double closed_a_star;
  double closed_r_star_sq;
  double closed_norm;
} pl_optimal_constant;

typedef struct pl_defect {
  double pos_norm;
  double neg_norm;
  int holds;
} pl_defect;

/* --- errors and strings --------------------------------------------------- */

PL_API const char* pl_last_error(void);
PL_API const char* pl_status_name(pl_status status);
PL_API void pl_string_free(char* s);
PL_API const char* pl_version(void);

/* --- matrices --------------------------------------------------------------- */

/* `data` holds rows*cols interleaved complex entries in row-major order; it
 * may be NULL for a zero matrix. */
PL_API pl_status pl_matrix_create(size_t rows, size_t cols, const double* data,
                                  pl_matrix** out);
PL_API pl_status pl_matrix_from_json(const char* json, pl_matrix** out);
PL_API pl_status pl_matrix_to_json(const pl_matrix* m, char** out);
PL_API pl_status pl_matrix_clone(const pl_matrix* m, pl_matrix** out);
PL_API size_t pl_matrix_rows(const pl_matrix* m);
PL_API size_t pl_matrix_cols(const pl_matrix* m);
PL_API pl_status pl_matrix_get(const pl_matrix* m, size_t row, size_t col,
                               double* re, double* im);
PL_API pl_status pl_matrix_operator_norm(const pl_matrix* m, double* out);
PL_API void pl_matrix_free(pl_matrix* m);

/* --- numerical range -------------------------------------------------------- */

/* `witness` may be NULL. */
PL_API pl_status pl_nr_support(const pl_matrix* a, double theta, double* support,
                               pl_matrix** witness);
PL_API pl_status pl_nr_boundary(const pl_matrix* a, size_t resolution,
                                unsigned threads, pl_boundary** out);
PL_API size_t pl_boundary_size(const pl_boundary* b);
PL_API pl_status pl_boundary_sample(const pl_boundary* b, size_t index, double* theta,
                                    double* support, double* re, double* im);
/* CSV with header "theta,support,re,im". */
PL_API pl_status pl_boundary_to_csv(const pl_boundary* b, char** out);
PL_API pl_status pl_boundary_to_svg(const pl_boundary* b, char** out);
PL_API void pl_boundary_free(pl_boundary* b);

PL_API pl_status pl_nr_contains(const pl_matrix* a, double re, double im, double margin,
                                size_t resolution, int* out);
PL_API pl_status pl_disc_in_nr(const pl_matrix* a, double radius, size_t resolution,
                               int* out);
PL_API pl_status pl_nr_ellipse_2x2(const pl_matrix* a, pl_ellipse* out);
PL_API pl_status pl_ma_circle(double a, double r, double* center, double* radius);
/* Writes the unit witness h as two interleaved complex numbers into h[4]. */
PL_API pl_status pl_ma_witness(double a, double re, double im, double h[4]);
PL_API pl_status pl_optimal_a(pl_optimal_constant* out);
/* Representative block scale*B for the periodic model F ⊕ B ⊕ B ⊕ ...;
 * `exceptional` may be NULL. */
PL_API pl_status pl_we_of_model(const pl_matrix* exceptional, const pl_matrix* repeated,
                                double scale_re, double scale_im, pl_matrix** out);
PL_API pl_status pl_inflate_2x2(const pl_matrix* d, double radius, double* c,
                                pl_matrix** similarity, pl_matrix** conjugated);

/* --- idempotents ------------------------------------------------------------ */

PL_API pl_status pl_make_ma(double a, pl_matrix** out);
PL_API pl_status pl_is_idempotent(const pl_matrix* q, double tol, int* out);
/* JSON object {"k", "m", "sigmas", "basis"}. */
PL_API pl_status pl_idempotent_canonical(const pl_matrix* q, double tol, char** json);
PL_API pl_status pl_self_adjoint_defect(const pl_matrix* q, double tol, pl_defect* out);
PL_API pl_status pl_is_stable(const pl_matrix* x, double tol, int* out);

/* --- masas and conditional expectation --------------------------------------- */

/* 1-based grammar "1;2;3,4". dim = 0 infers the dimension. */
PL_API pl_status pl_masa_parse(const char* blocks, size_t dim, pl_masa** out);
PL_API size_t pl_masa_dim(const pl_masa* masa);
PL_API void pl_masa_free(pl_masa* masa);
PL_API pl_status pl_conditional_expectation(const pl_matrix* z, const pl_masa* masa,
                                            pl_matrix** out);
/* JSON report; *passed is set to 1 on a pass. */
PL_API pl_status pl_check_reduction(const pl_matrix* z, const pl_masa* masa,
                                    size_t samples, uint64_t seed, double margin,
                                    size_t resolution, char** json, int* passed);

/* --- pinching plans ------------------------------------------------------------ */

/* a <= 0 selects the default a*(1 + 1e-6). */
PL_API pl_status pl_realize_diagonal(const double* values, size_t count, double a,
                                     size_t variant, pl_plan** out);
PL_API pl_status pl_realize_normal_blocks(const pl_matrix* const* blocks, size_t count,
                                          double a, size_t variant, pl_plan** out);
PL_API pl_status pl_plan_from_json(const char* json, pl_plan** out);
PL_API pl_status pl_plan_to_json(const pl_plan* plan, char** out);
PL_API pl_status pl_plan_unitary(const pl_plan* plan, pl_matrix** out);
PL_API pl_status pl_plan_realized(const pl_plan* plan, pl_matrix** out);
PL_API pl_status pl_plan_ambient(const pl_plan* plan, pl_matrix** out);
PL_API pl_status pl_plan_target(const pl_plan* plan, pl_matrix** out);
PL_API void pl_plan_free(pl_plan* plan);
PL_API pl_status pl_two_orbit_average(const pl_plan* plan, pl_matrix** u, pl_matrix** v,
                                      pl_matrix** average, double* offdiag_norm);
/* `errors` must hold m doubles; `w` and `x_n` may be NULL. */
PL_API pl_status pl_strong_approx(const pl_matrix* x, const pl_matrix* t, size_t n,
                                  pl_matrix** w, pl_matrix** x_n, double* errors);
PL_API pl_status pl_hermitian_orbit_distance(const pl_matrix* a, const pl_matrix* x,
                                             double* out);

/* --- channels ------------------------------------------------------------------ */

PL_API pl_status pl_channel_pinching(const pl_masa* masa, pl_channel** out);
/* weights == NULL selects the 2^-i ladder. */
PL_API pl_status pl_channel_mixture(const pl_plan* const* plans, size_t count,
                                    const double* weights, pl_channel** out);
PL_API pl_status pl_channel_from_json(const char* json, pl_channel** out);
PL_API pl_status pl_channel_to_json(const pl_channel* ch, char** out);
PL_API pl_status pl_channel_apply(const pl_channel* ch, const pl_matrix* z, pl_matrix** out);
/* JSON report; *ok is 1 when the invariants declared by the kind hold. */
PL_API pl_status pl_channel_verify(const pl_channel* ch, size_t trials, uint64_t seed,
                                   char** json, int* ok);
PL_API void pl_channel_free(pl_channel* ch);

/* --- acceptance --------------------------------------------------------------- */

/* JSON summary in *json and a fixed-width table in *table (either may be
 * NULL). include_timing = 0 gives byte-reproducible JSON. */
PL_API pl_status pl_verify_all(uint64_t seed, int include_timing, char** json,
                               char** table, int* all_passed);

#ifdef __cplusplus
}
#endif

#endif /* PINCHLAB_PINCHLAB_H */
