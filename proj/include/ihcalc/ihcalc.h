/*
   Copyright 2026 The ihcalc Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/*
 * C interface to the ihcalc library.
 *
 * Every object is an opaque handle owned by the caller and released with the
 * matching *_free function. Functions return an ihc_status; on failure the
 * output pointer is left untouched and ihc_last_error() describes the
 * problem (the message is thread-local and valid until the next call on
 * the same thread).
 */
#ifndef IHCALC_IHCALC_H
#define IHCALC_IHCALC_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(IHC_BUILDING_LIBRARY)
#    define IHC_API __declspec(dllexport)
#  else
#    define IHC_API __declspec(dllimport)
#  endif
#else
#  define IHC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ihc_status {
  IHC_OK = 0,
  IHC_ERR_INVALID_ARGUMENT = 1,
  IHC_ERR_NEGATIVE_PARAMETER = 2,
  IHC_ERR_NOT_DIVISIBLE = 3,
  IHC_ERR_CASE_NOT_APPLICABLE = 4,
  IHC_ERR_INTEGRALITY_FAILURE = 5,
  IHC_ERR_INVALID_DATA = 6,
  IHC_ERR_HYPOTHESIS_VIOLATED = 7,
  IHC_ERR_INVALID_DATUM = 8,
  IHC_ERR_CASE_MISMATCH = 9,
  IHC_ERR_NOT_APPLICABLE = 10,
  IHC_ERR_ROUTE_DISAGREEMENT = 11,
  IHC_ERR_CLOSED_FORM_MISMATCH = 12,
  IHC_ERR_INTERNAL_MISMATCH = 13,
  IHC_ERR_ENGINE_MISMATCH = 14,
  IHC_ERR_PARSE = 15,
  IHC_ERR_INTERNAL = 16
} ihc_status;

typedef enum ihc_route {
  IHC_ROUTE_F1 = 1,
  IHC_ROUTE_F2 = 2
} ihc_route;

typedef struct ihc_poly ihc_poly;
typedef struct ihc_report ihc_report;

IHC_API const char* ihc_version(void);
IHC_API const char* ihc_status_name(ihc_status status);
IHC_API const char* ihc_last_error(void);

/* Strings returned through char** outputs are released with this. */
IHC_API void ihc_string_free(char* s);

/* ---- Laurent polynomials with exact rational coefficients ---- */

IHC_API ihc_status ihc_poly_parse(const char* text, ihc_poly** out);
IHC_API ihc_status ihc_poly_from_int64(const int64_t* coefficients, size_t count,
                                       int64_t min_degree, ihc_poly** out);
IHC_API ihc_status ihc_poly_clone(const ihc_poly* p, ihc_poly** out);
IHC_API void ihc_poly_free(ihc_poly* p);

IHC_API ihc_status ihc_poly_to_string(const ihc_poly* p, char** out);
IHC_API ihc_status ihc_poly_is_zero(const ihc_poly* p, int* out);
/* Fails with IHC_ERR_INVALID_ARGUMENT for the zero polynomial. */
IHC_API ihc_status ihc_poly_degree_range(const ihc_poly* p, int64_t* min_degree,
                                         int64_t* max_degree);
/* Decimal text of the coefficient, "a/b" when not an integer. */
IHC_API ihc_status ihc_poly_coefficient(const ihc_poly* p, int64_t degree, char** out);
IHC_API ihc_status ihc_poly_equal(const ihc_poly* a, const ihc_poly* b, int* out);

IHC_API ihc_status ihc_poly_add(const ihc_poly* a, const ihc_poly* b, ihc_poly** out);
IHC_API ihc_status ihc_poly_sub(const ihc_poly* a, const ihc_poly* b, ihc_poly** out);
IHC_API ihc_status ihc_poly_mul(const ihc_poly* a, const ihc_poly* b, ihc_poly** out);
IHC_API ihc_status ihc_poly_exact_div(const ihc_poly* num, const ihc_poly* den, ihc_poly** out);
/* t^d * p(1/t). */
IHC_API ihc_status ihc_poly_reciprocal(const ihc_poly* p, int64_t d, ihc_poly** out);
IHC_API ihc_status ihc_poly_is_palindromic(const ihc_poly* p, int64_t d, int* out);
IHC_API ihc_status ihc_poly_eval_at_one(const ihc_poly* p, char** out);

/* ---- Grassmannians ---- */

IHC_API ihc_status ihc_h_poly(int alpha, ihc_poly** out);
IHC_API ihc_status ihc_p_poly(int alpha, ihc_poly** out);
IHC_API ihc_status ihc_grassmann_poly(int k, int l, ihc_poly** out);
IHC_API ihc_status ihc_projective_space_poly(int n, ihc_poly** out);

/* ---- Intersection cohomology ---- */

/* Generic two-strata engine; `document` is the JSON input of `ihcalc generic`. */
IHC_API ihc_status ihc_generic_ih(const char* document, ihc_poly** out);
IHC_API ihc_status ihc_generic_g(const char* document, ihc_poly** out);
IHC_API ihc_status ihc_generic_f(const char* document, ihc_poly** out);

IHC_API ihc_status ihc_schubert_ih(int i, int j, int k, int l, ihc_poly** out);
IHC_API ihc_status ihc_schubert_case_formula(int i, int j, int k, int l, ihc_route route,
                                             ihc_poly** out);
IHC_API ihc_status ihc_schubert_pi1_formula(int i, int j, int k, int l, ihc_poly** out);
IHC_API ihc_status ihc_schubert_h_resolution(int i, int j, int k, int l, ihc_poly** out);
IHC_API ihc_status ihc_schubert_is_small(int i, int j, int k, int l, int* pi_small,
                                         int* pi1_small);

IHC_API ihc_status ihc_hypersurface_ih(int64_t d1, int64_t d2, int64_t d3, int64_t d4,
                                       ihc_poly** out);
/* c4 of the tangent bundle of the resolution, as decimal text. */
IHC_API ihc_status ihc_hypersurface_c4(int64_t d1, int64_t d2, int64_t d3, int64_t d4,
                                       char** out);

/* ---- Command reports (what the CLI prints) ---- */

IHC_API ihc_status ihc_run_generic(const char* document, ihc_report** out);
IHC_API ihc_status ihc_run_schubert(int i, int j, int k, int l, ihc_report** out);
/* Degrees as decimal strings so arbitrarily large inputs are accepted. */
IHC_API ihc_status ihc_run_hypersurface(const char* d1, const char* d2, const char* d3,
                                        const char* d4, ihc_report** out);
IHC_API ihc_status ihc_run_verify_schubert(int max_l, ihc_report** out);
IHC_API ihc_status ihc_run_verify_hypersurface(int max_d, ihc_report** out);

/* 1 when every check in the report passed. */
IHC_API int ihc_report_passed(const ihc_report* report);
/* Owned by the report. */
IHC_API const char* ihc_report_json(const ihc_report* report);
IHC_API const char* ihc_report_text(const ihc_report* report);
IHC_API void ihc_report_free(ihc_report* report);

#ifdef __cplusplus
}
#endif

#endif /* IHCALC_IHCALC_H */
