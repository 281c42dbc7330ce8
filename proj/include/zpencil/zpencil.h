/*
 * Copyright 2026 The zpencil Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef ZPENCIL_ZPENCIL_H
#define ZPENCIL_ZPENCIL_H

/*
 * C interface to the zpencil library.
 *
 * Objects are opaque handles released with their matching *_free function.
 * Every fallible call returns a zp_status; on failure zp_last_error() holds a
 * message for the calling thread until its next failing call. Indices that
 * cross this boundary (vertices, classes, index sets) are 1-based.
 *
 * Strings returned through char** are allocated by the library and released
 * with zp_string_free.
 */

#include <stddef.h>

#if defined(_WIN32)
#  if defined(ZPENCIL_BUILDING)
#    define ZP_API __declspec(dllexport)
#  else
#    define ZP_API __declspec(dllimport)
#  endif
#else
#  define ZP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum zp_status {
  ZP_OK = 0,
  ZP_E_INVALID_ARGUMENT = 1,
  ZP_E_DIMENSION = 2,
  ZP_E_OUT_OF_RANGE = 3,
  ZP_E_PARSE = 4,
  ZP_E_SINGULAR = 5,
  ZP_E_NOT_Z = 6,
  ZP_E_NOT_M = 7,
  ZP_E_VALIDATION = 8,
  ZP_E_GUARD = 9,
  ZP_E_CONSTRUCTION = 10,
  ZP_E_IO = 11,
  ZP_E_INTERNAL = 99
} zp_status;

typedef enum zp_m_status {
  ZP_NOT_M = 0,
  ZP_SINGULAR_M = 1,
  ZP_NONSINGULAR_M = 2
} zp_m_status;

typedef struct zp_tolerance {
  double rel_sing;
  double rel_eig;
  double abs_floor;
} zp_tolerance;

typedef enum zp_graph_kind {
  ZP_GRAPH_A = 0,       /* G(A) */
  ZP_GRAPH_B = 1,       /* G(B) */
  ZP_GRAPH_UNION = 2,   /* G(A) u G(B) */
  ZP_GRAPH_REDUCED = 3, /* reduced graph of G(A) u G(B) */
  ZP_GRAPH_PENCIL = 4   /* G(tB - A) at the given t */
} zp_graph_kind;

typedef struct zp_pencil zp_pencil;
typedef struct zp_analysis zp_analysis;

typedef struct zp_segment {
  double lo;
  double hi;
  int lo_closed;
  int hi_closed;
  size_t s;
} zp_segment;

ZP_API const char* zp_version(void);
ZP_API const char* zp_status_string(zp_status status);
ZP_API const char* zp_last_error(void);
ZP_API void zp_string_free(char* s);

/* rel_sing 1e-9, rel_eig 1e-10, abs_floor 1e-13. */
ZP_API zp_tolerance zp_tolerance_default(void);

/* ---- pencils ---------------------------------------------------------- */

ZP_API zp_status zp_pencil_parse(const char* text, zp_pencil** out);
ZP_API zp_status zp_pencil_load(const char* path, zp_pencil** out);
/* a and b are row-major n*n arrays. */
ZP_API zp_status zp_pencil_create(size_t n, const double* a, const double* b, zp_pencil** out);
ZP_API void zp_pencil_free(zp_pencil* p);
ZP_API size_t zp_pencil_order(const zp_pencil* p);
/* which is 'A' or 'B'; out receives n*n row-major entries. */
ZP_API zp_status zp_pencil_matrix(const zp_pencil* p, char which, double* out);
/* Text format with 17 significant digits. */
ZP_API zp_status zp_pencil_format(const zp_pencil* p, char** out);

/* M-matrix status of tB - A, t in [0,1]. Requires a valid pencil. */
ZP_API zp_status zp_m_trichotomy(const zp_pencil* p, double t, const zp_tolerance* tol,
                                 zp_m_status* out);
/* t is read only for ZP_GRAPH_PENCIL. */
ZP_API zp_status zp_graph_dot(const zp_pencil* p, zp_graph_kind kind, double t,
                              const zp_tolerance* tol, char** out);

/* ---- analysis --------------------------------------------------------- */

/*
 * Runs every analysis. max_order caps the subset enumeration (0 selects the
 * default of 16). When the pencil fails validation the handle is still
 * produced, carrying the validation section only, and ZP_E_VALIDATION is
 * returned; other accessors then return ZP_E_VALIDATION as well.
 * tol may be NULL for defaults.
 */
ZP_API zp_status zp_analyze(const zp_pencil* p, const zp_tolerance* tol, size_t max_order,
                            zp_analysis** out);
/*
 * Checks the standing conditions only. The handle answers the validation
 * accessors and the "validation" JSON section; the other accessors return
 * ZP_E_INVALID_ARGUMENT. Returns ZP_E_VALIDATION when a condition fails.
 */
ZP_API zp_status zp_validate(const zp_pencil* p, const zp_tolerance* tol, zp_analysis** out);
ZP_API void zp_analysis_free(zp_analysis* a);
ZP_API size_t zp_analysis_order(const zp_analysis* a);

ZP_API int zp_analysis_valid(const zp_analysis* a);
/* Each out pointer may be NULL. */
ZP_API zp_status zp_analysis_conditions(const zp_analysis* a, int* c1, int* c2, int* c3);
/* Writes n entries of u = (B-A)^{-1} 1; ZP_E_VALIDATION when absent. */
ZP_API zp_status zp_analysis_witness(const zp_analysis* a, double* u);
ZP_API size_t zp_analysis_violation_count(const zp_analysis* a);
ZP_API const char* zp_analysis_violation(const zp_analysis* a, size_t i);

ZP_API zp_status zp_analysis_spectrum(const zp_analysis* a, double* mu, double* rho_ab);
ZP_API size_t zp_analysis_eigenvalue_count(const zp_analysis* a);
ZP_API zp_status zp_analysis_eigenvalue(const zp_analysis* a, size_t i, double* re, double* im);

/* s runs 1..n for sigma, 0..n for tau. */
ZP_API zp_status zp_analysis_sigma(const zp_analysis* a, size_t s, double* out);
ZP_API zp_status zp_analysis_tau(const zp_analysis* a, size_t s, double* out);
/* Index set attaining sigma_s. Writes up to cap entries, sets *len to its size. */
ZP_API zp_status zp_analysis_argmax(const zp_analysis* a, size_t s, size_t* out, size_t cap,
                                    size_t* len);

ZP_API zp_status zp_analysis_classify(const zp_analysis* a, double t, size_t* s);
ZP_API size_t zp_analysis_segment_count(const zp_analysis* a);
ZP_API zp_status zp_analysis_segment(const zp_analysis* a, size_t i, zp_segment* out);

/* Classes of gamma labelled against rho(A,B) B - A. */
ZP_API int zp_analysis_gamma_is_union(const zp_analysis* a);
ZP_API size_t zp_analysis_class_count(const zp_analysis* a);
ZP_API zp_status zp_analysis_class(const zp_analysis* a, size_t i, size_t* vertices, size_t cap,
                                   size_t* len, int* singular, int* distinguished);

ZP_API size_t zp_analysis_eigvec_count(const zp_analysis* a);
/* values receives n entries; support and origin use the cap/len protocol. */
ZP_API zp_status zp_analysis_eigvec(const zp_analysis* a, size_t i, double* values,
                                    size_t* support, size_t support_cap, size_t* support_len,
                                    size_t* origin, size_t origin_cap, size_t* origin_len);

ZP_API size_t zp_analysis_bound_count(const zp_analysis* a);
/* max_s is the largest s allowed; full_order selects "s <= n-1" over "s < m". */
ZP_API zp_status zp_analysis_bound(const zp_analysis* a, size_t i, size_t* cls, size_t cap,
                                   size_t* len, size_t* max_s, int* full_order);

/*
 * section: "report", "validation", "spectrum", "thresholds", "partition",
 * "classes", "eigenbasis" or "bounds". The full report is always available;
 * the other sections of an invalid pencil serialize as null.
 */
ZP_API zp_status zp_analysis_json(const zp_analysis* a, const char* section, char** out);

#ifdef __cplusplus
}
#endif

#endif /* ZPENCIL_ZPENCIL_H */
