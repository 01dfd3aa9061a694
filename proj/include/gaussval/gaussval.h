/* Copyright (C) 2026 gaussval developers
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */
#ifndef GAUSSVAL_H
#define GAUSSVAL_H

/* C interface to the gaussval library. Objects are opaque handles owned by
 * the caller and released with the matching *_free function. Rationals cross
 * the boundary as "num/den" strings, structured data as JSON text. Strings
 * returned through char** are released with gv_string_free. Every call
 * returns a status; on failure gv_last_error() describes it (per thread).
 */

#include <stddef.h>
#include <stdint.h>

#if defined(GAUSSVAL_BUILDING_LIBRARY)
#define GAUSSVAL_API __attribute__((visibility("default")))
#else
#define GAUSSVAL_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gv_status {
  GV_OK = 0,
  GV_INVALID_ARGUMENT = 1,
  GV_PARSE = 2,
  GV_ZERO_ELEMENT = 3,
  GV_UNKNOWN_REGION = 4,
  GV_TRUNCATION = 5,
  GV_PRECISION = 6,
  GV_INCONCLUSIVE = 7,
  GV_IO = 8,
  GV_INTERNAL = 9
} gv_status;

typedef enum gv_verdict {
  GV_VERDICT_DIVERGENCE_WITNESSED = 0,
  GV_VERDICT_BOUNDED_UP_TO = 1,
  GV_VERDICT_BOUNDARY = 2,
  GV_VERDICT_INCONCLUSIVE = 3
} gv_verdict;

typedef struct gv_profile gv_profile;
typedef struct gv_polygon gv_polygon;
typedef struct gv_transform gv_transform;
typedef struct gv_fa_report gv_fa_report;

GAUSSVAL_API const char* gv_version(void);
GAUSSVAL_API const char* gv_last_error(void);
GAUSSVAL_API const char* gv_status_name(gv_status status);
GAUSSVAL_API void gv_string_free(char* s);

/* Coefficient profiles. */
GAUSSVAL_API gv_status gv_profile_from_json(const char* json, gv_profile** out);
GAUSSVAL_API gv_status gv_profile_to_json(const gv_profile* f, char** out);
GAUSSVAL_API void gv_profile_free(gv_profile* f);
/* v_s(f); *exact is 1 when the value is certified, 0 when it is an upper bound. */
GAUSSVAL_API gv_status gv_gauss_valuation(const gv_profile* f, const char* s, char** value, int* exact);
GAUSSVAL_API gv_status gv_frobenius_pullback(const gv_profile* f, long p, gv_profile** out);
GAUSSVAL_API gv_status gv_newton_polygon(const gv_profile* f, gv_polygon** out);

/* Newton polygons. */
GAUSSVAL_API gv_status gv_polygon_from_json(const char* json, gv_polygon** out);
GAUSSVAL_API gv_status gv_polygon_to_json(const gv_polygon* p, char** out);
GAUSSVAL_API void gv_polygon_free(gv_polygon* p);
GAUSSVAL_API int gv_polygon_equal(const gv_polygon* p, const gv_polygon* q);
GAUSSVAL_API gv_status gv_polygon_csv(const gv_polygon* p, char** out);

/* Legendre transforms. */
GAUSSVAL_API gv_status gv_legendre_eval(const gv_polygon* p, const char* t, char** value, int* exact);
GAUSSVAL_API gv_status gv_legendre_full(const gv_polygon* p, gv_transform** out);
GAUSSVAL_API gv_status gv_inverse_legendre(const gv_transform* t, gv_polygon** out);
GAUSSVAL_API gv_status gv_transform_from_json(const char* json, gv_transform** out);
GAUSSVAL_API gv_status gv_transform_to_json(const gv_transform* t, char** out);
GAUSSVAL_API gv_status gv_transform_eval(const gv_transform* t, const char* at, char** value);
GAUSSVAL_API void gv_transform_free(gv_transform* t);

/* The f_a family. precision 0 selects the recommended working precision. */
GAUSSVAL_API gv_status gv_build_fa(const char* a, long n, unsigned long precision, gv_fa_report** out);
GAUSSVAL_API gv_status gv_fa_report_from_json(const char* json, gv_fa_report** out);
GAUSSVAL_API gv_status gv_fa_report_to_json(const gv_fa_report* r, char** out);
GAUSSVAL_API gv_status gv_fa_report_info(const gv_fa_report* r, long* n, unsigned long* precision,
                                         long* certified_horizon);
GAUSSVAL_API gv_status gv_fa_report_polygon(const gv_fa_report* r, gv_polygon** out);
GAUSSVAL_API void gv_fa_report_free(gv_fa_report* r);

/* Stratum classification at lambda. With mu (may be NULL) the report pairs
 * lambda < mu. With a (may be NULL) the polygon is taken as that of f_a and
 * the verdicts are analytic, with the brackets attached. horizon 0 means
 * every certified breakpoint. *verdict is the verdict at lambda.
 */
GAUSSVAL_API gv_status gv_classify(const gv_polygon* p, const char* lambda, const char* mu, const char* a,
                                   size_t horizon, char** report_json, gv_verdict* verdict);

/* Property suites ("hull", "legendre", "corollary1", "frobenius", "fa",
 * "strata" or "all"). fa_report (may be NULL) replaces the default builds of
 * the fa suite. *summary is one line per suite; *report_json has every check.
 */
GAUSSVAL_API gv_status gv_verify(const char* suite, uint64_t seed, const gv_fa_report* fa_report, char** summary,
                                 char** report_json, int* all_passed);

/* Polygon and transform on one canvas; format "svg" or "csv". */
GAUSSVAL_API gv_status gv_plot(const gv_polygon* p, const char* format, char** out);

#ifdef __cplusplus
}
#endif

#endif /* GAUSSVAL_H */
