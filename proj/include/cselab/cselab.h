/*
   Copyright 2026 The cselab Authors

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

#ifndef CSELAB_CSELAB_H
#define CSELAB_CSELAB_H

#include <stddef.h>

#if defined(_WIN32)
#define CSE_API __declspec(dllexport)
#else
#define CSE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct cse_function cse_function;
typedef struct cse_report cse_report;

typedef enum {
    CSE_OK = 0,
    CSE_ERR_INVALID_ARGUMENT = 1,
    CSE_ERR_PARSE = 2,
    CSE_ERR_HYPOTHESIS = 3,
    CSE_ERR_DIVERGENT = 4,
    CSE_ERR_IO = 5,
    CSE_ERR_INTERNAL = 6
} cse_status;

typedef enum {
    CSE_VERDICT_NONE = 0,
    CSE_VERDICT_HOLDS = 1,
    CSE_VERDICT_VIOLATED = 2,
    CSE_VERDICT_CONVERGED = 3,
    CSE_VERDICT_INCONCLUSIVE = 4,
    CSE_VERDICT_BOUNDED = 5,
    CSE_VERDICT_GROWTH = 6
} cse_verdict;

typedef enum { CSE_FORMAT_JSON = 0, CSE_FORMAT_CSV = 1, CSE_FORMAT_PLOT = 2 } cse_format;

typedef struct {
    unsigned radial_cells_per_decade;
    unsigned angular_cells;
    unsigned max_refinement_depth;
    double target_rel_tolerance;
    size_t max_cells;
    int extended_precision; /* 0: double, 1: long double */
} cse_quadrature_config;

/* Message of the last failed call on this thread; "" when none. */
CSE_API const char* cse_last_error(void);
CSE_API const char* cse_version(void);
CSE_API void cse_string_free(char* s);

/* Defaults, with the precision taken from CSE_LAB_PRECISION when set. */
CSE_API cse_status cse_quadrature_config_default(cse_quadrature_config* out);

CSE_API cse_status cse_function_parse(const char* text, cse_function** out);
CSE_API cse_status cse_function_to_string(const cse_function* f, char** out);
CSE_API int cse_function_is_holomorphic(const cse_function* f);
CSE_API void cse_function_free(cse_function* f);

/* Values t, s are strings: "1/100", "1e-4", "i/100". */

CSE_API cse_status cse_exponent_report(const cse_function* f, const char* const* t_values, size_t t_count,
                                       double delta, cse_report** out);

/* catalog_json may be NULL for the built-in catalog; entry may be NULL for every
   entry. f may be NULL; when given, its polygon estimate is reported as well. */
CSE_API cse_status cse_lct_report(const cse_function* f, const char* catalog_json, const char* entry,
                                  cse_report** out);

CSE_API cse_status cse_polygon_report(const cse_function* f, cse_report** out);

/* t_count == 0 selects the default sequence 10^-2 4^-j, j = 0..7.
   R1 > 1 adds the split of I_t into the annuli cut at 1/R1 and R1; R1 <= 0 leaves it out. */
CSE_API cse_status cse_sweep_report(const cse_function* f, double c, double R, const char* const* t_values,
                                    size_t t_count, double band, double R1, const cse_quadrature_config* config,
                                    cse_report** out);

/* factors may be empty; otherwise a Young bound is assembled from them. */
CSE_API cse_status cse_bound_report(const cse_function* f, double c, double R, const char* const* t_values,
                                    size_t t_count, const cse_function* const* factors, size_t factor_count,
                                    const cse_quadrature_config* config, cse_report** out);

CSE_API cse_status cse_counterexample_report(unsigned n_min, unsigned n_max, const char* const* s_values,
                                             size_t s_count, cse_report** out);

/* poly is a polynomial in z, zero one of its roots. r_max <= 0 picks a default. */
CSE_API cse_status cse_probe_multiplicity_report(const char* poly, const char* zero, double c, double r_max,
                                                 const cse_quadrature_config* config, cse_report** out);

CSE_API cse_status cse_probe_holder_report(unsigned n, double scale, cse_report** out);

CSE_API cse_verdict cse_report_verdict(const cse_report* r);
/* 1 when the verdict contradicts a theorem for holomorphic input. */
CSE_API int cse_report_theorem_violation(const cse_report* r);
CSE_API cse_status cse_report_render(const cse_report* r, cse_format format, char** out);
CSE_API void cse_report_free(cse_report* r);

#ifdef __cplusplus
}
#endif

#endif
