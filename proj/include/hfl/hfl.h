/*
   Copyright 2026 The hfl Authors

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

/* C interface to the hfl library. Every object crosses the boundary as an
 * opaque handle or a heap string owned by the caller. Functions return an
 * hfl_status; on failure hfl_last_error() describes the cause for the
 * calling thread until its next call into the library. */

#ifndef HFL_H
#define HFL_H

#include <stddef.h>

#if defined(_WIN32)
#if defined(HFL_BUILDING_LIBRARY)
#define HFL_API __declspec(dllexport)
#else
#define HFL_API __declspec(dllimport)
#endif
#else
#define HFL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hfl_status {
    HFL_OK = 0,
    HFL_ERR_NULL_ARGUMENT = 1,    /* a required pointer was NULL */
    HFL_ERR_INVALID_ARGUMENT = 2, /* bad n, suite, format, label or polynomial */
    HFL_ERR_ARITHMETIC = 3,       /* division by zero or a broken module */
    HFL_ERR_OUT_OF_MEMORY = 4,
    HFL_ERR_INTERNAL = 5
} hfl_status;

typedef enum hfl_format { HFL_FORMAT_JSON = 0, HFL_FORMAT_CSV = 1, HFL_FORMAT_TEXT = 2 } hfl_format;

typedef struct hfl_report hfl_report;
typedef struct hfl_ring hfl_ring;

HFL_API const char* hfl_version(void);
HFL_API const char* hfl_status_name(hfl_status status);
/* Never NULL; empty after a successful call. */
HFL_API const char* hfl_last_error(void);
HFL_API void hfl_string_free(char* s);

/* Runs a verification suite: "hopf", "idempotents", "repr", "fusion",
 * "presentation" or "all". A failing check is not an error: the call
 * returns HFL_OK and the report records the failure. */
HFL_API hfl_status hfl_verify(int n, const char* suite, hfl_report** out);
HFL_API hfl_status hfl_report_passed(const hfl_report* report, int* passed);
HFL_API hfl_status hfl_report_check_count(const hfl_report* report, size_t* count);
HFL_API hfl_status hfl_report_failure_count(const hfl_report* report, size_t* count);
/* JSON or text; CSV is rejected. */
HFL_API hfl_status hfl_report_render(const hfl_report* report, hfl_format format, char** out);
HFL_API void hfl_report_free(hfl_report* report);

/* Presentation generators plus the presentation suite verdict. JSON carries
 * a top-level "generators" array; text lists one generator per line. */
HFL_API hfl_status hfl_presentation(int n, hfl_report** out);

/* Full fusion table in any of the three formats. */
HFL_API hfl_status hfl_fusion_table(int n, hfl_format format, char** out);

/* Primitive central idempotents with block kinds and ideal dimensions (JSON). */
HFL_API hfl_status hfl_idempotents(int n, char** out);

/* Grothendieck ring of H_{2n^2}. Labels are "S_m" or "S_{i,j}"; results
 * are written like "S_1 + 2*S_{0,2}" ("0" for the zero class). */
HFL_API hfl_status hfl_ring_create(int n, hfl_ring** out);
HFL_API hfl_status hfl_ring_simple_count(const hfl_ring* ring, size_t* count);
HFL_API hfl_status hfl_ring_fuse(const hfl_ring* ring, const char* a, const char* b, char** out);
/* Evaluates an integer polynomial in x -> [S_1], y -> [S_{n+1}], z -> [S_{0,1}];
 * x is only accepted for even n. */
HFL_API hfl_status hfl_ring_eval(const hfl_ring* ring, const char* polynomial, char** out);
HFL_API void hfl_ring_free(hfl_ring* ring);

#ifdef __cplusplus
}
#endif

#endif
