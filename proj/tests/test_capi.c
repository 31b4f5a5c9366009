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

/* Exercises the shared library through its C header only. */

#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "hfl/hfl.h"

static int failures = 0;

#define EXPECT(cond)                                                      \
    do {                                                                  \
        if (!(cond)) {                                                    \
            fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
            ++failures;                                                   \
        }                                                                 \
    } while (0)

static void expect_string(char* got, const char* want, int line) {
    if (got == NULL || strcmp(got, want) != 0) {
        fprintf(stderr, "line %d: got '%s', want '%s'\n", line, got ? got : "(null)", want);
        ++failures;
    }
    hfl_string_free(got);
}

static void test_report(void) {
    hfl_report* report = NULL;
    EXPECT(hfl_verify(3, "fusion", &report) == HFL_OK);
    EXPECT(report != NULL);
    int passed = 0;
    size_t checks = 0, failed = 1;
    EXPECT(hfl_report_passed(report, &passed) == HFL_OK && passed == 1);
    EXPECT(hfl_report_check_count(report, &checks) == HFL_OK && checks == 6);
    EXPECT(hfl_report_failure_count(report, &failed) == HFL_OK && failed == 0);
    char* json = NULL;
    EXPECT(hfl_report_render(report, HFL_FORMAT_JSON, &json) == HFL_OK);
    EXPECT(json != NULL && strstr(json, "\"schema\": \"hfl/1\"") != NULL);
    EXPECT(json != NULL && strstr(json, "\"witness\": null") != NULL);
    hfl_string_free(json);
    char* csv = NULL;
    EXPECT(hfl_report_render(report, HFL_FORMAT_CSV, &csv) == HFL_ERR_INVALID_ARGUMENT && csv == NULL);
    EXPECT(strlen(hfl_last_error()) > 0);
    hfl_report_free(report);
}

static void test_errors(void) {
    hfl_report* report = (hfl_report*)0x1;
    EXPECT(hfl_verify(1, "hopf", &report) == HFL_ERR_INVALID_ARGUMENT);
    EXPECT(report == NULL);
    EXPECT(strstr(hfl_last_error(), "n must be") != NULL);
    EXPECT(hfl_verify(3, "nope", &report) == HFL_ERR_INVALID_ARGUMENT);
    EXPECT(strstr(hfl_last_error(), "nope") != NULL);
    EXPECT(hfl_verify(3, NULL, &report) == HFL_ERR_NULL_ARGUMENT);
    EXPECT(hfl_report_passed(NULL, NULL) == HFL_ERR_NULL_ARGUMENT);
    EXPECT(strcmp(hfl_status_name(HFL_ERR_ARITHMETIC), "arithmetic error") == 0);
    hfl_report_free(NULL);
    hfl_ring_free(NULL);
    hfl_string_free(NULL);
}

static void test_ring(void) {
    hfl_ring* ring = NULL;
    EXPECT(hfl_ring_create(4, &ring) == HFL_OK);
    size_t count = 0;
    EXPECT(hfl_ring_simple_count(ring, &count) == HFL_OK && count == 14);
    char* out = NULL;
    EXPECT(hfl_ring_fuse(ring, "S_{0,2}", "S_{1,3}", &out) == HFL_OK);
    expect_string(out, "S_1 + S_3 + S_5 + S_7", __LINE__);
    EXPECT(hfl_ring_eval(ring, "z^3-zy^3-3yz", &out) == HFL_OK);
    expect_string(out, "0", __LINE__);
    EXPECT(hfl_ring_eval(ring, "zy", &out) == HFL_OK);
    expect_string(out, "S_{1,2}", __LINE__);
    out = NULL;
    EXPECT(hfl_ring_fuse(ring, "S_9", "S_0", &out) == HFL_ERR_INVALID_ARGUMENT && out == NULL);
    EXPECT(hfl_ring_eval(ring, "z +", &out) == HFL_ERR_INVALID_ARGUMENT && out == NULL);
    hfl_ring_free(ring);

    EXPECT(hfl_ring_create(7, &ring) == HFL_OK);
    EXPECT(hfl_ring_eval(ring, "z^4-z^3y^4+3zy^5-4z^2y+y^9+y^2", &out) == HFL_OK);
    expect_string(out, "0", __LINE__);
    EXPECT(hfl_ring_eval(ring, "x", &out) == HFL_ERR_INVALID_ARGUMENT);
    hfl_ring_free(ring);
}

static void test_documents(void) {
    char* table = NULL;
    EXPECT(hfl_fusion_table(2, HFL_FORMAT_CSV, &table) == HFL_OK);
    EXPECT(table != NULL && strncmp(table, "a,b,c,N\n", 8) == 0);
    char* again = NULL;
    EXPECT(hfl_fusion_table(2, HFL_FORMAT_CSV, &again) == HFL_OK);
    EXPECT(table != NULL && again != NULL && strcmp(table, again) == 0);
    hfl_string_free(table);
    hfl_string_free(again);

    char* idem = NULL;
    EXPECT(hfl_idempotents(3, &idem) == HFL_OK);
    EXPECT(idem != NULL && strstr(idem, "\"count\": 9") != NULL);
    hfl_string_free(idem);

    hfl_report* pres = NULL;
    EXPECT(hfl_presentation(5, &pres) == HFL_OK);
    char* text = NULL;
    EXPECT(hfl_report_render(pres, HFL_FORMAT_TEXT, &text) == HFL_OK);
    EXPECT(text != NULL && strstr(text, "y^9 - z^2y^3 + y^4 + z^3 - 3zy") != NULL);
    hfl_string_free(text);
    char* json = NULL;
    EXPECT(hfl_report_render(pres, HFL_FORMAT_JSON, &json) == HFL_OK);
    EXPECT(json != NULL && strstr(json, "\"generators\"") != NULL);
    hfl_string_free(json);
    hfl_report_free(pres);
}

int main(void) {
    EXPECT(strlen(hfl_version()) > 0);
    test_report();
    test_errors();
    test_ring();
    test_documents();
    if (failures != 0) {
        fprintf(stderr, "%d C interface expectation(s) failed\n", failures);
        return EXIT_FAILURE;
    }
    printf("C interface: all expectations met\n");
    return EXIT_SUCCESS;
}
