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

#include "hfl/hfl.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <optional>
#include <string>

#include "hfl/center.hpp"
#include "hfl/error.hpp"
#include "hfl/fusion.hpp"
#include "hfl/hopf.hpp"
#include "hfl/presentation.hpp"
#include "hfl/repr.hpp"

struct hfl_report {
    hfl::VerificationReport report;
    bool presentation = false;
};

struct hfl_ring {
    int n;
};

namespace {

thread_local std::string last_error;

hfl_status fail(hfl_status status, std::string message) {
    last_error = std::move(message);
    return status;
}

// Runs body, mapping C++ exceptions onto status codes. Clears the error text first.
template <class Body>
hfl_status guarded(Body&& body) {
    last_error.clear();
    try {
        return body();
    } catch (const hfl::UsageError& e) {
        return fail(HFL_ERR_INVALID_ARGUMENT, e.what());
    } catch (const hfl::DivisionByZero& e) {
        return fail(HFL_ERR_ARITHMETIC, e.what());
    } catch (const hfl::ModuleAxiomError& e) {
        return fail(HFL_ERR_ARITHMETIC, e.what());
    } catch (const std::bad_alloc&) {
        return fail(HFL_ERR_OUT_OF_MEMORY, "out of memory");
    } catch (const std::exception& e) {
        return fail(HFL_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(HFL_ERR_INTERNAL, "unknown exception");
    }
}

char* to_c_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void check_n(int n) { hfl::require(n >= 2, "n must be an integer >= 2, got " + std::to_string(n)); }

hfl::VerificationReport run_suite(int n, const std::string& suite) {
    if (suite == "hopf") return hfl::verify_hopf_suite(n);
    if (suite == "idempotents") return hfl::verify_idempotents(n);
    if (suite == "repr") return hfl::verify_repr(n);
    if (suite == "fusion") return hfl::verify_fusion_suite(n);
    if (suite == "presentation") return hfl::verify_presentation(n);
    if (suite == "all") {
        hfl::VerificationReport all("all", n);
        for (const char* s : {"hopf", "idempotents", "repr", "fusion", "presentation"}) all.absorb(run_suite(n, s));
        return all;
    }
    throw hfl::UsageError("unknown suite '" + suite + "'");
}

std::string render_presentation_text(const hfl::VerificationReport& r) {
    std::string out = "generators of r(H_{2n^2}), n=" + std::to_string(r.n()) + ":\n";
    for (const auto& g : r.data().at("generators")) out += "  " + g.get<std::string>() + "\n";
    return out + r.to_text();
}

hfl::Json render_presentation_json(const hfl::VerificationReport& r) {
    hfl::Json j;
    j["schema"] = hfl::kSchema;
    j["n"] = r.n();
    j["generators"] = r.data().at("generators");
    j["pass"] = r.passed();
    j["report"] = r.to_json();
    return j;
}

}  // namespace

extern "C" {

const char* hfl_version(void) { return "1.0.0"; }

const char* hfl_status_name(hfl_status status) {
    switch (status) {
        case HFL_OK: return "ok";
        case HFL_ERR_NULL_ARGUMENT: return "null argument";
        case HFL_ERR_INVALID_ARGUMENT: return "invalid argument";
        case HFL_ERR_ARITHMETIC: return "arithmetic error";
        case HFL_ERR_OUT_OF_MEMORY: return "out of memory";
        case HFL_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* hfl_last_error(void) { return last_error.c_str(); }

void hfl_string_free(char* s) { std::free(s); }

hfl_status hfl_verify(int n, const char* suite, hfl_report** out) {
    return guarded([&] {
        if (suite == nullptr || out == nullptr) return fail(HFL_ERR_NULL_ARGUMENT, "suite and out must be non-null");
        *out = nullptr;
        check_n(n);
        *out = new hfl_report{run_suite(n, suite)};
        return HFL_OK;
    });
}

hfl_status hfl_report_passed(const hfl_report* report, int* passed) {
    if (report == nullptr || passed == nullptr) return fail(HFL_ERR_NULL_ARGUMENT, "report and passed must be non-null");
    last_error.clear();
    *passed = report->report.passed() ? 1 : 0;
    return HFL_OK;
}

hfl_status hfl_report_check_count(const hfl_report* report, size_t* count) {
    if (report == nullptr || count == nullptr) return fail(HFL_ERR_NULL_ARGUMENT, "report and count must be non-null");
    last_error.clear();
    *count = report->report.checks().size();
    return HFL_OK;
}

hfl_status hfl_report_failure_count(const hfl_report* report, size_t* count) {
    if (report == nullptr || count == nullptr) return fail(HFL_ERR_NULL_ARGUMENT, "report and count must be non-null");
    last_error.clear();
    *count = report->report.failures();
    return HFL_OK;
}

hfl_status hfl_report_render(const hfl_report* report, hfl_format format, char** out) {
    return guarded([&] {
        if (report == nullptr || out == nullptr) return fail(HFL_ERR_NULL_ARGUMENT, "report and out must be non-null");
        *out = nullptr;
        const auto& r = report->report;
        switch (format) {
            case HFL_FORMAT_JSON:
                *out = to_c_string((report->presentation ? render_presentation_json(r) : r.to_json()).dump(2) + "\n");
                return HFL_OK;
            case HFL_FORMAT_TEXT:
                *out = to_c_string(report->presentation ? render_presentation_text(r) : r.to_text());
                return HFL_OK;
            case HFL_FORMAT_CSV: return fail(HFL_ERR_INVALID_ARGUMENT, "reports render as json or text, not csv");
        }
        return fail(HFL_ERR_INVALID_ARGUMENT, "unknown format");
    });
}

void hfl_report_free(hfl_report* report) { delete report; }

hfl_status hfl_presentation(int n, hfl_report** out) {
    return guarded([&] {
        if (out == nullptr) return fail(HFL_ERR_NULL_ARGUMENT, "out must be non-null");
        *out = nullptr;
        check_n(n);
        *out = new hfl_report{hfl::verify_presentation(n), true};
        return HFL_OK;
    });
}

hfl_status hfl_fusion_table(int n, hfl_format format, char** out) {
    return guarded([&] {
        if (out == nullptr) return fail(HFL_ERR_NULL_ARGUMENT, "out must be non-null");
        *out = nullptr;
        check_n(n);
        const hfl::FusionTable table = hfl::fusion_table(n);
        switch (format) {
            case HFL_FORMAT_JSON: *out = to_c_string(table.to_json().dump(2) + "\n"); return HFL_OK;
            case HFL_FORMAT_CSV: *out = to_c_string(table.to_csv()); return HFL_OK;
            case HFL_FORMAT_TEXT: *out = to_c_string(table.to_text()); return HFL_OK;
        }
        return fail(HFL_ERR_INVALID_ARGUMENT, "unknown format");
    });
}

hfl_status hfl_idempotents(int n, char** out) {
    return guarded([&] {
        if (out == nullptr) return fail(HFL_ERR_NULL_ARGUMENT, "out must be non-null");
        *out = nullptr;
        check_n(n);
        *out = to_c_string(hfl::idempotents_json(n).dump(2) + "\n");
        return HFL_OK;
    });
}

hfl_status hfl_ring_create(int n, hfl_ring** out) {
    return guarded([&] {
        if (out == nullptr) return fail(HFL_ERR_NULL_ARGUMENT, "out must be non-null");
        *out = nullptr;
        check_n(n);
        *out = new hfl_ring{n};
        return HFL_OK;
    });
}

hfl_status hfl_ring_simple_count(const hfl_ring* ring, size_t* count) {
    if (ring == nullptr || count == nullptr) return fail(HFL_ERR_NULL_ARGUMENT, "ring and count must be non-null");
    last_error.clear();
    *count = hfl::simple_count(ring->n);
    return HFL_OK;
}

hfl_status hfl_ring_fuse(const hfl_ring* ring, const char* a, const char* b, char** out) {
    return guarded([&] {
        if (ring == nullptr || a == nullptr || b == nullptr || out == nullptr)
            return fail(HFL_ERR_NULL_ARGUMENT, "ring, labels and out must be non-null");
        *out = nullptr;
        const auto la = hfl::SimpleLabel::parse(ring->n, a);
        const auto lb = hfl::SimpleLabel::parse(ring->n, b);
        *out = to_c_string(hfl::fuse(ring->n, la, lb).to_string());
        return HFL_OK;
    });
}

hfl_status hfl_ring_eval(const hfl_ring* ring, const char* polynomial, char** out) {
    return guarded([&] {
        if (ring == nullptr || polynomial == nullptr || out == nullptr)
            return fail(HFL_ERR_NULL_ARGUMENT, "ring, polynomial and out must be non-null");
        *out = nullptr;
        const hfl::IntPoly p = hfl::IntPoly::parse(polynomial);
        *out = to_c_string(hfl::eval_in_fusion(p, ring->n).to_string());
        return HFL_OK;
    });
}

void hfl_ring_free(hfl_ring* ring) { delete ring; }

}  // extern "C"
