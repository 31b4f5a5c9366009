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

// Command-line front end. Talks to the library only through the C interface.

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hfl/hfl.h"
#include "json.hpp"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

// Carries an exit status out of a subcommand.
struct Exit {
    int code;
    std::string message;
};

struct Options {
    std::string n = "3";
    std::string suite = "all";
    std::string format = "json";
    std::string out;
};

std::vector<int> parse_n(const std::string& text) {
    if (text == "all") return {2, 3, 4, 5, 6, 7, 8};
    int value = 0;
    const char* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end || value < 2)
        throw Exit{kExitUsage, "--n expects an integer >= 2 or 'all', got '" + text + "'"};
    return {value};
}

hfl_format parse_format(const std::string& text) {
    if (text == "json") return HFL_FORMAT_JSON;
    if (text == "csv") return HFL_FORMAT_CSV;
    return HFL_FORMAT_TEXT;
}

// Library status to exit status: bad arguments are usage errors.
void check(hfl_status status) {
    if (status == HFL_OK) return;
    const std::string why = std::string(hfl_status_name(status)) + ": " + hfl_last_error();
    throw Exit{status == HFL_ERR_INVALID_ARGUMENT || status == HFL_ERR_NULL_ARGUMENT ? kExitUsage : kExitFailed, why};
}

struct StringDeleter {
    void operator()(char* s) const { hfl_string_free(s); }
};
struct ReportDeleter {
    void operator()(hfl_report* r) const { hfl_report_free(r); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;
using OwnedReport = std::unique_ptr<hfl_report, ReportDeleter>;

std::string take(char* s) { return OwnedString(s).get(); }

// Renders one report per n; a single n prints the bare document.
struct Rendered {
    std::string text;
    bool passed = true;
};

Rendered render_reports(const std::vector<int>& ns, hfl_format format,
                        hfl_status (*make)(int, const std::string&, hfl_report**), const std::string& arg) {
    Rendered result;
    Json runs = Json::array();
    for (int n : ns) {
        hfl_report* raw = nullptr;
        check(make(n, arg, &raw));
        OwnedReport report(raw);
        int passed = 0;
        check(hfl_report_passed(report.get(), &passed));
        result.passed = result.passed && passed != 0;
        char* out = nullptr;
        check(hfl_report_render(report.get(), format, &out));
        const std::string body = take(out);
        if (format == HFL_FORMAT_JSON && ns.size() > 1)
            runs.push_back(Json::parse(body));
        else
            result.text += body;
    }
    if (format == HFL_FORMAT_JSON && ns.size() > 1) {
        Json doc;
        doc["schema"] = "hfl/1";
        doc["pass"] = result.passed;
        doc["runs"] = std::move(runs);
        result.text = doc.dump(2) + "\n";
    }
    return result;
}

void emit(const Options& opt, const std::string& text) {
    if (opt.out.empty()) {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream file(opt.out, std::ios::binary);
    if (!file) throw Exit{kExitUsage, "cannot open '" + opt.out + "' for writing"};
    file << text;
    if (!file.flush()) throw Exit{kExitFailed, "write to '" + opt.out + "' failed"};
}

void require_format(const Options& opt, std::initializer_list<const char*> allowed, const char* command) {
    for (const char* f : allowed)
        if (opt.format == f) return;
    throw Exit{kExitUsage, std::string(command) + " does not support --format " + opt.format};
}

int cmd_verify(const Options& opt) {
    require_format(opt, {"json", "text"}, "verify");
    const auto ns = parse_n(opt.n);
    const Rendered r = render_reports(
        ns, parse_format(opt.format),
        [](int n, const std::string& suite, hfl_report** out) { return hfl_verify(n, suite.c_str(), out); },
        opt.suite);
    emit(opt, r.text);
    return r.passed ? kExitPass : kExitFailed;
}

int cmd_presentation(const Options& opt) {
    require_format(opt, {"json", "text"}, "presentation");
    const auto ns = parse_n(opt.n);
    const Rendered r = render_reports(
        ns, parse_format(opt.format), [](int n, const std::string&, hfl_report** out) { return hfl_presentation(n, out); },
        "");
    emit(opt, r.text);
    return r.passed ? kExitPass : kExitFailed;
}

int cmd_table(const Options& opt) {
    const auto ns = parse_n(opt.n);
    const hfl_format format = parse_format(opt.format);
    if (format == HFL_FORMAT_CSV && ns.size() > 1)
        throw Exit{kExitUsage, "csv tables are per n; pass a single --n"};
    std::string text;
    Json tables = Json::array();
    for (int n : ns) {
        char* out = nullptr;
        check(hfl_fusion_table(n, format, &out));
        const std::string body = take(out);
        if (format == HFL_FORMAT_JSON && ns.size() > 1)
            tables.push_back(Json::parse(body));
        else
            text += body;
    }
    if (format == HFL_FORMAT_JSON && ns.size() > 1) {
        Json doc;
        doc["schema"] = "hfl/1";
        doc["tables"] = std::move(tables);
        text = doc.dump(2) + "\n";
    }
    emit(opt, text);
    return kExitPass;
}

int cmd_idempotents(const Options& opt) {
    require_format(opt, {"json"}, "idempotents");
    const auto ns = parse_n(opt.n);
    std::string text;
    Json runs = Json::array();
    for (int n : ns) {
        char* out = nullptr;
        check(hfl_idempotents(n, &out));
        const std::string body = take(out);
        if (ns.size() > 1)
            runs.push_back(Json::parse(body));
        else
            text = body;
    }
    if (ns.size() > 1) {
        Json doc;
        doc["schema"] = "hfl/1";
        doc["runs"] = std::move(runs);
        text = doc.dump(2) + "\n";
    }
    emit(opt, text);
    return kExitPass;
}

void add_common(CLI::App* sub, Options& opt, std::initializer_list<std::string> formats) {
    sub->add_option("--n", opt.n, "algebra parameter n >= 2, or 'all' for 2..8")->capture_default_str();
    sub->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember(std::vector<std::string>(formats)))
        ->capture_default_str();
    sub->add_option("--out", opt.out, "write output to this path instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification for the Hopf algebras H_{2n^2} and their Grothendieck rings", "hfl"};
    app.set_version_flag("--version", hfl_version());
    app.require_subcommand(1);
    Options opt;

    auto* verify = app.add_subcommand("verify", "run verification suites; exit 1 if any check fails");
    add_common(verify, opt, {"json", "text"});
    verify->add_option("--suite", opt.suite, "suite to run")
        ->check(CLI::IsMember({"hopf", "idempotents", "repr", "fusion", "presentation", "all"}))
        ->capture_default_str();
    auto* table = app.add_subcommand("table", "print the fusion table");
    add_common(table, opt, {"json", "csv", "text"});
    auto* presentation = app.add_subcommand("presentation", "print ring generators and their verification verdict");
    add_common(presentation, opt, {"json", "text"});
    auto* idempotents = app.add_subcommand("idempotents", "print the primitive central idempotents");
    add_common(idempotents, opt, {"json"});

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
        if (verify->parsed()) return cmd_verify(opt);
        if (table->parsed()) return cmd_table(opt);
        if (presentation->parsed()) return cmd_presentation(opt);
        return cmd_idempotents(opt);
    } catch (const Exit& e) {
        std::cerr << "hfl: " << e.message << "\n";
        return e.code;
    } catch (const std::exception& e) {
        std::cerr << "hfl: " << e.what() << "\n";
        return kExitFailed;
    }
}
