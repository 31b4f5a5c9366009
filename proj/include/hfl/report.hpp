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

#ifndef HFL_REPORT_HPP
#define HFL_REPORT_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace hfl {

using Json = nlohmann::ordered_json;

struct Check {
    std::string axiom;
    bool pass = false;
    std::optional<std::string> witness;
};

/// Outcome of a verification suite: one entry per axiom, plus free-form notes
/// (errata, informational findings) that never affect the verdict, plus an
/// optional data payload (e.g. presentation generators).
class VerificationReport {
   public:
    VerificationReport(std::string suite, int n) : suite_(std::move(suite)), n_(n) {}

    void add(std::string axiom, bool pass, std::optional<std::string> witness = std::nullopt);
    void note(std::string text) { notes_.push_back(std::move(text)); }
    /// Append another report's checks, prefixing each axiom with "<suite>.".
    void absorb(const VerificationReport& other);

    const std::string& suite() const noexcept { return suite_; }
    int n() const noexcept { return n_; }
    const std::vector<Check>& checks() const noexcept { return checks_; }
    const std::vector<std::string>& notes() const noexcept { return notes_; }
    Json& data() noexcept { return data_; }
    const Json& data() const noexcept { return data_; }

    bool passed() const;
    std::size_t failures() const;
    const Check* find(const std::string& axiom) const;

    /// {"schema": "hfl/1", "suite", "n", "pass", "checks": [{axiom, pass, witness}], "notes", "data"}
    Json to_json() const;
    std::string to_text() const;

   private:
    std::string suite_;
    int n_;
    std::vector<Check> checks_;
    std::vector<std::string> notes_;
    Json data_ = Json::object();
};

inline constexpr const char* kSchema = "hfl/1";

}  // namespace hfl

#endif
