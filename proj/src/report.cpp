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

#include "hfl/report.hpp"

#include <algorithm>
#include <sstream>

namespace hfl {

void VerificationReport::add(std::string axiom, bool pass, std::optional<std::string> witness) {
    checks_.push_back(Check{std::move(axiom), pass, pass ? std::nullopt : std::move(witness)});
}

void VerificationReport::absorb(const VerificationReport& other) {
    for (const auto& c : other.checks_) checks_.push_back(Check{other.suite_ + "." + c.axiom, c.pass, c.witness});
    for (const auto& note : other.notes_) notes_.push_back(other.suite_ + ": " + note);
    if (!other.data_.empty()) data_[other.suite_] = other.data_;
}

bool VerificationReport::passed() const { return failures() == 0; }

std::size_t VerificationReport::failures() const {
    return static_cast<std::size_t>(std::count_if(checks_.begin(), checks_.end(), [](const Check& c) { return !c.pass; }));
}

const Check* VerificationReport::find(const std::string& axiom) const {
    auto it = std::find_if(checks_.begin(), checks_.end(), [&](const Check& c) { return c.axiom == axiom; });
    return it == checks_.end() ? nullptr : &*it;
}

Json VerificationReport::to_json() const {
    Json j;
    j["schema"] = kSchema;
    j["suite"] = suite_;
    j["n"] = n_;
    j["pass"] = passed();
    Json checks = Json::array();
    for (const auto& c : checks_) {
        Json e;
        e["axiom"] = c.axiom;
        e["pass"] = c.pass;
        e["witness"] = c.witness ? Json(*c.witness) : Json(nullptr);
        checks.push_back(std::move(e));
    }
    j["checks"] = std::move(checks);
    j["notes"] = notes_;
    if (!data_.empty()) j["data"] = data_;
    return j;
}

std::string VerificationReport::to_text() const {
    std::ostringstream os;
    os << "suite " << suite_ << " n=" << n_ << ": " << (passed() ? "PASS" : "FAIL") << " (" << checks_.size()
       << " checks, " << failures() << " failed)\n";
    for (const auto& c : checks_) {
        os << (c.pass ? "  PASS " : "  FAIL ") << c.axiom;
        if (c.witness) os << "  [" << *c.witness << "]";
        os << "\n";
    }
    for (const auto& note : notes_) os << "  note: " << note << "\n";
    return os.str();
}

}  // namespace hfl
