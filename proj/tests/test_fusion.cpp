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

#include <sstream>

#include "doctest.h"
#include "hfl/error.hpp"
#include "hfl/fusion.hpp"
#include "oracle.hpp"

using namespace hfl;

namespace {

FusionVector v(int n, std::initializer_list<const char*> labels) {
    FusionVector out(n);
    for (const char* l : labels) out += FusionVector::unit(SimpleLabel::parse(n, l));
    return out;
}

SimpleLabel s(int n, const char* text) { return SimpleLabel::parse(n, text); }

}  // namespace

TEST_CASE("labels: canonical forms, order and parsing") {
    CHECK(SimpleLabel::one_dim(3, 7).to_string() == "S_1");
    CHECK(SimpleLabel::one_dim(3, -1).to_string() == "S_5");
    CHECK(SimpleLabel::two_dim(4, 3, 1).to_string() == "S_{1,3}");
    CHECK(SimpleLabel::two_dim(4, 5, 4).to_string() == "S_{0,1}");
    CHECK_THROWS_AS(SimpleLabel::two_dim(4, 1, 5), std::logic_error);
    CHECK(s(3, "S_{2}") == SimpleLabel::one_dim(3, 2));
    CHECK_THROWS_AS(s(3, "S_6"), UsageError);
    CHECK_THROWS_AS(s(3, "S_{2,1}"), UsageError);
    CHECK_THROWS_AS(s(3, "T_1"), UsageError);
    for (int n = 2; n <= 8; ++n) {
        const auto all = all_simples(n);
        REQUIRE(all.size() == simple_count(n));
        CHECK(all.size() == static_cast<std::size_t>(2 * n + n * (n - 1) / 2));
        for (std::size_t k = 0; k < all.size(); ++k) {
            CHECK(all[k].index() == k);
            CHECK(s(n, all[k].to_string().c_str()) == all[k]);
        }
    }
    CHECK(s(3, "S_1").sigma() == 1);
    CHECK(s(3, "S_4").sigma() == -1);
}

TEST_CASE("fusion vectors print in label order") {
    FusionVector a = v(3, {"S_{0,2}", "S_1", "S_{0,2}"});
    CHECK(a.to_string() == "S_1 + 2*S_{0,2}");
    a -= v(3, {"S_1", "S_1"});
    CHECK(a.to_string() == "-S_1 + 2*S_{0,2}");
    CHECK(FusionVector(3).to_string() == "0");
    CHECK(v(3, {"S_1", "S_{0,1}"}).dimension() == 3);
}

TEST_CASE("frozen tensor products") {
    CHECK(fuse(4, s(4, "S_{0,2}"), s(4, "S_{1,3}")) == v(4, {"S_1", "S_5", "S_3", "S_7"}));
    CHECK(fuse(3, s(3, "S_{0,1}"), s(3, "S_{0,1}")) == v(3, {"S_{0,2}", "S_1", "S_4"}));
    CHECK(fuse(2, s(2, "S_{0,1}"), s(2, "S_{0,1}")) == v(2, {"S_0", "S_1", "S_2", "S_3"}));
    CHECK(fuse(3, s(3, "S_1"), s(3, "S_{0,1}")) == v(3, {"S_{1,2}"}));
    CHECK(fuse(2, s(2, "S_1"), s(2, "S_1")) == v(2, {"S_0"}));
    CHECK_THROWS_AS(fuse(3, s(2, "S_1"), s(3, "S_1")), UsageError);
}

TEST_CASE("closed form equals the character oracle") {
    for (int n = 2; n <= 5; ++n) {
        CAPTURE(n);
        const HopfAlgebra h(n);
        const oracle::CharacterOracle chars(h);
        std::size_t mismatches = 0;
        for (std::size_t a = 0; a < chars.simples.size(); ++a)
            for (std::size_t b = 0; b < chars.simples.size(); ++b)
                if (fuse(n, chars.simples[a], chars.simples[b]) != chars.tensor(a, b)) ++mismatches;
        CHECK(mismatches == 0);
    }
}

TEST_CASE("fusion table serializations") {
    const FusionTable t = fusion_table(2);
    const Json j = t.to_json();
    CHECK(j["schema"] == "hfl/1");
    CHECK(j["n"] == 2);
    CHECK(j["simples"] == Json::parse(R"(["S_0","S_1","S_2","S_3","S_{0,1}"])"));
    CHECK(j["table"][4][4] == Json::parse(R"({"S_0":1,"S_1":1,"S_2":1,"S_3":1})"));
    CHECK(j["table"][1][1] == Json::parse(R"({"S_0":1})"));

    const std::string csv = t.to_csv();
    std::istringstream lines(csv);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "a,b,c,N");
    std::size_t rows = 0;
    long total = 0;
    while (std::getline(lines, line)) {
        ++rows;
        total += std::stol(line.substr(line.rfind(',') + 1));
    }
    // 16 one-dim products, 8 mixed products, S_{0,1}^2 with four summands.
    CHECK(rows == 28);
    CHECK(total == 28);
    CHECK(csv.find("\"S_{0,1}\",\"S_{0,1}\",S_0,1") != std::string::npos);
    CHECK(fusion_table(4).to_csv() == fusion_table(4).to_csv());
}

TEST_CASE("ring powers and suites") {
    const FusionVector c = FusionVector::unit(s(3, "S_{0,1}"));
    CHECK(ring_pow(c, 0) == ring_one(3));
    CHECK(ring_pow(c, 3) == ring_mul(c, ring_mul(c, c)));
    for (int n = 2; n <= 6; ++n) {
        CAPTURE(n);
        const auto r = verify_fusion_suite(n);
        CHECK(r.passed());
        CHECK(r.data()["oracle"]["pairs"] == simple_count(n) * simple_count(n));
    }
}
