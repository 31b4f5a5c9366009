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

#include "doctest.h"
#include "example_generators.hpp"
#include "hfl/error.hpp"
#include "hfl/presentation.hpp"

using namespace hfl;

namespace {

IntPoly P(const char* text) { return IntPoly::parse(text); }
FusionVector unit(int n, const char* label) { return FusionVector::unit(SimpleLabel::parse(n, label)); }

}  // namespace

TEST_CASE("polynomial parsing and printing") {
    CHECK(P("3zy^2 - z^3*y + 7") == IntPoly::monomial(0, 2, 1, 3) - IntPoly::monomial(0, 1, 3) + IntPoly(7));
    CHECK(P("x y x") == IntPoly::monomial(2, 1, 0));
    CHECK(P("z - z") == IntPoly());
    CHECK(P("-z^3y^5 + 3zy^6").to_string() == "-z^3y^5 + 3zy^6");
    CHECK(P("1 + x + z^2y").to_string() == "z^2y + x + 1");
    CHECK(IntPoly().to_string() == "0");
    for (const char* bad : {"", "z +", "z^", "3 4", "w"}) CHECK_THROWS_AS(P(bad), UsageError);
    CHECK((P("z+y") * P("z-y")) == P("z^2-y^2"));
    CHECK(P("z+1").pow(3) == P("z^3+3z^2+3z+1"));
}

TEST_CASE("binomials") {
    CHECK(binomial(6, 3) == 20);
    CHECK(binomial(30, 15) == 155117520);
    CHECK(binomial(3, 4) == 0);
    CHECK(binomial(-1, 0) == 0);
}

TEST_CASE("Fibonacci polynomials") {
    CHECK(fibonacci_poly(0) == IntPoly());
    CHECK(fibonacci_poly(1) == IntPoly(1));
    CHECK(fibonacci_poly(2) == P("z"));
    CHECK(fibonacci_poly(4) == P("z^3 - 2yz"));
    CHECK(fibonacci_poly(5) == P("z^4 - 3yz^2 + y^2"));
    for (long t = 2; t <= 30; ++t) {
        CAPTURE(t);
        CHECK(fibonacci_poly(t) == fibonacci_closed_form(t));
    }
    // With y = -1, z = 1 the coefficient sum is the ordinary Fibonacci number.
    mpz_class sum = 0;
    const IntPoly f30 = fibonacci_closed_form(30);
    for (const auto& [e, c] : f30.terms()) sum += c * (e[1] % 2 ? -1 : 1);
    CHECK(sum == 832040);
}

TEST_CASE("normalization") {
    CHECK(normalize_relation(5, P("zy^6 + y^11")) == P("zy + y"));
    CHECK(normalize_relation(5, P("y^12")) == P("y^2"));
    CHECK(normalize_relation(4, P("zx^2y^3 + x^3")) == P("zy + xy^2"));
    CHECK(normalize_relation(4, P("x^4 - 1")) == P("y^4 - 1"));
}

TEST_CASE("S_{0,m+2} expansions") {
    CHECK(s0_expansion(5, 1) == P("z^3 - 3yz"));
    CHECK(s0_expansion(5, 0) == P("z^2 - y^6 - y"));
    CHECK(s0_expansion(4, 0) == P("z^2 - x - y"));
    for (int n = 3; n <= 8; ++n)
        for (int m = 0; m <= n - 3; ++m) {
            CAPTURE(n);
            CAPTURE(m);
            CHECK(eval_in_fusion(s0_expansion(n, m), n) == unit(n, ("S_{0," + std::to_string(m + 2) + "}").c_str()));
        }
    CHECK_THROWS_AS(s0_expansion(5, 3), UsageError);
}

TEST_CASE("the sign-flipped quadratic is not the class of S_{0,2}") {
    for (int n : {3, 5, 7}) {
        const IntPoly y = IntPoly::y(), z = IntPoly::z();
        const IntPoly yn1 = y.pow(static_cast<unsigned>(n + 1));
        CHECK(eval_in_fusion(z * z - yn1 - y, n) == unit(n, "S_{0,2}"));
        CHECK(eval_in_fusion(z * z + yn1 + y, n) != unit(n, "S_{0,2}"));
    }
}

TEST_CASE("evaluation in the fusion ring") {
    CHECK(eval_in_fusion(P("z"), 3) == unit(3, "S_{0,1}"));
    CHECK(eval_in_fusion(P("y"), 3) == unit(3, "S_4"));
    CHECK(eval_in_fusion(P("x"), 4) == unit(4, "S_1"));
    CHECK(eval_in_fusion(P("zy^2"), 5) == unit(5, "S_{2,3}"));
    CHECK(eval_in_fusion(P("3"), 2) == 3 * FusionVector::unit(SimpleLabel::one_dim(2, 0)));
    CHECK_THROWS_AS(eval_in_fusion(P("x"), 3), UsageError);
}

TEST_CASE("generators match the worked examples and vanish") {
    for (const auto& [n, texts] : examples::generator_sets()) {
        CAPTURE(n);
        const auto rel = presentation_relations(n);
        REQUIRE(rel.size() == texts.size());
        for (std::size_t k = 0; k < rel.size(); ++k) {
            CAPTURE(texts[k]);
            CHECK(rel[k] == P(texts[k].c_str()));
            CHECK(eval_in_fusion(P(texts[k].c_str()), n).is_zero());
        }
        for (const IntPoly& p : assembled_relations(n)) CHECK(eval_in_fusion(p, n).is_zero());
    }
}

TEST_CASE("the monomial basis is unimodular") {
    const std::map<int, long> dets = {{2, 1}, {3, 1}, {4, -1}, {5, -1}, {6, -1}, {7, 1}, {8, -1}};
    for (const auto& [n, det] : dets) {
        CAPTURE(n);
        CHECK(basis_monomials(n).size() == simple_count(n));
        CHECK(basis_determinant(n) == det);
    }
}

TEST_CASE("presentation suite passes and lists generators") {
    for (int n = 2; n <= 8; ++n) {
        CAPTURE(n);
        const auto r = verify_presentation(n);
        CHECK(r.passed());
        CHECK(r.data()["generators"].size() == examples::generator_sets().at(n).size());
    }
}
