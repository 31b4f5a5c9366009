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
#include "hfl/error.hpp"
#include "hfl/repr.hpp"
#include "oracle.hpp"

using namespace hfl;

namespace {

FusionVector label(int n, const char* text) { return FusionVector::unit(SimpleLabel::parse(n, text)); }

}  // namespace

TEST_CASE("simples satisfy the module axioms and their dimensions square-sum to 2n^2") {
    for (int n = 2; n <= 6; ++n) {
        CAPTURE(n);
        const HopfAlgebra h(n);
        long squares = 0;
        for (const auto& s : all_simples(n)) {
            const Rep rep = build_simple(h, s);
            CHECK_FALSE(module_axiom_failure(h, rep).has_value());
            CHECK(rep.dim == static_cast<std::size_t>(s.dim()));
            squares += s.dim() * s.dim();
        }
        CHECK(squares == 2L * n * n);
    }
}

TEST_CASE("a broken module is reported") {
    const HopfAlgebra h(3);
    Rep rep = build_simple(h, SimpleLabel::parse(3, "S_{0,1}"));
    rep.z = rep.x;
    CHECK(module_axiom_failure(h, rep).has_value());
}

TEST_CASE("the closed tensor formula agrees with the coproduct element") {
    for (int n = 2; n <= 4; ++n) {
        CAPTURE(n);
        const HopfAlgebra h(n);
        const auto simples = all_simples(n);
        for (const auto& a : simples)
            for (const auto& b : simples) {
                const Rep ra = build_simple(h, a), rb = build_simple(h, b);
                const Rep closed = tensor_rep(h, ra, rb);
                const Rep viaDelta = oracle::coproduct_tensor(h, ra, rb);
                CHECK(closed.x == viaDelta.x);
                CHECK(closed.y == viaDelta.y);
                CHECK(closed.z == viaDelta.z);
            }
    }
}

TEST_CASE("idempotent traces and solved characters decompose modules identically") {
    for (int n = 2; n <= 4; ++n) {
        CAPTURE(n);
        const HopfAlgebra h(n);
        const Decomposer dec(h);
        const oracle::CharacterOracle chars(h);
        for (std::size_t a = 0; a < chars.simples.size(); ++a)
            for (std::size_t b = 0; b < chars.simples.size(); ++b)
                CHECK(dec.decompose(tensor_rep(h, chars.reps[a], chars.reps[b])) == chars.tensor(a, b));
    }
}

TEST_CASE("frozen decompositions") {
    const HopfAlgebra h2(2), h3(3);
    auto tensor = [](const HopfAlgebra& h, const char* a, const char* b) {
        return decompose(h, tensor_rep(h, build_simple(h, SimpleLabel::parse(h.n(), a)),
                                       build_simple(h, SimpleLabel::parse(h.n(), b))));
    };
    CHECK(tensor(h2, "S_1", "S_1") == label(2, "S_0"));
    CHECK(tensor(h2, "S_{0,1}", "S_{0,1}") ==
          label(2, "S_0") + label(2, "S_1") + label(2, "S_2") + label(2, "S_3"));
    CHECK(tensor(h3, "S_{0,1}", "S_{0,1}") == label(3, "S_{0,2}") + label(3, "S_1") + label(3, "S_4"));
    CHECK(tensor(h3, "S_1", "S_{0,1}") == label(3, "S_{1,2}"));
}

TEST_CASE("decomposition rejects non-modules") {
    const HopfAlgebra h(2);
    Rep rep = build_simple(h, SimpleLabel::parse(2, "S_0"));
    rep.x = scaled(rep.x, CycNum(h.field(), mpq_class(2)));
    CHECK_THROWS_AS(decompose(h, rep), ModuleAxiomError);
}

TEST_CASE("repr suite passes") {
    for (int n : {2, 3, 4}) {
        CAPTURE(n);
        CHECK(verify_repr(n).passed());
    }
}
