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
#include "hfl/center.hpp"
#include "hfl/repr.hpp"
#include "oracle.hpp"

using namespace hfl;

TEST_CASE("character idempotents for n=2") {
    const HopfAlgebra h(2);
    const CycNum half(h.field(), mpq_class(1, 2));
    CHECK(e_idem(h, 0) == half * (h.one() + h.x()));
    CHECK(e_idem(h, 1) == half * (h.one() - h.x()));
    CHECK(f_idem(h, 1) == half * (h.one() - h.y()));
    CHECK_THROWS_AS(e_idem(h, 2), UsageError);
}

TEST_CASE("primitive central idempotents: count, order and ideal dimensions") {
    for (int n = 2; n <= 5; ++n) {
        CAPTURE(n);
        const HopfAlgebra h(n);
        const auto idem = primitive_central_idempotents(h);
        REQUIRE(idem.size() == static_cast<std::size_t>(2 * n + (n * n - n) / 2));
        const auto simples = all_simples(n);
        std::size_t total = 0;
        for (std::size_t k = 0; k < idem.size(); ++k) {
            CHECK(idem[k].label(n) == simples[k].to_string());
            const std::size_t d = ideal_dimension(h, idem[k].element);
            CHECK(d == idem[k].block_dimension());
            total += d;
        }
        CHECK(total == static_cast<std::size_t>(2 * n * n));
    }
}

TEST_CASE("each idempotent is the identity on its own simple and zero on the others") {
    // Checked on explicit module matrices, independently of multiplication in H.
    for (int n = 2; n <= 4; ++n) {
        CAPTURE(n);
        const HopfAlgebra h(n);
        const auto idem = primitive_central_idempotents(h);
        const auto simples = all_simples(n);
        for (std::size_t s = 0; s < simples.size(); ++s) {
            const Rep rep = build_simple(h, simples[s]);
            for (std::size_t k = 0; k < idem.size(); ++k) {
                const CycMatrix img = rep_of_element(h, rep, idem[k].element);
                const CycMatrix want = k == s ? identity_matrix(h.field(), rep.dim)
                                              : scaled(identity_matrix(h.field(), rep.dim), CycNum());
                CHECK(img == want);
            }
        }
    }
}

TEST_CASE("center dimension by commutant rank matches the basis count") {
    for (int n = 2; n <= 5; ++n) {
        CAPTURE(n);
        const HopfAlgebra h(n);
        const std::size_t expected = static_cast<std::size_t>((n * n + 3 * n) / 2);
        CHECK(center_dimension(h) == expected);
        const auto basis = center_basis(h);
        CHECK(basis.size() == expected);
        for (const AlgElem& c : basis)
            for (const AlgElem& g : {h.x(), h.y(), h.z()}) CHECK(h.multiply(c, g) == h.multiply(g, c));
    }
}

TEST_CASE("idempotent suite and JSON listing") {
    for (int n : {2, 3, 6}) {
        CAPTURE(n);
        const auto r = verify_idempotents(n);
        CHECK(r.passed());
        const Json j = idempotents_json(n);
        CHECK(j["schema"] == "hfl/1");
        CHECK(j["count"] == 2 * n + (n * n - n) / 2);
        CHECK(j["idempotents"][0]["label"] == "S_0");
        CHECK(j["idempotents"][0]["kind"] == "one_dim");
        CHECK(j["idempotents"].back()["kind"] == "two_dim");
        CHECK(j["idempotents"].back()["ideal_dimension"] == 4);
    }
}
