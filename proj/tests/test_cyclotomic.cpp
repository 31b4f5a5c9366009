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
#include "hfl/cyclotomic.hpp"
#include "hfl/error.hpp"
#include "hfl/matrix.hpp"

using namespace hfl;

TEST_CASE("cyclotomic polynomials match known coefficient lists") {
    CHECK(cyclotomic_polynomial(1) == std::vector<long>{-1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<long>{1, 0, 1});
    CHECK(cyclotomic_polynomial(6) == std::vector<long>{1, -1, 1});
    CHECK(cyclotomic_polynomial(10) == std::vector<long>{1, -1, 1, -1, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<long>{1, 0, -1, 0, 1});
    CHECK(cyclotomic_polynomial(16) == std::vector<long>{1, 0, 0, 0, 0, 0, 0, 0, 1});
    // Phi_{2p} for an odd prime p has alternating unit coefficients.
    const auto phi14 = cyclotomic_polynomial(14);
    REQUIRE(phi14.size() == 7);
    for (std::size_t k = 0; k < phi14.size(); ++k) CHECK(phi14[k] == (k % 2 == 0 ? 1 : -1));
}

TEST_CASE("root of unity has exact order 2n") {
    for (int n = 2; n <= 8; ++n) {
        const FieldPtr f = make_field(n);
        CyclotomicField tmp(n);
        CHECK(f->degree() == static_cast<int>(cyclotomic_polynomial(2 * n).size()) - 1);
        CycNum p = CycNum::one(f);
        for (int k = 1; k <= 2 * n; ++k) {
            p *= CycNum::root(f, 1);
            if (k < 2 * n) CHECK_FALSE(p.is_one());
        }
        CHECK(p.is_one());
        CHECK(CycNum::root(f, n) == -CycNum::one(f));
        CHECK(CycNum::root(f, -3) * CycNum::root(f, 3) == CycNum::one(f));
    }
}

TEST_CASE("field arithmetic and inverses") {
    const FieldPtr f = make_field(5);
    const CycNum a = CycNum::root(f, 1) + CycNum(f, mpq_class(2, 3));
    const CycNum b = CycNum::root(f, 7) * mpq_class(-5, 2) + CycNum::one(f);
    CHECK(a * a.inverse() == CycNum::one(f));
    CHECK((a * b) / b == a);
    CHECK((a + b) - b == a);
    CHECK_THROWS_AS(CycNum::zero(f).inverse(), DivisionByZero);
    CHECK_THROWS_AS(make_field(1), UsageError);
    // sum of all 2n-th roots vanishes
    CycNum s = CycNum::zero(f);
    for (int k = 0; k < 10; ++k) s += CycNum::root(f, k);
    CHECK(s.is_zero());
}

TEST_CASE("half-square exponent squares to q^{m^2} and depends on m mod n") {
    for (int n = 2; n <= 8; ++n) {
        const FieldPtr f = make_field(n);
        for (long m = -2 * n; m < 3 * n; ++m) {
            const CycNum s = q_half_square(f, m);
            CHECK(s * s == q_power(f, m * m));
            CHECK(s == q_half_square(f, m + n));
        }
    }
}

TEST_CASE("Bareiss determinant and rank on integers") {
    Matrix<mpz_class> m(3, 3, mpz_class(0));
    const long vals[3][3] = {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m(i, j) = vals[i][j];
    CHECK(bareiss_determinant(m, mpz_class(1)) == 4);
    Matrix<mpz_class> r(3, 3, mpz_class(0));
    for (int j = 0; j < 3; ++j) {
        r(0, j) = j + 1;
        r(1, j) = 2 * (j + 1);
        r(2, j) = j * j;
    }
    CHECK(bareiss_rank(r, mpz_class(1)) == 2);
    CHECK(bareiss_determinant(r, mpz_class(1)) == 0);
}
