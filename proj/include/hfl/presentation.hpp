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

#ifndef HFL_PRESENTATION_HPP
#define HFL_PRESENTATION_HPP

#include <gmpxx.h>

#include <array>
#include <map>
#include <string>
#include <vector>

#include "hfl/labels.hpp"
#include "hfl/report.hpp"

namespace hfl {

/// Exponents of x, y, z.
using Exponents = std::array<unsigned, 3>;

/// Commutative polynomial in x, y, z with integer coefficients.
class IntPoly {
   public:
    IntPoly() = default;
    explicit IntPoly(long c);
    static IntPoly monomial(unsigned x, unsigned y, unsigned z, const mpz_class& c = 1);
    static IntPoly x() { return monomial(1, 0, 0); }
    static IntPoly y() { return monomial(0, 1, 0); }
    static IntPoly z() { return monomial(0, 0, 1); }
    /// Accepts sums of terms like "3zy^2", "-z^3*y", "x", "7"; '*' is optional.
    static IntPoly parse(const std::string& text);

    const std::map<Exponents, mpz_class>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool uses_x() const;
    mpz_class coeff(const Exponents& e) const;
    void add_term(const Exponents& e, const mpz_class& c);

    IntPoly& operator+=(const IntPoly& rhs);
    IntPoly& operator-=(const IntPoly& rhs);
    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator-(const IntPoly& a) { return IntPoly() - a; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const mpz_class& s, const IntPoly& a);
    friend bool operator==(const IntPoly&, const IntPoly&) = default;

    IntPoly pow(unsigned e) const;

    /// Graded lex with z > y > x; monomials written z^a y^b x^c by juxtaposition.
    std::string to_string() const;

   private:
    std::map<Exponents, mpz_class> terms_;
};

/// Pascal-triangle binomial coefficient; zero outside 0 <= k <= n.
mpz_class binomial(long n, long k);

/// F_0 = 0, F_1 = 1, F_{t+2} = z F_{t+1} - y F_t.
IntPoly fibonacci_poly(long t);
/// sum_i (-1)^i C(t-1-i, i) y^i z^{t-1-2i}, for t >= 1.
IntPoly fibonacci_closed_form(long t);

/// Rewrites p modulo the binomial generators. Odd n: the y-exponent of a
/// monomial containing z is reduced mod n, otherwise mod 2n. Even n: in a
/// monomial containing z every x becomes y and the y-exponent is reduced mod
/// n; elsewhere x^a becomes x^{a mod 2} y^{a - a mod 2}.
IntPoly normalize_relation(int n, const IntPoly& p);

/// Expansion of [S_{0,m+2}] in a, b, c (x, y, z), normalized; 0 <= m <= n - 3.
IntPoly s0_expansion(int n, int m);

/// Ring map x -> [S_1], y -> [S_{n+1}], z -> [S_{0,1}]; x is rejected for odd n.
FusionVector eval_in_fusion(const IntPoly& p, int n);

/// Generators exactly as assembled from the binomial sums and Fibonacci
/// polynomials. Odd n: y^{2n}-1, zy^n-z and one more; even n > 2:
/// x^n-1, x^2-y^2, zx-zy and two more; n = 2: its own five generators.
std::vector<IntPoly> assembled_relations(int n);

/// assembled_relations with the extra generators normalized and, for even n > 2,
/// x^n - 1 replaced by y^n - 1.
std::vector<IntPoly> presentation_relations(int n);

/// Monomials claimed to form a Z-basis of the fusion ring.
std::vector<IntPoly> basis_monomials(int n);

/// Rows: basis monomials evaluated in the simple-class basis.
std::vector<std::vector<mpz_class>> basis_matrix(int n);
mpz_class basis_determinant(int n);

VerificationReport verify_presentation(int n);

}  // namespace hfl

#endif
