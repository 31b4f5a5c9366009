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

#ifndef HFL_CYCLOTOMIC_HPP
#define HFL_CYCLOTOMIC_HPP

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

namespace hfl {

/// The cyclotomic field Q(zeta) with zeta a primitive N-th root of unity,
/// N = 2n. Elements live in the power basis {1, zeta, ..., zeta^(phi(N)-1)}
/// modulo the N-th cyclotomic polynomial. Immutable once built; share it
/// through FieldPtr.
class CyclotomicField {
   public:
    explicit CyclotomicField(int n);

    int n() const noexcept { return n_; }
    int order() const noexcept { return 2 * n_; }
    int degree() const noexcept { return static_cast<int>(modulus_.size()) - 1; }

    /// Coefficients of Phi_N, lowest degree first (monic).
    const std::vector<long>& modulus() const noexcept { return modulus_; }

    /// zeta^k in the power basis, for any integer k.
    const std::vector<long>& root_power(long k) const;

    /// zeta^k for 0 <= k < 2*degree()-1, used when reducing products.
    const std::vector<long>& reduced_monomial(int k) const { return monomials_[static_cast<std::size_t>(k)]; }

   private:
    int n_;
    std::vector<long> modulus_;
    std::vector<std::vector<long>> monomials_;
};

using FieldPtr = std::shared_ptr<const CyclotomicField>;

/// Build the field for algebra parameter n (N = 2n). Throws UsageError if n < 2.
FieldPtr make_field(int n);

/// Integer coefficients of the d-th cyclotomic polynomial, lowest degree first.
std::vector<long> cyclotomic_polynomial(int d);

/// Element of Q(zeta_{2n}) with exact rational coefficients.
///
/// The coefficient vector is either empty (the zero element) or has exactly
/// phi(2n) entries; two values are equal iff their vectors are equal. A
/// default-constructed CycNum is an unbound zero that adopts the field of the
/// other operand.
class CycNum {
   public:
    CycNum() = default;
    explicit CycNum(FieldPtr field);
    CycNum(FieldPtr field, const mpq_class& rational);
    CycNum(FieldPtr field, std::vector<mpq_class> coeffs);

    static CycNum zero(const FieldPtr& field) { return CycNum(field); }
    static CycNum one(const FieldPtr& field) { return CycNum(field, mpq_class(1)); }
    /// zeta^k, reduced.
    static CycNum root(const FieldPtr& field, long k);

    const FieldPtr& field() const noexcept { return field_; }
    /// Algebra parameter n, or 0 for an unbound zero.
    int n_param() const noexcept { return field_ ? field_->n() : 0; }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_one() const;
    /// True when the value lies in Q (only the constant coefficient may be nonzero).
    bool is_rational() const;
    /// Constant coefficient; meaningful as "the value" when is_rational().
    mpq_class rational_part() const;
    /// Coefficient of zeta^k in the power basis (0 <= k < phi).
    mpq_class coeff(int k) const;
    const std::vector<mpq_class>& coeffs() const noexcept { return coeffs_; }

    CycNum& operator+=(const CycNum& rhs);
    CycNum& operator-=(const CycNum& rhs);
    CycNum& operator*=(const CycNum& rhs);
    CycNum& operator*=(const mpq_class& rhs);

    /// this += a * b without a temporary for the product.
    void add_product(const CycNum& a, const CycNum& b);

    /// this += zeta^k * c without a temporary.
    void add_root_multiple(const CycNum& c, long k);

    CycNum mul_root(long k) const;
    CycNum inverse() const;

    friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
    friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
    friend CycNum operator*(const CycNum& a, const CycNum& b);
    friend CycNum operator*(CycNum a, const mpq_class& b) { return a *= b; }
    friend CycNum operator/(const CycNum& a, const CycNum& b) { return a * b.inverse(); }
    friend CycNum operator-(CycNum a);
    friend bool operator==(const CycNum& a, const CycNum& b);
    friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

    /// "a0 + a1*zeta + a2*zeta^2 ..." in the power basis.
    std::string to_string() const;

   private:
    void adopt(const CycNum& other);
    void trim();

    FieldPtr field_;
    std::vector<mpq_class> coeffs_;
};

/// zeta_{2n}^k; cyc_from_root_power(n, 2m) is q^m.
CycNum cyc_from_root_power(int n, long k);

/// The square root q^{m^2/2} used throughout: zeta^{m^2} for even n and
/// q^{m^2 (n+1)/2} = zeta^{(n+1) m^2} for odd n. Depends only on m mod n and
/// squares to q^{m^2}.
long half_square_exponent(int n, long m);
CycNum q_half_square(const FieldPtr& field, long m);

/// q^k = zeta^{2k}.
inline CycNum q_power(const FieldPtr& field, long k) { return CycNum::root(field, 2 * k); }

inline bool is_zero(const CycNum& a) { return a.is_zero(); }
inline CycNum exact_div(const CycNum& a, const CycNum& b) { return a / b; }

}  // namespace hfl

#endif
