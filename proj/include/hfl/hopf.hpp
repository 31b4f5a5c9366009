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

#ifndef HFL_HOPF_HPP
#define HFL_HOPF_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hfl/cyclotomic.hpp"
#include "hfl/report.hpp"

namespace hfl {

/// A basis word x^i y^j z^e with 0 <= i, j < n. Inside products the
/// exponent e may transiently reach 2 before z^2 is rewritten.
struct Word {
    int i = 0;
    int j = 0;
    int e = 0;
};

/// Sorted (key, coefficient) list with no zero coefficients.
template <class Key>
class SparseTerms {
   public:
    using Term = std::pair<Key, CycNum>;

    SparseTerms() = default;
    explicit SparseTerms(std::vector<Term> sorted) : terms_(std::move(sorted)) {}

    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    CycNum coeff(Key key) const;

    friend bool operator==(const SparseTerms& a, const SparseTerms& b) { return a.terms_ == b.terms_; }

   private:
    std::vector<Term> terms_;
};

/// Element of H_{2n^2}: coefficients over the basis {x^i y^j z^e}.
class AlgElem {
   public:
    AlgElem() = default;
    AlgElem(int n, FieldPtr field, SparseTerms<std::uint32_t> terms)
        : n_(n), field_(std::move(field)), terms_(std::move(terms)) {}

    int n() const noexcept { return n_; }
    const FieldPtr& field() const noexcept { return field_; }
    const std::vector<SparseTerms<std::uint32_t>::Term>& terms() const noexcept { return terms_.terms(); }
    bool is_zero() const noexcept { return terms_.is_zero(); }
    CycNum coeff(std::uint32_t index) const { return terms_.coeff(index); }

    AlgElem& operator+=(const AlgElem& rhs);
    AlgElem& operator-=(const AlgElem& rhs);
    friend AlgElem operator+(AlgElem a, const AlgElem& b) { return a += b; }
    friend AlgElem operator-(AlgElem a, const AlgElem& b) { return a -= b; }
    friend AlgElem operator*(const CycNum& s, const AlgElem& a);
    friend bool operator==(const AlgElem& a, const AlgElem& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }
    friend bool operator!=(const AlgElem& a, const AlgElem& b) { return !(a == b); }

    std::string to_string() const;

   private:
    int n_ = 0;
    FieldPtr field_;
    SparseTerms<std::uint32_t> terms_;
};

/// Element of H (x) H; key = left * dim + right.
class TensorElem {
   public:
    TensorElem() = default;
    TensorElem(int n, FieldPtr field, SparseTerms<std::uint64_t> terms)
        : n_(n), field_(std::move(field)), terms_(std::move(terms)) {}

    int n() const noexcept { return n_; }
    const FieldPtr& field() const noexcept { return field_; }
    const std::vector<SparseTerms<std::uint64_t>::Term>& terms() const noexcept { return terms_.terms(); }
    bool is_zero() const noexcept { return terms_.is_zero(); }
    std::size_t size() const noexcept { return terms_.size(); }

    TensorElem& operator+=(const TensorElem& rhs);
    TensorElem& operator-=(const TensorElem& rhs);
    friend TensorElem operator+(TensorElem a, const TensorElem& b) { return a += b; }
    friend TensorElem operator-(TensorElem a, const TensorElem& b) { return a -= b; }
    friend bool operator==(const TensorElem& a, const TensorElem& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }
    friend bool operator!=(const TensorElem& a, const TensorElem& b) { return !(a == b); }

    std::string to_string() const;

   private:
    int n_ = 0;
    FieldPtr field_;
    SparseTerms<std::uint64_t> terms_;
};

/// Element of H (x) H (x) H; key = (left * dim + middle) * dim + right.
class Tensor3Elem {
   public:
    Tensor3Elem() = default;
    Tensor3Elem(int n, SparseTerms<std::uint64_t> terms) : n_(n), terms_(std::move(terms)) {}

    const std::vector<SparseTerms<std::uint64_t>::Term>& terms() const noexcept { return terms_.terms(); }
    friend bool operator==(const Tensor3Elem& a, const Tensor3Elem& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }
    friend bool operator!=(const Tensor3Elem& a, const Tensor3Elem& b) { return !(a == b); }

   private:
    int n_ = 0;
    SparseTerms<std::uint64_t> terms_;
};

/// The Hopf algebra H_{2n^2}: generated by x, y, z with x^n = y^n = 1,
/// xy = yx, zx = yz, zy = xz and z^2 = (1/n) sum q^{-ij} x^i y^j, where
/// q = zeta^2. Words are kept in the normal form x^i y^j z^e; a z on the left
/// of x^k y^l is moved right as z x^k y^l = x^l y^k z.
class HopfAlgebra {
   public:
    explicit HopfAlgebra(int n);

    /// Same algebra with the z^2 structure constant replaced; only used to
    /// check that the verifiers notice a broken structure.
    HopfAlgebra with_z_square(const AlgElem& z_square) const;

    int n() const noexcept { return n_; }
    std::size_t dim() const noexcept { return 2u * static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_); }
    const FieldPtr& field() const noexcept { return field_; }

    std::uint32_t index(long i, long j, int e) const;
    Word word(std::uint32_t index) const;
    std::string word_string(std::uint32_t index) const;

    AlgElem zero() const;
    AlgElem one() const { return monomial(0, 0, 0); }
    AlgElem x() const { return monomial(1, 0, 0); }
    AlgElem y() const { return monomial(0, 1, 0); }
    AlgElem z() const { return monomial(0, 0, 1); }
    AlgElem basis(std::uint32_t index) const;
    AlgElem monomial(long i, long j, int e) const;
    AlgElem monomial(long i, long j, int e, const CycNum& coeff) const;
    AlgElem scalar(const CycNum& c) const { return monomial(0, 0, 0, c); }
    const AlgElem& z_square() const noexcept { return z_square_; }

    AlgElem multiply(const AlgElem& a, const AlgElem& b) const;
    AlgElem power(const AlgElem& a, unsigned k) const;

    TensorElem tensor(const AlgElem& a, const AlgElem& b) const;
    TensorElem tensor_zero() const;
    TensorElem tensor_one() const { return tensor(one(), one()); }
    TensorElem tensor_multiply(const TensorElem& a, const TensorElem& b) const;
    TensorElem flip(const TensorElem& t) const;

    TensorElem coproduct(const AlgElem& a) const;
    CycNum counit(const AlgElem& a) const;
    AlgElem antipode(const AlgElem& a) const;

    /// Delta applied to the first (resp. second) factor.
    Tensor3Elem coproduct_left(const TensorElem& t) const;
    Tensor3Elem coproduct_right(const TensorElem& t) const;
    /// a (x) 1 (x) b, 1 (x) a (x) b, a (x) b (x) 1 for every term a (x) b.
    Tensor3Elem embed13(const TensorElem& t) const;
    Tensor3Elem embed23(const TensorElem& t) const;
    Tensor3Elem embed12(const TensorElem& t) const;
    Tensor3Elem tensor3_multiply(const Tensor3Elem& a, const Tensor3Elem& b) const;

    /// R = sum_i e_i (x) y^{-i}.
    TensorElem r_matrix() const;
    /// J = (1/n) sum q^{-ij} x^j (x) y^i, the inverse of R.
    TensorElem j_element() const;
    /// (sum x^i)(sum y^j)(1 + z).
    AlgElem integral() const;

   private:
    struct ExtTerm {
        std::uint32_t index;
        CycNum coeff;
    };

    HopfAlgebra(int n, FieldPtr field, AlgElem z_square);
    void build_tables();

    std::uint32_t ext_product(std::uint32_t a, std::uint32_t b) const;
    bool ext_is_basis(std::uint32_t ext) const { return ext < dim(); }
    const std::vector<ExtTerm>& ext_expansion(std::uint32_t ext) const;
    AlgElem from_dense(std::vector<CycNum>& dense) const;
    /// grid[g] holds the coefficient of g z^2 for each group-like g = x^i y^j
    /// (slot i*n + j); emits the rewritten coefficients of each group-like word.
    template <class Emit>
    void expand_z_square(const std::vector<CycNum>& grid, Emit&& emit) const;

    int n_;
    FieldPtr field_;
    AlgElem z_square_;
    bool standard_z_square_ = false;  // z^2 = (1/n) sum q^{-ij} x^i y^j
    std::vector<std::vector<ExtTerm>> z_square_words_;  // g * z^2 for each group-like g
    std::vector<TensorElem> coproduct_basis_;
    std::vector<AlgElem> antipode_basis_;
};

/// Coassociativity, counit, Delta/epsilon homomorphism and antipode laws,
/// each checked over every basis element.
VerificationReport verify_hopf_axioms(const HopfAlgebra& h);
VerificationReport verify_hopf_axioms(int n);

VerificationReport verify_integral(const HopfAlgebra& h);
VerificationReport verify_integral(int n);

/// Delta'(g) = R Delta(g) R^{-1} for generators g, (Delta (x) id)(R) = R13 R23,
/// (id (x) Delta)(R) = R13 R12 and J R = R J = 1 (x) 1 for the given
/// candidates; the no-argument form uses the built-in R and J.
VerificationReport verify_quasitriangular(const HopfAlgebra& h, const TensorElem& r, const TensorElem& j);
VerificationReport verify_quasitriangular(int n);

/// Hopf axioms, integral and quasi-triangularity together.
VerificationReport verify_hopf_suite(int n);

}  // namespace hfl

#endif
