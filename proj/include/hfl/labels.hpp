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

#ifndef HFL_LABELS_HPP
#define HFL_LABELS_HPP

#include <gmpxx.h>

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "hfl/report.hpp"

namespace hfl {

/// Isomorphism class of a simple module: S_m with m in Z_{2n}, or S_{i,j}
/// with 0 <= i < j < n. Values are always canonical.
class SimpleLabel {
   public:
    enum class Kind { OneDim = 0, TwoDim = 1 };

    /// S_{m mod 2n}.
    static SimpleLabel one_dim(int n, long m);
    /// S_{i,j} from any pair with i != j mod n; the pair is reduced mod n and sorted.
    /// Throws std::logic_error when i == j mod n.
    static SimpleLabel two_dim(int n, long i, long j);
    /// Parses "S_m" or "S_{i,j}" (also "S_{m}"); the label must already be in range.
    static SimpleLabel parse(int n, const std::string& text);

    Kind kind() const noexcept { return kind_; }
    bool is_one_dim() const noexcept { return kind_ == Kind::OneDim; }
    int n() const noexcept { return n_; }
    /// m for OneDim, i for TwoDim.
    int first() const noexcept { return a_; }
    /// j for TwoDim; 0 for OneDim.
    int second() const noexcept { return b_; }
    int dim() const noexcept { return is_one_dim() ? 1 : 2; }
    /// +1 for S_m with m < n, -1 otherwise; 0 for TwoDim.
    int sigma() const noexcept { return is_one_dim() ? (a_ < n_ ? 1 : -1) : 0; }
    /// Position in the order S_0 .. S_{2n-1}, S_{0,1}, S_{0,2}, .., S_{n-2,n-1}.
    std::size_t index() const noexcept;
    std::string to_string() const;

    friend bool operator==(const SimpleLabel&, const SimpleLabel&) = default;
    friend auto operator<=>(const SimpleLabel& x, const SimpleLabel& y) { return x.index() <=> y.index(); }

   private:
    SimpleLabel(int n, Kind kind, int a, int b) : n_(n), kind_(kind), a_(a), b_(b) {}
    int n_;
    Kind kind_;
    int a_;
    int b_;
};

/// All simples of H_{2n^2} in index order: 2n + n(n-1)/2 labels.
std::vector<SimpleLabel> all_simples(int n);
std::size_t simple_count(int n);

/// Integer combination of simple classes; zero coefficients are never stored.
class FusionVector {
   public:
    explicit FusionVector(int n) : n_(n) {}
    static FusionVector unit(const SimpleLabel& s);

    int n() const noexcept { return n_; }
    const std::map<SimpleLabel, mpz_class>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    mpz_class coeff(const SimpleLabel& s) const;
    void add(const SimpleLabel& s, const mpz_class& c);
    /// sum of coefficient * dim over all labels.
    mpz_class dimension() const;

    FusionVector& operator+=(const FusionVector& rhs);
    FusionVector& operator-=(const FusionVector& rhs);
    friend FusionVector operator+(FusionVector a, const FusionVector& b) { return a += b; }
    friend FusionVector operator-(FusionVector a, const FusionVector& b) { return a -= b; }
    friend FusionVector operator*(const mpz_class& s, const FusionVector& v);
    friend bool operator==(const FusionVector& a, const FusionVector& b) {
        return a.n_ == b.n_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const FusionVector& a, const FusionVector& b) { return !(a == b); }

    /// "S_1 + 2*S_{0,2}" in label order; "0" when empty.
    std::string to_string() const;
    /// {label: multiplicity} in label order.
    Json to_json() const;

   private:
    void check_n(int other) const;
    int n_;
    std::map<SimpleLabel, mpz_class> coeffs_;
};

}  // namespace hfl

#endif
