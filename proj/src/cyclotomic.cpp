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

#include "hfl/cyclotomic.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "hfl/error.hpp"

namespace hfl {

namespace {

long floor_mod(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

// Exact division of integer polynomials by a monic divisor.
std::vector<long> divide_monic(std::vector<long> num, const std::vector<long>& den) {
    const std::size_t dd = den.size() - 1;
    if (num.size() - 1 < dd) throw std::logic_error("divide_monic: degree too small");
    std::vector<long> quot(num.size() - dd, 0);
    for (std::size_t k = num.size(); k-- > dd;) {
        const long lead = num[k];
        quot[k - dd] = lead;
        if (lead == 0) continue;
        for (std::size_t t = 0; t <= dd; ++t) num[k - dd + t] -= lead * den[t];
    }
    for (std::size_t t = 0; t < dd; ++t)
        if (num[t] != 0) throw std::logic_error("divide_monic: nonzero remainder");
    return quot;
}

}  // namespace

std::vector<long> cyclotomic_polynomial(int d) {
    require(d >= 1, "cyclotomic_polynomial: order must be positive");
    std::vector<long> p(static_cast<std::size_t>(d) + 1, 0);
    p[0] = -1;
    p[static_cast<std::size_t>(d)] = 1;
    for (int e = 1; e < d; ++e)
        if (d % e == 0) p = divide_monic(std::move(p), cyclotomic_polynomial(e));
    return p;
}

CyclotomicField::CyclotomicField(int n) : n_(n), modulus_(cyclotomic_polynomial(2 * n)) {
    const int phi = degree();
    const int count = std::max(2 * n, 2 * phi);
    monomials_.reserve(static_cast<std::size_t>(count));
    std::vector<long> cur(static_cast<std::size_t>(phi), 0);
    cur[0] = 1;
    for (int k = 0; k < count; ++k) {
        monomials_.push_back(cur);
        // multiply by zeta, then fold zeta^phi = -(Phi_N - zeta^phi)
        const long top = cur.back();
        for (int t = phi - 1; t > 0; --t) cur[t] = cur[t - 1];
        cur[0] = 0;
        if (top != 0)
            for (int t = 0; t < phi; ++t) cur[t] -= top * modulus_[static_cast<std::size_t>(t)];
    }
}

const std::vector<long>& CyclotomicField::root_power(long k) const {
    return monomials_[static_cast<std::size_t>(floor_mod(k, order()))];
}

FieldPtr make_field(int n) {
    require(n >= 2, "algebra parameter n must be at least 2, got " + std::to_string(n));
    return std::make_shared<const CyclotomicField>(n);
}

CycNum::CycNum(FieldPtr field) : field_(std::move(field)) {}

CycNum::CycNum(FieldPtr field, const mpq_class& rational) : field_(std::move(field)) {
    if (sgn(rational) != 0) {
        coeffs_.assign(static_cast<std::size_t>(field_->degree()), mpq_class(0));
        coeffs_[0] = rational;
    }
}

CycNum::CycNum(FieldPtr field, std::vector<mpq_class> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    require(coeffs_.empty() || static_cast<int>(coeffs_.size()) == field_->degree(),
            "CycNum: coefficient vector length must equal phi(2n)");
    for (auto& c : coeffs_) c.canonicalize();
    trim();
}

CycNum CycNum::root(const FieldPtr& field, long k) {
    const auto& v = field->root_power(k);
    std::vector<mpq_class> c(v.begin(), v.end());
    CycNum r(field);
    r.coeffs_ = std::move(c);
    return r;
}

bool CycNum::is_one() const {
    if (coeffs_.empty() || coeffs_[0] != 1) return false;
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const mpq_class& c) { return sgn(c) == 0; });
}

bool CycNum::is_rational() const {
    if (coeffs_.empty()) return true;
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const mpq_class& c) { return sgn(c) == 0; });
}

mpq_class CycNum::rational_part() const { return coeffs_.empty() ? mpq_class(0) : coeffs_[0]; }

mpq_class CycNum::coeff(int k) const {
    if (coeffs_.empty()) return 0;
    return coeffs_.at(static_cast<std::size_t>(k));
}

void CycNum::adopt(const CycNum& other) {
    if (!other.field_) return;
    if (!field_) {
        field_ = other.field_;
        return;
    }
    if (field_ != other.field_ && field_->n() != other.field_->n())
        throw UsageError("CycNum: mismatched algebra parameters n=" + std::to_string(field_->n()) +
                         " and n=" + std::to_string(other.field_->n()));
}

void CycNum::trim() {
    if (std::all_of(coeffs_.begin(), coeffs_.end(), [](const mpq_class& c) { return sgn(c) == 0; }))
        coeffs_.clear();
}

CycNum& CycNum::operator+=(const CycNum& rhs) {
    adopt(rhs);
    if (rhs.coeffs_.empty()) return *this;
    if (coeffs_.empty()) {
        coeffs_ = rhs.coeffs_;
        return *this;
    }
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        if (sgn(rhs.coeffs_[k]) != 0) coeffs_[k] += rhs.coeffs_[k];
    trim();
    return *this;
}

CycNum& CycNum::operator-=(const CycNum& rhs) {
    adopt(rhs);
    if (rhs.coeffs_.empty()) return *this;
    if (coeffs_.empty()) coeffs_.assign(rhs.coeffs_.size(), mpq_class(0));
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        if (sgn(rhs.coeffs_[k]) != 0) coeffs_[k] -= rhs.coeffs_[k];
    trim();
    return *this;
}

CycNum operator*(const CycNum& a, const CycNum& b) {
    CycNum r;
    r.add_product(a, b);
    return r;
}

CycNum& CycNum::operator*=(const CycNum& rhs) { return *this = *this * rhs; }

CycNum& CycNum::operator*=(const mpq_class& rhs) {
    if (sgn(rhs) == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_)
        if (sgn(c) != 0) c *= rhs;
    return *this;
}

void CycNum::add_product(const CycNum& a, const CycNum& b) {
    adopt(a);
    adopt(b);
    if (a.is_zero() || b.is_zero()) return;
    const auto& field = *field_;
    const int phi = field.degree();
    // Scratch buffer is all-zero between calls.
    thread_local std::vector<mpq_class> prod;
    thread_local mpq_class t;
    if (prod.size() < static_cast<std::size_t>(2 * phi - 1)) prod.resize(static_cast<std::size_t>(2 * phi - 1));
    for (int i = 0; i < phi; ++i) {
        if (sgn(a.coeffs_[i]) == 0) continue;
        for (int j = 0; j < phi; ++j) {
            if (sgn(b.coeffs_[j]) == 0) continue;
            mpq_mul(t.get_mpq_t(), a.coeffs_[i].get_mpq_t(), b.coeffs_[j].get_mpq_t());
            prod[static_cast<std::size_t>(i + j)] += t;
        }
    }
    if (coeffs_.empty()) coeffs_.assign(static_cast<std::size_t>(phi), mpq_class(0));
    for (int k = 0; k < phi; ++k) {
        auto& p = prod[static_cast<std::size_t>(k)];
        if (sgn(p) == 0) continue;
        coeffs_[k] += p;
        p = 0;
    }
    for (int k = phi; k < 2 * phi - 1; ++k) {
        auto& p = prod[static_cast<std::size_t>(k)];
        if (sgn(p) == 0) continue;
        const auto& red = field.reduced_monomial(k);
        for (int s = 0; s < phi; ++s)
            if (red[s] != 0) {
                mpq_set_si(t.get_mpq_t(), red[s], 1);
                t *= p;
                coeffs_[s] += t;
            }
        p = 0;
    }
    trim();
}

void CycNum::add_root_multiple(const CycNum& c, long k) {
    adopt(c);
    if (c.is_zero()) return;
    const int phi = field_->degree();
    if (coeffs_.empty()) coeffs_.assign(static_cast<std::size_t>(phi), mpq_class(0));
    for (int i = 0; i < phi; ++i) {
        const auto& ci = c.coeffs_[static_cast<std::size_t>(i)];
        if (sgn(ci) == 0) continue;
        const auto& v = field_->root_power(k + i);
        for (int s = 0; s < phi; ++s) {
            if (v[s] == 0) continue;
            auto& dst = coeffs_[static_cast<std::size_t>(s)];
            if (v[s] == 1)
                dst += ci;
            else if (v[s] == -1)
                dst -= ci;
            else
                dst += ci * v[s];
        }
    }
    trim();
}

CycNum CycNum::mul_root(long k) const {
    CycNum r(field_);
    if (coeffs_.empty()) return r;
    const int phi = field_->degree();
    r.coeffs_.assign(static_cast<std::size_t>(phi), mpq_class(0));
    for (int i = 0; i < phi; ++i) {
        if (sgn(coeffs_[i]) == 0) continue;
        const auto& v = field_->root_power(k + i);
        for (int s = 0; s < phi; ++s)
            if (v[s] != 0) r.coeffs_[s] += coeffs_[i] * v[s];
    }
    r.trim();
    return r;
}

CycNum CycNum::inverse() const {
    if (coeffs_.empty()) throw DivisionByZero();
    const int phi = field_->degree();
    // Solve (multiplication-by-this matrix) * v = e_0 by Gauss-Jordan over Q.
    std::vector<std::vector<mpq_class>> m(static_cast<std::size_t>(phi),
                                          std::vector<mpq_class>(static_cast<std::size_t>(phi + 1)));
    for (int col = 0; col < phi; ++col) {
        const CycNum image = mul_root(col);
        for (int row = 0; row < phi; ++row) m[row][col] = image.coeff(row);
    }
    m[0][phi] = 1;
    for (int col = 0; col < phi; ++col) {
        int piv = col;
        while (piv < phi && sgn(m[piv][col]) == 0) ++piv;
        if (piv == phi) throw std::logic_error("CycNum::inverse: singular multiplication matrix");
        std::swap(m[piv], m[col]);
        const mpq_class inv = 1 / m[col][col];
        for (auto& e : m[col]) e *= inv;
        for (int row = 0; row < phi; ++row) {
            if (row == col || sgn(m[row][col]) == 0) continue;
            const mpq_class f = m[row][col];
            for (int k = col; k <= phi; ++k) m[row][k] -= f * m[col][k];
        }
    }
    std::vector<mpq_class> out(static_cast<std::size_t>(phi));
    for (int row = 0; row < phi; ++row) out[row] = m[row][phi];
    return CycNum(field_, std::move(out));
}

CycNum operator-(CycNum a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
}

bool operator==(const CycNum& a, const CycNum& b) {
    if (a.field_ && b.field_ && a.field_->n() != b.field_->n()) return false;
    return a.coeffs_ == b.coeffs_;
}

std::string CycNum::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        mpq_class c = coeffs_[k];
        if (sgn(c) == 0) continue;
        if (!first) {
            os << (sgn(c) < 0 ? " - " : " + ");
            c = abs(c);
        }
        first = false;
        if (k == 0) {
            os << c.get_str();
            continue;
        }
        if (c == -1)
            os << "-";
        else if (c != 1)
            os << c.get_str() << "*";
        os << "zeta";
        if (k > 1) os << "^" << k;
    }
    return os.str();
}

CycNum cyc_from_root_power(int n, long k) { return CycNum::root(make_field(n), k); }

long half_square_exponent(int n, long m) {
    const long r = floor_mod(m, n);
    const long e = (n % 2 == 0) ? r * r : (n + 1) * r * r;
    return floor_mod(e, 2L * n);
}

CycNum q_half_square(const FieldPtr& field, long m) { return CycNum::root(field, half_square_exponent(field->n(), m)); }

}  // namespace hfl
