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

#ifndef HFL_MATRIX_HPP
#define HFL_MATRIX_HPP

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hfl/cyclotomic.hpp"

namespace hfl {

/// Dense row-major matrix over an exact ring.
template <class T>
class Matrix {
   public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

inline bool is_zero(const mpz_class& a) { return sgn(a) == 0; }
inline mpz_class exact_div(const mpz_class& a, const mpz_class& b) {
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

namespace detail {

// Division by a fixed exact divisor; specialized where a reciprocal is cheaper.
template <class T>
struct ExactDivisor {
    explicit ExactDivisor(const T& d) : divisor(d) {}
    T operator()(const T& v) const { return exact_div(v, divisor); }
    T divisor;
};

template <>
struct ExactDivisor<CycNum> {
    explicit ExactDivisor(const CycNum& d) : unit(d.is_one()), reciprocal(unit ? d : d.inverse()) {}
    CycNum operator()(const CycNum& v) const { return unit ? v : v * reciprocal; }
    bool unit;
    CycNum reciprocal;
};

// Bareiss elimination in place. Returns the rank; `sign` tracks row swaps.
// Every division is exact: after step k each entry of the trailing block is a
// (k+1)-minor of the input.
template <class T>
std::size_t bareiss_eliminate(Matrix<T>& m, const T& one, int& sign) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    T prev = one;
    std::size_t rank = 0;
    sign = 1;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && is_zero(m(piv, col))) ++piv;
        if (piv == rows) continue;
        if (piv != rank) {
            for (std::size_t c = 0; c < cols; ++c) std::swap(m(piv, c), m(rank, c));
            sign = -sign;
        }
        const T pivot = m(rank, col);
        const ExactDivisor<T> divide(prev);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            const T lead = m(r, col);
            for (std::size_t c = col + 1; c < cols; ++c) {
                const bool a_zero = is_zero(m(r, c));
                const bool b_zero = is_zero(lead) || is_zero(m(rank, c));
                if (a_zero && b_zero) continue;
                T v = pivot * m(r, c);
                if (!b_zero) v = v - lead * m(rank, c);
                m(r, c) = divide(v);
            }
            m(r, col) = T(m(r, col)) - lead;  // exactly zero
        }
        prev = pivot;
        ++rank;
    }
    return rank;
}

}  // namespace detail

/// Exact rank by fraction-free (Bareiss) elimination.
template <class T>
std::size_t bareiss_rank(Matrix<T> m, const T& one) {
    int sign = 1;
    return detail::bareiss_eliminate(m, one, sign);
}

/// Exact determinant of a square matrix by Bareiss elimination.
template <class T>
T bareiss_determinant(Matrix<T> m, const T& one) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    if (m.rows() == 0) return one;
    int sign = 1;
    const std::size_t rank = detail::bareiss_eliminate(m, one, sign);
    if (rank < m.rows()) return one - one;
    T d = m(m.rows() - 1, m.cols() - 1);
    return sign < 0 ? T(-d) : d;
}

using CycMatrix = Matrix<CycNum>;

CycMatrix identity_matrix(const FieldPtr& field, std::size_t dim);
CycMatrix operator*(const CycMatrix& a, const CycMatrix& b);
CycMatrix operator+(const CycMatrix& a, const CycMatrix& b);
CycMatrix scaled(const CycMatrix& a, const CycNum& s);
CycMatrix kronecker(const CycMatrix& a, const CycMatrix& b);
CycMatrix matrix_power(const FieldPtr& field, const CycMatrix& a, unsigned e);
CycNum trace(const CycMatrix& a);

}  // namespace hfl

#endif
