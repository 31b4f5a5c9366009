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

#include "hfl/matrix.hpp"

#include "hfl/error.hpp"

namespace hfl {

CycMatrix identity_matrix(const FieldPtr& field, std::size_t dim) {
    CycMatrix m(dim, dim, CycNum::zero(field));
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = CycNum::one(field);
    return m;
}

CycMatrix operator*(const CycMatrix& a, const CycMatrix& b) {
    require(a.cols() == b.rows(), "matrix product: dimension mismatch");
    CycMatrix r(a.rows(), b.cols(), CycNum());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const CycNum& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (!b(k, j).is_zero()) r(i, j).add_product(aik, b(k, j));
        }
    return r;
}

CycMatrix operator+(const CycMatrix& a, const CycMatrix& b) {
    require(a.rows() == b.rows() && a.cols() == b.cols(), "matrix sum: dimension mismatch");
    CycMatrix r = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) += b(i, j);
    return r;
}

CycMatrix scaled(const CycMatrix& a, const CycNum& s) {
    CycMatrix r = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!r(i, j).is_zero()) r(i, j) = r(i, j) * s;
    return r;
}

CycMatrix kronecker(const CycMatrix& a, const CycMatrix& b) {
    CycMatrix r(a.rows() * b.rows(), a.cols() * b.cols(), CycNum());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j).is_zero()) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    if (!b(k, l).is_zero()) r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
    return r;
}

CycMatrix matrix_power(const FieldPtr& field, const CycMatrix& a, unsigned e) {
    require(a.rows() == a.cols(), "matrix power of a non-square matrix");
    CycMatrix result = identity_matrix(field, a.rows());
    CycMatrix base = a;
    while (e > 0) {
        if (e & 1u) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

CycNum trace(const CycMatrix& a) {
    CycNum t;
    for (std::size_t i = 0; i < a.rows() && i < a.cols(); ++i) t += a(i, i);
    return t;
}

}  // namespace hfl
