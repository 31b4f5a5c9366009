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

#ifndef HFL_CENTER_HPP
#define HFL_CENTER_HPP

#include <string>
#include <vector>

#include "hfl/hopf.hpp"
#include "hfl/report.hpp"

namespace hfl {

/// (1/n) sum_i q^{-ij} x^i and the same with y; 0 <= j < n.
AlgElem e_idem(const HopfAlgebra& h, int j);
AlgElem f_idem(const HopfAlgebra& h, int j);

/// {e_i f_j + e_j f_i : i < j} then {e_i f_i} then {e_i f_i z}.
std::vector<AlgElem> center_basis(const HopfAlgebra& h);

enum class BlockKind { OneDim, TwoDim };

/// A primitive central idempotent together with the block it cuts out.
/// OneDim: (1/2) e_i f_i + sign (1/2) zeta^{-s(i)} e_i f_i z, s the
/// half-square exponent; it acts as 1 on S_i (sign +1) or S_{i+n} (sign -1).
/// TwoDim: e_i f_j + e_j f_i with i < j, acting as 1 on S_{i,j}.
struct CentralIdempotent {
    BlockKind kind;
    int i;
    int j;     // TwoDim only
    int sign;  // OneDim only
    AlgElem element;

    /// Simple module on which the idempotent acts as the identity.
    std::string label(int n) const;
    /// Dimension of the two-sided ideal H E: 1 or 4.
    std::size_t block_dimension() const { return kind == BlockKind::OneDim ? 1 : 4; }
};

/// All 2n + (n^2 - n)/2 primitive central idempotents: OneDim blocks ordered
/// by label S_0 .. S_{2n-1}, then TwoDim blocks by (i, j).
std::vector<CentralIdempotent> primitive_central_idempotents(const HopfAlgebra& h);

/// Rank of a -> a e on H, by fraction-free elimination.
std::size_t ideal_dimension(const HopfAlgebra& h, const AlgElem& e);

/// dim H minus the rank of a -> (ax - xa, ay - ya, az - za).
std::size_t center_dimension(const HopfAlgebra& h);

VerificationReport verify_idempotents(int n);

/// {"schema", "n", "count", "idempotents": [{kind, i, j|sign, label, ideal_dimension, element}]}
Json idempotents_json(int n);

}  // namespace hfl

#endif
