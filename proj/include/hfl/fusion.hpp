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

#ifndef HFL_FUSION_HPP
#define HFL_FUSION_HPP

#include <string>
#include <vector>

#include "hfl/labels.hpp"
#include "hfl/report.hpp"

namespace hfl {

/// Closed-form tensor product of two simples.
///
/// One-dimensional pairs follow five ranges of m + m'; mixed pairs shift both
/// indices of the two-dimensional label by m; two-dimensional pairs branch on
/// i + k = j + l (mod n) and i + l = j + k (mod n). One-dimensional targets
/// are read in Z_{2n}.
FusionVector fuse(int n, const SimpleLabel& a, const SimpleLabel& b);

/// Bilinear extension of fuse.
FusionVector ring_mul(const FusionVector& u, const FusionVector& v);
FusionVector ring_one(int n);
FusionVector ring_pow(const FusionVector& u, unsigned e);

struct FusionTable {
    int n;
    std::vector<SimpleLabel> simples;
    std::vector<std::vector<FusionVector>> table;  // table[a][b] = a (x) b

    /// {"schema", "n", "simples", "table": [[{label: mult}]]}
    Json to_json() const;
    /// Header "a,b,c,N" then one row per nonzero multiplicity.
    std::string to_csv() const;
    std::string to_text() const;
};

FusionTable fusion_table(int n);

/// Commutativity, unit, dimension grading, duality and associativity
/// (all triples for n <= 5, 10^4 seeded random triples otherwise).
VerificationReport verify_fusion_ring(int n);

/// fuse against the trace decomposition of the explicit tensor module for
/// every ordered pair; mismatches carry both vectors.
VerificationReport verify_fusion_against_oracle(int n);

/// Ring checks and oracle comparison together.
VerificationReport verify_fusion_suite(int n);

}  // namespace hfl

#endif
