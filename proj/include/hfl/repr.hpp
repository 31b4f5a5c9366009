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

#ifndef HFL_REPR_HPP
#define HFL_REPR_HPP

#include <optional>
#include <string>
#include <vector>

#include "hfl/center.hpp"
#include "hfl/hopf.hpp"
#include "hfl/labels.hpp"
#include "hfl/matrix.hpp"
#include "hfl/report.hpp"

namespace hfl {

/// A finite-dimensional module given by the matrices of the generators.
struct Rep {
    std::string name;
    std::size_t dim = 0;
    CycMatrix x;
    CycMatrix y;
    CycMatrix z;
};

/// S_m: x, y -> q^m, z -> sigma(m) zeta^{s(m)} with s the half-square exponent.
/// S_{i,j}: x -> diag(q^i, q^j), y -> diag(q^j, q^i), z -> [[0, q^{ij}], [1, 0]].
Rep build_simple(const HopfAlgebra& h, const SimpleLabel& label);

/// Image of an arbitrary element under the module structure.
CycMatrix rep_of_element(const HopfAlgebra& h, const Rep& rep, const AlgElem& a);

/// a (x) b with z acting through Delta(z) = (1/n) sum q^{-ij} x^i z (x) y^j z.
Rep tensor_rep(const HopfAlgebra& h, const Rep& a, const Rep& b);

/// First violated defining relation, if any.
std::optional<std::string> module_axiom_failure(const HopfAlgebra& h, const Rep& rep);

/// Multiplicities of the simples in a module, read off from the traces of the
/// primitive central idempotents. Precomputes the idempotents once.
class Decomposer {
   public:
    explicit Decomposer(const HopfAlgebra& h);

    /// Throws ModuleAxiomError when a multiplicity is not a nonnegative integer.
    FusionVector decompose(const Rep& rep) const;
    const std::vector<CentralIdempotent>& idempotents() const noexcept { return idempotents_; }
    /// Simple on which idempotent k acts as the identity.
    const SimpleLabel& block_label(std::size_t k) const { return labels_[k]; }

   private:
    const HopfAlgebra& h_;
    std::vector<CentralIdempotent> idempotents_;
    std::vector<SimpleLabel> labels_;
};

FusionVector decompose(const HopfAlgebra& h, const Rep& rep);

/// Module axioms for every simple, irreducibility, pairwise distinct
/// fingerprints, sum of squared dimensions, idempotent block action and
/// symmetry of tensor decompositions.
VerificationReport verify_repr(int n);

}  // namespace hfl

#endif
