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

// Reference computations used only by tests. They reach the same quantities
// as the library through different routes: characters are solved for
// directly by Gaussian elimination, and tensor modules are built from the
// coproduct element rather than from a closed formula for Delta(z).

#ifndef HFL_TESTS_ORACLE_HPP
#define HFL_TESTS_ORACLE_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "hfl/hopf.hpp"
#include "hfl/labels.hpp"
#include "hfl/matrix.hpp"
#include "hfl/repr.hpp"

namespace hfl::oracle {

/// Matrix of the basis word x^i y^j z^e.
inline CycMatrix word_matrix(const HopfAlgebra& h, const Rep& rep, std::uint32_t k) {
    const Word w = h.word(k);
    const auto& f = h.field();
    return matrix_power(f, rep.x, static_cast<unsigned>(w.i)) * matrix_power(f, rep.y, static_cast<unsigned>(w.j)) *
           matrix_power(f, rep.z, static_cast<unsigned>(w.e));
}

/// Character on every basis word.
inline std::vector<CycNum> character(const HopfAlgebra& h, const Rep& rep) {
    std::vector<CycNum> chi;
    chi.reserve(h.dim());
    for (std::uint32_t k = 0; k < h.dim(); ++k) chi.push_back(trace(word_matrix(h, rep, k)));
    return chi;
}

/// A (x) B with every generator acting through its coproduct element.
inline Rep coproduct_tensor(const HopfAlgebra& h, const Rep& a, const Rep& b) {
    auto image = [&](const AlgElem& g) {
        const std::size_t d = a.dim * b.dim;
        CycMatrix out(d, d, CycNum::zero(h.field()));
        const TensorElem delta = h.coproduct(g);
        for (const auto& [key, c] : delta.terms()) {
            const auto left = static_cast<std::uint32_t>(key / h.dim());
            const auto right = static_cast<std::uint32_t>(key % h.dim());
            out = out + scaled(kronecker(word_matrix(h, a, left), word_matrix(h, b, right)), c);
        }
        return out;
    };
    return Rep{a.name + "(x)" + b.name, a.dim * b.dim, image(h.x()), image(h.y()), image(h.z())};
}

/// Solves chi = sum_c N_c chi_c over Q(zeta); throws unless the solution is
/// unique and consists of nonnegative integers.
inline FusionVector solve_multiplicities(const HopfAlgebra& h, const std::vector<SimpleLabel>& simples,
                                         const std::vector<std::vector<CycNum>>& simple_chars,
                                         const std::vector<CycNum>& chi) {
    const std::size_t unknowns = simples.size();
    const std::size_t eqs = chi.size();
    std::vector<std::vector<CycNum>> m(eqs, std::vector<CycNum>(unknowns + 1));
    for (std::size_t r = 0; r < eqs; ++r) {
        for (std::size_t c = 0; c < unknowns; ++c) m[r][c] = simple_chars[c][r];
        m[r][unknowns] = chi[r];
    }
    std::size_t row = 0;
    std::vector<std::size_t> pivot_row(unknowns);
    for (std::size_t col = 0; col < unknowns; ++col) {
        std::size_t p = row;
        while (p < eqs && m[p][col].is_zero()) ++p;
        if (p == eqs) throw std::runtime_error("characters of simples are dependent");
        std::swap(m[p], m[row]);
        const CycNum inv = m[row][col].inverse();
        for (auto& v : m[row]) v = v * inv;
        for (std::size_t r = 0; r < eqs; ++r) {
            if (r == row || m[r][col].is_zero()) continue;
            const CycNum f = m[r][col];
            for (std::size_t c = col; c <= unknowns; ++c) m[r][c] -= f * m[row][c];
        }
        pivot_row[col] = row++;
    }
    for (std::size_t r = row; r < eqs; ++r)
        if (!m[r][unknowns].is_zero()) throw std::runtime_error("character is not a combination of simples");
    FusionVector out(h.n());
    for (std::size_t c = 0; c < unknowns; ++c) {
        const CycNum& v = m[pivot_row[c]][unknowns];
        if (!v.is_rational() || v.rational_part().get_den() != 1 || sgn(v.rational_part()) < 0)
            throw std::runtime_error("multiplicity " + v.to_string() + " is not a nonnegative integer");
        out.add(simples[c], v.rational_part().get_num());
    }
    return out;
}

/// Tensor decomposition table computed entirely through characters.
struct CharacterOracle {
    explicit CharacterOracle(const HopfAlgebra& algebra) : h(algebra), simples(all_simples(algebra.n())) {
        for (const auto& s : simples) {
            reps.push_back(build_simple(h, s));
            chars.push_back(character(h, reps.back()));
        }
    }

    FusionVector tensor(std::size_t a, std::size_t b) const {
        return solve_multiplicities(h, simples, chars, character(h, coproduct_tensor(h, reps[a], reps[b])));
    }

    const HopfAlgebra& h;
    std::vector<SimpleLabel> simples;
    std::vector<Rep> reps;
    std::vector<std::vector<CycNum>> chars;
};

}  // namespace hfl::oracle

#endif
