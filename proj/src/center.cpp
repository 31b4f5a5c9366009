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

#include "hfl/center.hpp"

#include <algorithm>
#include <exception>
#include <map>

#include "hfl/error.hpp"
#include "hfl/matrix.hpp"

namespace hfl {

namespace {

AlgElem character_sum(const HopfAlgebra& h, int j, bool use_x) {
    require(j >= 0 && j < h.n(), "idempotent index " + std::to_string(j) + " out of range [0, " + std::to_string(h.n()) + ")");
    AlgElem out = h.zero();
    const mpq_class inv_n(1, h.n());
    for (int i = 0; i < h.n(); ++i) {
        const CycNum c = q_power(h.field(), -static_cast<long>(i) * j) * inv_n;
        out += use_x ? h.monomial(i, 0, 0, c) : h.monomial(0, i, 0, c);
    }
    return out;
}

bool is_central(const HopfAlgebra& h, const AlgElem& a) {
    for (const AlgElem& g : {h.x(), h.y(), h.z()})
        if (h.multiply(a, g) != h.multiply(g, a)) return false;
    return true;
}

// Row k holds the coefficients of image(basis k).
template <class F>
CycMatrix image_matrix(const HopfAlgebra& h, std::size_t blocks, F&& image) {
    const std::size_t dim = h.dim();
    CycMatrix m(dim, dim * blocks, CycNum::zero(h.field()));
    for (std::uint32_t k = 0; k < dim; ++k) {
        const std::vector<AlgElem> parts = image(h.basis(k));
        for (std::size_t b = 0; b < blocks; ++b)
            for (const auto& [idx, c] : parts[b].terms()) m(k, b * dim + idx) = c;
    }
    return m;
}

}  // namespace

AlgElem e_idem(const HopfAlgebra& h, int j) { return character_sum(h, j, true); }
AlgElem f_idem(const HopfAlgebra& h, int j) { return character_sum(h, j, false); }

std::vector<AlgElem> center_basis(const HopfAlgebra& h) {
    const int n = h.n();
    std::vector<AlgElem> e, f, out;
    for (int j = 0; j < n; ++j) {
        e.push_back(e_idem(h, j));
        f.push_back(f_idem(h, j));
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) out.push_back(h.multiply(e[i], f[j]) + h.multiply(e[j], f[i]));
    for (int i = 0; i < n; ++i) out.push_back(h.multiply(e[i], f[i]));
    for (int i = 0; i < n; ++i) out.push_back(h.multiply(h.multiply(e[i], f[i]), h.z()));
    return out;
}

std::string CentralIdempotent::label(int n) const {
    if (kind == BlockKind::TwoDim) return "S_{" + std::to_string(i) + "," + std::to_string(j) + "}";
    return "S_" + std::to_string(sign > 0 ? i : i + n);
}

std::vector<CentralIdempotent> primitive_central_idempotents(const HopfAlgebra& h) {
    const int n = h.n();
    std::vector<AlgElem> e, f;
    for (int j = 0; j < n; ++j) {
        e.push_back(e_idem(h, j));
        f.push_back(f_idem(h, j));
    }
    std::vector<CentralIdempotent> out;
    const CycNum half(h.field(), mpq_class(1, 2));
    for (int sign : {1, -1})
        for (int i = 0; i < n; ++i) {
            const AlgElem ef = h.multiply(e[i], f[i]);
            const CycNum twist = CycNum::root(h.field(), -half_square_exponent(n, i)) * mpq_class(sign, 2);
            AlgElem el = half * ef;
            el += twist * h.multiply(ef, h.z());
            out.push_back(CentralIdempotent{BlockKind::OneDim, i, 0, sign, std::move(el)});
        }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            out.push_back(CentralIdempotent{BlockKind::TwoDim, i, j, 0, h.multiply(e[i], f[j]) + h.multiply(e[j], f[i])});
    return out;
}

std::size_t ideal_dimension(const HopfAlgebra& h, const AlgElem& e) {
    const CycMatrix m = image_matrix(h, 1, [&](const AlgElem& a) { return std::vector<AlgElem>{h.multiply(a, e)}; });
    return bareiss_rank(m, CycNum::one(h.field()));
}

std::size_t center_dimension(const HopfAlgebra& h) {
    const AlgElem gens[3] = {h.x(), h.y(), h.z()};
    const CycMatrix m = image_matrix(h, 3, [&](const AlgElem& a) {
        std::vector<AlgElem> parts;
        for (const AlgElem& g : gens) parts.push_back(h.multiply(a, g) - h.multiply(g, a));
        return parts;
    });
    return h.dim() - bareiss_rank(m, CycNum::one(h.field()));
}

VerificationReport verify_idempotents(int n) {
    const HopfAlgebra h(n);
    VerificationReport report("idempotents", n);
    const std::size_t nn = static_cast<std::size_t>(n);
    const std::size_t one_dim = 2 * nn;
    const std::size_t two_dim = (nn * nn - nn) / 2;

    auto guarded = [&](const std::string& axiom, auto&& body) {
        try {
            body();
        } catch (const std::exception& ex) {
            report.add(axiom, false, std::string("exception: ") + ex.what());
        }
    };

    guarded("character_idempotents", [&] {
        std::optional<std::string> witness;
        AlgElem se = h.zero(), sf = h.zero();
        for (int j = 0; j < n && !witness; ++j) {
            const AlgElem ej = e_idem(h, j), fj = f_idem(h, j);
            se += ej;
            sf += fj;
            for (int k = 0; k < n && !witness; ++k) {
                const AlgElem ek = e_idem(h, k), fk = f_idem(h, k);
                if (h.multiply(ej, ek) != (j == k ? ej : h.zero())) witness = "e_" + std::to_string(j) + " e_" + std::to_string(k);
                else if (h.multiply(fj, fk) != (j == k ? fj : h.zero())) witness = "f_" + std::to_string(j) + " f_" + std::to_string(k);
            }
        }
        if (!witness && se != h.one()) witness = "sum of e_j != 1";
        if (!witness && sf != h.one()) witness = "sum of f_j != 1";
        report.add("character_idempotents", !witness, witness);
    });

    const std::vector<CentralIdempotent> idem = primitive_central_idempotents(h);
    const std::size_t expected = one_dim + two_dim;
    report.add("count", idem.size() == expected,
               idem.size() == expected ? std::nullopt
                                       : std::optional<std::string>(std::to_string(idem.size()) + " != " + std::to_string(expected)));

    guarded("idempotent", [&] {
        std::optional<std::string> witness;
        for (const auto& e : idem)
            if (!witness && h.multiply(e.element, e.element) != e.element) witness = e.label(n);
        report.add("idempotent", !witness, witness);
    });
    guarded("central", [&] {
        std::optional<std::string> witness;
        for (const auto& e : idem)
            if (!witness && !is_central(h, e.element)) witness = e.label(n);
        report.add("central", !witness, witness);
    });
    guarded("orthogonal", [&] {
        std::optional<std::string> witness;
        for (std::size_t a = 0; a < idem.size() && !witness; ++a)
            for (std::size_t b = 0; b < idem.size() && !witness; ++b)
                if (a != b && !h.multiply(idem[a].element, idem[b].element).is_zero())
                    witness = idem[a].label(n) + " * " + idem[b].label(n);
        report.add("orthogonal", !witness, witness);
    });
    guarded("sum_to_one", [&] {
        AlgElem s = h.zero();
        for (const auto& e : idem) s += e.element;
        report.add("sum_to_one", s == h.one(), s == h.one() ? std::nullopt : std::optional<std::string>(s.to_string()));
    });

    Json entries = Json::array();
    guarded("ideal_dimensions", [&] {
        std::map<std::size_t, std::size_t> histogram;
        std::size_t total = 0;
        std::optional<std::string> witness;
        for (const auto& e : idem) {
            const std::size_t d = ideal_dimension(h, e.element);
            histogram[d] += 1;
            total += d;
            if (!witness && d != e.block_dimension())
                witness = e.label(n) + " has ideal dimension " + std::to_string(d);
        }
        const std::map<std::size_t, std::size_t> want = two_dim ? std::map<std::size_t, std::size_t>{{1, one_dim}, {4, two_dim}}
                                                                : std::map<std::size_t, std::size_t>{{1, one_dim}};
        if (!witness && histogram != want) witness = "unexpected ideal dimension multiset";
        report.add("ideal_dimensions", !witness, witness);
        report.add("total_dimension", total == h.dim(),
                   total == h.dim() ? std::nullopt : std::optional<std::string>(std::to_string(total)));
        Json hist = Json::object();
        for (const auto& [d, c] : histogram) hist[std::to_string(d)] = c;
        report.data()["ideal_dimension_histogram"] = hist;
    });

    guarded("acts_on_own_block", [&] {
        std::optional<std::string> witness;
        for (const auto& e : idem) {
            if (e.kind != BlockKind::TwoDim || witness) continue;
            const AlgElem ef = h.multiply(e_idem(h, e.i), f_idem(h, e.j));
            if (h.multiply(e.element, ef) != ef) witness = e.label(n);
        }
        report.add("acts_on_own_block", !witness, witness);
    });

    guarded("center_basis", [&] {
        const std::vector<AlgElem> basis = center_basis(h);
        std::optional<std::string> witness;
        if (basis.size() != (nn * nn + 3 * nn) / 2) witness = "size " + std::to_string(basis.size());
        for (std::size_t k = 0; k < basis.size() && !witness; ++k)
            if (!is_central(h, basis[k])) witness = "element " + std::to_string(k) + " is not central";
        report.add("center_basis", !witness, witness);
    });

    guarded("center_dimension", [&] {
        const std::size_t dim = center_dimension(h);
        const bool ok = dim == idem.size() && dim == (nn * nn + 3 * nn) / 2;
        report.add("center_dimension", ok,
                   ok ? std::nullopt
                      : std::optional<std::string>("commutant dimension " + std::to_string(dim) + ", idempotents " +
                                                   std::to_string(idem.size())));
        report.data()["center_dimension"] = dim;
    });

    report.data()["count"] = idem.size();
    return report;
}

Json idempotents_json(int n) {
    const HopfAlgebra h(n);
    Json out = Json::object();
    out["schema"] = kSchema;
    out["n"] = n;
    const auto idem = primitive_central_idempotents(h);
    out["count"] = idem.size();
    Json list = Json::array();
    for (const auto& e : idem) {
        Json j = Json::object();
        j["kind"] = e.kind == BlockKind::OneDim ? "one_dim" : "two_dim";
        j["i"] = e.i;
        if (e.kind == BlockKind::OneDim)
            j["sign"] = e.sign > 0 ? "+" : "-";
        else
            j["j"] = e.j;
        j["label"] = e.label(n);
        j["ideal_dimension"] = ideal_dimension(h, e.element);
        j["element"] = e.element.to_string();
        list.push_back(std::move(j));
    }
    out["idempotents"] = std::move(list);
    return out;
}

}  // namespace hfl
