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

#include "hfl/repr.hpp"

#include <exception>
#include <set>

#include "hfl/error.hpp"

namespace hfl {

namespace {

CycMatrix scalar_matrix(const CycNum& c) {
    CycMatrix m(1, 1, c);
    return m;
}

CycMatrix diagonal(const FieldPtr& f, const CycNum& a, const CycNum& b) {
    CycMatrix m(2, 2, CycNum::zero(f));
    m(0, 0) = a;
    m(1, 1) = b;
    return m;
}

CycMatrix zero_matrix(const FieldPtr& f, std::size_t dim) { return CycMatrix(dim, dim, CycNum::zero(f)); }

// rho(x^i y^j z^e) for every basis index.
std::vector<CycMatrix> basis_images(const HopfAlgebra& h, const Rep& rep) {
    const int n = h.n();
    std::vector<CycMatrix> xp, yp;
    xp.push_back(identity_matrix(h.field(), rep.dim));
    yp.push_back(identity_matrix(h.field(), rep.dim));
    for (int k = 1; k < n; ++k) {
        xp.push_back(xp.back() * rep.x);
        yp.push_back(yp.back() * rep.y);
    }
    std::vector<CycMatrix> out(h.dim());
    for (std::uint32_t k = 0; k < h.dim(); ++k) {
        const Word w = h.word(k);
        CycMatrix m = xp[static_cast<std::size_t>(w.i)] * yp[static_cast<std::size_t>(w.j)];
        if (w.e == 1) m = m * rep.z;
        out[k] = std::move(m);
    }
    return out;
}

}  // namespace

Rep build_simple(const HopfAlgebra& h, const SimpleLabel& label) {
    const int n = h.n();
    require(label.n() == n, "label " + label.to_string() + " belongs to a different n");
    const FieldPtr& f = h.field();
    Rep rep;
    rep.name = label.to_string();
    if (label.is_one_dim()) {
        const long m = label.first();
        rep.dim = 1;
        rep.x = scalar_matrix(q_power(f, m));
        rep.y = rep.x;
        CycNum zc = q_half_square(f, m);
        if (label.sigma() < 0) zc = -zc;
        rep.z = scalar_matrix(zc);
        return rep;
    }
    const long i = label.first(), j = label.second();
    rep.dim = 2;
    rep.x = diagonal(f, q_power(f, i), q_power(f, j));
    rep.y = diagonal(f, q_power(f, j), q_power(f, i));
    rep.z = zero_matrix(f, 2);
    rep.z(0, 1) = q_power(f, i * j);
    rep.z(1, 0) = CycNum::one(f);
    return rep;
}

CycMatrix rep_of_element(const HopfAlgebra& h, const Rep& rep, const AlgElem& a) {
    require(a.n() == h.n(), "rep_of_element: mismatched algebra parameter");
    CycMatrix out = zero_matrix(h.field(), rep.dim);
    if (a.is_zero()) return out;
    const std::vector<CycMatrix> images = basis_images(h, rep);
    for (const auto& [k, c] : a.terms()) out = out + scaled(images[k], c);
    return out;
}

Rep tensor_rep(const HopfAlgebra& h, const Rep& a, const Rep& b) {
    const int n = h.n();
    const FieldPtr& f = h.field();
    Rep out;
    out.name = "(" + a.name + ")(x)(" + b.name + ")";
    out.dim = a.dim * b.dim;
    out.x = kronecker(a.x, b.x);
    out.y = kronecker(a.y, b.y);
    // (1/n) sum_i rho_a(x^i z) (x) W_i with W_i = sum_j q^{-ij} rho_b(y^j z)
    std::vector<CycMatrix> bz;
    CycMatrix yp = identity_matrix(f, b.dim);
    for (int j = 0; j < n; ++j) {
        bz.push_back(yp * b.z);
        yp = yp * b.y;
    }
    out.z = zero_matrix(f, out.dim);
    CycMatrix xp = identity_matrix(f, a.dim);
    for (int i = 0; i < n; ++i) {
        CycMatrix w = zero_matrix(f, b.dim);
        for (int j = 0; j < n; ++j) w = w + scaled(bz[static_cast<std::size_t>(j)], q_power(f, -static_cast<long>(i) * j));
        out.z = out.z + kronecker(xp * a.z, w);
        xp = xp * a.x;
    }
    out.z = scaled(out.z, CycNum(f, mpq_class(1, n)));
    return out;
}

std::optional<std::string> module_axiom_failure(const HopfAlgebra& h, const Rep& rep) {
    const FieldPtr& f = h.field();
    const CycMatrix id = identity_matrix(f, rep.dim);
    const auto n = static_cast<unsigned>(h.n());
    if (matrix_power(f, rep.x, n) != id) return "x^n != 1";
    if (matrix_power(f, rep.y, n) != id) return "y^n != 1";
    if (rep.x * rep.y != rep.y * rep.x) return "xy != yx";
    if (rep.z * rep.x != rep.y * rep.z) return "zx != yz";
    if (rep.z * rep.y != rep.x * rep.z) return "zy != xz";
    if (rep.z * rep.z != rep_of_element(h, rep, h.z_square())) return "z^2 != (1/n) sum q^{-ij} x^i y^j";
    return std::nullopt;
}

Decomposer::Decomposer(const HopfAlgebra& h) : h_(h), idempotents_(primitive_central_idempotents(h)) {
    for (const auto& e : idempotents_)
        labels_.push_back(e.kind == BlockKind::TwoDim ? SimpleLabel::two_dim(h.n(), e.i, e.j)
                                                      : SimpleLabel::one_dim(h.n(), e.sign > 0 ? e.i : e.i + h.n()));
}

FusionVector Decomposer::decompose(const Rep& rep) const {
    std::vector<CycNum> character(h_.dim());
    {
        const std::vector<CycMatrix> images = basis_images(h_, rep);
        for (std::size_t k = 0; k < images.size(); ++k) character[k] = trace(images[k]);
    }
    FusionVector out(h_.n());
    for (std::size_t k = 0; k < idempotents_.size(); ++k) {
        CycNum t = CycNum::zero(h_.field());
        for (const auto& [idx, c] : idempotents_[k].element.terms()) t.add_product(c, character[idx]);
        const SimpleLabel& s = labels_[k];
        if (!t.is_rational())
            throw ModuleAxiomError("trace of the " + s.to_string() + " idempotent is irrational: " + t.to_string());
        const mpq_class mult = t.rational_part() / s.dim();
        if (mult.get_den() != 1 || sgn(mult) < 0)
            throw ModuleAxiomError("multiplicity of " + s.to_string() + " is " + mult.get_str());
        out.add(s, mult.get_num());
    }
    if (out.dimension() != static_cast<long>(rep.dim))
        throw ModuleAxiomError("decomposition of " + rep.name + " has total dimension " + out.dimension().get_str());
    return out;
}

FusionVector decompose(const HopfAlgebra& h, const Rep& rep) { return Decomposer(h).decompose(rep); }

VerificationReport verify_repr(int n) {
    const HopfAlgebra h(n);
    VerificationReport report("repr", n);
    const std::vector<SimpleLabel> simples = all_simples(n);
    const auto nn = static_cast<std::size_t>(n);

    auto guarded = [&](const std::string& axiom, auto&& body) {
        try {
            const std::optional<std::string> w = body();
            report.add(axiom, !w, w);
        } catch (const std::exception& ex) {
            report.add(axiom, false, std::string("exception: ") + ex.what());
        }
    };

    std::vector<Rep> reps;
    for (const auto& s : simples) reps.push_back(build_simple(h, s));
    const Decomposer decomposer(h);

    guarded("simple_count", [&]() -> std::optional<std::string> {
        const std::size_t want = 2 * nn + nn * (nn - 1) / 2;
        if (simples.size() != want) return std::to_string(simples.size()) + " labels, expected " + std::to_string(want);
        return std::nullopt;
    });
    guarded("module_axioms", [&]() -> std::optional<std::string> {
        for (const auto& r : reps)
            if (auto w = module_axiom_failure(h, r)) return r.name + ": " + *w;
        return std::nullopt;
    });
    guarded("sum_of_squares", [&]() -> std::optional<std::string> {
        std::size_t total = 0;
        for (const auto& r : reps) total += r.dim * r.dim;
        report.data()["sum_of_squared_dimensions"] = total;
        if (total != h.dim()) return std::to_string(total) + " != " + std::to_string(h.dim());
        return std::nullopt;
    });
    std::vector<FusionVector> fingerprints;
    guarded("irreducible", [&]() -> std::optional<std::string> {
        for (std::size_t k = 0; k < reps.size(); ++k) {
            fingerprints.push_back(decomposer.decompose(reps[k]));
            if (fingerprints.back() != FusionVector::unit(simples[k]))
                return reps[k].name + " decomposes as " + fingerprints.back().to_string();
        }
        return std::nullopt;
    });
    guarded("distinct_fingerprints", [&]() -> std::optional<std::string> {
        if (fingerprints.size() != reps.size()) return "fingerprints unavailable";
        std::set<std::string> seen;
        for (std::size_t k = 0; k < fingerprints.size(); ++k)
            if (!seen.insert(fingerprints[k].to_string()).second) return reps[k].name + " repeats a fingerprint";
        return std::nullopt;
    });
    guarded("block_action", [&]() -> std::optional<std::string> {
        for (std::size_t s = 0; s < reps.size(); ++s) {
            const std::vector<CycMatrix> images = basis_images(h, reps[s]);
            for (std::size_t k = 0; k < decomposer.idempotents().size(); ++k) {
                CycMatrix m = zero_matrix(h.field(), reps[s].dim);
                for (const auto& [idx, c] : decomposer.idempotents()[k].element.terms()) m = m + scaled(images[idx], c);
                const bool own = decomposer.block_label(k) == simples[s];
                if (m != (own ? identity_matrix(h.field(), reps[s].dim) : zero_matrix(h.field(), reps[s].dim)))
                    return "idempotent of " + decomposer.block_label(k).to_string() + " on " + reps[s].name;
            }
        }
        return std::nullopt;
    });

    std::size_t pairs = 0;
    guarded("tensor_module_axioms", [&]() -> std::optional<std::string> {
        for (const auto& a : reps)
            for (const auto& b : reps) {
                ++pairs;
                if (auto w = module_axiom_failure(h, tensor_rep(h, a, b))) return a.name + " (x) " + b.name + ": " + *w;
            }
        return std::nullopt;
    });
    guarded("tensor_symmetry", [&]() -> std::optional<std::string> {
        for (std::size_t a = 0; a < reps.size(); ++a)
            for (std::size_t b = a + 1; b < reps.size(); ++b) {
                const FusionVector ab = decomposer.decompose(tensor_rep(h, reps[a], reps[b]));
                const FusionVector ba = decomposer.decompose(tensor_rep(h, reps[b], reps[a]));
                if (ab != ba) return reps[a].name + " (x) " + reps[b].name + ": " + ab.to_string() + " vs " + ba.to_string();
            }
        return std::nullopt;
    });
    report.data()["simples"] = simples.size();
    report.data()["pairs_checked"] = pairs;
    return report;
}

}  // namespace hfl
