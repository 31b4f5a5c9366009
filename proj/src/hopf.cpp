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

#include "hfl/hopf.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <optional>
#include <sstream>
#include <unordered_map>

#include "hfl/error.hpp"

namespace hfl {

namespace {

long mod(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

template <class Key>
class Accumulator {
   public:
    void add(Key key, const CycNum& c) {
        if (!c.is_zero()) map_[key] += c;
    }
    void add_product(Key key, const CycNum& a, const CycNum& b) {
        if (!a.is_zero() && !b.is_zero()) map_[key].add_product(a, b);
    }
    template <class F>
    void for_each(F&& f) const {
        for (const auto& [k, v] : map_)
            if (!v.is_zero()) f(k, v);
    }

    SparseTerms<Key> finish() && {
        std::vector<typename SparseTerms<Key>::Term> out;
        out.reserve(map_.size());
        for (auto& [k, v] : map_)
            if (!v.is_zero()) out.emplace_back(k, std::move(v));
        std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        return SparseTerms<Key>(std::move(out));
    }

   private:
    std::unordered_map<Key, CycNum> map_;
};

template <class Key>
SparseTerms<Key> combine(const SparseTerms<Key>& a, const SparseTerms<Key>& b, bool subtract) {
    std::vector<typename SparseTerms<Key>::Term> out;
    auto ia = a.terms().begin(), ea = a.terms().end();
    auto ib = b.terms().begin(), eb = b.terms().end();
    while (ia != ea || ib != eb) {
        if (ib == eb || (ia != ea && ia->first < ib->first)) {
            out.push_back(*ia++);
        } else if (ia == ea || ib->first < ia->first) {
            out.emplace_back(ib->first, subtract ? -ib->second : ib->second);
            ++ib;
        } else {
            CycNum c = subtract ? ia->second - ib->second : ia->second + ib->second;
            if (!c.is_zero()) out.emplace_back(ia->first, std::move(c));
            ++ia;
            ++ib;
        }
    }
    return SparseTerms<Key>(std::move(out));
}

std::string coeff_prefix(const CycNum& c) {
    if (c.is_one()) return "";
    const std::string s = c.to_string();
    if (c.is_rational()) return s + "*";
    return "(" + s + ")*";
}

}  // namespace

template <class Key>
CycNum SparseTerms<Key>::coeff(Key key) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), key, [](const Term& t, Key k) { return t.first < k; });
    if (it == terms_.end() || it->first != key) return CycNum();
    return it->second;
}

template class SparseTerms<std::uint32_t>;
template class SparseTerms<std::uint64_t>;

// ---------------------------------------------------------------------------
// AlgElem / TensorElem

AlgElem& AlgElem::operator+=(const AlgElem& rhs) {
    if (n_ == 0) {
        n_ = rhs.n_;
        field_ = rhs.field_;
    }
    require(rhs.n_ == 0 || rhs.n_ == n_, "AlgElem: mismatched algebra parameters");
    terms_ = combine(terms_, rhs.terms_, false);
    return *this;
}

AlgElem& AlgElem::operator-=(const AlgElem& rhs) {
    if (n_ == 0) {
        n_ = rhs.n_;
        field_ = rhs.field_;
    }
    require(rhs.n_ == 0 || rhs.n_ == n_, "AlgElem: mismatched algebra parameters");
    terms_ = combine(terms_, rhs.terms_, true);
    return *this;
}

AlgElem operator*(const CycNum& s, const AlgElem& a) {
    std::vector<SparseTerms<std::uint32_t>::Term> out;
    if (!s.is_zero())
        for (const auto& [k, c] : a.terms()) out.emplace_back(k, s * c);
    return AlgElem(a.n_, a.field_, SparseTerms<std::uint32_t>(std::move(out)));
}

std::string AlgElem::to_string() const {
    if (is_zero()) return "0";
    const std::uint32_t nn = static_cast<std::uint32_t>(n_) * static_cast<std::uint32_t>(n_);
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms()) {
        const bool negative = c.is_rational() && sgn(c.rational_part()) < 0;
        if (!first)
            os << (negative ? " - " : " + ");
        else if (negative)
            os << "-";
        first = false;
        const CycNum shown = negative ? -c : c;
        const int e = static_cast<int>(k / nn);
        const int i = static_cast<int>((k % nn) / static_cast<std::uint32_t>(n_));
        const int j = static_cast<int>(k % static_cast<std::uint32_t>(n_));
        std::string w;
        auto factor = [&](const char* var, int p) {
            if (p == 0) return;
            if (!w.empty()) w += "*";
            w += var;
            if (p > 1) w += "^" + std::to_string(p);
        };
        factor("x", i);
        factor("y", j);
        factor("z", e);
        if (w.empty())
            os << shown.to_string();
        else
            os << coeff_prefix(shown) << w;
    }
    return os.str();
}

TensorElem& TensorElem::operator+=(const TensorElem& rhs) {
    if (n_ == 0) {
        n_ = rhs.n_;
        field_ = rhs.field_;
    }
    terms_ = combine(terms_, rhs.terms_, false);
    return *this;
}

TensorElem& TensorElem::operator-=(const TensorElem& rhs) {
    if (n_ == 0) {
        n_ = rhs.n_;
        field_ = rhs.field_;
    }
    terms_ = combine(terms_, rhs.terms_, true);
    return *this;
}

std::string TensorElem::to_string() const {
    if (is_zero()) return "0";
    const std::uint64_t d = 2ull * static_cast<std::uint64_t>(n_) * static_cast<std::uint64_t>(n_);
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms()) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")[" << k / d << "|" << k % d << "]";
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// HopfAlgebra

namespace {

AlgElem standard_z_square(const HopfAlgebra& h) {
    const int n = h.n();
    std::vector<SparseTerms<std::uint32_t>::Term> terms;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            terms.emplace_back(h.index(i, j, 0), q_power(h.field(), -static_cast<long>(i) * j) * mpq_class(1, n));
    return AlgElem(n, h.field(), SparseTerms<std::uint32_t>(std::move(terms)));
}

}  // namespace

HopfAlgebra::HopfAlgebra(int n) : n_(n), field_(make_field(n)) {
    z_square_ = standard_z_square(*this);
    standard_z_square_ = true;
    build_tables();
}

HopfAlgebra::HopfAlgebra(int n, FieldPtr field, AlgElem z_square)
    : n_(n), field_(std::move(field)), z_square_(std::move(z_square)) {
    standard_z_square_ = z_square_ == standard_z_square(*this);
    build_tables();
}

HopfAlgebra HopfAlgebra::with_z_square(const AlgElem& z_square) const {
    require(z_square.n() == n_, "with_z_square: mismatched algebra parameter");
    for (const auto& [k, c] : z_square.terms())
        require(word(k).e == 0, "with_z_square: z^2 must lie in the group algebra of x, y");
    return HopfAlgebra(n_, field_, z_square);
}

void HopfAlgebra::build_tables() {
    const std::size_t nn = static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_);
    z_square_words_.assign(nn, {});
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            auto& list = z_square_words_[static_cast<std::size_t>(i * n_ + j)];
            for (const auto& [k, c] : z_square_.terms()) {
                const Word w = word(k);
                list.push_back(ExtTerm{index(i + w.i, j + w.j, 0), c});
            }
            std::sort(list.begin(), list.end(), [](const ExtTerm& a, const ExtTerm& b) { return a.index < b.index; });
        }

    // Delta(z) = (1/n) sum_{a,b} q^{-ab} x^a z (x) y^b z
    Accumulator<std::uint64_t> dz;
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            dz.add(static_cast<std::uint64_t>(index(a, 0, 1)) * dim() + index(0, b, 1),
                   q_power(field_, -static_cast<long>(a) * b) * mpq_class(1, n_));
    const TensorElem delta_z(n_, field_, std::move(dz).finish());

    coproduct_basis_.clear();
    antipode_basis_.clear();
    coproduct_basis_.reserve(dim());
    antipode_basis_.reserve(dim());
    for (std::uint32_t k = 0; k < dim(); ++k) {
        const Word w = word(k);
        const AlgElem g = monomial(w.i, w.j, 0);
        TensorElem d = tensor(g, g);
        if (w.e == 1) d = tensor_multiply(d, delta_z);
        coproduct_basis_.push_back(std::move(d));
        // S(x^i y^j z^e) = S(z)^e S(y)^j S(x)^i with S(x) = x^{-1}, S(y) = y^{-1}, S(z) = z
        AlgElem s = multiply(monomial(0, -w.j, 0), monomial(-w.i, 0, 0));
        if (w.e == 1) s = multiply(z(), s);
        antipode_basis_.push_back(std::move(s));
    }
}

std::uint32_t HopfAlgebra::index(long i, long j, int e) const {
    return static_cast<std::uint32_t>((static_cast<long>(e) * n_ + mod(i, n_)) * n_ + mod(j, n_));
}

Word HopfAlgebra::word(std::uint32_t idx) const {
    const std::uint32_t n = static_cast<std::uint32_t>(n_);
    return Word{static_cast<int>((idx / n) % n), static_cast<int>(idx % n), static_cast<int>(idx / (n * n))};
}

std::string HopfAlgebra::word_string(std::uint32_t idx) const { return basis(idx).to_string(); }

AlgElem HopfAlgebra::zero() const { return AlgElem(n_, field_, {}); }

AlgElem HopfAlgebra::basis(std::uint32_t idx) const {
    require(idx < dim(), "basis index out of range");
    return AlgElem(n_, field_, SparseTerms<std::uint32_t>({{idx, CycNum::one(field_)}}));
}

AlgElem HopfAlgebra::monomial(long i, long j, int e) const { return monomial(i, j, e, CycNum::one(field_)); }

AlgElem HopfAlgebra::monomial(long i, long j, int e, const CycNum& coeff) const {
    require(e == 0 || e == 1, "monomial: z exponent must be 0 or 1");
    if (coeff.is_zero()) return zero();
    return AlgElem(n_, field_, SparseTerms<std::uint32_t>({{index(i, j, e), coeff}}));
}

std::uint32_t HopfAlgebra::ext_product(std::uint32_t a, std::uint32_t b) const {
    const Word wa = word(a);
    const Word wb = word(b);
    if (wa.e == 0) return index(wa.i + wb.i, wa.j + wb.j, wb.e);
    // x^i y^j z x^k y^l z^d = x^{i+l} y^{j+k} z^{1+d}
    return index(wa.i + wb.j, wa.j + wb.i, 1 + wb.e);
}

const std::vector<HopfAlgebra::ExtTerm>& HopfAlgebra::ext_expansion(std::uint32_t ext) const {
    return z_square_words_[ext - dim()];
}

AlgElem HopfAlgebra::from_dense(std::vector<CycNum>& dense) const {
    std::vector<SparseTerms<std::uint32_t>::Term> out;
    for (std::uint32_t k = 0; k < dense.size(); ++k)
        if (!dense[k].is_zero()) out.emplace_back(k, std::move(dense[k]));
    return AlgElem(n_, field_, SparseTerms<std::uint32_t>(std::move(out)));
}

template <class Emit>
void HopfAlgebra::expand_z_square(const std::vector<CycNum>& grid, Emit&& emit) const {
    const auto n = static_cast<std::size_t>(n_);
    const auto support = static_cast<std::size_t>(
        std::count_if(grid.begin(), grid.end(), [](const CycNum& c) { return !c.is_zero(); }));
    // The factored transform costs about 2n^3 scaled root shifts against n^2
    // products per nonzero slot for the direct rewrite.
    if (!standard_z_square_ || support <= 2 * n) {
        std::vector<CycNum> out(n * n);
        for (std::size_t g = 0; g < n * n; ++g) {
            if (grid[g].is_zero()) continue;
            for (const auto& t : z_square_words_[g]) out[t.index].add_product(grid[g], t.coeff);
        }
        for (std::size_t g = 0; g < n * n; ++g)
            if (!out[g].is_zero()) emit(static_cast<std::uint32_t>(g), out[g]);
        return;
    }
    // out[i', j'] = (1/n) sum_{u,v} q^{-uv} grid[i'-u, j'-v]
    //             = (1/n) sum_u q^{-u j'} F[i'-u, u],  F[i, u] = sum_w q^{uw} grid[i, w]
    std::vector<CycNum> f(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t w = 0; w < n; ++w) {
            const CycNum& c = grid[i * n + w];
            if (c.is_zero()) continue;
            for (std::size_t u = 0; u < n; ++u) f[i * n + u].add_root_multiple(c, static_cast<long>(2 * u * w));
        }
    const mpq_class scale(1, n_);
    for (std::size_t ip = 0; ip < n; ++ip)
        for (std::size_t jp = 0; jp < n; ++jp) {
            CycNum acc;
            for (std::size_t u = 0; u < n; ++u)
                acc.add_root_multiple(f[((ip + n - u) % n) * n + u], -static_cast<long>(2 * u * jp));
            if (acc.is_zero()) continue;
            acc *= scale;
            emit(static_cast<std::uint32_t>(ip * n + jp), acc);
        }
}

AlgElem HopfAlgebra::multiply(const AlgElem& a, const AlgElem& b) const {
    require(a.n() == n_ && b.n() == n_, "multiply: mismatched algebra parameters");
    if (a.terms().size() * b.terms().size() <= 16) {
        Accumulator<std::uint32_t> acc;
        for (const auto& [ka, ca] : a.terms())
            for (const auto& [kb, cb] : b.terms()) {
                const std::uint32_t k = ext_product(ka, kb);
                if (ext_is_basis(k)) {
                    acc.add_product(k, ca, cb);
                    continue;
                }
                const CycNum c = ca * cb;
                for (const auto& t : ext_expansion(k)) acc.add_product(t.index, c, t.coeff);
            }
        return AlgElem(n_, field_, std::move(acc).finish());
    }
    std::vector<CycNum> ext(dim() + dim() / 2);
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) ext[ext_product(ka, kb)].add_product(ca, cb);
    std::vector<CycNum> out(dim());
    for (std::uint32_t k = 0; k < dim(); ++k) out[k] = std::move(ext[k]);
    const auto tail = ext.begin() + static_cast<std::ptrdiff_t>(dim());
    const auto support = static_cast<std::size_t>(std::count_if(tail, ext.end(), [](const CycNum& c) { return !c.is_zero(); }));
    if (standard_z_square_ && support > 2 * static_cast<std::size_t>(n_)) {
        const std::vector<CycNum> grid(std::make_move_iterator(tail), std::make_move_iterator(ext.end()));
        expand_z_square(grid, [&](std::uint32_t g, const CycNum& c) { out[g] += c; });
    } else if (support > 0) {
        for (std::uint32_t k = static_cast<std::uint32_t>(dim()); k < ext.size(); ++k) {
            if (ext[k].is_zero()) continue;
            for (const auto& t : ext_expansion(k)) out[t.index].add_product(ext[k], t.coeff);
        }
    }
    return from_dense(out);
}

AlgElem HopfAlgebra::power(const AlgElem& a, unsigned k) const {
    AlgElem r = one();
    for (unsigned i = 0; i < k; ++i) r = multiply(r, a);
    return r;
}

TensorElem HopfAlgebra::tensor(const AlgElem& a, const AlgElem& b) const {
    Accumulator<std::uint64_t> acc;
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) acc.add_product(static_cast<std::uint64_t>(ka) * dim() + kb, ca, cb);
    return TensorElem(n_, field_, std::move(acc).finish());
}

TensorElem HopfAlgebra::tensor_zero() const { return TensorElem(n_, field_, {}); }

TensorElem HopfAlgebra::tensor_multiply(const TensorElem& a, const TensorElem& b) const {
    require(a.n() == n_ && b.n() == n_, "tensor_multiply: mismatched algebra parameters");
    const std::uint64_t d = dim();
    const std::uint64_t e = dim() + dim() / 2;
    // Multiply words factorwise, keeping z^2 unexpanded; then rewrite z^2 in
    // the left factor, then in the right one.
    Accumulator<std::uint64_t> stage1;
    for (const auto& [ka, ca] : a.terms()) {
        const auto la = static_cast<std::uint32_t>(ka / d), ra = static_cast<std::uint32_t>(ka % d);
        for (const auto& [kb, cb] : b.terms()) {
            const auto lb = static_cast<std::uint32_t>(kb / d), rb = static_cast<std::uint32_t>(kb % d);
            stage1.add_product(static_cast<std::uint64_t>(ext_product(la, lb)) * e + ext_product(ra, rb), ca, cb);
        }
    }
    const std::size_t nn = dim() / 2;
    // Left factor: group the z^2 words by right key.
    Accumulator<std::uint64_t> stage2;
    std::unordered_map<std::uint64_t, std::vector<CycNum>> left_grids;
    stage1.for_each([&](std::uint64_t k, const CycNum& c) {
        const auto l = static_cast<std::uint32_t>(k / e);
        const std::uint64_t r = k % e;
        if (ext_is_basis(l)) {
            stage2.add(l * e + r, c);
            return;
        }
        auto& grid = left_grids[r];
        if (grid.empty()) grid.resize(nn);
        grid[l - dim()] += c;
    });
    for (const auto& [r, grid] : left_grids)
        expand_z_square(grid, [&](std::uint32_t g, const CycNum& c) { stage2.add(g * e + r, c); });
    // Right factor: group by left key.
    Accumulator<std::uint64_t> stage3;
    std::unordered_map<std::uint64_t, std::vector<CycNum>> right_grids;
    stage2.for_each([&](std::uint64_t k, const CycNum& c) {
        const std::uint64_t l = k / e;
        const auto r = static_cast<std::uint32_t>(k % e);
        if (ext_is_basis(r)) {
            stage3.add(l * d + r, c);
            return;
        }
        auto& grid = right_grids[l];
        if (grid.empty()) grid.resize(nn);
        grid[r - dim()] += c;
    });
    for (const auto& [l, grid] : right_grids)
        expand_z_square(grid, [&](std::uint32_t g, const CycNum& c) { stage3.add(l * d + g, c); });
    return TensorElem(n_, field_, std::move(stage3).finish());
}

TensorElem HopfAlgebra::flip(const TensorElem& t) const {
    Accumulator<std::uint64_t> acc;
    const std::uint64_t d = dim();
    for (const auto& [k, c] : t.terms()) acc.add((k % d) * d + k / d, c);
    return TensorElem(n_, field_, std::move(acc).finish());
}

TensorElem HopfAlgebra::coproduct(const AlgElem& a) const {
    require(a.n() == n_, "coproduct: mismatched algebra parameter");
    Accumulator<std::uint64_t> acc;
    for (const auto& [k, c] : a.terms())
        for (const auto& [kt, ct] : coproduct_basis_[k].terms()) acc.add_product(kt, c, ct);
    return TensorElem(n_, field_, std::move(acc).finish());
}

CycNum HopfAlgebra::counit(const AlgElem& a) const {
    CycNum s = CycNum::zero(field_);
    for (const auto& [k, c] : a.terms()) s += c;
    return s;
}

AlgElem HopfAlgebra::antipode(const AlgElem& a) const {
    std::vector<CycNum> out(dim());
    for (const auto& [k, c] : a.terms())
        for (const auto& [ks, cs] : antipode_basis_[k].terms()) out[ks].add_product(c, cs);
    return from_dense(out);
}

Tensor3Elem HopfAlgebra::coproduct_left(const TensorElem& t) const {
    const std::uint64_t d = dim();
    Accumulator<std::uint64_t> acc;
    for (const auto& [k, c] : t.terms())
        for (const auto& [kd, cd] : coproduct_basis_[k / d].terms()) acc.add_product(kd * d + k % d, c, cd);
    return Tensor3Elem(n_, std::move(acc).finish());
}

Tensor3Elem HopfAlgebra::coproduct_right(const TensorElem& t) const {
    const std::uint64_t d = dim();
    Accumulator<std::uint64_t> acc;
    for (const auto& [k, c] : t.terms())
        for (const auto& [kd, cd] : coproduct_basis_[k % d].terms()) acc.add_product((k / d) * d * d + kd, c, cd);
    return Tensor3Elem(n_, std::move(acc).finish());
}

Tensor3Elem HopfAlgebra::embed13(const TensorElem& t) const {
    const std::uint64_t d = dim();
    Accumulator<std::uint64_t> acc;
    for (const auto& [k, c] : t.terms()) acc.add((k / d) * d * d + k % d, c);
    return Tensor3Elem(n_, std::move(acc).finish());
}

Tensor3Elem HopfAlgebra::embed23(const TensorElem& t) const {
    Accumulator<std::uint64_t> acc;
    for (const auto& [k, c] : t.terms()) acc.add(k, c);
    return Tensor3Elem(n_, std::move(acc).finish());
}

Tensor3Elem HopfAlgebra::embed12(const TensorElem& t) const {
    const std::uint64_t d = dim();
    Accumulator<std::uint64_t> acc;
    for (const auto& [k, c] : t.terms()) acc.add(k * d, c);
    return Tensor3Elem(n_, std::move(acc).finish());
}

Tensor3Elem HopfAlgebra::tensor3_multiply(const Tensor3Elem& a, const Tensor3Elem& b) const {
    const std::uint64_t d = dim();
    Accumulator<std::uint64_t> acc;
    const CycNum one = CycNum::one(field_);
    auto expand = [&](std::uint32_t ext) {
        std::vector<ExtTerm> out;
        if (ext_is_basis(ext))
            out.push_back(ExtTerm{ext, one});
        else
            out = ext_expansion(ext);
        return out;
    };
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) {
            const std::uint32_t p = ext_product(static_cast<std::uint32_t>(ka / (d * d)), static_cast<std::uint32_t>(kb / (d * d)));
            const std::uint32_t q = ext_product(static_cast<std::uint32_t>((ka / d) % d), static_cast<std::uint32_t>((kb / d) % d));
            const std::uint32_t r = ext_product(static_cast<std::uint32_t>(ka % d), static_cast<std::uint32_t>(kb % d));
            const CycNum c = ca * cb;
            if (ext_is_basis(p) && ext_is_basis(q) && ext_is_basis(r)) {
                acc.add((p * d + q) * d + r, c);
                continue;
            }
            for (const auto& tp : expand(p))
                for (const auto& tq : expand(q))
                    for (const auto& tr : expand(r))
                        acc.add((tp.index * d + tq.index) * d + tr.index, c * tp.coeff * tq.coeff * tr.coeff);
        }
    return Tensor3Elem(n_, std::move(acc).finish());
}

TensorElem HopfAlgebra::r_matrix() const {
    Accumulator<std::uint64_t> acc;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            acc.add(static_cast<std::uint64_t>(index(j, 0, 0)) * dim() + index(0, -i, 0),
                    q_power(field_, -static_cast<long>(i) * j) * mpq_class(1, n_));
    return TensorElem(n_, field_, std::move(acc).finish());
}

TensorElem HopfAlgebra::j_element() const {
    Accumulator<std::uint64_t> acc;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            acc.add(static_cast<std::uint64_t>(index(j, 0, 0)) * dim() + index(0, i, 0),
                    q_power(field_, -static_cast<long>(i) * j) * mpq_class(1, n_));
    return TensorElem(n_, field_, std::move(acc).finish());
}

AlgElem HopfAlgebra::integral() const {
    AlgElem sx = zero(), sy = zero();
    for (int i = 0; i < n_; ++i) {
        sx += monomial(i, 0, 0);
        sy += monomial(0, i, 0);
    }
    return multiply(multiply(sx, sy), one() + z());
}

// ---------------------------------------------------------------------------
// Verification

namespace {

using Witness = std::optional<std::string>;

// Runs `body` and records the axiom; an exception is a failure whose witness
// is the exception text.
void run_check(VerificationReport& report, const std::string& axiom, const std::function<Witness()>& body) {
    try {
        const Witness w = body();
        report.add(axiom, !w.has_value(), w);
    } catch (const std::exception& ex) {
        report.add(axiom, false, std::string("exception: ") + ex.what());
    }
}

AlgElem counit_left(const HopfAlgebra& h, const TensorElem& t) {
    const std::uint64_t d = h.dim();
    AlgElem out = h.zero();
    for (const auto& [k, c] : t.terms())
        out += (c * h.counit(h.basis(static_cast<std::uint32_t>(k / d)))) * h.basis(static_cast<std::uint32_t>(k % d));
    return out;
}

AlgElem counit_right(const HopfAlgebra& h, const TensorElem& t) {
    const std::uint64_t d = h.dim();
    AlgElem out = h.zero();
    for (const auto& [k, c] : t.terms())
        out += (c * h.counit(h.basis(static_cast<std::uint32_t>(k % d)))) * h.basis(static_cast<std::uint32_t>(k / d));
    return out;
}

// m (S (x) id) t  or  m (id (x) S) t
AlgElem antipode_contract(const HopfAlgebra& h, const TensorElem& t, bool left) {
    const std::uint64_t d = h.dim();
    AlgElem out = h.zero();
    for (const auto& [k, c] : t.terms()) {
        const AlgElem a = h.basis(static_cast<std::uint32_t>(k / d));
        const AlgElem b = h.basis(static_cast<std::uint32_t>(k % d));
        out += c * (left ? h.multiply(h.antipode(a), b) : h.multiply(a, h.antipode(b)));
    }
    return out;
}

}  // namespace

VerificationReport verify_hopf_axioms(const HopfAlgebra& h) {
    VerificationReport report("hopf", h.n());
    const auto dim = static_cast<std::uint32_t>(h.dim());
    const AlgElem gens[3] = {h.x(), h.y(), h.z()};
    const char* gen_names[3] = {"x", "y", "z"};

    run_check(report, "algebra.relations", [&]() -> Witness {
        const auto n = static_cast<unsigned>(h.n());
        if (h.power(h.x(), n) != h.one()) return "x^n != 1";
        if (h.power(h.y(), n) != h.one()) return "y^n != 1";
        if (h.multiply(h.x(), h.y()) != h.multiply(h.y(), h.x())) return "xy != yx";
        if (h.multiply(h.z(), h.x()) != h.multiply(h.y(), h.z())) return "zx != yz";
        if (h.multiply(h.z(), h.y()) != h.multiply(h.x(), h.z())) return "zy != xz";
        if (h.multiply(h.z(), h.z()) != h.z_square()) return "z*z != z^2";
        return std::nullopt;
    });

    // (g a) b = g (a b) for generators g and basis a, b forces associativity.
    run_check(report, "algebra.associativity", [&]() -> Witness {
        for (int g = 0; g < 3; ++g)
            for (std::uint32_t a = 0; a < dim; ++a) {
                const AlgElem ga = h.multiply(gens[g], h.basis(a));
                for (std::uint32_t b = 0; b < dim; ++b)
                    if (h.multiply(ga, h.basis(b)) != h.multiply(gens[g], h.multiply(h.basis(a), h.basis(b))))
                        return std::string(gen_names[g]) + " * " + h.word_string(a) + " * " + h.word_string(b);
            }
        return std::nullopt;
    });

    run_check(report, "coproduct.coassociativity", [&]() -> Witness {
        for (std::uint32_t b = 0; b < dim; ++b) {
            const TensorElem d = h.coproduct(h.basis(b));
            if (h.coproduct_left(d) != h.coproduct_right(d)) return h.word_string(b);
        }
        return std::nullopt;
    });

    run_check(report, "counit.left", [&]() -> Witness {
        for (std::uint32_t b = 0; b < dim; ++b)
            if (counit_left(h, h.coproduct(h.basis(b))) != h.basis(b)) return h.word_string(b);
        return std::nullopt;
    });

    run_check(report, "counit.right", [&]() -> Witness {
        for (std::uint32_t b = 0; b < dim; ++b)
            if (counit_right(h, h.coproduct(h.basis(b))) != h.basis(b)) return h.word_string(b);
        return std::nullopt;
    });

    run_check(report, "coproduct.relations", [&]() -> Witness {
        const TensorElem dx = h.coproduct(h.x()), dy = h.coproduct(h.y()), dz = h.coproduct(h.z());
        TensorElem px = h.tensor_one(), py = h.tensor_one();
        for (int k = 0; k < h.n(); ++k) {
            px = h.tensor_multiply(px, dx);
            py = h.tensor_multiply(py, dy);
        }
        if (px != h.tensor_one()) return "Delta(x)^n != 1(x)1";
        if (py != h.tensor_one()) return "Delta(y)^n != 1(x)1";
        if (h.tensor_multiply(dx, dy) != h.tensor_multiply(dy, dx)) return "Delta(x)Delta(y) != Delta(y)Delta(x)";
        if (h.tensor_multiply(dz, dx) != h.tensor_multiply(dy, dz)) return "Delta(z)Delta(x) != Delta(y)Delta(z)";
        if (h.tensor_multiply(dz, dy) != h.tensor_multiply(dx, dz)) return "Delta(z)Delta(y) != Delta(x)Delta(z)";
        if (h.tensor_multiply(dz, dz) != h.coproduct(h.z_square())) return "Delta(z)^2 != Delta(z^2)";
        return std::nullopt;
    });

    // Delta(g b) = Delta(g) Delta(b) for generators g and every basis b.
    run_check(report, "coproduct.homomorphism", [&]() -> Witness {
        if (h.coproduct(h.one()) != h.tensor_one()) return "Delta(1) != 1(x)1";
        for (int g = 0; g < 3; ++g) {
            const TensorElem dg = h.coproduct(gens[g]);
            for (std::uint32_t b = 0; b < dim; ++b)
                if (h.coproduct(h.multiply(gens[g], h.basis(b))) != h.tensor_multiply(dg, h.coproduct(h.basis(b))))
                    return std::string(gen_names[g]) + " * " + h.word_string(b);
        }
        return std::nullopt;
    });

    run_check(report, "counit.homomorphism", [&]() -> Witness {
        if (!h.counit(h.one()).is_one()) return "epsilon(1) != 1";
        for (int g = 0; g < 3; ++g)
            for (std::uint32_t b = 0; b < dim; ++b)
                if (h.counit(h.multiply(gens[g], h.basis(b))) != h.counit(gens[g]) * h.counit(h.basis(b)))
                    return std::string(gen_names[g]) + " * " + h.word_string(b);
        return std::nullopt;
    });

    run_check(report, "antipode.left", [&]() -> Witness {
        for (std::uint32_t b = 0; b < dim; ++b)
            if (antipode_contract(h, h.coproduct(h.basis(b)), true) != h.scalar(h.counit(h.basis(b))))
                return h.word_string(b);
        return std::nullopt;
    });

    run_check(report, "antipode.right", [&]() -> Witness {
        for (std::uint32_t b = 0; b < dim; ++b)
            if (antipode_contract(h, h.coproduct(h.basis(b)), false) != h.scalar(h.counit(h.basis(b))))
                return h.word_string(b);
        return std::nullopt;
    });

    return report;
}

VerificationReport verify_hopf_axioms(int n) { return verify_hopf_axioms(HopfAlgebra(n)); }

VerificationReport verify_integral(const HopfAlgebra& h) {
    VerificationReport report("integral", h.n());
    const auto dim = static_cast<std::uint32_t>(h.dim());
    const AlgElem lambda = h.integral();
    run_check(report, "integral.left", [&]() -> Witness {
        for (std::uint32_t b = 0; b < dim; ++b)
            if (h.multiply(h.basis(b), lambda) != h.counit(h.basis(b)) * lambda) return h.word_string(b);
        return std::nullopt;
    });
    run_check(report, "integral.right", [&]() -> Witness {
        for (std::uint32_t b = 0; b < dim; ++b)
            if (h.multiply(lambda, h.basis(b)) != h.counit(h.basis(b)) * lambda) return h.word_string(b);
        return std::nullopt;
    });
    run_check(report, "integral.counit", [&]() -> Witness {
        const CycNum e = h.counit(lambda);
        if (e != CycNum(h.field(), mpq_class(static_cast<long>(h.dim())))) return "epsilon(Lambda) = " + e.to_string();
        return std::nullopt;
    });
    return report;
}

VerificationReport verify_integral(int n) { return verify_integral(HopfAlgebra(n)); }

VerificationReport verify_quasitriangular(const HopfAlgebra& h, const TensorElem& r, const TensorElem& j) {
    VerificationReport report("quasitriangular", h.n());
    const AlgElem gens[3] = {h.x(), h.y(), h.z()};
    const char* gen_names[3] = {"x", "y", "z"};

    run_check(report, "quasitriangular.inverse", [&]() -> Witness {
        if (h.tensor_multiply(j, r) != h.tensor_one()) return "J R != 1(x)1";
        if (h.tensor_multiply(r, j) != h.tensor_one()) return "R J != 1(x)1";
        return std::nullopt;
    });
    run_check(report, "quasitriangular.conjugation", [&]() -> Witness {
        for (int g = 0; g < 3; ++g) {
            const TensorElem d = h.coproduct(gens[g]);
            if (h.flip(d) != h.tensor_multiply(h.tensor_multiply(r, d), j)) return std::string(gen_names[g]);
        }
        return std::nullopt;
    });
    run_check(report, "quasitriangular.delta_left", [&]() -> Witness {
        if (h.coproduct_left(r) != h.tensor3_multiply(h.embed13(r), h.embed23(r)))
            return "(Delta (x) id)(R) != R13 R23";
        return std::nullopt;
    });
    run_check(report, "quasitriangular.delta_right", [&]() -> Witness {
        if (h.coproduct_right(r) != h.tensor3_multiply(h.embed13(r), h.embed12(r)))
            return "(id (x) Delta)(R) != R13 R12";
        return std::nullopt;
    });
    return report;
}

VerificationReport verify_quasitriangular(int n) {
    const HopfAlgebra h(n);
    return verify_quasitriangular(h, h.r_matrix(), h.j_element());
}

VerificationReport verify_hopf_suite(int n) {
    const HopfAlgebra h(n);
    VerificationReport report("hopf", n);
    for (const auto& part : {verify_hopf_axioms(h), verify_integral(h), verify_quasitriangular(h, h.r_matrix(), h.j_element())})
        for (const auto& c : part.checks()) report.add(c.axiom, c.pass, c.witness);
    return report;
}

}  // namespace hfl
