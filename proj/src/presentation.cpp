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

#include "hfl/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <exception>
#include <sstream>

#include "hfl/error.hpp"
#include "hfl/fusion.hpp"
#include "hfl/matrix.hpp"

namespace hfl {

// ---------------------------------------------------------------------------
// IntPoly

IntPoly::IntPoly(long c) {
    if (c != 0) terms_[{0, 0, 0}] = c;
}

IntPoly IntPoly::monomial(unsigned x, unsigned y, unsigned z, const mpz_class& c) {
    IntPoly p;
    p.add_term({x, y, z}, c);
    return p;
}

bool IntPoly::uses_x() const {
    return std::any_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first[0] > 0; });
}

mpz_class IntPoly::coeff(const Exponents& e) const {
    const auto it = terms_.find(e);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

void IntPoly::add_term(const Exponents& e, const mpz_class& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, 0);
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    IntPoly out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            out.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
    return out;
}

IntPoly operator*(const mpz_class& s, const IntPoly& a) {
    IntPoly out;
    for (const auto& [e, c] : a.terms_) out.add_term(e, s * c);
    return out;
}

IntPoly IntPoly::pow(unsigned e) const {
    IntPoly r(1);
    for (unsigned k = 0; k < e; ++k) r = r * *this;
    return r;
}

std::string IntPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Exponents, mpz_class>> sorted(terms_.begin(), terms_.end());
    std::sort(sorted.begin(), sorted.end(), [](const auto& p, const auto& q) {
        const Exponents& a = p.first;
        const Exponents& b = q.first;
        const unsigned da = a[0] + a[1] + a[2], db = b[0] + b[1] + b[2];
        if (da != db) return da > db;
        if (a[2] != b[2]) return a[2] > b[2];
        if (a[1] != b[1]) return a[1] > b[1];
        return a[0] > b[0];
    });
    std::string out;
    for (const auto& [e, c] : sorted) {
        if (out.empty())
            out += sgn(c) < 0 ? "-" : "";
        else
            out += sgn(c) < 0 ? " - " : " + ";
        std::string mono;
        const char names[3] = {'z', 'y', 'x'};
        const unsigned pw[3] = {e[2], e[1], e[0]};
        for (int v = 0; v < 3; ++v) {
            if (pw[v] == 0) continue;
            mono += names[v];
            if (pw[v] > 1) mono += "^" + std::to_string(pw[v]);
        }
        const mpz_class mag = abs(c);
        if (mono.empty())
            out += mag.get_str();
        else
            out += (mag == 1 ? std::string() : mag.get_str()) + mono;
    }
    return out;
}

IntPoly IntPoly::parse(const std::string& text) {
    IntPoly out;
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto read_uint = [&]() -> mpz_class {
        const std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        return mpz_class(text.substr(start, pos - start));
    };
    auto fail = [&](const std::string& why) {
        throw UsageError("cannot parse polynomial '" + text + "' at offset " + std::to_string(pos) + ": " + why);
    };
    skip();
    if (pos == text.size()) fail("empty input");
    bool first = true;
    while (true) {
        skip();
        if (pos == text.size()) break;
        int sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            sign = text[pos] == '-' ? -1 : 1;
            ++pos;
            skip();
        } else if (!first) {
            fail("expected '+' or '-'");
        }
        first = false;
        mpz_class coeff = 1;
        bool have_factor = false;
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            coeff = read_uint();
            have_factor = true;
        }
        Exponents e{0, 0, 0};
        while (true) {
            skip();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                skip();
            }
            if (pos >= text.size()) break;
            const char v = text[pos];
            if (v != 'x' && v != 'y' && v != 'z') break;
            ++pos;
            unsigned power = 1;
            skip();
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                skip();
                if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) fail("expected exponent");
                power = static_cast<unsigned>(read_uint().get_ui());
            }
            e[v == 'x' ? 0 : v == 'y' ? 1 : 2] += power;
            have_factor = true;
        }
        if (!have_factor) fail("expected a term");
        out.add_term(e, sign * coeff);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Fibonacci polynomials and binomial sums

mpz_class binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    std::vector<mpz_class> row{1};
    for (long r = 1; r <= n; ++r) {
        std::vector<mpz_class> next(static_cast<std::size_t>(r + 1));
        next[0] = 1;
        next[static_cast<std::size_t>(r)] = 1;
        for (long c = 1; c < r; ++c)
            next[static_cast<std::size_t>(c)] = row[static_cast<std::size_t>(c - 1)] + row[static_cast<std::size_t>(c)];
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(k)];
}

IntPoly fibonacci_poly(long t) {
    require(t >= 0, "Fibonacci polynomial index must be nonnegative, got " + std::to_string(t));
    IntPoly prev(0), cur(1);
    if (t == 0) return prev;
    for (long k = 1; k < t; ++k) {
        IntPoly next = IntPoly::z() * cur - IntPoly::y() * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

IntPoly fibonacci_closed_form(long t) {
    require(t >= 1, "closed form needs t >= 1");
    IntPoly out;
    for (long i = 0; i <= (t - 1) / 2; ++i) {
        const mpz_class c = (i % 2 == 0 ? 1 : -1) * binomial(t - 1 - i, i);
        out.add_term({0, static_cast<unsigned>(i), static_cast<unsigned>(t - 1 - 2 * i)}, c);
    }
    return out;
}

namespace {

// sum_{i=lo}^{hi} (-1)^i C(top - i, i) y^{shift + i} z^{zdeg - 2i}
IntPoly binomial_sum(long lo, long hi, long top, long shift, long zdeg) {
    IntPoly out;
    for (long i = lo; i <= hi; ++i) {
        const mpz_class c = (i % 2 == 0 ? 1 : -1) * binomial(top - i, i);
        out.add_term({0, static_cast<unsigned>(shift + i), static_cast<unsigned>(zdeg - 2 * i)}, c);
    }
    return out;
}

IntPoly y_pow(long k) { return IntPoly::monomial(0, static_cast<unsigned>(k), 0); }
IntPoly z_pow(long k) { return IntPoly::monomial(0, 0, static_cast<unsigned>(k)); }

}  // namespace

IntPoly normalize_relation(int n, const IntPoly& p) {
    IntPoly out;
    const auto nn = static_cast<unsigned>(n);
    for (const auto& [e, c] : p.terms()) {
        unsigned xe = e[0], ye = e[1];
        const unsigned ze = e[2];
        if (n % 2 == 1) {
            ye %= ze > 0 ? nn : 2 * nn;
        } else if (ze > 0) {
            ye = (ye + xe) % nn;
            xe = 0;
        } else {
            ye += xe - xe % 2;
            xe %= 2;
        }
        out.add_term({xe, ye, ze}, c);
    }
    return out;
}

IntPoly s0_expansion(int n, int m) {
    require(n >= 3 && m >= 0 && m <= n - 3,
            "s0_expansion needs 0 <= m <= n - 3, got n=" + std::to_string(n) + " m=" + std::to_string(m));
    IntPoly p = binomial_sum(0, (m + 2) / 2, m + 2, 0, m + 2);
    const IntPoly tail = binomial_sum(0, m / 2, m, 0, m);
    if (n % 2 == 1)
        p -= y_pow(n + 1) * tail;
    else
        p -= IntPoly::x() * tail;
    return normalize_relation(n, p);
}

FusionVector eval_in_fusion(const IntPoly& p, int n) {
    if (n % 2 == 1 && p.uses_x())
        throw UsageError("x is not a generator for odd n=" + std::to_string(n) + ": " + p.to_string());
    const FusionVector gens[3] = {FusionVector::unit(SimpleLabel::one_dim(n, 1)),
                                  FusionVector::unit(SimpleLabel::one_dim(n, n + 1)),
                                  FusionVector::unit(SimpleLabel::two_dim(n, 0, 1))};
    std::vector<FusionVector> powers[3];
    auto power = [&](int v, unsigned e) -> const FusionVector& {
        auto& cache = powers[v];
        if (cache.empty()) cache.push_back(ring_one(n));
        while (cache.size() <= e) cache.push_back(ring_mul(cache.back(), gens[v]));
        return cache[e];
    };
    FusionVector out(n);
    for (const auto& [e, c] : p.terms())
        out += c * ring_mul(ring_mul(power(0, e[0]), power(1, e[1])), power(2, e[2]));
    return out;
}

std::vector<IntPoly> assembled_relations(int n) {
    require(n >= 2, "algebra parameter n must be at least 2");
    const IntPoly x = IntPoly::x(), y = IntPoly::y(), z = IntPoly::z();
    if (n == 2) return {y.pow(2) - IntPoly(1), x.pow(2) - y.pow(2), z * x - z * y, z - z * y,
                        z.pow(2) - x - y - x * y - IntPoly(1)};
    if (n % 2 == 1) {
        const long m = (n - 1) / 2;
        IntPoly r = z_pow(m + 1) - z_pow(m) * y_pow(m + 1);
        r += binomial_sum(1, (m + 1) / 2, m + 1, 0, m + 1);
        r -= binomial_sum(1, m / 2, m, m + 1, m);
        r -= y_pow(n + 1) * fibonacci_poly(m);
        r += y_pow(m + n + 2) * fibonacci_poly(m - 1);
        return {y.pow(static_cast<unsigned>(2 * n)) - IntPoly(1), z * y.pow(static_cast<unsigned>(n)) - z, r};
    }
    const long m = n / 2;
    IntPoly r1 = z_pow(m) - z_pow(m) * y_pow(m);
    r1 += binomial_sum(1, m / 2, m, 0, m);
    r1 -= binomial_sum(1, m / 2, m, m, m);
    r1 -= x * fibonacci_poly(m - 1);
    r1 += x * y_pow(m) * fibonacci_poly(m - 1);
    IntPoly r2 = z_pow(m + 1) - z_pow(m - 1) * y_pow(m + 1);
    r2 += binomial_sum(1, (m + 1) / 2, m + 1, 0, m + 1);
    r2 -= binomial_sum(1, (m - 1) / 2, m - 1, m + 1, m - 1);
    r2 -= x * fibonacci_poly(m);
    r2 += x * y_pow(m + 1) * fibonacci_poly(m - 2);
    return {x.pow(static_cast<unsigned>(n)) - IntPoly(1), x.pow(2) - y.pow(2), z * x - z * y, r1, r2};
}

std::vector<IntPoly> presentation_relations(int n) {
    std::vector<IntPoly> rel = assembled_relations(n);
    if (n == 2) return rel;
    const std::size_t binomials = n % 2 == 1 ? 2 : 3;
    for (std::size_t k = binomials; k < rel.size(); ++k) rel[k] = normalize_relation(n, rel[k]);
    if (n % 2 == 0) rel[0] = y_pow(n) - IntPoly(1);
    return rel;
}

std::vector<IntPoly> basis_monomials(int n) {
    std::vector<IntPoly> out;
    const auto nn = static_cast<unsigned>(n);
    if (n % 2 == 1) {
        for (unsigned k = 0; k < 2 * nn; ++k) out.push_back(IntPoly::monomial(0, k, 0));
        for (unsigned i = 1; i <= (nn - 1) / 2; ++i)
            for (unsigned j = 0; j < nn; ++j) out.push_back(IntPoly::monomial(0, j, i));
        return out;
    }
    for (unsigned i = 0; i < nn; ++i)
        for (unsigned j = 0; j < 2; ++j) out.push_back(IntPoly::monomial(i, j, 0));
    for (unsigned i = 1; i < nn / 2; ++i)
        for (unsigned j = 0; j < nn; ++j) out.push_back(IntPoly::monomial(0, j, i));
    for (unsigned j = 0; j < nn / 2; ++j) out.push_back(IntPoly::monomial(0, j, nn / 2));
    return out;
}

std::vector<std::vector<mpz_class>> basis_matrix(int n) {
    const std::vector<SimpleLabel> simples = all_simples(n);
    std::vector<std::vector<mpz_class>> rows;
    for (const IntPoly& mono : basis_monomials(n)) {
        const FusionVector v = eval_in_fusion(mono, n);
        std::vector<mpz_class> row(simples.size(), 0);
        for (const auto& [s, c] : v.coeffs()) row[s.index()] = c;
        rows.push_back(std::move(row));
    }
    return rows;
}

mpz_class basis_determinant(int n) {
    const auto rows = basis_matrix(n);
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    if (rows.size() != cols) return 0;
    Matrix<mpz_class> m(rows.size(), cols, mpz_class(0));
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    return bareiss_determinant(m, mpz_class(1));
}

VerificationReport verify_presentation(int n) {
    VerificationReport report("presentation", n);
    auto guarded = [&](const std::string& axiom, auto&& body) {
        try {
            const std::optional<std::string> w = body();
            report.add(axiom, !w, w);
        } catch (const std::exception& ex) {
            report.add(axiom, false, std::string("exception: ") + ex.what());
        }
    };
    auto vanish = [&](const std::vector<IntPoly>& rel) -> std::optional<std::string> {
        for (const IntPoly& p : rel) {
            const FusionVector v = eval_in_fusion(p, n);
            if (!v.is_zero()) return p.to_string() + " evaluates to " + v.to_string();
        }
        return std::nullopt;
    };

    guarded("fibonacci_closed_form", [&]() -> std::optional<std::string> {
        for (long t = 2; t <= 30; ++t)
            if (fibonacci_poly(t) != fibonacci_closed_form(t)) return "t = " + std::to_string(t);
        return std::nullopt;
    });

    const std::vector<IntPoly> literal = assembled_relations(n);
    const std::vector<IntPoly> normalized = presentation_relations(n);
    guarded("assembled_generators_vanish", [&] { return vanish(literal); });
    guarded("normalized_generators_vanish", [&] { return vanish(normalized); });

    guarded("s0_expansion", [&]() -> std::optional<std::string> {
        for (int m = 0; m + 3 <= n; ++m) {
            const FusionVector v = eval_in_fusion(s0_expansion(n, m), n);
            const SimpleLabel want = SimpleLabel::two_dim(n, 0, m + 2);
            if (v != FusionVector::unit(want)) return "m = " + std::to_string(m) + " gives " + v.to_string();
        }
        return std::nullopt;
    });

    guarded("shift_identity", [&]() -> std::optional<std::string> {
        for (int j = 0; j < n; ++j) {
            const FusionVector v = eval_in_fusion(IntPoly::z() * y_pow(j), n);
            if (v != FusionVector::unit(SimpleLabel::two_dim(n, j, j + 1)))
                return "z y^" + std::to_string(j) + " gives " + v.to_string();
        }
        return std::nullopt;
    });

    if (n % 2 == 1 && n >= 3) {
        guarded("fibonacci_shift_identity", [&]() -> std::optional<std::string> {
            const long m = (n - 1) / 2;
            const IntPoly lhs = fibonacci_poly(m + 2) - y_pow(n + 1) * fibonacci_poly(m);
            const IntPoly rhs = y_pow(m + 1) * fibonacci_poly(m + 1) - y_pow(m + n + 2) * fibonacci_poly(m - 1);
            const FusionVector diff = eval_in_fusion(lhs - rhs, n);
            if (!diff.is_zero()) return "difference evaluates to " + diff.to_string();
            return std::nullopt;
        });
        // The variant with both lower-order signs flipped is not [S_{0,2}].
        const IntPoly flipped = z_pow(2) + y_pow(n + 1) + IntPoly::y();
        const FusionVector fv = eval_in_fusion(flipped, n);
        const FusionVector s02 = FusionVector::unit(SimpleLabel::two_dim(n, 0, 2));
        if (n >= 3 && fv != s02)
            report.note("c^2 + b^(n+1) + b evaluates to " + fv.to_string() + ", not [S_{0,2}]; c^2 - b^(n+1) - b gives [S_{0,2}]");
    }

    guarded("z_basis_determinant", [&]() -> std::optional<std::string> {
        const auto rows = basis_matrix(n);
        const mpz_class det = basis_determinant(n);
        report.data()["basis_size"] = rows.size();
        report.data()["basis_determinant"] = det.get_si();
        if (rows.size() != simple_count(n))
            return std::to_string(rows.size()) + " monomials for " + std::to_string(simple_count(n)) + " simples";
        if (abs(det) != 1) return "determinant " + det.get_str();
        return std::nullopt;
    });

    Json lit = Json::array(), norm = Json::array(), basis = Json::array();
    for (const auto& p : literal) lit.push_back(p.to_string());
    for (const auto& p : normalized) norm.push_back(p.to_string());
    for (const auto& p : basis_monomials(n)) basis.push_back(p.to_string());
    report.data()["generators"] = std::move(norm);
    report.data()["assembled_generators"] = std::move(lit);
    report.data()["basis_monomials"] = std::move(basis);
    return report;
}

}  // namespace hfl
