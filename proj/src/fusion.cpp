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

#include "hfl/fusion.hpp"

#include <exception>
#include <random>
#include <sstream>

#include "hfl/error.hpp"
#include "hfl/hopf.hpp"
#include "hfl/repr.hpp"

namespace hfl {

namespace {

long floor_mod(long a, long m) {
    const long r = a % m;
    return r < 0 ? r + m : r;
}

SimpleLabel one_dim_product(int n, long m, long mp) {
    const long s = m + mp;
    const bool low = m < n, low_p = mp < n;
    if (low && low_p) return SimpleLabel::one_dim(n, floor_mod(s, n));
    if (low != low_p) {
        if (s <= 2L * n - 1) return SimpleLabel::one_dim(n, s);
        return SimpleLabel::one_dim(n, s - n);
    }
    if (s <= 3L * n - 1) return SimpleLabel::one_dim(n, floor_mod(s, 2L * n));
    return SimpleLabel::one_dim(n, floor_mod(s, 3L * n));
}

void add_pair(FusionVector& v, int n, long u, long w) { v.add(SimpleLabel::two_dim(n, u, w), 1); }
void add_one(FusionVector& v, int n, long m) { v.add(SimpleLabel::one_dim(n, m), 1); }

FusionVector two_dim_product(int n, long i, long j, long k, long l) {
    const bool in1 = floor_mod(i + k - j - l, n) == 0;
    const bool in2 = floor_mod(i + l - j - k, n) == 0;
    FusionVector v(n);
    if (!in1 && !in2) {
        add_pair(v, n, i + k, j + l);
        add_pair(v, n, i + l, j + k);
    } else if (in1 && !in2) {
        add_one(v, n, i + k);
        add_one(v, n, j + l);
        add_pair(v, n, i + l, j + k);
    } else if (!in1 && in2) {
        add_pair(v, n, i + k, j + l);
        add_one(v, n, floor_mod(i + l, n));
        add_one(v, n, floor_mod(j + k, n) + n);
    } else {
        if (n % 2 != 0) throw std::logic_error("both congruences hold for odd n");
        add_one(v, n, i + k);
        add_one(v, n, j + l);
        add_one(v, n, floor_mod(i + l, n));
        add_one(v, n, floor_mod(j + k, n) + n);
    }
    return v;
}

template <class Body>
void guarded(VerificationReport& report, const std::string& axiom, Body&& body) {
    try {
        const std::optional<std::string> w = body();
        report.add(axiom, !w, w);
    } catch (const std::exception& ex) {
        report.add(axiom, false, std::string("exception: ") + ex.what());
    }
}

std::string csv_field(const std::string& s) {
    return s.find(',') == std::string::npos ? s : "\"" + s + "\"";
}

}  // namespace

FusionVector fuse(int n, const SimpleLabel& a, const SimpleLabel& b) {
    if (a.n() != n || b.n() != n) throw UsageError("fuse: labels do not belong to n=" + std::to_string(n));
    if (a.is_one_dim() && b.is_one_dim()) return FusionVector::unit(one_dim_product(n, a.first(), b.first()));
    if (a.is_one_dim() != b.is_one_dim()) {
        const SimpleLabel& m = a.is_one_dim() ? a : b;
        const SimpleLabel& p = a.is_one_dim() ? b : a;
        return FusionVector::unit(SimpleLabel::two_dim(n, m.first() + p.first(), p.second() + m.first()));
    }
    return two_dim_product(n, a.first(), a.second(), b.first(), b.second());
}

FusionVector ring_mul(const FusionVector& u, const FusionVector& v) {
    if (u.n() != v.n()) throw UsageError("ring_mul: mismatched n");
    FusionVector out(u.n());
    for (const auto& [a, ca] : u.coeffs())
        for (const auto& [b, cb] : v.coeffs()) out += mpz_class(ca * cb) * fuse(u.n(), a, b);
    return out;
}

FusionVector ring_one(int n) { return FusionVector::unit(SimpleLabel::one_dim(n, 0)); }

FusionVector ring_pow(const FusionVector& u, unsigned e) {
    FusionVector result = ring_one(u.n());
    FusionVector base = u;
    while (e > 0) {
        if (e & 1U) result = ring_mul(result, base);
        e >>= 1U;
        if (e > 0) base = ring_mul(base, base);
    }
    return result;
}

FusionTable fusion_table(int n) {
    FusionTable t{n, all_simples(n), {}};
    for (const auto& a : t.simples) {
        std::vector<FusionVector> row;
        for (const auto& b : t.simples) row.push_back(fuse(n, a, b));
        t.table.push_back(std::move(row));
    }
    return t;
}

Json FusionTable::to_json() const {
    Json out = Json::object();
    out["schema"] = kSchema;
    out["n"] = n;
    Json labels = Json::array();
    for (const auto& s : simples) labels.push_back(s.to_string());
    out["simples"] = std::move(labels);
    Json rows = Json::array();
    for (const auto& row : table) {
        Json r = Json::array();
        for (const auto& v : row) r.push_back(v.to_json());
        rows.push_back(std::move(r));
    }
    out["table"] = std::move(rows);
    return out;
}

std::string FusionTable::to_csv() const {
    std::ostringstream os;
    os << "a,b,c,N\n";
    for (std::size_t a = 0; a < simples.size(); ++a)
        for (std::size_t b = 0; b < simples.size(); ++b)
            for (const auto& [c, mult] : table[a][b].coeffs())
                os << csv_field(simples[a].to_string()) << ',' << csv_field(simples[b].to_string()) << ','
                   << csv_field(c.to_string()) << ',' << mult.get_str() << '\n';
    return os.str();
}

std::string FusionTable::to_text() const {
    std::ostringstream os;
    os << "fusion rules n=" << n << " (" << simples.size() << " simples)\n";
    for (std::size_t a = 0; a < simples.size(); ++a)
        for (std::size_t b = 0; b < simples.size(); ++b)
            os << simples[a].to_string() << " (x) " << simples[b].to_string() << " = " << table[a][b].to_string() << '\n';
    return os.str();
}

VerificationReport verify_fusion_ring(int n) {
    VerificationReport report("ring", n);
    const FusionTable t = fusion_table(n);
    const std::size_t count = t.simples.size();
    const auto& tab = t.table;

    guarded(report, "commutativity", [&]() -> std::optional<std::string> {
        for (std::size_t a = 0; a < count; ++a)
            for (std::size_t b = a + 1; b < count; ++b)
                if (tab[a][b] != tab[b][a]) return t.simples[a].to_string() + ", " + t.simples[b].to_string();
        return std::nullopt;
    });
    guarded(report, "unit", [&]() -> std::optional<std::string> {
        for (std::size_t b = 0; b < count; ++b)
            if (tab[0][b] != FusionVector::unit(t.simples[b])) return t.simples[b].to_string();
        return std::nullopt;
    });
    guarded(report, "dimension_grading", [&]() -> std::optional<std::string> {
        for (std::size_t a = 0; a < count; ++a)
            for (std::size_t b = 0; b < count; ++b) {
                for (const auto& [c, m] : tab[a][b].coeffs())
                    if (sgn(m) < 0) return "negative multiplicity in " + t.simples[a].to_string() + " (x) " + t.simples[b].to_string();
                if (tab[a][b].dimension() != t.simples[a].dim() * t.simples[b].dim())
                    return t.simples[a].to_string() + " (x) " + t.simples[b].to_string();
            }
        return std::nullopt;
    });
    guarded(report, "duality", [&]() -> std::optional<std::string> {
        const SimpleLabel unit = t.simples[0];
        for (std::size_t a = 0; a < count; ++a) {
            int partners = 0;
            for (std::size_t b = 0; b < count; ++b) {
                const mpz_class m = tab[a][b].coeff(unit);
                if (m > 1) return t.simples[a].to_string() + " meets the unit twice with " + t.simples[b].to_string();
                partners += m == 1 ? 1 : 0;
            }
            if (partners != 1) return t.simples[a].to_string() + " has " + std::to_string(partners) + " duals";
        }
        return std::nullopt;
    });

    auto mul_row = [&](const FusionVector& u, std::size_t c) {
        FusionVector out(n);
        for (const auto& [l, m] : u.coeffs()) out += mpz_class(m) * tab[l.index()][c];
        return out;
    };
    auto triple = [&](std::size_t a, std::size_t b, std::size_t c) -> std::optional<std::string> {
        const FusionVector left = mul_row(tab[a][b], c);
        FusionVector right(n);
        for (const auto& [l, m] : tab[b][c].coeffs()) right += mpz_class(m) * tab[a][l.index()];
        if (left != right)
            return "(" + t.simples[a].to_string() + " " + t.simples[b].to_string() + ") " + t.simples[c].to_string();
        return std::nullopt;
    };
    guarded(report, "associativity", [&]() -> std::optional<std::string> {
        std::size_t checked = 0;
        if (n <= 5) {
            for (std::size_t a = 0; a < count; ++a)
                for (std::size_t b = 0; b < count; ++b)
                    for (std::size_t c = 0; c < count; ++c, ++checked)
                        if (auto w = triple(a, b, c)) return w;
            report.data()["associativity_mode"] = "exhaustive";
        } else {
            std::mt19937_64 rng(0x5eedULL + static_cast<unsigned long long>(n));
            std::uniform_int_distribution<std::size_t> pick(0, count - 1);
            for (; checked < 10000; ++checked)
                if (auto w = triple(pick(rng), pick(rng), pick(rng))) return w;
            report.data()["associativity_mode"] = "random";
        }
        report.data()["associativity_triples"] = checked;
        return std::nullopt;
    });
    report.data()["simples"] = count;
    return report;
}

VerificationReport verify_fusion_against_oracle(int n) {
    VerificationReport report("oracle", n);
    const HopfAlgebra h(n);
    const std::vector<SimpleLabel> simples = all_simples(n);
    std::vector<Rep> reps;
    for (const auto& s : simples) reps.push_back(build_simple(h, s));
    const Decomposer decomposer(h);

    Json mismatches = Json::array();
    std::size_t pairs = 0;
    guarded(report, "closed_form_matches_trace_decomposition", [&]() -> std::optional<std::string> {
        for (std::size_t a = 0; a < simples.size(); ++a)
            for (std::size_t b = 0; b < simples.size(); ++b) {
                ++pairs;
                const FusionVector closed = fuse(n, simples[a], simples[b]);
                const FusionVector oracle = decomposer.decompose(tensor_rep(h, reps[a], reps[b]));
                if (closed != oracle) {
                    Json m = Json::object();
                    m["a"] = simples[a].to_string();
                    m["b"] = simples[b].to_string();
                    m["closed_form"] = closed.to_json();
                    m["oracle"] = oracle.to_json();
                    mismatches.push_back(std::move(m));
                }
            }
        if (!mismatches.empty())
            return std::to_string(mismatches.size()) + " mismatches, first " + mismatches[0]["a"].get<std::string>() +
                   " (x) " + mismatches[0]["b"].get<std::string>();
        return std::nullopt;
    });
    report.data()["pairs"] = pairs;
    report.data()["mismatches"] = std::move(mismatches);
    return report;
}

VerificationReport verify_fusion_suite(int n) {
    VerificationReport report("fusion", n);
    report.absorb(verify_fusion_ring(n));
    report.absorb(verify_fusion_against_oracle(n));
    return report;
}

}  // namespace hfl
