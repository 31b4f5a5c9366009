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

#include "hfl/labels.hpp"

#include <regex>
#include <stdexcept>

#include "hfl/error.hpp"

namespace hfl {

namespace {

long floor_mod(long a, long m) {
    const long r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace

SimpleLabel SimpleLabel::one_dim(int n, long m) {
    require(n >= 2, "algebra parameter n must be at least 2");
    return SimpleLabel(n, Kind::OneDim, static_cast<int>(floor_mod(m, 2L * n)), 0);
}

SimpleLabel SimpleLabel::two_dim(int n, long i, long j) {
    require(n >= 2, "algebra parameter n must be at least 2");
    const auto u = static_cast<int>(floor_mod(i, n));
    const auto v = static_cast<int>(floor_mod(j, n));
    if (u == v)
        throw std::logic_error("S_{" + std::to_string(i) + "," + std::to_string(j) +
                               "} has congruent indices mod " + std::to_string(n));
    return SimpleLabel(n, Kind::TwoDim, std::min(u, v), std::max(u, v));
}

SimpleLabel SimpleLabel::parse(int n, const std::string& text) {
    static const std::regex one(R"(S_(?:\{\s*(\d+)\s*\}|(\d+)))");
    static const std::regex two(R"(S_\{\s*(\d+)\s*,\s*(\d+)\s*\})");
    std::smatch mt;
    if (std::regex_match(text, mt, two)) {
        const long i = std::stol(mt[1]), j = std::stol(mt[2]);
        if (!(i < j && j < n))
            throw UsageError("label " + text + " needs 0 <= i < j < " + std::to_string(n));
        return two_dim(n, i, j);
    }
    if (std::regex_match(text, mt, one)) {
        const long m = std::stol(mt[1].matched ? mt[1].str() : mt[2].str());
        if (m >= 2L * n) throw UsageError("label " + text + " needs 0 <= m < " + std::to_string(2 * n));
        return one_dim(n, m);
    }
    throw UsageError("cannot parse simple label '" + text + "'");
}

std::size_t SimpleLabel::index() const noexcept {
    if (is_one_dim()) return static_cast<std::size_t>(a_);
    // pairs (t, *) with t < i come first: (n-1) + (n-2) + ... + (n-i)
    const std::size_t n = static_cast<std::size_t>(n_), i = static_cast<std::size_t>(a_);
    const std::size_t before = i * (2 * n - i - 1) / 2;
    return 2 * n + before + static_cast<std::size_t>(b_ - a_ - 1);
}

std::string SimpleLabel::to_string() const {
    if (is_one_dim()) return "S_" + std::to_string(a_);
    return "S_{" + std::to_string(a_) + "," + std::to_string(b_) + "}";
}

std::vector<SimpleLabel> all_simples(int n) {
    std::vector<SimpleLabel> out;
    for (int m = 0; m < 2 * n; ++m) out.push_back(SimpleLabel::one_dim(n, m));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) out.push_back(SimpleLabel::two_dim(n, i, j));
    return out;
}

std::size_t simple_count(int n) {
    const auto m = static_cast<std::size_t>(n);
    return 2 * m + m * (m - 1) / 2;
}

FusionVector FusionVector::unit(const SimpleLabel& s) {
    FusionVector v(s.n());
    v.add(s, 1);
    return v;
}

void FusionVector::check_n(int other) const {
    if (other != n_)
        throw UsageError("fusion vectors for n=" + std::to_string(n_) + " and n=" + std::to_string(other) + " do not mix");
}

mpz_class FusionVector::coeff(const SimpleLabel& s) const {
    const auto it = coeffs_.find(s);
    return it == coeffs_.end() ? mpz_class(0) : it->second;
}

void FusionVector::add(const SimpleLabel& s, const mpz_class& c) {
    check_n(s.n());
    if (sgn(c) == 0) return;
    auto [it, inserted] = coeffs_.try_emplace(s, 0);
    it->second += c;
    if (sgn(it->second) == 0) coeffs_.erase(it);
}

mpz_class FusionVector::dimension() const {
    mpz_class d = 0;
    for (const auto& [s, c] : coeffs_) d += c * s.dim();
    return d;
}

FusionVector& FusionVector::operator+=(const FusionVector& rhs) {
    check_n(rhs.n_);
    for (const auto& [s, c] : rhs.coeffs_) add(s, c);
    return *this;
}

FusionVector& FusionVector::operator-=(const FusionVector& rhs) {
    check_n(rhs.n_);
    for (const auto& [s, c] : rhs.coeffs_) add(s, -c);
    return *this;
}

FusionVector operator*(const mpz_class& s, const FusionVector& v) {
    FusionVector out(v.n_);
    for (const auto& [l, c] : v.coeffs_) out.add(l, s * c);
    return out;
}

std::string FusionVector::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (const auto& [s, c] : coeffs_) {
        if (out.empty()) {
            if (sgn(c) < 0) out += "-";
        } else {
            out += sgn(c) < 0 ? " - " : " + ";
        }
        const mpz_class mag = abs(c);
        if (mag != 1) out += mag.get_str() + "*";
        out += s.to_string();
    }
    return out;
}

Json FusionVector::to_json() const {
    Json out = Json::object();
    for (const auto& [s, c] : coeffs_) {
        if (c.fits_slong_p())
            out[s.to_string()] = c.get_si();
        else
            out[s.to_string()] = c.get_str();
    }
    return out;
}

}  // namespace hfl
