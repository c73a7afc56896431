/*
   Copyright 2026 The cselab Authors

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

#include "cselab/polynomial.hpp"

#include <algorithm>

#include "cselab/errors.hpp"
#include "term_format.hpp"

namespace cselab {

// ---------------------------------------------------------------------------
// UnivariatePoly

UnivariatePoly::UnivariatePoly(std::vector<GaussianRational> ascending) : coeffs_(std::move(ascending)) { trim(); }

void UnivariatePoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

UnivariatePoly UnivariatePoly::monomial(const GaussianRational& c, unsigned degree) {
    std::vector<GaussianRational> v(degree + 1);
    v[degree] = c;
    return UnivariatePoly(std::move(v));
}

UnivariatePoly UnivariatePoly::linear_power(const GaussianRational& root, unsigned power) {
    UnivariatePoly result = constant(1);
    const UnivariatePoly factor({-root, GaussianRational(1)});
    for (unsigned i = 0; i < power; ++i) result = result * factor;
    return result;
}

UnivariatePoly& UnivariatePoly::operator+=(const UnivariatePoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

UnivariatePoly& UnivariatePoly::operator-=(const UnivariatePoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

UnivariatePoly operator*(const UnivariatePoly& a, const UnivariatePoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<GaussianRational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return UnivariatePoly(std::move(out));
}

UnivariatePoly operator*(const GaussianRational& c, const UnivariatePoly& p) {
    std::vector<GaussianRational> out = p.coeffs_;
    for (auto& v : out) v *= c;
    return UnivariatePoly(std::move(out));
}

UnivariatePoly UnivariatePoly::operator-() const { return GaussianRational(-1) * *this; }

UnivariatePoly UnivariatePoly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<GaussianRational> out(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = GaussianRational(static_cast<long>(i)) * coeffs_[i];
    return UnivariatePoly(std::move(out));
}

GaussianRational UnivariatePoly::evaluate(const GaussianRational& z) const {
    GaussianRational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

std::pair<UnivariatePoly, GaussianRational> UnivariatePoly::divide_linear(const GaussianRational& root) const {
    if (coeffs_.empty()) return {UnivariatePoly(), GaussianRational()};
    std::vector<GaussianRational> q(coeffs_.size() - 1);
    GaussianRational carry;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        carry = carry * root + coeffs_[k];
        if (k > 0) q[k - 1] = carry;
    }
    return {UnivariatePoly(std::move(q)), carry};
}

std::pair<UnivariatePoly, UnivariatePoly> UnivariatePoly::divmod(const UnivariatePoly& divisor) const {
    if (divisor.is_zero()) fail(ErrorCode::InvalidArgument, "polynomial division by zero");
    std::vector<GaussianRational> rem = coeffs_;
    const int dd = divisor.degree();
    if (degree() < dd) return {UnivariatePoly(), *this};
    std::vector<GaussianRational> q(static_cast<std::size_t>(degree() - dd + 1));
    const GaussianRational& lead = divisor.leading();
    for (int k = degree(); k >= dd; --k) {
        const GaussianRational& top = rem[static_cast<std::size_t>(k)];
        if (top.is_zero()) continue;
        const GaussianRational factor = top / lead;
        q[static_cast<std::size_t>(k - dd)] = factor;
        for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k - dd + j)] -= factor * divisor.coeffs_[static_cast<std::size_t>(j)];
    }
    return {UnivariatePoly(std::move(q)), UnivariatePoly(std::move(rem))};
}

UnivariatePoly UnivariatePoly::monic() const {
    if (is_zero()) return {};
    return (GaussianRational(1) / leading()) * *this;
}

std::optional<unsigned> UnivariatePoly::vanishing_order(const GaussianRational& point) const {
    if (is_zero()) return std::nullopt;
    unsigned order = 0;
    UnivariatePoly current = *this;
    for (;;) {
        auto [quotient, remainder] = current.divide_linear(point);
        if (!remainder.is_zero()) return order;
        ++order;
        current = std::move(quotient);
    }
}

bool UnivariatePoly::divides_power(const GaussianRational& root, unsigned power) const {
    if (power == 0 || is_zero()) return true;
    const auto order = vanishing_order(root);
    return *order >= power;
}

UnivariatePoly UnivariatePoly::scale_argument(const GaussianRational& a) const {
    std::vector<GaussianRational> out = coeffs_;
    GaussianRational scale(1);
    for (auto& c : out) {
        c *= scale;
        scale *= a;
    }
    return UnivariatePoly(std::move(out));
}

UnivariatePoly UnivariatePoly::reversed(unsigned length) const {
    if (coeffs_.size() > length) fail(ErrorCode::InvalidArgument, "reversal length smaller than polynomial length");
    std::vector<GaussianRational> out(length);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[length - 1 - i] = coeffs_[i];
    return UnivariatePoly(std::move(out));
}

std::vector<std::complex<long double>> UnivariatePoly::to_complex_ld() const {
    std::vector<std::complex<long double>> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c.to_complex_ld());
    return out;
}

std::string UnivariatePoly::to_string(char variable) const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        if (coeffs_[k].is_zero()) continue;
        std::string mono;
        if (k >= 1) mono = std::string(1, variable);
        if (k >= 2) mono += "^" + std::to_string(k);
        out += detail::format_term(coeffs_[k], mono, first);
        first = false;
    }
    return out;
}

UnivariatePoly gcd(const UnivariatePoly& a, const UnivariatePoly& b) {
    UnivariatePoly x = a, y = b;
    while (!y.is_zero()) {
        UnivariatePoly r = x.divmod(y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

std::vector<UnivariatePoly> square_free_decomposition(const UnivariatePoly& p) {
    std::vector<UnivariatePoly> factors;
    if (p.degree() <= 0) return factors;
    const UnivariatePoly f = p.monic();
    const UnivariatePoly df = f.derivative();
    UnivariatePoly a = gcd(f, df);
    UnivariatePoly b = f.divmod(a).first;
    UnivariatePoly c = df.divmod(a).first;
    UnivariatePoly d = c - b.derivative();
    while (b.degree() > 0) {
        UnivariatePoly g = gcd(b, d);
        factors.push_back(g);
        b = b.divmod(g).first;
        c = d.divmod(g).first;
        d = c - b.derivative();
    }
    // Drop trailing unit factors so factors.size() equals the largest multiplicity.
    while (!factors.empty() && factors.back().degree() == 0) factors.pop_back();
    return factors;
}

// ---------------------------------------------------------------------------
// BivariatePoly

BivariatePoly::BivariatePoly(Terms terms) {
    for (auto& [e, c] : terms)
        if (!c.is_zero()) terms_.emplace(e, std::move(c));
}

BivariatePoly BivariatePoly::constant(const GaussianRational& c) { return monomial(c, 0, 0); }

BivariatePoly BivariatePoly::monomial(const GaussianRational& c, unsigned m, unsigned n) {
    BivariatePoly p;
    p.add_term({m, n}, c);
    return p;
}

void BivariatePoly::add_term(const Exponents& e, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

GaussianRational BivariatePoly::coeff(unsigned m, unsigned n) const {
    const auto it = terms_.find({m, n});
    return it == terms_.end() ? GaussianRational() : it->second;
}

bool BivariatePoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{0, 0});
}

unsigned BivariatePoly::total_degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.m + e.n);
    return d;
}

BivariatePoly& BivariatePoly::operator+=(const BivariatePoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

BivariatePoly& BivariatePoly::operator-=(const BivariatePoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b) {
    BivariatePoly out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) out.add_term({ea.m + eb.m, ea.n + eb.n}, ca * cb);
    return out;
}

BivariatePoly operator*(const GaussianRational& c, const BivariatePoly& p) {
    BivariatePoly out;
    for (const auto& [e, v] : p.terms_) out.add_term(e, c * v);
    return out;
}

BivariatePoly BivariatePoly::operator-() const { return GaussianRational(-1) * *this; }

BivariatePoly BivariatePoly::pow(unsigned exponent) const {
    BivariatePoly result = constant(1);
    for (unsigned i = 0; i < exponent; ++i) result = result * *this;
    return result;
}

BivariatePoly BivariatePoly::derivative_x() const {
    BivariatePoly out;
    for (const auto& [e, c] : terms_)
        if (e.m > 0) out.add_term({e.m - 1, e.n}, GaussianRational(static_cast<long>(e.m)) * c);
    return out;
}

BivariatePoly BivariatePoly::derivative_y() const {
    BivariatePoly out;
    for (const auto& [e, c] : terms_)
        if (e.n > 0) out.add_term({e.m, e.n - 1}, GaussianRational(static_cast<long>(e.n)) * c);
    return out;
}

GaussianRational BivariatePoly::evaluate(const GaussianRational& x, const GaussianRational& y) const {
    GaussianRational acc;
    for (const auto& [e, c] : terms_) acc += c * x.pow(e.m) * y.pow(e.n);
    return acc;
}

UnivariatePoly BivariatePoly::restrict_to_x_axis() const {
    std::vector<GaussianRational> out;
    for (const auto& [e, c] : terms_) {
        if (e.n != 0) continue;
        if (out.size() <= e.m) out.resize(e.m + 1);
        out[e.m] = c;
    }
    return UnivariatePoly(std::move(out));
}

UnivariatePoly BivariatePoly::restrict_to_y_axis() const { return swap_variables().restrict_to_x_axis(); }

BivariatePoly BivariatePoly::swap_variables() const {
    BivariatePoly out;
    for (const auto& [e, c] : terms_) out.add_term({e.n, e.m}, c);
    return out;
}

std::string BivariatePoly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string mono;
        auto append = [&mono](char var, unsigned power) {
            if (power == 0) return;
            if (!mono.empty()) mono += "*";
            mono += var;
            if (power > 1) mono += "^" + std::to_string(power);
        };
        append('x', e.m);
        append('y', e.n);
        out += detail::format_term(c, mono, first);
        first = false;
    }
    return out;
}

}  // namespace cselab
