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

#ifndef CSELAB_POLYNOMIAL_HPP
#define CSELAB_POLYNOMIAL_HPP

#include <compare>
#include <complex>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cselab/gaussian_rational.hpp"

namespace cselab {

/// Dense univariate polynomial over Q(i), ascending coefficients, no trailing zeros.
class UnivariatePoly {
   public:
    UnivariatePoly() = default;
    explicit UnivariatePoly(std::vector<GaussianRational> ascending);
    UnivariatePoly(std::initializer_list<GaussianRational> ascending)
        : UnivariatePoly(std::vector<GaussianRational>(ascending)) {}

    static UnivariatePoly constant(const GaussianRational& c) { return UnivariatePoly({c}); }
    static UnivariatePoly monomial(const GaussianRational& c, unsigned degree);
    /// (z - root)^power
    static UnivariatePoly linear_power(const GaussianRational& root, unsigned power);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<GaussianRational>& coefficients() const noexcept { return coeffs_; }
    GaussianRational coeff(unsigned i) const { return i < coeffs_.size() ? coeffs_[i] : GaussianRational(); }
    const GaussianRational& leading() const { return coeffs_.back(); }

    UnivariatePoly& operator+=(const UnivariatePoly& o);
    UnivariatePoly& operator-=(const UnivariatePoly& o);
    friend UnivariatePoly operator+(UnivariatePoly a, const UnivariatePoly& b) { return a += b; }
    friend UnivariatePoly operator-(UnivariatePoly a, const UnivariatePoly& b) { return a -= b; }
    friend UnivariatePoly operator*(const UnivariatePoly& a, const UnivariatePoly& b);
    friend UnivariatePoly operator*(const GaussianRational& c, const UnivariatePoly& p);
    UnivariatePoly operator-() const;
    friend bool operator==(const UnivariatePoly& a, const UnivariatePoly& b) { return a.coeffs_ == b.coeffs_; }

    UnivariatePoly derivative() const;
    GaussianRational evaluate(const GaussianRational& z) const;

    template <typename Real>
    std::complex<Real> evaluate(const std::complex<Real>& z) const;

    /// Synthetic division by (z - root): quotient and remainder P(root).
    std::pair<UnivariatePoly, GaussianRational> divide_linear(const GaussianRational& root) const;
    /// Euclidean division; throws on a zero divisor.
    std::pair<UnivariatePoly, UnivariatePoly> divmod(const UnivariatePoly& divisor) const;
    UnivariatePoly monic() const;

    /// Order of vanishing at `point`; std::nullopt when the polynomial is identically zero.
    std::optional<unsigned> vanishing_order(const GaussianRational& point) const;
    /// True iff (z - root)^power divides the polynomial exactly.
    bool divides_power(const GaussianRational& root, unsigned power) const;

    /// P(a*z)
    UnivariatePoly scale_argument(const GaussianRational& a) const;
    /// z^{length-1} * P(1/z) with the coefficient vector padded to `length` entries.
    UnivariatePoly reversed(unsigned length) const;

    std::vector<std::complex<long double>> to_complex_ld() const;
    std::string to_string(char variable = 'z') const;

   private:
    void trim();
    std::vector<GaussianRational> coeffs_;
};

UnivariatePoly gcd(const UnivariatePoly& a, const UnivariatePoly& b);

/// Yun's algorithm: returns factors g_1, g_2, ... with P = lc * prod g_i^i, each g_i monic squarefree.
std::vector<UnivariatePoly> square_free_decomposition(const UnivariatePoly& p);

struct Exponents {
    unsigned m = 0;  // power of x
    unsigned n = 0;  // power of y
    friend auto operator<=>(const Exponents&, const Exponents&) = default;
};

/// Sparse polynomial in x, y over Q(i). Keys are ordered lexicographically (m, then n).
class BivariatePoly {
   public:
    using Terms = std::map<Exponents, GaussianRational>;

    BivariatePoly() = default;
    explicit BivariatePoly(Terms terms);

    static BivariatePoly constant(const GaussianRational& c);
    static BivariatePoly monomial(const GaussianRational& c, unsigned m, unsigned n);
    static BivariatePoly x() { return monomial(1, 1, 0); }
    static BivariatePoly y() { return monomial(1, 0, 1); }

    bool is_zero() const noexcept { return terms_.empty(); }
    const Terms& terms() const noexcept { return terms_; }
    GaussianRational coeff(unsigned m, unsigned n) const;
    GaussianRational constant_term() const { return coeff(0, 0); }
    bool is_constant() const;
    unsigned total_degree() const;

    BivariatePoly& operator+=(const BivariatePoly& o);
    BivariatePoly& operator-=(const BivariatePoly& o);
    friend BivariatePoly operator+(BivariatePoly a, const BivariatePoly& b) { return a += b; }
    friend BivariatePoly operator-(BivariatePoly a, const BivariatePoly& b) { return a -= b; }
    friend BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b);
    friend BivariatePoly operator*(const GaussianRational& c, const BivariatePoly& p);
    BivariatePoly operator-() const;
    BivariatePoly pow(unsigned exponent) const;
    friend bool operator==(const BivariatePoly& a, const BivariatePoly& b) { return a.terms_ == b.terms_; }

    BivariatePoly derivative_x() const;
    BivariatePoly derivative_y() const;

    GaussianRational evaluate(const GaussianRational& x, const GaussianRational& y) const;
    template <typename Real>
    std::complex<Real> evaluate(const std::complex<Real>& x, const std::complex<Real>& y) const;

    /// F(x, 0) as a polynomial in x.
    UnivariatePoly restrict_to_x_axis() const;
    /// F(0, y) as a polynomial in y.
    UnivariatePoly restrict_to_y_axis() const;
    BivariatePoly swap_variables() const;

    std::string to_string() const;

   private:
    void add_term(const Exponents& e, const GaussianRational& c);
    Terms terms_;
};

template <typename Real>
std::complex<Real> UnivariatePoly::evaluate(const std::complex<Real>& z) const {
    std::complex<Real> acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        const auto c = it->to_complex_ld();
        acc = acc * z + std::complex<Real>(static_cast<Real>(c.real()), static_cast<Real>(c.imag()));
    }
    return acc;
}

template <typename Real>
std::complex<Real> BivariatePoly::evaluate(const std::complex<Real>& x, const std::complex<Real>& y) const {
    std::complex<Real> acc(0);
    for (const auto& [e, c] : terms_) {
        const auto cz = c.to_complex_ld();
        std::complex<Real> term(static_cast<Real>(cz.real()), static_cast<Real>(cz.imag()));
        for (unsigned i = 0; i < e.m; ++i) term *= x;
        for (unsigned i = 0; i < e.n; ++i) term *= y;
        acc += term;
    }
    return acc;
}

}  // namespace cselab

#endif
