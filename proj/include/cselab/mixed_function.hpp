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

#ifndef CSELAB_MIXED_FUNCTION_HPP
#define CSELAB_MIXED_FUNCTION_HPP

#include <cmath>
#include <complex>
#include <optional>
#include <string>

#include "cselab/polynomial.hpp"

namespace cselab {

/// F(x, y) = holo(x, y) + radial_coeff * |x y|^(radial_half_exp / 2).
///
/// The radial term is restricted to odd half-exponents. On a fiber x y = t it
/// is the constant radial_coeff * |t|^(nu/2), so fiber restrictions stay exact
/// whenever sqrt(|t|) is rational. A zero radial coefficient means F is
/// holomorphic, and then radial_half_exp is normalized to 0.
class MixedFunction {
   public:
    MixedFunction() = default;
    MixedFunction(BivariatePoly holo) : holo_(std::move(holo)) {}  // NOLINT: every polynomial is a MixedFunction
    MixedFunction(BivariatePoly holo, GaussianRational radial_coeff, unsigned radial_half_exp);

    const BivariatePoly& holo() const noexcept { return holo_; }
    const GaussianRational& radial_coeff() const noexcept { return radial_coeff_; }
    unsigned radial_half_exp() const noexcept { return radial_half_exp_; }
    bool is_holomorphic() const { return radial_coeff_.is_zero(); }
    bool is_zero() const { return holo_.is_zero() && is_holomorphic(); }

    friend bool operator==(const MixedFunction&, const MixedFunction&) = default;

    /// Exact value; throws if |xy|^(nu/2) is not rational at the point.
    GaussianRational evaluate(const GaussianRational& x, const GaussianRational& y) const;

    template <typename Real>
    std::complex<Real> evaluate(const std::complex<Real>& x, const std::complex<Real>& y) const {
        std::complex<Real> value = holo_.evaluate(x, y);
        if (!is_holomorphic()) {
            const auto c = radial_coeff_.to_complex_ld();
            const Real modulus = std::abs(x * y);
            const Real radial = std::pow(modulus, static_cast<Real>(radial_half_exp_) / Real(2));
            value += std::complex<Real>(static_cast<Real>(c.real()), static_cast<Real>(c.imag())) * radial;
        }
        return value;
    }

    std::string to_string() const;

   private:
    BivariatePoly holo_;
    GaussianRational radial_coeff_;
    unsigned radial_half_exp_ = 0;
};

/// numerator(x) / x^pole_order: the restriction x -> F(x, t/x) to a smooth fiber.
///
/// Normal form: whenever pole_order > 0 the numerator is not divisible by x.
/// A radial term contributes a constant, which is folded into the numerator.
struct LaurentNormalForm {
    UnivariatePoly numerator;
    unsigned pole_order = 0;

    bool is_zero() const { return numerator.is_zero(); }

    template <typename Real>
    std::complex<Real> evaluate(const std::complex<Real>& x) const {
        std::complex<Real> value = numerator.evaluate(x);
        for (unsigned i = 0; i < pole_order; ++i) value /= x;
        return value;
    }
    GaussianRational evaluate(const GaussianRational& x) const;

    /// Order of vanishing at a nonzero point; nullopt when identically zero.
    std::optional<unsigned> vanishing_order(const GaussianRational& point) const;

    std::string to_string() const;
    friend bool operator==(const LaurentNormalForm&, const LaurentNormalForm&) = default;
};

/// Restriction of F to the fiber x y = t, parametrized by x.
///
/// For a non-holomorphic F the fiber parameter must be a positive real t with
/// an exact rational square root; `sqrt_t` may supply it, otherwise it is
/// computed exactly or the call fails. t = 0 is rejected: the central fiber is
/// the pair of axes, not a graph over x.
LaurentNormalForm substitute_fiber(const MixedFunction& f, const GaussianRational& t,
                                   const std::optional<GaussianRational>& sqrt_t = std::nullopt);

/// Exact sqrt(t) for t a positive rational square; throws otherwise.
GaussianRational positive_square_root(const GaussianRational& t);

}  // namespace cselab

#endif
