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

#include "cselab/mixed_function.hpp"

#include <algorithm>

#include "cselab/errors.hpp"
#include "term_format.hpp"

namespace cselab {

MixedFunction::MixedFunction(BivariatePoly holo, GaussianRational radial_coeff, unsigned radial_half_exp)
    : holo_(std::move(holo)), radial_coeff_(std::move(radial_coeff)), radial_half_exp_(radial_half_exp) {
    if (radial_coeff_.is_zero()) {
        radial_half_exp_ = 0;
    } else if (radial_half_exp_ % 2 == 0) {
        fail(ErrorCode::InvalidArgument, "radial term |xy|^(nu/2) requires an odd nu, got " + std::to_string(radial_half_exp));
    }
}

GaussianRational MixedFunction::evaluate(const GaussianRational& x, const GaussianRational& y) const {
    GaussianRational value = holo_.evaluate(x, y);
    if (is_holomorphic()) return value;
    // |xy|^(nu/2) = |xy|^((nu-1)/2) * sqrt(|xy|), with |xy| = sqrt(norm(xy)).
    const auto modulus = exact_sqrt((x * y).norm());
    const auto root = modulus ? exact_sqrt(*modulus) : std::nullopt;
    if (!root)
        fail(ErrorCode::InvalidArgument, "radial term is irrational at (" + x.to_string() + ", " + y.to_string() + ")");
    const GaussianRational radial = GaussianRational(*modulus).pow((radial_half_exp_ - 1) / 2) * GaussianRational(*root);
    return value + radial_coeff_ * radial;
}

std::string MixedFunction::to_string() const {
    if (is_holomorphic()) return holo_.to_string();
    const std::string radial = "abs(x*y)^(" + std::to_string(radial_half_exp_) + "/2)";
    if (holo_.is_zero()) return detail::format_term(radial_coeff_, radial, true);
    return holo_.to_string() + detail::format_term(radial_coeff_, radial, false);
}

GaussianRational LaurentNormalForm::evaluate(const GaussianRational& x) const {
    return numerator.evaluate(x) / x.pow(pole_order);
}

std::optional<unsigned> LaurentNormalForm::vanishing_order(const GaussianRational& point) const {
    if (point.is_zero()) fail(ErrorCode::InvalidArgument, "fiber functions are evaluated away from x = 0");
    return numerator.vanishing_order(point);
}

std::string LaurentNormalForm::to_string() const {
    if (pole_order == 0) return numerator.to_string('x');
    std::string den = pole_order == 1 ? "x" : "x^" + std::to_string(pole_order);
    return "(" + numerator.to_string('x') + ")/" + den;
}

GaussianRational positive_square_root(const GaussianRational& t) {
    if (!t.is_real() || sgn(t.re()) <= 0)
        fail(ErrorCode::InvalidArgument, "non-holomorphic F needs a positive real fiber parameter t, got " + t.to_string());
    const auto root = exact_sqrt(t.re());
    if (!root)
        fail(ErrorCode::InvalidArgument,
             "non-holomorphic F needs t with an exact rational square root (t = s^2), got t = " + t.to_string());
    return GaussianRational(*root);
}

LaurentNormalForm substitute_fiber(const MixedFunction& f, const GaussianRational& t,
                                   const std::optional<GaussianRational>& sqrt_t) {
    if (t.is_zero())
        fail(ErrorCode::InvalidArgument, "t = 0 is the central fiber (the coordinate axes); use the central exponent instead");

    // F(x, t/x) = sum a_{mn} t^n x^{m-n}; multiply through by x^d with d = max(n - m).
    unsigned d = 0;
    for (const auto& [e, c] : f.holo().terms())
        if (e.n > e.m) d = std::max(d, e.n - e.m);

    std::vector<GaussianRational> num;
    auto add = [&num](unsigned power, const GaussianRational& v) {
        if (num.size() <= power) num.resize(power + 1);
        num[power] += v;
    };
    for (const auto& [e, c] : f.holo().terms()) add(e.m + d - e.n, c * t.pow(e.n));

    if (!f.is_holomorphic()) {
        GaussianRational s;
        if (sqrt_t) {
            s = *sqrt_t;
            if (!s.is_real() || sgn(s.re()) <= 0 || !(s * s == t))
                fail(ErrorCode::InvalidArgument, "supplied s is not the positive square root of t");
        } else {
            s = positive_square_root(t);
        }
        // On the fiber |xy| = t, so the radial term is the constant c * s^nu.
        add(d, f.radial_coeff() * s.pow(f.radial_half_exp()));
    }

    LaurentNormalForm out{UnivariatePoly(std::move(num)), d};
    while (out.pole_order > 0 && !out.numerator.is_zero() && out.numerator.coeff(0).is_zero()) {
        auto coeffs = out.numerator.coefficients();
        coeffs.erase(coeffs.begin());
        out.numerator = UnivariatePoly(std::move(coeffs));
        --out.pole_order;
    }
    if (out.numerator.is_zero()) out.pole_order = 0;
    return out;
}

}  // namespace cselab
