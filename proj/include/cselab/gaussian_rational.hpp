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

#ifndef CSELAB_GAUSSIAN_RATIONAL_HPP
#define CSELAB_GAUSSIAN_RATIONAL_HPP

#include <gmpxx.h>

#include <complex>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace cselab {

/// Exact element a + b*i of Q(i). Both parts are kept canonical (lowest terms).
class GaussianRational {
   public:
    GaussianRational() = default;
    GaussianRational(long value) : re_(value) {}  // NOLINT: implicit by design of the numeric tower
    GaussianRational(const mpq_class& re, const mpq_class& im = 0);

    static GaussianRational imaginary_unit() { return GaussianRational(0, 1); }

    /// Parses "3", "-7/2", "0.25", "1e-4", "2.5E+3" into an exact real value.
    static GaussianRational parse_real(std::string_view text);

    const mpq_class& re() const noexcept { return re_; }
    const mpq_class& im() const noexcept { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

    GaussianRational conj() const { return GaussianRational(re_, -im_); }
    /// |a+bi|^2 = a^2 + b^2.
    mpq_class norm() const { return re_ * re_ + im_ * im_; }

    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    GaussianRational operator-() const { return GaussianRational(-re_, -im_); }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    GaussianRational pow(unsigned exponent) const;

    std::complex<double> to_complex() const;
    std::complex<long double> to_complex_ld() const;

    /// Expression-grammar form: "3/2", "-i", "3/2*i", "(1+2*i)".
    std::string to_string() const;

   private:
    mpq_class re_{0};
    mpq_class im_{0};
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& value);

long double to_long_double(const mpq_class& q);

/// Exact square root of a nonnegative rational, if it is a perfect square.
std::optional<mpq_class> exact_sqrt(const mpq_class& q);

/// Best rational approximation with denominator at most `max_denominator`.
mpq_class rational_approximation(long double value, unsigned long max_denominator);

std::string rational_to_string(const mpq_class& q);

}  // namespace cselab

#endif
