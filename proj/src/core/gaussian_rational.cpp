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

#include "cselab/gaussian_rational.hpp"

#include <cctype>
#include <cmath>

#include "cselab/errors.hpp"

namespace cselab {

GaussianRational::GaussianRational(const mpq_class& re, const mpq_class& im) : re_(re), im_(im) {
    re_.canonicalize();
    im_.canonicalize();
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ *= o.re_;
        return *this;
    }
    mpq_class re = re_ * o.re_ - im_ * o.im_;
    mpq_class im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    if (o.is_zero()) fail(ErrorCode::InvalidArgument, "division by zero in Q(i)");
    if (sgn(o.im_) == 0) {
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    const mpq_class n = o.norm();
    mpq_class re = (re_ * o.re_ + im_ * o.im_) / n;
    mpq_class im = (im_ * o.re_ - re_ * o.im_) / n;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussianRational GaussianRational::pow(unsigned exponent) const {
    GaussianRational result(1);
    GaussianRational base = *this;
    while (exponent > 0) {
        if (exponent & 1u) result *= base;
        exponent >>= 1u;
        if (exponent > 0) base *= base;
    }
    return result;
}

long double to_long_double(const mpq_class& q) {
    if (sgn(q) == 0) return 0.0L;
    // Scale numerator and denominator to 64-bit mantissas so no precision is lost to double.
    long num_exp = 0, den_exp = 0;
    mpz_class num = q.get_num(), den = q.get_den();
    const long num_bits = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2));
    const long den_bits = static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2));
    if (num_bits > 63) {
        num_exp = num_bits - 63;
        mpz_tdiv_q_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<mp_bitcnt_t>(num_exp));
    }
    if (den_bits > 63) {
        den_exp = den_bits - 63;
        mpz_tdiv_q_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(den_exp));
    }
    const long double n = static_cast<long double>(mpz_get_si(num.get_mpz_t()));
    const long double d = static_cast<long double>(mpz_get_si(den.get_mpz_t()));
    return std::ldexp(n / d, static_cast<int>(num_exp - den_exp));
}

std::complex<double> GaussianRational::to_complex() const {
    return {static_cast<double>(to_long_double(re_)), static_cast<double>(to_long_double(im_))};
}

std::complex<long double> GaussianRational::to_complex_ld() const {
    return {to_long_double(re_), to_long_double(im_)};
}

std::string rational_to_string(const mpq_class& q) { return q.get_str(); }

std::string GaussianRational::to_string() const {
    if (sgn(im_) == 0) return re_.get_str();
    std::string imag;
    if (im_ == 1)
        imag = "i";
    else if (im_ == -1)
        imag = "-i";
    else
        imag = im_.get_str() + "*i";
    if (sgn(re_) == 0) return imag;
    std::string out = "(" + re_.get_str();
    if (imag[0] == '-')
        out += imag;
    else
        out += "+" + imag;
    return out + ")";
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& value) { return os << value.to_string(); }

GaussianRational GaussianRational::parse_real(std::string_view text) {
    auto bad = [&]() -> GaussianRational {
        fail(ErrorCode::InvalidArgument, "not an exact real number: '" + std::string(text) + "'");
    };
    if (text.empty()) return bad();
    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        const GaussianRational num = parse_real(text.substr(0, slash));
        const GaussianRational den = parse_real(text.substr(slash + 1));
        if (den.is_zero()) return bad();
        return num / den;
    }
    std::size_t pos = 0;
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') {
        negative = text[pos] == '-';
        ++pos;
    }
    std::string digits;
    long frac_digits = 0;
    bool seen_point = false, seen_digit = false;
    for (; pos < text.size(); ++pos) {
        const char ch = text[pos];
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            digits += ch;
            seen_digit = true;
            if (seen_point) ++frac_digits;
        } else if (ch == '.' && !seen_point) {
            seen_point = true;
        } else {
            break;
        }
    }
    if (!seen_digit) return bad();
    long exponent = 0;
    if (pos < text.size()) {
        if (text[pos] != 'e' && text[pos] != 'E') return bad();
        ++pos;
        std::string exp_text(text.substr(pos));
        if (exp_text.empty()) return bad();
        std::size_t used = 0;
        try {
            exponent = std::stol(exp_text, &used);
        } catch (const std::exception&) {
            return bad();
        }
        if (used != exp_text.size()) return bad();
    }
    exponent -= frac_digits;
    mpz_class mantissa(digits, 10);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
    mpq_class value = exponent >= 0 ? mpq_class(mantissa * scale) : mpq_class(mantissa, scale);
    value.canonicalize();
    if (negative) value = -value;
    return GaussianRational(value);
}

std::optional<mpq_class> exact_sqrt(const mpq_class& q) {
    if (sgn(q) < 0) return std::nullopt;
    if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) return std::nullopt;
    mpz_class num, den;
    mpz_sqrt(num.get_mpz_t(), q.get_num_mpz_t());
    mpz_sqrt(den.get_mpz_t(), q.get_den_mpz_t());
    mpq_class root(num, den);
    root.canonicalize();
    return root;
}

mpq_class rational_approximation(long double value, unsigned long max_denominator) {
    // Continued-fraction convergents; stop before the denominator bound is exceeded.
    const bool negative = value < 0;
    long double x = negative ? -value : value;
    mpz_class h = 1, h_prev = 0, k = 0, k_prev = 1;
    for (int iter = 0; iter < 64; ++iter) {
        const long double a_ld = std::floor(x);
        if (a_ld > 1e18L) break;
        const mpz_class a(static_cast<unsigned long>(a_ld));
        const mpz_class h_next = a * h + h_prev;
        const mpz_class k_next = a * k + k_prev;
        if (k_next > max_denominator) break;
        h_prev = h;
        h = h_next;
        k_prev = k;
        k = k_next;
        const long double frac = x - a_ld;
        if (frac < 1e-30L) break;
        x = 1.0L / frac;
    }
    if (k == 0) return 0;
    mpq_class result(h, k);
    result.canonicalize();
    return negative ? mpq_class(-result) : result;
}

}  // namespace cselab
