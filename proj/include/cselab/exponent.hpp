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

#ifndef CSELAB_EXPONENT_HPP
#define CSELAB_EXPONENT_HPP

#include <gmpxx.h>

#include <compare>
#include <string>

namespace cselab {

/// A complex singularity exponent: a nonnegative rational or +infinity.
///
/// +infinity means the function does not vanish at the point; 0 means the
/// function vanishes identically on the component.
class Exponent {
   public:
    static Exponent infinity() { return Exponent(true, 0); }
    static Exponent zero() { return Exponent(false, 0); }
    static Exponent of(const mpq_class& value);
    /// 1/order, with order 0 meaning a non-vanishing function (+infinity).
    static Exponent reciprocal_of_order(unsigned order);

    bool is_infinite() const noexcept { return infinite_; }
    bool is_zero() const { return !infinite_ && sgn(value_) == 0; }
    /// Finite value; only meaningful when !is_infinite().
    const mpq_class& value() const noexcept { return value_; }
    double to_double() const;

    friend bool operator==(const Exponent& a, const Exponent& b) {
        return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
    }
    friend std::strong_ordering operator<=>(const Exponent& a, const Exponent& b);

    /// "1/3", "0", "inf".
    std::string to_string() const;

   private:
    Exponent(bool infinite, const mpq_class& value) : infinite_(infinite), value_(value) {}
    bool infinite_;
    mpq_class value_;
};

}  // namespace cselab

#endif
