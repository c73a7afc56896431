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

#include "cselab/exponent.hpp"

#include <limits>

#include "cselab/errors.hpp"
#include "cselab/gaussian_rational.hpp"

namespace cselab {

Exponent Exponent::of(const mpq_class& value) {
    if (sgn(value) < 0) fail(ErrorCode::InvalidArgument, "singularity exponents are nonnegative");
    mpq_class v = value;
    v.canonicalize();
    return Exponent(false, v);
}

Exponent Exponent::reciprocal_of_order(unsigned order) {
    if (order == 0) return infinity();
    return Exponent(false, mpq_class(1, order));
}

double Exponent::to_double() const {
    if (infinite_) return std::numeric_limits<double>::infinity();
    return static_cast<double>(to_long_double(value_));
}

std::strong_ordering operator<=>(const Exponent& a, const Exponent& b) {
    if (a.infinite_ || b.infinite_) return static_cast<int>(a.infinite_) <=> static_cast<int>(b.infinite_);
    const int c = cmp(a.value_, b.value_);
    return c <=> 0;
}

std::string Exponent::to_string() const { return infinite_ ? "inf" : value_.get_str(); }

}  // namespace cselab
