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

#ifndef CSELAB_SRC_TERM_FORMAT_HPP
#define CSELAB_SRC_TERM_FORMAT_HPP

#include <string>

#include "cselab/gaussian_rational.hpp"

namespace cselab::detail {

// Formats one summand "c*mono" with the joining sign; output re-parses to the same term.
inline std::string format_term(const GaussianRational& c, const std::string& mono, bool first) {
    const bool negative = c.is_real() ? sgn(c.re()) < 0 : (sgn(c.re()) == 0 && sgn(c.im()) < 0);
    const GaussianRational magnitude = negative ? -c : c;
    std::string body;
    if (mono.empty())
        body = magnitude.to_string();
    else if (magnitude.is_one())
        body = mono;
    else
        body = magnitude.to_string() + "*" + mono;
    if (first) return negative ? "-" + body : body;
    return (negative ? " - " : " + ") + body;
}

}  // namespace cselab::detail

#endif
