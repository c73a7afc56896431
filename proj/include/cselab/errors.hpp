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

#ifndef CSELAB_ERRORS_HPP
#define CSELAB_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cselab {

enum class ErrorCode {
    InvalidArgument,
    Parse,
    Hypothesis,  // a theorem hypothesis (e.g. 0 < c < c_0) is not met
    Divergent,
    Io,
    Internal,
};

class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

   private:
    ErrorCode code_;
};

class ParseError : public Error {
   public:
    ParseError(const std::string& what, std::size_t position)
        : Error(ErrorCode::Parse, what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const noexcept { return position_; }

   private:
    std::size_t position_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace cselab

#endif
