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

#ifndef CSELAB_EXPRESSION_HPP
#define CSELAB_EXPRESSION_HPP

#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cselab/mixed_function.hpp"

// Grammar (precedence ^ > unary minus > * / > binary + -):
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' exponent)?
//   exponent:= integer | '(' integer ')' | '(' integer '/' '2' ')'
//   primary := integer | 'i' | 'x' | 'y' | 'z' | '(' expr ')' | 'abs' '(' 'x' '*' 'y' ')'
//
// Division is by constants only; half-integer exponents only on abs(x*y).

namespace cselab {

struct ExpressionNode {
    enum class Kind { Number, ImaginaryUnit, Variable, Negate, Add, Subtract, Multiply, Divide, Power, Radial };
    Kind kind = Kind::Number;
    std::size_t position = 0;
    mpz_class number;           // Number
    char variable = 0;          // Variable
    unsigned exponent = 0;      // Power; Radial: the odd numerator nu of nu/2
    std::vector<std::unique_ptr<ExpressionNode>> children;
};

struct ExpressionAST {
    std::unique_ptr<ExpressionNode> root;
    std::string source;
};

using Expression = std::variant<BivariatePoly, UnivariatePoly, MixedFunction>;

ExpressionAST parse_expression_ast(std::string_view text);

/// Lowers to a univariate polynomial when z occurs, to a MixedFunction when a
/// radial term occurs, and to a BivariatePoly otherwise.
Expression lower(const ExpressionAST& ast);

Expression parse_expression(std::string_view text);

/// F(x, y), possibly with a radial term; rejects z.
MixedFunction parse_function(std::string_view text);

/// P(z); rejects x, y and radial terms.
UnivariatePoly parse_univariate(std::string_view text);

std::string to_string(const Expression& e);

}  // namespace cselab

#endif
