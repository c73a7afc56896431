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

#include <doctest.h>

#include "corpus.hpp"
#include "cselab/errors.hpp"
#include "cselab/expression.hpp"

using namespace cselab;

namespace {

std::size_t error_position(const char* text) {
    try {
        parse_expression(text);
    } catch (const ParseError& e) {
        return e.position();
    }
    FAIL("no parse error for " << text);
    return 0;
}

std::string error_message(const char* text) {
    try {
        parse_expression(text);
    } catch (const Error& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_SUITE("expression") {

TEST_CASE("corpus round trip") {
    for (const char* text : corpus::kExpressions) {
        CAPTURE(text);
        const Expression e = parse_expression(text);
        const std::string printed = to_string(e);
        const Expression again = parse_expression(printed);
        CHECK(again == e);
        CHECK(to_string(again) == printed);
    }
}

TEST_CASE("lowering picks the domain type") {
    CHECK(std::holds_alternative<BivariatePoly>(parse_expression("y^2 - x^3")));
    CHECK(std::holds_alternative<MixedFunction>(parse_expression("x + abs(x*y)^(1/2)")));
    CHECK(std::holds_alternative<UnivariatePoly>(parse_expression("z^2 + 1")));
}

TEST_CASE("documented examples") {
    const auto cusp = std::get<BivariatePoly>(parse_expression("y^2 - x^3"));
    CHECK(cusp.terms().size() == 2);
    CHECK(cusp.coeff(0, 2) == GaussianRational(1));
    CHECK(cusp.coeff(3, 0) == GaussianRational(-1));

    const MixedFunction f = parse_function("(x+y) - 2*abs(x*y)^(1/2)");
    CHECK(f.holo() == parse_function("x + y").holo());
    CHECK(f.radial_coeff() == GaussianRational(-2));
    CHECK(f.radial_half_exp() == 1);

    const auto g = std::get<BivariatePoly>(parse_expression("i*x + 3/2"));
    CHECK(g.coeff(1, 0) == GaussianRational::imaginary_unit());
    CHECK(g.coeff(0, 0) == GaussianRational(mpq_class(3, 2)));
}

TEST_CASE("precedence") {
    CHECK(parse_function("-x^2") == parse_function("-(x^2)"));
    CHECK(parse_function("2*x^2") == parse_function("2*(x^2)"));
    CHECK(parse_function("x - y - x") == parse_function("-y"));
    CHECK(parse_function("x/2/2") == parse_function("x/4"));
    CHECK(parse_function("(x+y)^(3)") == parse_function("(x+y)^3"));
}

TEST_CASE("syntax errors carry positions") {
    CHECK(error_position("x + * y") == 4);
    CHECK(error_position("x +") == 3);
    CHECK(error_position("(x + y") == 6);
    CHECK(error_position("x $ y") == 2);
    CHECK(error_position("1.5*x") == 1);
}

TEST_CASE("radial term diagnostics") {
    CHECK(error_message("abs(x*y)^(1/3)").find("at position") != std::string::npos);
    CHECK(error_message("x*abs(x*y)^(1/2)").find("only be multiplied by constants") != std::string::npos);
    CHECK(error_message("abs(x*y)^(1/2) + abs(x*y)^(3/2)").find("abs") != std::string::npos);
    CHECK(error_message("abs(x*y)^(2/2)").find("at position") != std::string::npos);
    CHECK(error_message("x^(1/2)").find("at position") != std::string::npos);
    CHECK(error_message("abs(x)^(1/2)").find("at position") != std::string::npos);
}

TEST_CASE("semantic errors") {
    CHECK(error_message("x/y").find("division is only allowed by constants") != std::string::npos);
    CHECK(error_message("x/0").find("division by zero") != std::string::npos);
    CHECK(error_message("z*x").find("z cannot be mixed") != std::string::npos);
    CHECK_THROWS_WITH_AS(parse_function("z + 1"), doctest::Contains("got a polynomial in z"), Error);
    CHECK_THROWS_AS(parse_univariate("x + 1"), Error);
    CHECK_THROWS_AS(parse_expression("x^99999"), ParseError);
}

TEST_CASE("constants parse as functions") {
    CHECK(parse_function("3/2").holo().constant_term() == GaussianRational(mpq_class(3, 2)));
    CHECK(parse_univariate("5") == UnivariatePoly({5}));
}

}  // TEST_SUITE
