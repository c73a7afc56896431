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

#include "cselab/expression.hpp"

#include <cctype>
#include <optional>

#include "cselab/errors.hpp"

namespace cselab {

namespace {

constexpr unsigned kMaxExponent = 4096;

using Node = ExpressionNode;
using NodePtr = std::unique_ptr<Node>;

NodePtr make(Node::Kind kind, std::size_t position) {
    auto n = std::make_unique<Node>();
    n->kind = kind;
    n->position = position;
    return n;
}

NodePtr binary(Node::Kind kind, std::size_t position, NodePtr a, NodePtr b) {
    auto n = make(kind, position);
    n->children.push_back(std::move(a));
    n->children.push_back(std::move(b));
    return n;
}

class Parser {
   public:
    explicit Parser(std::string_view text) : text_(text) {}

    NodePtr parse() {
        NodePtr e = expr();
        skip();
        if (pos_ < text_.size()) error("unexpected '" + std::string(1, text_[pos_]) + "'");
        return e;
    }

   private:
    [[noreturn]] void error(const std::string& what) const { throw ParseError(what, pos_); }
    [[noreturn]] void error_at(const std::string& what, std::size_t at) const { throw ParseError(what, at); }

    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        skip();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) error(std::string("expected '") + c + "'");
    }
    bool at_digit() {
        skip();
        return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
    }

    mpz_class integer() {
        skip();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) error("expected an integer");
        if (pos_ < text_.size() && (text_[pos_] == '.' || text_[pos_] == 'e' || text_[pos_] == 'E'))
            error("floating-point literals are not allowed in expressions; write a/b");
        return mpz_class(std::string(text_.substr(start, pos_ - start)));
    }

    unsigned small_integer() {
        const std::size_t at = pos_;
        const mpz_class v = integer();
        if (v > kMaxExponent) error_at("exponent too large", at);
        return static_cast<unsigned>(v.get_ui());
    }

    NodePtr expr() {
        NodePtr lhs = term();
        for (;;) {
            skip();
            const std::size_t at = pos_;
            if (accept('+'))
                lhs = binary(Node::Kind::Add, at, std::move(lhs), term());
            else if (accept('-'))
                lhs = binary(Node::Kind::Subtract, at, std::move(lhs), term());
            else
                return lhs;
        }
    }

    NodePtr term() {
        NodePtr lhs = unary();
        for (;;) {
            skip();
            const std::size_t at = pos_;
            if (accept('*'))
                lhs = binary(Node::Kind::Multiply, at, std::move(lhs), unary());
            else if (accept('/'))
                lhs = binary(Node::Kind::Divide, at, std::move(lhs), unary());
            else
                return lhs;
        }
    }

    NodePtr unary() {
        skip();
        const std::size_t at = pos_;
        if (accept('-')) {
            auto n = make(Node::Kind::Negate, at);
            n->children.push_back(unary());
            return n;
        }
        return power();
    }

    NodePtr power() {
        NodePtr base = primary();
        skip();
        const std::size_t at = pos_;
        if (!accept('^')) return base;
        skip();
        if (accept('-')) error("negative exponents are not allowed");
        unsigned num = 0, den = 1;
        if (accept('(')) {
            if (accept('-')) error("negative exponents are not allowed");
            num = small_integer();
            if (accept('/')) {
                const std::size_t den_at = pos_;
                den = small_integer();
                if (den == 0) error_at("zero denominator in exponent", den_at);
            }
            expect(')');
        } else {
            num = small_integer();
        }

        if (base->kind == Node::Kind::Radial && base->exponent == 0) {
            if (den != 2 || num % 2 == 0)
                error_at("abs(x*y) needs an exponent p/2 with p odd, e.g. abs(x*y)^(1/2)", at);
            base->exponent = num;
            return base;
        }
        if (den != 1) {
            if (num % den != 0) error_at("fractional exponents are only allowed on abs(x*y)", at);
            num /= den;
        }
        auto n = make(Node::Kind::Power, at);
        n->exponent = num;
        n->children.push_back(std::move(base));
        return n;
    }

    NodePtr primary() {
        skip();
        const std::size_t at = pos_;
        if (pos_ >= text_.size()) error("unexpected end of expression");
        if (accept('(')) {
            NodePtr e = expr();
            expect(')');
            return e;
        }
        if (at_digit()) {
            auto n = make(Node::Kind::Number, at);
            n->number = integer();
            return n;
        }
        if (std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
            std::size_t end = pos_;
            while (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end]))) ++end;
            const std::string_view word = text_.substr(pos_, end - pos_);
            pos_ = end;
            if (word == "i") return make(Node::Kind::ImaginaryUnit, at);
            if (word == "x" || word == "y" || word == "z") {
                auto n = make(Node::Kind::Variable, at);
                n->variable = word[0];
                return n;
            }
            if (word == "abs") return radial(at);
            error_at("unknown identifier '" + std::string(word) + "'", at);
        }
        error("unexpected '" + std::string(1, text_[pos_]) + "'");
    }

    NodePtr radial(std::size_t at) {
        if (radial_seen_) error_at("at most one abs(x*y) term is allowed", at);
        radial_seen_ = true;
        expect('(');
        skip();
        const std::size_t arg_at = pos_;
        char first = 0, second = 0;
        auto var = [&]() -> char {
            skip();
            if (pos_ < text_.size() && (text_[pos_] == 'x' || text_[pos_] == 'y')) return text_[pos_++];
            error_at("abs() is only supported as abs(x*y)", arg_at);
        };
        first = var();
        expect('*');
        second = var();
        if (first == second) error_at("abs() is only supported as abs(x*y)", arg_at);
        expect(')');
        skip();
        if (pos_ >= text_.size() || text_[pos_] != '^')
            error_at("abs(x*y) needs an exponent p/2 with p odd, e.g. abs(x*y)^(1/2)", at);
        return make(Node::Kind::Radial, at);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    bool radial_seen_ = false;
};

struct Radial {
    GaussianRational coeff;
    unsigned nu = 0;
};

// z-polynomials are carried in the x slot and tagged.
struct Value {
    BivariatePoly p;
    bool has_z = false;
    bool has_xy = false;
    std::optional<Radial> radial;

    bool is_constant() const { return !radial && p.is_constant(); }
};

Value constant(const GaussianRational& c) { return Value{BivariatePoly::constant(c), false, false, std::nullopt}; }

void check_variables(const Value& a, const Value& b, std::size_t at) {
    if ((a.has_z && (b.has_xy || b.radial)) || (b.has_z && (a.has_xy || a.radial)))
        throw ParseError("z cannot be mixed with x, y or abs(x*y)", at);
}

Value merge_flags(Value v, const Value& a, const Value& b) {
    v.has_z = a.has_z || b.has_z;
    v.has_xy = a.has_xy || b.has_xy;
    return v;
}

Value evaluate(const Node& n) {
    using K = Node::Kind;
    switch (n.kind) {
        case K::Number:
            return constant(GaussianRational(mpq_class(n.number)));
        case K::ImaginaryUnit:
            return constant(GaussianRational::imaginary_unit());
        case K::Variable: {
            Value v;
            if (n.variable == 'z') {
                v.p = BivariatePoly::x();
                v.has_z = true;
            } else {
                v.p = n.variable == 'x' ? BivariatePoly::x() : BivariatePoly::y();
                v.has_xy = true;
            }
            return v;
        }
        case K::Radial: {
            Value v;
            v.radial = Radial{1, n.exponent};
            v.has_xy = true;
            return v;
        }
        case K::Negate: {
            Value v = evaluate(*n.children[0]);
            v.p = -v.p;
            if (v.radial) v.radial->coeff = -v.radial->coeff;
            return v;
        }
        case K::Add:
        case K::Subtract: {
            const Value a = evaluate(*n.children[0]);
            Value b = evaluate(*n.children[1]);
            check_variables(a, b, n.position);
            if (n.kind == K::Subtract) {
                b.p = -b.p;
                if (b.radial) b.radial->coeff = -b.radial->coeff;
            }
            Value v = merge_flags(Value{a.p + b.p, false, false, a.radial ? a.radial : b.radial}, a, b);
            return v;
        }
        case K::Multiply: {
            const Value a = evaluate(*n.children[0]);
            const Value b = evaluate(*n.children[1]);
            check_variables(a, b, n.position);
            if ((a.radial && !b.is_constant()) || (b.radial && !a.is_constant()))
                throw ParseError("abs(x*y)^(p/2) may only be multiplied by constants", n.position);
            Value v = merge_flags(Value{a.p * b.p, false, false, std::nullopt}, a, b);
            if (a.radial) v.radial = Radial{a.radial->coeff * b.p.constant_term(), a.radial->nu};
            if (b.radial) v.radial = Radial{b.radial->coeff * a.p.constant_term(), b.radial->nu};
            return v;
        }
        case K::Divide: {
            const Value a = evaluate(*n.children[0]);
            const Value b = evaluate(*n.children[1]);
            if (!b.is_constant()) throw ParseError("division is only allowed by constants", n.position);
            const GaussianRational d = b.p.constant_term();
            if (d.is_zero()) throw ParseError("division by zero", n.position);
            const GaussianRational inv = GaussianRational(1) / d;
            Value v = a;
            v.p = inv * a.p;
            if (v.radial) v.radial->coeff *= inv;
            return v;
        }
        case K::Power: {
            Value v = evaluate(*n.children[0]);
            if (v.radial) {
                if (n.exponent != 1) throw ParseError("abs(x*y)^(p/2) cannot be raised to a further power", n.position);
                return v;
            }
            v.p = v.p.pow(n.exponent);
            return v;
        }
    }
    throw ParseError("malformed expression", n.position);
}

}  // namespace

ExpressionAST parse_expression_ast(std::string_view text) {
    ExpressionAST ast;
    ast.source = std::string(text);
    ast.root = Parser(ast.source).parse();
    return ast;
}

Expression lower(const ExpressionAST& ast) {
    const Value v = evaluate(*ast.root);
    if (v.radial) {
        if (v.radial->coeff.is_zero()) return MixedFunction(v.p);
        return MixedFunction(v.p, v.radial->coeff, v.radial->nu);
    }
    if (v.has_z) {
        std::vector<GaussianRational> coeffs;
        for (const auto& [e, c] : v.p.terms()) {
            if (coeffs.size() <= e.m) coeffs.resize(e.m + 1);
            coeffs[e.m] = c;
        }
        return UnivariatePoly(std::move(coeffs));
    }
    return v.p;
}

Expression parse_expression(std::string_view text) { return lower(parse_expression_ast(text)); }

MixedFunction parse_function(std::string_view text) {
    const Expression e = parse_expression(text);
    if (const auto* p = std::get_if<BivariatePoly>(&e)) return MixedFunction(*p);
    if (const auto* m = std::get_if<MixedFunction>(&e)) return *m;
    const auto& u = std::get<UnivariatePoly>(e);
    // A constant is accepted as a (constant) function of x and y.
    if (u.degree() <= 0) return MixedFunction(BivariatePoly::constant(u.coeff(0)));
    fail(ErrorCode::Parse, "expected a function of x and y, got a polynomial in z");
}

UnivariatePoly parse_univariate(std::string_view text) {
    const Expression e = parse_expression(text);
    if (const auto* u = std::get_if<UnivariatePoly>(&e)) return *u;
    if (const auto* p = std::get_if<BivariatePoly>(&e); p && p->is_constant()) return UnivariatePoly::constant(p->constant_term());
    fail(ErrorCode::Parse, "expected a polynomial in z");
}

std::string to_string(const Expression& e) {
    return std::visit(
        [](const auto& v) {
            if constexpr (std::is_same_v<std::decay_t<decltype(v)>, UnivariatePoly>)
                return v.to_string('z');
            else
                return v.to_string();
        },
        e);
}

}  // namespace cselab
