/*
   Copyright 2026 the linfield authors

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

#include "linfield/parse.hpp"

#include <cctype>
#include <functional>
#include <vector>

#include "linfield/errors.hpp"

namespace linfield {

namespace {

constexpr long kMaxExponent = 4096;

struct Token {
    enum class Kind { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

    Kind kind;
    std::size_t pos;
    std::string text;
};

std::vector<Token> tokenize(std::string_view src) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < src.size()) {
        const char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) {
                ++j;
            }
            tokens.push_back({Token::Kind::Number, i, std::string(src.substr(i, j - i))});
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) {
                ++j;
            }
            tokens.push_back({Token::Kind::Ident, i, std::string(src.substr(i, j - i))});
            i = j;
            continue;
        }
        Token::Kind kind;
        switch (c) {
            case '+': kind = Token::Kind::Plus; break;
            case '-': kind = Token::Kind::Minus; break;
            case '*': kind = Token::Kind::Star; break;
            case '/': kind = Token::Kind::Slash; break;
            case '^': kind = Token::Kind::Caret; break;
            case '(': kind = Token::Kind::LParen; break;
            case ')': kind = Token::Kind::RParen; break;
            default:
                throw SyntaxError(std::string("unexpected character '") + c + "'", i);
        }
        tokens.push_back({kind, i, std::string(1, c)});
        ++i;
    }
    tokens.push_back({Token::Kind::End, src.size(), ""});
    return tokens;
}

Expr make_node(ExprNode::Kind kind) {
    auto node = std::make_unique<ExprNode>();
    node->kind = kind;
    return node;
}

Expr make_binary(ExprNode::Kind kind, Expr lhs, Expr rhs) {
    Expr node = make_node(kind);
    node->lhs = std::move(lhs);
    node->rhs = std::move(rhs);
    return node;
}

// Maps an identifier to a variable index, or throws UnknownVariableError.
using VarResolver = std::function<int(const std::string&, std::size_t)>;

class Parser {
  public:
    Parser(std::string_view src, VarResolver resolver)
        : tokens_(tokenize(src)), resolver_(std::move(resolver)) {}

    Expr run() {
        Expr e = parse_sum();
        if (peek().kind != Token::Kind::End) {
            throw SyntaxError("unexpected trailing input", peek().pos);
        }
        return e;
    }

  private:
    const Token& peek() const { return tokens_[idx_]; }
    const Token& advance() { return tokens_[idx_++]; }
    bool accept(Token::Kind kind) {
        if (peek().kind == kind) {
            ++idx_;
            return true;
        }
        return false;
    }

    Expr parse_sum() {
        Expr lhs = parse_product();
        while (true) {
            if (accept(Token::Kind::Plus)) {
                lhs = make_binary(ExprNode::Kind::Add, std::move(lhs), parse_product());
            } else if (accept(Token::Kind::Minus)) {
                lhs = make_binary(ExprNode::Kind::Sub, std::move(lhs), parse_product());
            } else {
                return lhs;
            }
        }
    }

    Expr parse_product() {
        Expr lhs = parse_unary();
        while (true) {
            if (accept(Token::Kind::Star)) {
                lhs = make_binary(ExprNode::Kind::Mul, std::move(lhs), parse_unary());
            } else if (accept(Token::Kind::Slash)) {
                lhs = make_binary(ExprNode::Kind::Div, std::move(lhs), parse_unary());
            } else {
                return lhs;
            }
        }
    }

    Expr parse_unary() {
        if (accept(Token::Kind::Minus)) {
            Expr node = make_node(ExprNode::Kind::Negate);
            node->lhs = parse_unary();
            return node;
        }
        return parse_power();
    }

    Expr parse_power() {
        Expr base = parse_atom();
        if (!accept(Token::Kind::Caret)) {
            return base;
        }
        const bool negative = accept(Token::Kind::Minus);
        const Token& t = peek();
        if (t.kind != Token::Kind::Number) {
            throw NonIntegerExponentError("exponent must be an integer literal", t.pos);
        }
        advance();
        if (t.text.size() > 4) {
            throw SyntaxError("exponent out of range", t.pos);
        }
        long e = std::stol(t.text);
        if (e > kMaxExponent) {
            throw SyntaxError("exponent out of range", t.pos);
        }
        if (negative) {
            e = -e;
        }
        Expr node = make_node(ExprNode::Kind::Pow);
        node->exponent = e;
        node->lhs = std::move(base);
        if (peek().kind == Token::Kind::Caret) {
            throw SyntaxError("chained '^' is not allowed; parenthesize the base", peek().pos);
        }
        return node;
    }

    Expr parse_atom() {
        const Token& t = peek();
        switch (t.kind) {
            case Token::Kind::Number: {
                advance();
                Expr node = make_node(ExprNode::Kind::Literal);
                node->literal = Scalar::from_string(t.text);
                return node;
            }
            case Token::Kind::Ident: {
                advance();
                Expr node = make_node(ExprNode::Kind::Variable);
                node->var = resolver_(t.text, t.pos);
                return node;
            }
            case Token::Kind::LParen: {
                advance();
                Expr inner = parse_sum();
                if (!accept(Token::Kind::RParen)) {
                    throw SyntaxError("expected ')'", peek().pos);
                }
                return inner;
            }
            case Token::Kind::End:
                throw SyntaxError("unexpected end of input", t.pos);
            default:
                throw SyntaxError("unexpected '" + t.text + "'", t.pos);
        }
    }

    std::vector<Token> tokens_;
    VarResolver resolver_;
    std::size_t idx_ = 0;
};

// Parses "x<k>"-style names with 1 <= k <= limit; returns k-1 + base.
int indexed_name(const std::string& name, char prefix, int limit, int base, std::size_t pos) {
    if (name.size() < 2 || name[0] != prefix) {
        return -1;
    }
    long k = 0;
    for (std::size_t i = 1; i < name.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(name[i]))) {
            return -1;
        }
        k = k * 10 + (name[i] - '0');
        if (k > limit) {
            throw UnknownVariableError("variable '" + name + "' is outside x1..x" +
                                       std::to_string(limit), pos);
        }
    }
    if (k < 1 || name[1] == '0') {
        return -1;
    }
    return base + static_cast<int>(k) - 1;
}

VarResolver x_resolver(int nvars) {
    return [nvars](const std::string& name, std::size_t pos) {
        const int idx = indexed_name(name, 'x', nvars, 0, pos);
        if (idx < 0) {
            throw UnknownVariableError("unknown variable '" + name + "'; expected x1..x" +
                                       std::to_string(nvars), pos);
        }
        return idx;
    };
}

VarResolver xd_resolver(int nvars) {
    return [nvars](const std::string& name, std::size_t pos) {
        int idx = indexed_name(name, 'x', nvars, 0, pos);
        if (idx >= 0) {
            return idx;
        }
        idx = indexed_name(name, 'd', nvars, nvars, pos);
        if (idx >= 0) {
            return idx;
        }
        throw UnknownVariableError("unknown symbol '" + name + "'; expected x1..x" +
                                   std::to_string(nvars) + " or d1..d" + std::to_string(nvars), pos);
    };
}

void check_nvars(int nvars) {
    if (nvars < 1) {
        throw std::invalid_argument("parse: need at least one variable");
    }
}

}  // namespace

Expr parse(std::string_view src, int nvars) {
    check_nvars(nvars);
    return Parser(src, x_resolver(nvars)).run();
}

RatFunc lower(const ExprNode& e, int nvars) {
    switch (e.kind) {
        case ExprNode::Kind::Literal:
            return RatFunc::constant(nvars, e.literal);
        case ExprNode::Kind::Variable:
            return RatFunc::variable(nvars, e.var);
        case ExprNode::Kind::Negate:
            return -lower(*e.lhs, nvars);
        case ExprNode::Kind::Add:
            return lower(*e.lhs, nvars) + lower(*e.rhs, nvars);
        case ExprNode::Kind::Sub:
            return lower(*e.lhs, nvars) - lower(*e.rhs, nvars);
        case ExprNode::Kind::Mul:
            return lower(*e.lhs, nvars) * lower(*e.rhs, nvars);
        case ExprNode::Kind::Div: {
            const RatFunc den = lower(*e.rhs, nvars);
            if (den.is_zero()) {
                throw ZeroDenominatorError("lower: division by an expression that is zero");
            }
            return lower(*e.lhs, nvars) / den;
        }
        case ExprNode::Kind::Pow:
            return lower(*e.lhs, nvars).pow(e.exponent);
    }
    throw std::logic_error("lower: unreachable");
}

RatFunc parse_ratfunc(std::string_view src, int nvars) {
    check_nvars(nvars);
    const Expr e = parse(src, nvars);
    return lower(*e, nvars);
}

namespace {

// Drops the d-variables from a monomial over (x1..xn, d1..dn).
Polynomial restrict_to_x(const Polynomial& p, int nvars) {
    Polynomial r(nvars);
    for (const auto& [m, c] : p.terms()) {
        std::vector<int> exps(m.exponents().begin(), m.exponents().begin() + nvars);
        r.add_term(Monomial(std::move(exps)), c);
    }
    return r;
}

}  // namespace

NHOperator parse_operator(std::string_view src, int nvars) {
    check_nvars(nvars);
    const Expr e = Parser(src, xd_resolver(nvars)).run();
    const RatFunc f = lower(*e, 2 * nvars);

    for (int v = nvars; v < 2 * nvars; ++v) {
        if (f.den().degree_in(v) > 0) {
            throw SyntaxError("operator coefficients cannot divide by d symbols", 0);
        }
    }
    Polynomial q_num(2 * nvars);
    std::vector<Polynomial> a_num(static_cast<std::size_t>(nvars), Polynomial(2 * nvars));
    for (const auto& [m, c] : f.num().terms()) {
        int dsum = 0;
        int dvar = -1;
        for (int v = nvars; v < 2 * nvars; ++v) {
            dsum += m.exponent(v);
            if (m.exponent(v) > 0) {
                dvar = v - nvars;
            }
        }
        if (dsum == 0) {
            q_num.add_term(m, c);
        } else if (dsum == 1) {
            a_num[static_cast<std::size_t>(dvar)].add_term(m.shifted(nvars + dvar, -1), c);
        } else {
            throw SyntaxError("operator must be first order (affine in d1..dn)", 0);
        }
    }

    const Polynomial den = restrict_to_x(f.den(), nvars);
    std::vector<RatFunc> a;
    a.reserve(static_cast<std::size_t>(nvars));
    for (const Polynomial& p : a_num) {
        a.emplace_back(restrict_to_x(p, nvars), den);
    }
    return NHOperator(VectorA(std::move(a)), RatFunc(restrict_to_x(q_num, nvars), den));
}

}  // namespace linfield
