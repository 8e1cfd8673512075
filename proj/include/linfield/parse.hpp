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

#ifndef LINFIELD_PARSE_HPP
#define LINFIELD_PARSE_HPP

#include <memory>
#include <string>
#include <string_view>

#include "linfield/operators.hpp"
#include "linfield/ratfunc.hpp"

namespace linfield {

/// Abstract syntax tree for field expressions over x1..xn: rational
/// literals, variables, unary minus, + - * /, and integer-literal powers.
/// Every well-formed tree lowers to a unique canonical RatFunc.
struct ExprNode {
    enum class Kind { Literal, Variable, Negate, Add, Sub, Mul, Div, Pow };

    Kind kind;
    Scalar literal{};                  // Literal
    int var = -1;                      // Variable (0-based)
    long exponent = 0;                 // Pow
    std::unique_ptr<ExprNode> lhs;     // operand / left operand / pow base
    std::unique_ptr<ExprNode> rhs;     // right operand
};

using Expr = std::unique_ptr<ExprNode>;

/// Parses an expression over x1..xn. Precedence ^ before unary minus before
/// * / before + -; binary operators associate left, exponents are integer
/// literals (negative allowed). Throws SyntaxError, UnknownVariableError or
/// NonIntegerExponentError, each carrying the source position.
Expr parse(std::string_view src, int nvars);

/// Lowers an AST to canonical form. Division by an expression that lowers to
/// zero raises ZeroDenominatorError (zero to a negative power raises
/// ZeroInverseError).
RatFunc lower(const ExprNode& e, int nvars);

/// parse + lower in one step.
RatFunc parse_ratfunc(std::string_view src, int nvars);

/// Parses a first-order operator in "x1*d1 + x2*d2 - 1" syntax: an
/// expression over x1..xn and d1..dn that must be affine in the d's, with
/// d-free denominators. Coefficients of d_i become a_i; the d-free part
/// becomes q.
NHOperator parse_operator(std::string_view src, int nvars);

}  // namespace linfield

#endif  // LINFIELD_PARSE_HPP
