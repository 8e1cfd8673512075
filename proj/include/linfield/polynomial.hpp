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

#ifndef LINFIELD_POLYNOMIAL_HPP
#define LINFIELD_POLYNOMIAL_HPP

#include <map>
#include <string>
#include <vector>

#include "linfield/monomial.hpp"
#include "linfield/scalar.hpp"

namespace linfield {

/// A multivariate polynomial with exact rational coefficients, stored as a
/// sparse map from monomials to nonzero coefficients. The zero polynomial is
/// the empty map.
class Polynomial {
  public:
    using TermMap = std::map<Monomial, Scalar>;

    /// The zero polynomial in nvars variables.
    explicit Polynomial(int nvars);

    static Polynomial constant(int nvars, const Scalar& c);
    static Polynomial one(int nvars) { return constant(nvars, Scalar(1)); }
    static Polynomial variable(int nvars, int var);
    static Polynomial term(const Monomial& m, const Scalar& c);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const;
    /// Value of a constant polynomial (zero polynomial gives 0).
    Scalar constant_value() const;

    /// Total degree; the zero polynomial has degree -1.
    int degree() const;
    int degree_in(int var) const;

    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    /// Greatest monomial in graded lex order. Requires a nonzero polynomial.
    const Monomial& leading_monomial() const;
    const Scalar& leading_coefficient() const;
    Scalar coefficient(const Monomial& m) const;

    /// Adds c * m to this polynomial, dropping the term if it cancels.
    void add_term(const Monomial& m, const Scalar& c);

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    Polynomial operator*(const Polynomial& o) const;
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial scaled(const Scalar& c) const;
    /// this * c * m.
    Polynomial times_term(const Monomial& m, const Scalar& c) const;
    Polynomial pow(int e) const;
    Polynomial partial(int var) const;

    Scalar eval(const std::vector<Scalar>& point) const;

    bool operator==(const Polynomial& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }

    /// Terms in graded-lex descending order, e.g. "x1^2*x2 + 1/2".
    std::string str() const;

  private:
    int nvars_;
    TermMap terms_;
};

/// GCD in Q[x1..xn], canonicalized so the leading coefficient is +1.
/// gcd(0, p) is the normalization of p; gcd(0, 0) is 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// GCD of a whole family (zero entries are skipped).
Polynomial gcd_many(const std::vector<Polynomial>& ps);

/// Least common multiple, leading coefficient +1. Both inputs nonzero.
Polynomial lcm(const Polynomial& a, const Polynomial& b);

/// Quotient of an exact division; throws std::logic_error if b does not
/// divide a.
Polynomial divide_exact(const Polynomial& a, const Polynomial& b);

/// The basis B_P through total degree cutoff, in listing order: degree
/// blocks ascending, monomials within a block from x1-dominant down (this is
/// the order the coefficient sequence of a polynomial is read in).
std::vector<Monomial> monomial_listing(int nvars, int cutoff);

/// Coefficients of p on B_P through degree cutoff. Requires
/// cutoff >= degree(p).
std::vector<Scalar> encode_sequence(const Polynomial& p, int cutoff);

/// Inverse of encode_sequence; the sequence length must match the listing.
Polynomial decode_sequence(int nvars, const std::vector<Scalar>& seq, int cutoff);

}  // namespace linfield

#endif  // LINFIELD_POLYNOMIAL_HPP
