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

#ifndef LINFIELD_RATFUNC_HPP
#define LINFIELD_RATFUNC_HPP

#include <string>
#include <vector>

#include "linfield/polynomial.hpp"

namespace linfield {

/// An element of the rational function field A, kept in canonical form:
/// gcd(num, den) = 1 and the leading coefficient of the denominator is +1.
/// Equality of canonical forms is plain component-wise equality.
class RatFunc {
  public:
    /// The zero element in nvars variables.
    explicit RatFunc(int nvars)
        : num_(nvars), den_(Polynomial::one(nvars)) {}

    /// p / 1.
    explicit RatFunc(Polynomial p)
        : num_(std::move(p)), den_(Polynomial::one(num_.nvars())) {}

    /// num / den, reduced to canonical form. Throws ZeroDenominatorError
    /// when den = 0.
    RatFunc(Polynomial num, Polynomial den);

    static RatFunc constant(int nvars, const Scalar& c) {
        return RatFunc(Polynomial::constant(nvars, c));
    }
    static RatFunc one(int nvars) { return constant(nvars, Scalar(1)); }
    static RatFunc variable(int nvars, int var) {
        return RatFunc(Polynomial::variable(nvars, var));
    }

    int nvars() const { return num_.nvars(); }
    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_one(); }
    /// Value of a constant element.
    Scalar constant_value() const { return num_.constant_value(); }

    RatFunc operator-() const;
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    /// Throws ZeroInverseError when o = 0.
    RatFunc operator/(const RatFunc& o) const;
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    /// Throws ZeroInverseError on the zero element.
    RatFunc inverse() const;
    /// Integer power; negative exponents invert (ZeroInverseError on 0).
    RatFunc pow(long e) const;

    bool operator==(const RatFunc& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }

    /// Exact evaluation; throws PoleError when the denominator vanishes at
    /// the point.
    Scalar eval(const std::vector<Scalar>& point) const;

    /// Canonical text form, e.g. "(x1^2*x2 + 1/2) / (x2 + 1)".
    std::string str() const;

  private:
    struct canonical_tag {};
    RatFunc(Polynomial num, Polynomial den, canonical_tag)
        : num_(std::move(num)), den_(std::move(den)) {}

    Polynomial num_;
    Polynomial den_;
};

/// psi written in r formal variables, composed with r elements of an
/// n-variable field: returns psi(phi_1, ..., phi_r). Throws
/// UndefinedCompositionError when the composed denominator is the zero
/// function.
RatFunc substitute(const RatFunc& psi, const std::vector<RatFunc>& phi);

}  // namespace linfield

#endif  // LINFIELD_RATFUNC_HPP
