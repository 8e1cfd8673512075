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

#include "linfield/ratfunc.hpp"

#include <stdexcept>

#include "linfield/errors.hpp"

namespace linfield {

RatFunc::RatFunc(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (num_.nvars() != den_.nvars()) {
        throw std::invalid_argument("RatFunc: variable count mismatch");
    }
    if (den_.is_zero()) {
        throw ZeroDenominatorError("RatFunc: denominator is zero");
    }
    if (num_.is_zero()) {
        den_ = Polynomial::one(den_.nvars());
        return;
    }
    const Polynomial g = gcd(num_, den_);
    if (!g.is_one()) {
        num_ = divide_exact(num_, g);
        den_ = divide_exact(den_, g);
    }
    const Scalar& lc = den_.leading_coefficient();
    if (!lc.is_one()) {
        const Scalar inv = lc.inverse();
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

RatFunc RatFunc::operator-() const {
    return RatFunc(-num_, den_, canonical_tag{});
}

// Addition and multiplication reduce with Henrici's scheme: for inputs in
// lowest terms, gcds are only ever taken against the (small) denominator
// gcd, never against full cross products, and the results below are already
// in lowest terms. Denominators stay monic throughout.

RatFunc RatFunc::operator+(const RatFunc& o) const {
    if (is_zero()) {
        return o;
    }
    if (o.is_zero()) {
        return *this;
    }
    const Polynomial g = gcd(den_, o.den_);
    if (g.is_one()) {
        Polynomial num = num_ * o.den_ + o.num_ * den_;
        if (num.is_zero()) {
            return RatFunc(nvars());
        }
        return RatFunc(std::move(num), den_ * o.den_, canonical_tag{});
    }
    const Polynomial db = divide_exact(den_, g);
    const Polynomial dd = divide_exact(o.den_, g);
    Polynomial num = num_ * dd + o.num_ * db;
    if (num.is_zero()) {
        return RatFunc(nvars());
    }
    Polynomial den = den_ * dd;
    const Polynomial h = gcd(num, g);
    if (!h.is_one()) {
        num = divide_exact(num, h);
        den = divide_exact(den, h);
    }
    return RatFunc(std::move(num), std::move(den), canonical_tag{});
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
    return *this + (-o);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
    if (is_zero() || o.is_zero()) {
        return RatFunc(nvars());
    }
    const Polynomial g1 = gcd(num_, o.den_);
    const Polynomial g2 = gcd(o.num_, den_);
    Polynomial num = (g1.is_one() ? num_ : divide_exact(num_, g1)) *
                     (g2.is_one() ? o.num_ : divide_exact(o.num_, g2));
    Polynomial den = (g2.is_one() ? den_ : divide_exact(den_, g2)) *
                     (g1.is_one() ? o.den_ : divide_exact(o.den_, g1));
    return RatFunc(std::move(num), std::move(den), canonical_tag{});
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) {
        throw ZeroInverseError("RatFunc: division by zero");
    }
    return *this * o.inverse();
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) {
        throw ZeroInverseError("RatFunc: zero has no inverse");
    }
    // num and den are coprime, so only the sign convention needs fixing.
    const Scalar& lc = num_.leading_coefficient();
    if (lc.is_one()) {
        return RatFunc(den_, num_, canonical_tag{});
    }
    const Scalar inv = lc.inverse();
    return RatFunc(den_.scaled(inv), num_.scaled(inv), canonical_tag{});
}

RatFunc RatFunc::pow(long e) const {
    if (e < 0) {
        return inverse().pow(-e);
    }
    if (e == 0) {
        return one(nvars());
    }
    if (e > 1000000) {
        throw std::invalid_argument("RatFunc: exponent out of range");
    }
    // Coprimality and the monic denominator survive taking powers.
    return RatFunc(num_.pow(static_cast<int>(e)), den_.pow(static_cast<int>(e)),
                   canonical_tag{});
}

Scalar RatFunc::eval(const std::vector<Scalar>& point) const {
    const Scalar d = den_.eval(point);
    if (d.is_zero()) {
        throw PoleError("RatFunc: denominator vanishes at the evaluation point");
    }
    return num_.eval(point) / d;
}

namespace {

bool is_plain_variable_power(const Polynomial& p) {
    if (p.term_count() != 1 || !p.leading_coefficient().is_one()) {
        return false;
    }
    const Monomial& m = p.leading_monomial();
    int used = 0;
    for (int v = 0; v < m.nvars(); ++v) {
        if (m.exponent(v) > 0) {
            ++used;
        }
    }
    return used == 1;
}

}  // namespace

std::string RatFunc::str() const {
    if (den_.is_one()) {
        return num_.str();
    }
    const std::string n =
        num_.term_count() <= 1 ? num_.str() : "(" + num_.str() + ")";
    const std::string d =
        is_plain_variable_power(den_) ? den_.str() : "(" + den_.str() + ")";
    return n + " / " + d;
}

RatFunc substitute(const RatFunc& psi, const std::vector<RatFunc>& phi) {
    const int r = psi.nvars();
    if (static_cast<int>(phi.size()) != r) {
        throw std::invalid_argument("substitute: argument count must match psi's variables");
    }
    if (phi.empty()) {
        throw std::invalid_argument("substitute: empty substitution");
    }
    const int n = phi.front().nvars();
    for (const RatFunc& f : phi) {
        if (f.nvars() != n) {
            throw std::invalid_argument("substitute: mixed variable counts in phi");
        }
    }

    // Power tables for each phi_j, up to the largest exponent in psi.
    std::vector<std::vector<RatFunc>> powers(static_cast<std::size_t>(r));
    for (int j = 0; j < r; ++j) {
        const int dmax = std::max(psi.num().degree_in(j), psi.den().degree_in(j));
        auto& tab = powers[static_cast<std::size_t>(j)];
        tab.reserve(static_cast<std::size_t>(dmax) + 1);
        for (int d = 0; d <= dmax; ++d) {
            tab.push_back(phi[static_cast<std::size_t>(j)].pow(d));
        }
    }

    const auto compose_poly = [&](const Polynomial& p) {
        RatFunc acc(n);
        for (const auto& [m, c] : p.terms()) {
            RatFunc t = RatFunc::constant(n, c);
            for (int j = 0; j < r; ++j) {
                const int e = m.exponent(j);
                if (e > 0) {
                    t *= powers[static_cast<std::size_t>(j)][static_cast<std::size_t>(e)];
                }
            }
            acc += t;
        }
        return acc;
    };

    const RatFunc den_value = compose_poly(psi.den());
    if (den_value.is_zero()) {
        throw UndefinedCompositionError(
            "substitute: composed denominator is identically zero");
    }
    return compose_poly(psi.num()) / den_value;
}

}  // namespace linfield
