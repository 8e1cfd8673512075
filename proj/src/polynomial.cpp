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

#include "linfield/polynomial.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace linfield {

namespace {

void check_same_nvars(const Polynomial& a, const Polynomial& b) {
    if (a.nvars() != b.nvars()) {
        throw std::invalid_argument("Polynomial: variable count mismatch");
    }
}

}  // namespace

Polynomial::Polynomial(int nvars) : nvars_(nvars) {
    if (nvars < 0) {
        throw std::invalid_argument("Polynomial: negative variable count");
    }
}

Polynomial Polynomial::constant(int nvars, const Scalar& c) {
    Polynomial p(nvars);
    p.add_term(Monomial(nvars), c);
    return p;
}

Polynomial Polynomial::variable(int nvars, int var) {
    if (var < 0 || var >= nvars) {
        throw std::invalid_argument("Polynomial: variable index out of range");
    }
    Polynomial p(nvars);
    p.add_term(Monomial(nvars).shifted(var, 1), Scalar(1));
    return p;
}

Polynomial Polynomial::term(const Monomial& m, const Scalar& c) {
    Polynomial p(m.nvars());
    p.add_term(m, c);
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

bool Polynomial::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.is_unit() &&
           terms_.begin()->second.is_one();
}

Scalar Polynomial::constant_value() const {
    if (terms_.empty()) {
        return Scalar(0);
    }
    if (!is_constant()) {
        throw std::logic_error("Polynomial: not a constant");
    }
    return terms_.begin()->second;
}

int Polynomial::degree() const {
    return terms_.empty() ? -1 : terms_.rbegin()->first.degree();
}

int Polynomial::degree_in(int var) const {
    int d = 0;
    for (const auto& [m, c] : terms_) {
        d = std::max(d, m.exponent(var));
    }
    return d;
}

const Monomial& Polynomial::leading_monomial() const {
    if (terms_.empty()) {
        throw std::logic_error("Polynomial: zero polynomial has no leading term");
    }
    return terms_.rbegin()->first;
}

const Scalar& Polynomial::leading_coefficient() const {
    if (terms_.empty()) {
        throw std::logic_error("Polynomial: zero polynomial has no leading term");
    }
    return terms_.rbegin()->second;
}

Scalar Polynomial::coefficient(const Monomial& m) const {
    const auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Scalar& c) {
    if (m.nvars() != nvars_) {
        throw std::invalid_argument("Polynomial: term variable count mismatch");
    }
    if (c.is_zero()) {
        return;
    }
    const auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r(nvars_);
    for (const auto& [m, c] : terms_) {
        r.terms_.emplace(m, -c);
    }
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    check_same_nvars(*this, o);
    for (const auto& [m, c] : o.terms_) {
        add_term(m, c);
    }
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    check_same_nvars(*this, o);
    for (const auto& [m, c] : o.terms_) {
        add_term(m, -c);
    }
    return *this;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_same_nvars(*this, o);
    Polynomial r(nvars_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            r.add_term(ma * mb, ca * cb);
        }
    }
    return r;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
    Polynomial r(nvars_);
    if (c.is_zero()) {
        return r;
    }
    for (const auto& [m, coeff] : terms_) {
        r.terms_.emplace(m, coeff * c);
    }
    return r;
}

Polynomial Polynomial::times_term(const Monomial& m, const Scalar& c) const {
    Polynomial r(nvars_);
    if (c.is_zero()) {
        return r;
    }
    for (const auto& [mm, cc] : terms_) {
        r.terms_.emplace(mm * m, cc * c);
    }
    return r;
}

Polynomial Polynomial::pow(int e) const {
    if (e < 0) {
        throw std::invalid_argument("Polynomial: negative exponent");
    }
    Polynomial result = one(nvars_);
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1) {
            result = result * base;
        }
        e >>= 1;
        if (e > 0) {
            base = base * base;
        }
    }
    return result;
}

Polynomial Polynomial::partial(int var) const {
    if (var < 0 || var >= nvars_) {
        throw std::invalid_argument("Polynomial: variable index out of range");
    }
    Polynomial r(nvars_);
    for (const auto& [m, c] : terms_) {
        const int e = m.exponent(var);
        if (e > 0) {
            r.add_term(m.shifted(var, -1), c * Scalar(e));
        }
    }
    return r;
}

Scalar Polynomial::eval(const std::vector<Scalar>& point) const {
    if (static_cast<int>(point.size()) != nvars_) {
        throw std::invalid_argument("Polynomial: evaluation point has wrong dimension");
    }
    // Power tables per variable, up to the largest exponent used.
    std::vector<std::vector<Scalar>> powers(static_cast<std::size_t>(nvars_));
    for (int v = 0; v < nvars_; ++v) {
        const int dmax = degree_in(v);
        auto& tab = powers[static_cast<std::size_t>(v)];
        tab.reserve(static_cast<std::size_t>(dmax) + 1);
        tab.push_back(Scalar(1));
        for (int d = 1; d <= dmax; ++d) {
            tab.push_back(tab.back() * point[static_cast<std::size_t>(v)]);
        }
    }
    Scalar acc(0);
    for (const auto& [m, c] : terms_) {
        Scalar t = c;
        for (int v = 0; v < nvars_; ++v) {
            const int e = m.exponent(v);
            if (e > 0) {
                t *= powers[static_cast<std::size_t>(v)][static_cast<std::size_t>(e)];
            }
        }
        acc += t;
    }
    return acc;
}

namespace {

std::string term_str(const Monomial& m, const Scalar& c) {
    if (m.is_unit()) {
        return c.str();
    }
    if (c.is_one()) {
        return m.str();
    }
    if (c == Scalar(-1)) {
        return "-" + m.str();
    }
    return c.str() + "*" + m.str();
}

}  // namespace

std::string Polynomial::str() const {
    if (terms_.empty()) {
        return "0";
    }
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const std::string t = term_str(it->first, it->second);
        if (s.empty()) {
            s = t;
        } else if (t.front() == '-') {
            s += " - " + t.substr(1);
        } else {
            s += " + " + t;
        }
    }
    return s;
}

// ---------------------------------------------------------------------------
// Division and GCD.
// ---------------------------------------------------------------------------

Polynomial divide_exact(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) {
        throw std::invalid_argument("divide_exact: division by the zero polynomial");
    }
    check_same_nvars(a, b);
    Polynomial rem = a;
    Polynomial quot(a.nvars());
    const Monomial& bl = b.leading_monomial();
    const Scalar& blc = b.leading_coefficient();
    while (!rem.is_zero()) {
        const Monomial& rl = rem.leading_monomial();
        if (!bl.divides(rl)) {
            throw std::logic_error("divide_exact: not divisible");
        }
        const Monomial m = rl.divided_by(bl);
        const Scalar c = rem.leading_coefficient() / blc;
        quot.add_term(m, c);
        rem -= b.times_term(m, c);
    }
    return quot;
}

namespace {

// Dense univariate polynomial over Q; index = exponent, empty = zero.
using UniPoly = std::vector<Scalar>;

void uni_trim(UniPoly& p) {
    while (!p.empty() && p.back().is_zero()) {
        p.pop_back();
    }
}

void uni_mod(UniPoly& r, const UniPoly& d) {
    const Scalar inv_lead = d.back().inverse();
    while (r.size() >= d.size()) {
        const Scalar f = r.back() * inv_lead;
        const std::size_t shift = r.size() - d.size();
        for (std::size_t i = 0; i + 1 < d.size(); ++i) {
            r[i + shift] -= f * d[i];
        }
        r.pop_back();  // leading term cancels exactly
        uni_trim(r);
    }
}

UniPoly uni_gcd(UniPoly a, UniPoly b) {
    uni_trim(a);
    uni_trim(b);
    while (!b.empty()) {
        uni_mod(a, b);
        std::swap(a, b);
    }
    if (!a.empty() && !a.back().is_one()) {
        const Scalar inv = a.back().inverse();
        for (auto& c : a) {
            c *= inv;
        }
    }
    return a;
}

std::vector<char> vars_present(const Polynomial& p) {
    std::vector<char> present(static_cast<std::size_t>(p.nvars()), 0);
    for (const auto& [m, c] : p.terms()) {
        for (int v = 0; v < p.nvars(); ++v) {
            if (m.exponent(v) > 0) {
                present[static_cast<std::size_t>(v)] = 1;
            }
        }
    }
    return present;
}

// Coefficient of x_var^d, as a polynomial free of x_var.
Polynomial coeff_in(const Polynomial& p, int var, int d) {
    Polynomial r(p.nvars());
    for (const auto& [m, c] : p.terms()) {
        if (m.exponent(var) == d) {
            r.add_term(m.shifted(var, -d), c);
        }
    }
    return r;
}

Polynomial lc_in(const Polynomial& p, int var) {
    return coeff_in(p, var, p.degree_in(var));
}

Polynomial mul_shift(const Polynomial& p, int var, int amount) {
    Polynomial r(p.nvars());
    for (const auto& [m, c] : p.terms()) {
        r.add_term(m.shifted(var, amount), c);
    }
    return r;
}

Polynomial normalize_monic(const Polynomial& p) {
    if (p.is_zero() || p.leading_coefficient().is_one()) {
        return p;
    }
    return p.scaled(p.leading_coefficient().inverse());
}

// Content of p viewed as a univariate polynomial in x_var, i.e. the gcd of
// its coefficient polynomials.
Polynomial content_in(const Polynomial& p, int var) {
    Polynomial c(p.nvars());
    const int d = p.degree_in(var);
    for (int k = 0; k <= d; ++k) {
        Polynomial ck = coeff_in(p, var, k);
        if (ck.is_zero()) {
            continue;
        }
        c = gcd(c, ck);
        if (c.is_one()) {
            break;
        }
    }
    return c;
}

// Pseudo-remainder of a by b in x_var, with premultiplier lc(b)^(deg a - deg b + 1).
Polynomial prem(const Polynomial& a, const Polynomial& b, int var) {
    const int db = b.degree_in(var);
    const Polynomial lb = lc_in(b, var);
    Polynomial r = a;
    int n = a.degree_in(var) - db + 1;
    while (!r.is_zero() && r.degree_in(var) >= db) {
        const Polynomial lr = lc_in(r, var);
        r = lb * r - mul_shift(lr, var, r.degree_in(var) - db) * b;
        --n;
    }
    if (n > 0) {
        r = r * lb.pow(n);
    }
    return r;
}

// Subresultant polynomial remainder sequence. Inputs are primitive in x_var
// with positive degree; returns gcd of the two up to normalization.
Polynomial subresultant_gcd(Polynomial a, Polynomial b, int var) {
    if (a.degree_in(var) < b.degree_in(var)) {
        std::swap(a, b);
    }
    Polynomial g = Polynomial::one(a.nvars());
    Polynomial h = g;
    while (true) {
        const int delta = a.degree_in(var) - b.degree_in(var);
        Polynomial r = prem(a, b, var);
        if (r.is_zero()) {
            return divide_exact(b, content_in(b, var));
        }
        if (r.degree_in(var) == 0) {
            return Polynomial::one(a.nvars());
        }
        a = b;
        b = divide_exact(r, g * h.pow(delta));
        g = lc_in(a, var);
        if (delta == 1) {
            h = g;
        } else if (delta > 1) {
            h = divide_exact(g.pow(delta), h.pow(delta - 1));
        }
    }
}

// Specialize every variable except x_var to the given integers, producing a
// dense univariate image.
UniPoly uni_image(const Polynomial& p, int var, const std::vector<long>& vals) {
    UniPoly img(static_cast<std::size_t>(p.degree_in(var)) + 1, Scalar(0));
    for (const auto& [m, c] : p.terms()) {
        Scalar t = c;
        for (int v = 0; v < p.nvars(); ++v) {
            if (v == var) {
                continue;
            }
            const int e = m.exponent(v);
            if (e > 0) {
                t *= Scalar(vals[static_cast<std::size_t>(v)]).pow(e);
            }
        }
        img[static_cast<std::size_t>(m.exponent(var))] += t;
    }
    uni_trim(img);
    return img;
}

// Evaluation pre-filter: certify that two polynomials, primitive in x_var,
// are coprime by checking that a random univariate image pair is coprime.
// Sound whenever the images keep full degree in x_var; never certifies a
// false positive.
bool images_certify_coprime(const Polynomial& a, const Polynomial& b, int var) {
    std::mt19937_64 eng(0x6c66696e64ULL);
    for (int attempt = 0; attempt < 4; ++attempt) {
        std::vector<long> vals(static_cast<std::size_t>(a.nvars()));
        for (auto& v : vals) {
            v = static_cast<long>(eng() % 201) - 100;
        }
        const UniPoly ia = uni_image(a, var, vals);
        const UniPoly ib = uni_image(b, var, vals);
        if (static_cast<int>(ia.size()) - 1 != a.degree_in(var) ||
            static_cast<int>(ib.size()) - 1 != b.degree_in(var)) {
            continue;  // a leading coefficient vanished; retry
        }
        const UniPoly g = uni_gcd(ia, ib);
        return g.size() == 1;
    }
    return false;
}

// Univariate gcd fast path: both polynomials involve only x_var.
Polynomial gcd_single_var(const Polynomial& a, const Polynomial& b, int var) {
    const UniPoly g = uni_gcd(uni_image(a, var, std::vector<long>(a.nvars(), 0)),
                              uni_image(b, var, std::vector<long>(a.nvars(), 0)));
    Polynomial r(a.nvars());
    for (std::size_t d = 0; d < g.size(); ++d) {
        r.add_term(Monomial(a.nvars()).shifted(var, static_cast<int>(d)), g[d]);
    }
    return r;
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    check_same_nvars(a, b);
    if (a.is_zero()) {
        return normalize_monic(b);
    }
    if (b.is_zero()) {
        return normalize_monic(a);
    }
    if (a.is_constant() || b.is_constant()) {
        return Polynomial::one(a.nvars());
    }
    if (a == b) {
        return normalize_monic(a);
    }

    const std::vector<char> pa = vars_present(a);
    const std::vector<char> pb = vars_present(b);
    std::vector<int> common;
    int single_var = -1;
    int var_count = 0;
    for (int v = 0; v < a.nvars(); ++v) {
        const bool ina = pa[static_cast<std::size_t>(v)] != 0;
        const bool inb = pb[static_cast<std::size_t>(v)] != 0;
        if (ina && inb) {
            common.push_back(v);
        }
        if (ina || inb) {
            ++var_count;
            single_var = v;
        }
    }
    if (common.empty()) {
        return Polynomial::one(a.nvars());
    }
    if (var_count == 1) {
        return gcd_single_var(a, b, single_var);
    }

    // Main variable: the common variable of smallest maximal degree.
    int var = common.front();
    int best = std::max(a.degree_in(var), b.degree_in(var));
    for (const int v : common) {
        const int d = std::max(a.degree_in(v), b.degree_in(v));
        if (d < best) {
            best = d;
            var = v;
        }
    }

    const Polynomial cont_a = content_in(a, var);
    const Polynomial cont_b = content_in(b, var);
    const Polynomial pp_a = divide_exact(a, cont_a);
    const Polynomial pp_b = divide_exact(b, cont_b);
    const Polynomial c = gcd(cont_a, cont_b);

    if (images_certify_coprime(pp_a, pp_b, var)) {
        return normalize_monic(c);
    }
    const Polynomial g = subresultant_gcd(pp_a, pp_b, var);
    return normalize_monic(c * g);
}

Polynomial gcd_many(const std::vector<Polynomial>& ps) {
    if (ps.empty()) {
        throw std::invalid_argument("gcd_many: empty input");
    }
    Polynomial g(ps.front().nvars());
    for (const Polynomial& p : ps) {
        g = gcd(g, p);
        if (g.is_one()) {
            break;
        }
    }
    return g;
}

Polynomial lcm(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) {
        throw std::invalid_argument("lcm: arguments must be nonzero");
    }
    if (a.is_one() || a == b) {
        return normalize_monic(b);
    }
    if (b.is_one()) {
        return normalize_monic(a);
    }
    return normalize_monic(a * divide_exact(b, gcd(a, b)));
}

// ---------------------------------------------------------------------------
// The basis B_P and coefficient sequences.
// ---------------------------------------------------------------------------

namespace {

void gen_block(int pos, int remaining, std::vector<int>& cur, std::vector<Monomial>& out) {
    const int last = static_cast<int>(cur.size()) - 1;
    if (pos == last) {
        cur[static_cast<std::size_t>(pos)] = remaining;
        out.emplace_back(cur);
        cur[static_cast<std::size_t>(pos)] = 0;
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        cur[static_cast<std::size_t>(pos)] = e;
        gen_block(pos + 1, remaining - e, cur, out);
    }
    cur[static_cast<std::size_t>(pos)] = 0;
}

}  // namespace

std::vector<Monomial> monomial_listing(int nvars, int cutoff) {
    if (nvars < 1 || cutoff < 0) {
        throw std::invalid_argument("monomial_listing: need nvars >= 1 and cutoff >= 0");
    }
    std::vector<Monomial> out;
    std::vector<int> cur(static_cast<std::size_t>(nvars), 0);
    for (int d = 0; d <= cutoff; ++d) {
        gen_block(0, d, cur, out);
    }
    return out;
}

std::vector<Scalar> encode_sequence(const Polynomial& p, int cutoff) {
    if (cutoff < p.degree() || cutoff < 0) {
        throw std::invalid_argument("encode_sequence: cutoff below the degree of p");
    }
    const std::vector<Monomial> listing = monomial_listing(p.nvars(), cutoff);
    std::vector<Scalar> seq;
    seq.reserve(listing.size());
    for (const Monomial& m : listing) {
        seq.push_back(p.coefficient(m));
    }
    return seq;
}

Polynomial decode_sequence(int nvars, const std::vector<Scalar>& seq, int cutoff) {
    const std::vector<Monomial> listing = monomial_listing(nvars, cutoff);
    if (seq.size() != listing.size()) {
        throw std::invalid_argument("decode_sequence: sequence length does not match the listing");
    }
    Polynomial p(nvars);
    for (std::size_t i = 0; i < seq.size(); ++i) {
        p.add_term(listing[i], seq[i]);
    }
    return p;
}

}  // namespace linfield
