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

#include "linfield/monomial.hpp"

#include <numeric>
#include <stdexcept>

namespace linfield {

namespace {

// Invariant: total degree never exceeds this, so int arithmetic on
// exponents and degrees cannot wrap.
constexpr int kMaxDegree = 100000000;

}  // namespace

Monomial::Monomial(std::vector<int> exponents) : e_(std::move(exponents)), deg_(0) {
    for (const int e : e_) {
        if (e < 0) {
            throw std::invalid_argument("Monomial: exponents must be nonnegative");
        }
        if (e > kMaxDegree - deg_) {
            throw std::overflow_error("Monomial: degree too large");
        }
        deg_ += e;
    }
}

Monomial Monomial::operator*(const Monomial& o) const {
    if (e_.size() != o.e_.size()) {
        throw std::invalid_argument("Monomial: variable count mismatch");
    }
    if (deg_ > kMaxDegree - o.deg_) {
        throw std::overflow_error("Monomial: degree too large");
    }
    Monomial r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) {
        r.e_[i] += o.e_[i];
    }
    r.deg_ += o.deg_;
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    if (e_.size() != o.e_.size()) {
        throw std::invalid_argument("Monomial: variable count mismatch");
    }
    for (std::size_t i = 0; i < e_.size(); ++i) {
        if (e_[i] > o.e_[i]) {
            return false;
        }
    }
    return true;
}

Monomial Monomial::divided_by(const Monomial& o) const {
    if (!o.divides(*this)) {
        throw std::invalid_argument("Monomial: not divisible");
    }
    Monomial r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) {
        r.e_[i] -= o.e_[i];
    }
    r.deg_ -= o.deg_;
    return r;
}

Monomial Monomial::shifted(int var, int amount) const {
    Monomial r(*this);
    auto& e = r.e_[static_cast<std::size_t>(var)];
    if (e + amount < 0) {
        throw std::invalid_argument("Monomial: shift would make an exponent negative");
    }
    if (amount > 0 && deg_ > kMaxDegree - amount) {
        throw std::overflow_error("Monomial: degree too large");
    }
    e += amount;
    r.deg_ += amount;
    return r;
}

std::string Monomial::str() const {
    if (is_unit()) {
        return "1";
    }
    std::string s;
    for (std::size_t i = 0; i < e_.size(); ++i) {
        if (e_[i] == 0) {
            continue;
        }
        if (!s.empty()) {
            s += '*';
        }
        s += 'x';
        s += std::to_string(i + 1);
        if (e_[i] > 1) {
            s += '^';
            s += std::to_string(e_[i]);
        }
    }
    return s;
}

}  // namespace linfield
