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

#include "linfield/derivation.hpp"

#include <stdexcept>

namespace linfield {

VectorA::VectorA(std::vector<RatFunc> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) {
        throw std::invalid_argument("VectorA: empty coordinate list");
    }
    const int n = coords_.front().nvars();
    for (const RatFunc& c : coords_) {
        if (c.nvars() != n) {
            throw std::invalid_argument("VectorA: mixed variable counts");
        }
    }
}

VectorA VectorA::unit(int nvars, int dim, int k) {
    if (k < 0 || k >= dim) {
        throw std::invalid_argument("VectorA: unit index out of range");
    }
    std::vector<RatFunc> coords(static_cast<std::size_t>(dim), RatFunc(nvars));
    coords[static_cast<std::size_t>(k)] = RatFunc::one(nvars);
    return VectorA(std::move(coords));
}

VectorA VectorA::zero(int nvars, int dim) {
    return VectorA(std::vector<RatFunc>(static_cast<std::size_t>(dim), RatFunc(nvars)));
}

bool VectorA::is_zero() const {
    for (const RatFunc& c : coords_) {
        if (!c.is_zero()) {
            return false;
        }
    }
    return true;
}

VectorA VectorA::operator+(const VectorA& o) const {
    if (dim() != o.dim()) {
        throw std::invalid_argument("VectorA: dimension mismatch");
    }
    std::vector<RatFunc> coords;
    coords.reserve(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
        coords.push_back(coords_[i] + o.coords_[i]);
    }
    return VectorA(std::move(coords));
}

VectorA VectorA::operator-(const VectorA& o) const {
    if (dim() != o.dim()) {
        throw std::invalid_argument("VectorA: dimension mismatch");
    }
    std::vector<RatFunc> coords;
    coords.reserve(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
        coords.push_back(coords_[i] - o.coords_[i]);
    }
    return VectorA(std::move(coords));
}

VectorA VectorA::scaled(const RatFunc& f) const {
    std::vector<RatFunc> coords;
    coords.reserve(dim());
    for (const RatFunc& c : coords_) {
        coords.push_back(c * f);
    }
    return VectorA(std::move(coords));
}

std::string VectorA::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i > 0) {
            s += ", ";
        }
        s += coords_[i].str();
    }
    return s + ")";
}

RatFunc partial(int var, const RatFunc& psi) {
    if (var < 0 || var >= psi.nvars()) {
        throw std::invalid_argument("partial: variable index out of range");
    }
    if (psi.is_polynomial()) {
        return RatFunc(psi.num().partial(var));
    }
    // Quotient rule (P2 * d P1 - P1 * d P2) / P2^2, with the common factor
    // gcd(P2, d P2) cancelled up front to keep the final reduction small.
    const Polynomial dden = psi.den().partial(var);
    const Polynomial h = gcd(psi.den(), dden);
    if (h.is_one()) {
        return RatFunc(psi.den() * psi.num().partial(var) - psi.num() * dden,
                       psi.den() * psi.den());
    }
    const Polynomial reduced = divide_exact(psi.den(), h);
    return RatFunc(reduced * psi.num().partial(var) - psi.num() * divide_exact(dden, h),
                   psi.den() * reduced);
}

VectorA grad(const RatFunc& psi) {
    std::vector<RatFunc> coords;
    coords.reserve(static_cast<std::size_t>(psi.nvars()));
    for (int v = 0; v < psi.nvars(); ++v) {
        coords.push_back(partial(v, psi));
    }
    return VectorA(std::move(coords));
}

RatFunc inner_product(const VectorA& u, const VectorA& v) {
    if (u.dim() != v.dim() || u.nvars() != v.nvars()) {
        throw std::invalid_argument("inner_product: dimension mismatch");
    }
    RatFunc acc(u.nvars());
    for (std::size_t i = 0; i < u.dim(); ++i) {
        acc += u[i] * v[i];
    }
    return acc;
}

RatFunc apply_derivation(const VectorA& a, const RatFunc& psi) {
    if (static_cast<int>(a.dim()) != psi.nvars() || a.nvars() != psi.nvars()) {
        throw std::invalid_argument("apply_derivation: coefficient tuple must have one entry per variable");
    }
    return inner_product(a, grad(psi));
}

bool chain_rule_check(const RatFunc& psi, const std::vector<RatFunc>& phi, int var) {
    const RatFunc composed = substitute(psi, phi);
    const RatFunc lhs = partial(var, composed);
    RatFunc rhs(composed.nvars());
    for (std::size_t j = 0; j < phi.size(); ++j) {
        const RatFunc dj = partial(static_cast<int>(j), psi);
        rhs += substitute(dj, phi) * partial(var, phi[j]);
    }
    return lhs == rhs;
}

}  // namespace linfield
