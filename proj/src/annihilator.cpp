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

#include "linfield/annihilator.hpp"

#include <stdexcept>

#include "linfield/errors.hpp"
#include "linfield/independence.hpp"

namespace linfield {

VectorA annihilate(const std::vector<RatFunc>& phi) {
    if (phi.empty()) {
        throw std::invalid_argument("annihilate: need at least one element (n >= 2)");
    }
    const int n = phi.front().nvars();
    if (static_cast<int>(phi.size()) != n - 1) {
        throw DependentInputError("annihilate: expected exactly n-1 elements");
    }

    const JacobianMatrix jac = jacobian(phi);
    std::vector<std::vector<Polynomial>> cleared;
    cleared.reserve(phi.size());
    for (int r = 0; r < jac.rows(); ++r) {
        cleared.push_back(detail::clear_denominators(jac.row(r).coords()));
    }
    const detail::PolyEchelon ech = detail::bareiss_echelon(std::move(cleared));
    if (ech.rank() != n - 1) {
        throw DependentInputError("annihilate: elements are functionally dependent");
    }

    // Exactly one free column; solve backwards for the pivot coordinates.
    std::vector<char> is_pivot(static_cast<std::size_t>(n), 0);
    for (const int c : ech.pivot_cols) {
        is_pivot[static_cast<std::size_t>(c)] = 1;
    }
    int free_col = 0;
    while (is_pivot[static_cast<std::size_t>(free_col)]) {
        ++free_col;
    }

    std::vector<RatFunc> sol(static_cast<std::size_t>(n), RatFunc(n));
    sol[static_cast<std::size_t>(free_col)] = RatFunc::one(n);
    for (int k = ech.rank() - 1; k >= 0; --k) {
        const auto& row = ech.rows[static_cast<std::size_t>(k)];
        const int pc = ech.pivot_cols[static_cast<std::size_t>(k)];
        RatFunc acc(n);
        for (int c = 0; c < n; ++c) {
            if (c == pc || row[static_cast<std::size_t>(c)].is_zero()) {
                continue;
            }
            acc += RatFunc(row[static_cast<std::size_t>(c)]) * sol[static_cast<std::size_t>(c)];
        }
        sol[static_cast<std::size_t>(pc)] = -(acc / RatFunc(row[static_cast<std::size_t>(pc)]));
    }

    // Normalize: clear denominators, divide out the entry gcd, and make the
    // first nonzero entry's leading coefficient positive.
    std::vector<Polynomial> cleared_sol = detail::clear_denominators(sol);
    std::vector<Polynomial> nonzero;
    for (const Polynomial& p : cleared_sol) {
        if (!p.is_zero()) {
            nonzero.push_back(p);
        }
    }
    const Polynomial g = gcd_many(nonzero);
    bool flip = false;
    std::vector<RatFunc> out;
    out.reserve(cleared_sol.size());
    bool seen_nonzero = false;
    for (Polynomial& p : cleared_sol) {
        if (!p.is_zero()) {
            p = divide_exact(p, g);
            if (!seen_nonzero) {
                seen_nonzero = true;
                flip = p.leading_coefficient().sign() < 0;
            }
        }
        out.emplace_back(flip ? -p : std::move(p));
    }
    return VectorA(std::move(out));
}

NHOperator coset_operator(const std::vector<RatFunc>& phi, const RatFunc& eta) {
    return conjugate(annihilate(phi), eta);
}

bool kernel_membership(const VectorA& a, const RatFunc& xi) {
    return apply_derivation(a, xi).is_zero();
}

bool coset_membership(const VectorA& a, const RatFunc& eta, const RatFunc& xi) {
    if (eta.is_zero()) {
        throw ZeroEtaError("coset_membership: eta must be nonzero");
    }
    return kernel_membership(a, xi / eta);
}

}  // namespace linfield
