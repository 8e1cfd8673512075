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

#include "linfield/operators.hpp"

#include <stdexcept>

#include "linfield/errors.hpp"
#include "linfield/independence.hpp"

namespace linfield {

NHOperator::NHOperator(VectorA a, RatFunc q) : a_(std::move(a)), q_(std::move(q)) {
    if (static_cast<int>(a_.dim()) != a_.nvars() || a_.nvars() != q_.nvars()) {
        throw std::invalid_argument("NHOperator: coefficient tuple must have one entry per variable");
    }
}

NHOperator::NHOperator(VectorA a) : a_(std::move(a)), q_(a_.nvars()) {
    if (static_cast<int>(a_.dim()) != a_.nvars()) {
        throw std::invalid_argument("NHOperator: coefficient tuple must have one entry per variable");
    }
}

namespace {

// One printable summand; empty string means "skip".
std::string operator_piece(const RatFunc& coeff, const std::string& symbol) {
    if (coeff.is_zero()) {
        return "";
    }
    if (coeff.is_one()) {
        return symbol;
    }
    if (coeff == -RatFunc::one(coeff.nvars())) {
        return "-" + symbol;
    }
    if (coeff.is_polynomial() && coeff.num().term_count() == 1) {
        return coeff.str() + "*" + symbol;
    }
    return "(" + coeff.str() + ")*" + symbol;
}

}  // namespace

std::string NHOperator::str() const {
    std::vector<std::string> pieces;
    for (std::size_t i = 0; i < a_.dim(); ++i) {
        const std::string p = operator_piece(a_[i], "d" + std::to_string(i + 1));
        if (!p.empty()) {
            pieces.push_back(p);
        }
    }
    if (!q_.is_zero()) {
        pieces.push_back(q_.str());
    }
    if (pieces.empty()) {
        return "0";
    }
    std::string s = pieces.front();
    for (std::size_t i = 1; i < pieces.size(); ++i) {
        if (pieces[i].front() == '-') {
            s += " - " + pieces[i].substr(1);
        } else {
            s += " + " + pieces[i];
        }
    }
    return s;
}

RatFunc nh_apply(const NHOperator& op, const RatFunc& psi) {
    return apply_derivation(op.a(), psi) + op.q() * psi;
}

bool in_kernel(const NHOperator& op, const RatFunc& psi) {
    return nh_apply(op, psi).is_zero();
}

NHOperator conjugate(const VectorA& a, const RatFunc& eta) {
    if (eta.is_zero()) {
        throw ZeroEtaError("conjugate: eta must be nonzero");
    }
    return NHOperator(a, -(apply_derivation(a, eta) / eta));
}

bool verify_product_structure(const VectorA& a, const RatFunc& q, const RatFunc& eta,
                              const RatFunc& phi) {
    const NHOperator op(a, q);
    const NHOperator hom(a);
    if (!in_kernel(op, eta)) {
        throw PreconditionError("verify_product_structure: eta is not in Ker(L + q)");
    }
    if (!in_kernel(hom, phi)) {
        throw PreconditionError("verify_product_structure: phi is not in Ker L");
    }
    return in_kernel(op, eta * phi);
}

bool verify_kernel_factorization(const VectorA& a, const RatFunc& q, const RatFunc& eta,
                                 const RatFunc& psi) {
    if (eta.is_zero()) {
        throw ZeroEtaError("verify_kernel_factorization: eta must be nonzero");
    }
    const NHOperator op(a, q);
    if (!in_kernel(op, eta)) {
        throw PreconditionError("verify_kernel_factorization: eta is not in Ker(L + q)");
    }
    if (!in_kernel(op, psi)) {
        throw PreconditionError("verify_kernel_factorization: psi is not in Ker(L + q)");
    }
    return in_kernel(NHOperator(a), psi / eta);
}

bool ratio_in_homogeneous_kernel(const VectorA& a, const RatFunc& q, const RatFunc& xi,
                                 const RatFunc& eta) {
    if (eta.is_zero()) {
        throw ZeroEtaError("ratio_in_homogeneous_kernel: eta must be nonzero");
    }
    const NHOperator op(a, q);
    if (!in_kernel(op, xi)) {
        throw PreconditionError("ratio_in_homogeneous_kernel: xi is not in Ker(L + q)");
    }
    if (!in_kernel(op, eta)) {
        throw PreconditionError("ratio_in_homogeneous_kernel: eta is not in Ker(L + q)");
    }
    return in_kernel(NHOperator(a), xi / eta);
}

bool verify_affine_solutions(const NHOperator& op, const RatFunc& b, const RatFunc& chi0,
                             const RatFunc& psi) {
    if (!(nh_apply(op, chi0) == b)) {
        throw PreconditionError("verify_affine_solutions: chi0 is not a particular solution");
    }
    if (!in_kernel(op, psi)) {
        throw PreconditionError("verify_affine_solutions: psi is not in Ker(L + q)");
    }
    return nh_apply(op, chi0 + psi) == b;
}

bool kernel_rank_bound(const VectorA& a, const std::vector<RatFunc>& candidates) {
    if (candidates.empty()) {
        throw std::invalid_argument("kernel_rank_bound: empty candidate set");
    }
    const NHOperator hom(a);
    for (const RatFunc& c : candidates) {
        if (!in_kernel(hom, c)) {
            throw PreconditionError("kernel_rank_bound: candidate is not in Ker L");
        }
    }
    return rank(jacobian(candidates)) <= static_cast<int>(a.dim()) - 1;
}

int bordered_kernel_rank(const NHOperator& op, const std::vector<RatFunc>& candidates) {
    if (candidates.empty()) {
        throw std::invalid_argument("bordered_kernel_rank: empty candidate set");
    }
    const int n = op.nvars();
    std::vector<RatFunc> entries;
    entries.reserve(candidates.size() * static_cast<std::size_t>(n + 1));
    for (const RatFunc& psi : candidates) {
        if (!in_kernel(op, psi)) {
            throw PreconditionError("bordered_kernel_rank: candidate is not in Ker(L + q)");
        }
        for (int v = 0; v < n; ++v) {
            entries.push_back(partial(v, psi));
        }
        entries.push_back(psi);
    }
    return rank(JacobianMatrix(static_cast<int>(candidates.size()), n + 1, std::move(entries)));
}

}  // namespace linfield
