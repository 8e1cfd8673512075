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

#ifndef LINFIELD_OPERATORS_HPP
#define LINFIELD_OPERATORS_HPP

#include <string>
#include <vector>

#include "linfield/derivation.hpp"
#include "linfield/ratfunc.hpp"

namespace linfield {

/// The non-homogeneous first-order operator L + q, with L = sum a_i d_i.
/// Operators are identified with their coefficient tuple (a_1, ..., a_n, q),
/// so equality is decided component-wise.
class NHOperator {
  public:
    NHOperator(VectorA a, RatFunc q);

    /// The homogeneous operator L + 0.
    explicit NHOperator(VectorA a);

    const VectorA& a() const { return a_; }
    const RatFunc& q() const { return q_; }
    int nvars() const { return q_.nvars(); }
    bool is_homogeneous() const { return q_.is_zero(); }

    bool operator==(const NHOperator& o) const { return a_ == o.a_ && q_ == o.q_; }

    /// "x1*d1 + x2*d2 - 1" style.
    std::string str() const;

  private:
    VectorA a_;
    RatFunc q_;
};

/// (L + q) psi = sum a_i d_i psi + q psi.
RatFunc nh_apply(const NHOperator& op, const RatFunc& psi);

/// True iff (L + q) psi = 0.
bool in_kernel(const NHOperator& op, const RatFunc& psi);

/// The conjugated operator eta L eta^{-1} = L + q with q = -eta^{-1} L eta.
/// Throws ZeroEtaError when eta = 0. The result always has eta in its
/// kernel.
NHOperator conjugate(const VectorA& a, const RatFunc& eta);

/// Forward inclusion of Ker(L + q) = eta Ker L: given eta in Ker(L + q) and
/// phi in Ker L (preconditions, PreconditionError otherwise), reports
/// whether eta * phi lies in Ker(L + q). Always true.
bool verify_product_structure(const VectorA& a, const RatFunc& q, const RatFunc& eta,
                              const RatFunc& phi);

/// Reverse inclusion: given eta, psi in Ker(L + q) with eta != 0, reports
/// whether psi / eta lies in Ker L. Always true.
bool verify_kernel_factorization(const VectorA& a, const RatFunc& q, const RatFunc& eta,
                                 const RatFunc& psi);

/// Ratio of two particular solutions of (L + q) psi = 0 solves the
/// homogeneous equation: reports whether xi / eta lies in Ker L. Requires
/// xi, eta in Ker(L + q) and eta != 0.
bool ratio_in_homogeneous_kernel(const VectorA& a, const RatFunc& q, const RatFunc& xi,
                                 const RatFunc& eta);

/// Coset structure of (L + q) chi = b: given (L + q) chi0 = b and psi in
/// Ker(L + q) (preconditions), reports whether chi0 + psi still maps to b.
/// Always true.
bool verify_affine_solutions(const NHOperator& op, const RatFunc& b, const RatFunc& chi0,
                             const RatFunc& psi);

/// Kernel size bound for the homogeneous equation: given candidates that all
/// lie in Ker L, reports whether their gradient matrix has rank <= n - 1.
/// Always true.
bool kernel_rank_bound(const VectorA& a, const std::vector<RatFunc>& candidates);

/// Bordered variant for Ker(L + q): the rank of the matrix with rows
/// (grad psi_k, psi_k), which never exceeds n. Requires every candidate in
/// Ker(L + q).
int bordered_kernel_rank(const NHOperator& op, const std::vector<RatFunc>& candidates);

}  // namespace linfield

#endif  // LINFIELD_OPERATORS_HPP
