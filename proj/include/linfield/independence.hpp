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

#ifndef LINFIELD_INDEPENDENCE_HPP
#define LINFIELD_INDEPENDENCE_HPP

#include <vector>

#include "linfield/derivation.hpp"
#include "linfield/ratfunc.hpp"

namespace linfield {

/// A matrix over the field A. Row j of jacobian(Phi) is grad(phi_j), so
/// entry (j, i) is d_i phi_j.
class JacobianMatrix {
  public:
    JacobianMatrix(int rows, int cols, std::vector<RatFunc> entries);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int nvars() const { return entries_.front().nvars(); }
    const RatFunc& at(int row, int col) const {
        return entries_[static_cast<std::size_t>(row) * static_cast<std::size_t>(cols_) +
                        static_cast<std::size_t>(col)];
    }

    VectorA row(int r) const;

  private:
    int rows_;
    int cols_;
    std::vector<RatFunc> entries_;
};

/// The gradient matrix of a set: one row per element.
JacobianMatrix jacobian(const std::vector<RatFunc>& phi);

/// Exact rank over the field A. A random-evaluation pre-filter certifies
/// full rank cheaply (specialization never gains rank); otherwise the rank
/// is confirmed by fraction-free elimination.
int rank(const JacobianMatrix& m);

/// Rank of the matrix specialized at a point (throws PoleError if any entry
/// has a pole there). Always a lower bound for the symbolic rank.
int rank_at_point(const JacobianMatrix& m, const std::vector<Scalar>& point);

/// Prop-1 criterion: true iff rank(jacobian(phi)) = |phi|. Sets larger than
/// the variable count are rejected immediately.
bool is_functionally_independent(const std::vector<RatFunc>& phi);

namespace detail {

/// Row echelon data from fraction-free (Bareiss) elimination. Row k of the
/// output is the pivot row of step k and pivot_cols[k] its pivot column;
/// the rank is the number of pivots. No column swaps are performed, so the
/// nullspace can be read off directly.
struct PolyEchelon {
    std::vector<std::vector<Polynomial>> rows;
    std::vector<int> pivot_cols;
    int rank() const { return static_cast<int>(pivot_cols.size()); }
};

PolyEchelon bareiss_echelon(std::vector<std::vector<Polynomial>> m);

/// Scales a row of field elements to a common polynomial denominator
/// (preserves rank and nullspace).
std::vector<Polynomial> clear_denominators(const std::vector<RatFunc>& row);

}  // namespace detail

}  // namespace linfield

#endif  // LINFIELD_INDEPENDENCE_HPP
