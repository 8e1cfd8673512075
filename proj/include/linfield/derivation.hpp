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

#ifndef LINFIELD_DERIVATION_HPP
#define LINFIELD_DERIVATION_HPP

#include <string>
#include <vector>

#include "linfield/ratfunc.hpp"

namespace linfield {

/// A tuple of field elements: a vector in the A-module A^dim.
///
/// A VectorA of dimension n over n variables plays two roles: the
/// coefficient tuple (a1, ..., an) of a derivation L = sum a_i d_i, and the
/// gradient of a field element. Bordered rows of dimension n+1 also occur.
class VectorA {
  public:
    explicit VectorA(std::vector<RatFunc> coords);

    /// The k-th unit vector of dimension dim over nvars variables.
    static VectorA unit(int nvars, int dim, int k);
    static VectorA zero(int nvars, int dim);

    std::size_t dim() const { return coords_.size(); }
    int nvars() const { return coords_.front().nvars(); }
    const RatFunc& operator[](std::size_t i) const { return coords_[i]; }
    const std::vector<RatFunc>& coords() const { return coords_; }

    bool is_zero() const;

    VectorA operator+(const VectorA& o) const;
    VectorA operator-(const VectorA& o) const;
    /// Component-wise multiplication by a field element.
    VectorA scaled(const RatFunc& f) const;

    bool operator==(const VectorA& o) const { return coords_ == o.coords_; }

    /// "(x1, x2)" style, components in canonical form.
    std::string str() const;

  private:
    std::vector<RatFunc> coords_;
};

/// The partial derivative d_i psi (var is 0-based). Fractions follow the
/// quotient rule, which is forced by the Leibniz and power rules.
RatFunc partial(int var, const RatFunc& psi);

/// The gradient (d_1 psi, ..., d_n psi).
VectorA grad(const RatFunc& psi);

/// The inner product sum_i u_i v_i; dimensions must agree.
RatFunc inner_product(const VectorA& u, const VectorA& v);

/// Applies the derivation with coefficient tuple a: sum_i a_i d_i psi.
RatFunc apply_derivation(const VectorA& a, const RatFunc& psi);

/// Checks the chain rule for the composition psi(phi_1, ..., phi_r) at
/// variable var: d_var(psi o phi) = sum_j (D_j psi o phi) * d_var phi_j.
/// True for every valid input; the intermediate partials D_j are taken in
/// psi's formal variables and then composed.
bool chain_rule_check(const RatFunc& psi, const std::vector<RatFunc>& phi, int var);

}  // namespace linfield

#endif  // LINFIELD_DERIVATION_HPP
