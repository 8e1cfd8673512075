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

#ifndef LINFIELD_MONOMIAL_HPP
#define LINFIELD_MONOMIAL_HPP

#include <compare>
#include <string>
#include <vector>

namespace linfield {

/// A power product x1^e1 * ... * xn^en with nonnegative exponents.
///
/// Totally ordered by graded lexicographic order: lower total degree first,
/// equal degrees compared lexicographically with x1 dominant (so within one
/// degree x_n^d is smallest and x_1^d is greatest).
class Monomial {
  public:
    explicit Monomial(int nvars) : e_(static_cast<std::size_t>(nvars), 0), deg_(0) {}
    explicit Monomial(std::vector<int> exponents);

    int nvars() const { return static_cast<int>(e_.size()); }
    int exponent(int var) const { return e_[static_cast<std::size_t>(var)]; }
    int degree() const { return deg_; }
    bool is_unit() const { return deg_ == 0; }

    const std::vector<int>& exponents() const { return e_; }

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    Monomial divided_by(const Monomial& o) const;

    /// Same monomial with exponent(var) raised by amount (may be negative as
    /// long as the result stays nonnegative).
    Monomial shifted(int var, int amount) const;

    bool operator==(const Monomial& o) const { return deg_ == o.deg_ && e_ == o.e_; }

    std::strong_ordering operator<=>(const Monomial& o) const {
        if (deg_ != o.deg_) {
            return deg_ <=> o.deg_;
        }
        return std::lexicographical_compare_three_way(e_.begin(), e_.end(),
                                                      o.e_.begin(), o.e_.end());
    }

    /// "x1^2*x2" style; the unit monomial prints as "1".
    std::string str() const;

  private:
    std::vector<int> e_;
    int deg_;
};

}  // namespace linfield

#endif  // LINFIELD_MONOMIAL_HPP
