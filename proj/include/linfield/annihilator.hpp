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

#ifndef LINFIELD_ANNIHILATOR_HPP
#define LINFIELD_ANNIHILATOR_HPP

#include <vector>

#include "linfield/operators.hpp"

namespace linfield {

/// From n-1 functionally independent elements, the coefficient tuple of the
/// (up to scale unique) derivation annihilating all of them: the nullspace
/// line of the gradient matrix.
///
/// The result is normalized: polynomial entries, entry gcd 1, and a positive
/// leading coefficient in the first nonzero entry. Throws
/// DependentInputError unless exactly n-1 independent elements are given.
VectorA annihilate(const std::vector<RatFunc>& phi);

/// The non-homogeneous operator attached to the coset eta * S:
/// conjugate(annihilate(phi), eta). Throws ZeroEtaError when eta = 0.
NHOperator coset_operator(const std::vector<RatFunc>& phi, const RatFunc& eta);

/// Membership in Ker L for L with coefficient tuple a. This is the decidable
/// proxy for membership in the generated subfield S: Ker L always contains
/// S, and can be strictly larger.
bool kernel_membership(const VectorA& a, const RatFunc& xi);

/// Membership of xi in the coset eta * Ker L, decided through the ratio.
/// Throws ZeroEtaError when eta = 0.
bool coset_membership(const VectorA& a, const RatFunc& eta, const RatFunc& xi);

}  // namespace linfield

#endif  // LINFIELD_ANNIHILATOR_HPP
