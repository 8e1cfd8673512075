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

#ifndef LINFIELD_ORACLE_HPP
#define LINFIELD_ORACLE_HPP

#include <cstdint>
#include <random>

#include "linfield/ratfunc.hpp"

namespace linfield {

/// Parameters for random instance generation. Identical parameters and seed
/// always reproduce identical instances.
struct GenParams {
    int nvars = 2;
    int max_degree = 2;
    int max_terms = 3;
    long coeff_bound = 5;
    std::uint64_t seed = 0;
};

/// Deterministic random source. The uniform draw uses rejection sampling on
/// the raw mt19937_64 stream, so sequences are identical across platforms
/// and standard libraries (std::uniform_int_distribution is not portable).
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    /// Uniform integer in [lo, hi], inclusive.
    long uniform(long lo, long hi);

  private:
    std::mt19937_64 eng_;
};

Scalar random_scalar(Rng& rng, long coeff_bound);
Monomial random_monomial(Rng& rng, int nvars, int max_degree);
Polynomial random_polynomial(Rng& rng, const GenParams& params);
Polynomial random_nonzero_polynomial(Rng& rng, const GenParams& params);
RatFunc random_ratfunc(Rng& rng, const GenParams& params);
RatFunc random_nonzero_ratfunc(Rng& rng, const GenParams& params);

/// Seeds a fresh generator from params.seed.
RatFunc random_ratfunc(const GenParams& params);

/// Uniform evaluation point with coordinates in [-bound, bound].
std::vector<Scalar> random_point(Rng& rng, int nvars, long bound);

/// Evaluates both sides at `trials` random rational points, redrawing any
/// point (up to 50 times per trial) that hits a pole. Returns false on any
/// mismatch. A true verdict is probabilistic evidence only; the symbolic
/// equality check stays authoritative.
bool identity_check(const RatFunc& lhs, const RatFunc& rhs, int trials, std::uint64_t seed);

}  // namespace linfield

#endif  // LINFIELD_ORACLE_HPP
