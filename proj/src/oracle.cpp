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

#include "linfield/oracle.hpp"

#include <stdexcept>

#include "linfield/errors.hpp"

namespace linfield {

namespace {

// Keeps the Schwartz-Zippel failure probability per trial at most
// degree / (2 * kPointBound).
constexpr long kPointBound = 1000000;

void check_params(const GenParams& params) {
    if (params.nvars < 1 || params.max_degree < 0 || params.max_terms < 1 ||
        params.coeff_bound < 1) {
        throw std::invalid_argument("GenParams: need nvars >= 1, max_degree >= 0, "
                                    "max_terms >= 1, coeff_bound >= 1");
    }
}

}  // namespace

long Rng::uniform(long lo, long hi) {
    if (lo > hi) {
        throw std::invalid_argument("Rng: empty range");
    }
    const std::uint64_t width = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % width;
    std::uint64_t r = eng_();
    while (r >= limit) {
        r = eng_();
    }
    return lo + static_cast<long>(r % width);
}

Scalar random_scalar(Rng& rng, long coeff_bound) {
    long num = 0;
    while (num == 0) {
        num = rng.uniform(-coeff_bound, coeff_bound);
    }
    return Scalar(num, rng.uniform(1, coeff_bound));
}

Monomial random_monomial(Rng& rng, int nvars, int max_degree) {
    std::vector<int> exps(static_cast<std::size_t>(nvars), 0);
    const long d = rng.uniform(0, max_degree);
    for (long i = 0; i < d; ++i) {
        ++exps[static_cast<std::size_t>(rng.uniform(0, nvars - 1))];
    }
    return Monomial(std::move(exps));
}

Polynomial random_polynomial(Rng& rng, const GenParams& params) {
    check_params(params);
    Polynomial p(params.nvars);
    const long terms = rng.uniform(1, params.max_terms);
    for (long t = 0; t < terms; ++t) {
        p.add_term(random_monomial(rng, params.nvars, params.max_degree),
                   random_scalar(rng, params.coeff_bound));
    }
    return p;
}

Polynomial random_nonzero_polynomial(Rng& rng, const GenParams& params) {
    Polynomial p = random_polynomial(rng, params);
    while (p.is_zero()) {
        p = random_polynomial(rng, params);
    }
    return p;
}

RatFunc random_ratfunc(Rng& rng, const GenParams& params) {
    Polynomial num = random_polynomial(rng, params);
    Polynomial den = random_nonzero_polynomial(rng, params);
    return RatFunc(std::move(num), std::move(den));
}

RatFunc random_nonzero_ratfunc(Rng& rng, const GenParams& params) {
    RatFunc f = random_ratfunc(rng, params);
    while (f.is_zero()) {
        f = random_ratfunc(rng, params);
    }
    return f;
}

RatFunc random_ratfunc(const GenParams& params) {
    Rng rng(params.seed);
    return random_ratfunc(rng, params);
}

std::vector<Scalar> random_point(Rng& rng, int nvars, long bound) {
    std::vector<Scalar> point;
    point.reserve(static_cast<std::size_t>(nvars));
    for (int v = 0; v < nvars; ++v) {
        point.push_back(Scalar(rng.uniform(-bound, bound)));
    }
    return point;
}

bool identity_check(const RatFunc& lhs, const RatFunc& rhs, int trials, std::uint64_t seed) {
    if (trials < 1) {
        throw std::invalid_argument("identity_check: need at least one trial");
    }
    if (lhs.nvars() != rhs.nvars()) {
        throw std::invalid_argument("identity_check: variable count mismatch");
    }
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        bool evaluated = false;
        for (int attempt = 0; attempt < 50 && !evaluated; ++attempt) {
            const std::vector<Scalar> point = random_point(rng, lhs.nvars(), kPointBound);
            try {
                const Scalar lv = lhs.eval(point);
                const Scalar rv = rhs.eval(point);
                evaluated = true;
                if (!(lv == rv)) {
                    return false;
                }
            } catch (const PoleError&) {
                // redraw; silently skipping without bound would bias the check
            }
        }
        if (!evaluated) {
            throw Error("identity_check: no pole-free evaluation point found in 50 draws");
        }
    }
    return true;
}

}  // namespace linfield
