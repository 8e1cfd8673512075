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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "linfield/errors.hpp"
#include "linfield/independence.hpp"
#include "test_helpers.hpp"

using namespace linfield;
using namespace linfield::testing;

TEST_CASE("jacobian rows are the gradients") {
    const JacobianMatrix j = jacobian({rf(2, "x1 + x2"), rf(2, "x1*x2")});
    CHECK(j.rows() == 2);
    CHECK(j.cols() == 2);
    CHECK(j.row(0) == vec(2, {"1", "1"}));
    CHECK(j.row(1) == vec(2, {"x2", "x1"}));

    const JacobianMatrix scalar_row = jacobian({rf(2, "5/3")});
    CHECK(scalar_row.row(0).is_zero());

    CHECK(jacobian({rf(2, "x1/x2")}).row(0) == vec(2, {"1/x2", "-x1/x2^2"}));

    CHECK_THROWS_AS(jacobian({}), std::invalid_argument);
}

TEST_CASE("rank over the field") {
    CHECK(rank(jacobian({rf(2, "x1 + x2"), rf(2, "x1*x2")})) == 2);  // det = x1 - x2

    // Rows grad(phi) and grad(phi^2) are proportional.
    const RatFunc phi = rf(2, "x1^2/x2 + x1");
    CHECK(rank(jacobian({phi, phi * phi})) == 1);

    CHECK(rank(jacobian({rf(2, "4"), rf(2, "-1/2")})) == 0);  // zero matrix
}

TEST_CASE("rank is invariant under row scaling and swaps") {
    Rng rng(53);
    const GenParams params{.nvars = 3, .max_degree = 2, .max_terms = 2, .coeff_bound = 4};
    for (int i = 0; i < 15; ++i) {
        std::vector<RatFunc> phi;
        for (int k = 0; k < 3; ++k) {
            phi.push_back(random_ratfunc(rng, params));
        }
        const JacobianMatrix j = jacobian(phi);
        const int base = rank(j);

        const RatFunc scale = random_nonzero_ratfunc(rng, params);
        std::vector<RatFunc> scaled_entries;
        for (int r = 0; r < j.rows(); ++r) {
            for (int c = 0; c < j.cols(); ++c) {
                scaled_entries.push_back(r == 1 ? j.at(r, c) * scale : j.at(r, c));
            }
        }
        CHECK(rank(JacobianMatrix(j.rows(), j.cols(), std::move(scaled_entries))) == base);

        std::vector<RatFunc> swapped_entries;
        const int order[3] = {2, 0, 1};
        for (const int r : order) {
            for (int c = 0; c < j.cols(); ++c) {
                swapped_entries.push_back(j.at(r, c));
            }
        }
        CHECK(rank(JacobianMatrix(j.rows(), j.cols(), std::move(swapped_entries))) == base);
    }
}

TEST_CASE("functional independence criterion") {
    CHECK(is_functionally_independent({rf(2, "x1 + x2"), rf(2, "x1*x2")}));
    const RatFunc psi = rf(2, "x1/x2 + x2");
    CHECK_FALSE(is_functionally_independent({psi, psi * psi}));
    // r = n + 1 is rejected outright.
    CHECK_FALSE(is_functionally_independent(
        {rf(2, "x1"), rf(2, "x2"), rf(2, "x1 + x2^2")}));
}

TEST_CASE("the generating set is independent") {
    for (int n = 1; n <= 4; ++n) {
        std::vector<RatFunc> gens;
        for (int v = 0; v < n; ++v) {
            gens.push_back(RatFunc::variable(n, v));
        }
        CHECK(is_functionally_independent(gens));
        CHECK(rank(jacobian(gens)) == n);
    }
}

TEST_CASE("a function of the set makes it dependent") {
    Rng rng(59);
    int done = 0;
    while (done < 25) {
        const int n = static_cast<int>(rng.uniform(2, 4));
        const int r = static_cast<int>(rng.uniform(1, n - 1));
        const GenParams params{.nvars = n, .max_degree = 2, .max_terms = 2, .coeff_bound = 4};
        std::vector<RatFunc> phi;
        for (int k = 0; k < r; ++k) {
            phi.push_back(random_ratfunc(rng, params));
        }
        const RatFunc f = random_ratfunc(rng, GenParams{r, 2, 2, 4, rng.next()});
        try {
            std::vector<RatFunc> extended = phi;
            extended.push_back(substitute(f, phi));
            CHECK_FALSE(is_functionally_independent(extended));
            ++done;
        } catch (const UndefinedCompositionError&) {
        }
    }
}

TEST_CASE("evaluation rank never exceeds symbolic rank") {
    Rng rng(61);
    int agreements = 0;
    int trials = 0;
    for (int i = 0; i < 20; ++i) {
        const int n = static_cast<int>(rng.uniform(2, 3));
        const GenParams params{.nvars = n, .max_degree = 2, .max_terms = 2, .coeff_bound = 4};
        std::vector<RatFunc> phi;
        for (int k = 0; k < n; ++k) {
            phi.push_back(random_ratfunc(rng, params));
        }
        const JacobianMatrix j = jacobian(phi);
        const int symbolic = rank(j);
        for (int t = 0; t < 10; ++t) {
            try {
                const int numeric = rank_at_point(j, random_point(rng, n, 1000000));
                CHECK(numeric <= symbolic);
                agreements += numeric == symbolic ? 1 : 0;
                ++trials;
            } catch (const PoleError&) {
            }
        }
    }
    // Specializations lose rank only on a measure-zero set of points.
    CHECK(agreements >= trials * 95 / 100);
}
