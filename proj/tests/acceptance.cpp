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

// Acceptance suite: one pass/fail line per criterion, all checks exact
// (zero tolerance), desk scale n <= 4. Every field equality asserted along
// the way is recorded and replayed through the randomized evaluation oracle
// as the final consistency criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "linfield/annihilator.hpp"
#include "linfield/errors.hpp"
#include "linfield/independence.hpp"
#include "linfield/operators.hpp"
#include "linfield/oracle.hpp"
#include "test_helpers.hpp"

using namespace linfield;
using namespace linfield::testing;

namespace {

struct Harness {
    std::vector<std::pair<RatFunc, RatFunc>> equalities;
    bool all_ok = true;

    bool eq(const RatFunc& lhs, const RatFunc& rhs) {
        equalities.emplace_back(lhs, rhs);
        const bool ok = lhs == rhs;
        all_ok = all_ok && ok;
        return ok;
    }

    bool zero(const RatFunc& f) { return eq(f, RatFunc(f.nvars())); }

    bool require(bool ok) {
        all_ok = all_ok && ok;
        return ok;
    }
};

VectorA random_vector(Rng& rng, int n, const GenParams& params) {
    std::vector<RatFunc> coords;
    coords.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        coords.push_back(random_ratfunc(rng, params));
    }
    return VectorA(std::move(coords));
}

// ---------------------------------------------------------------------------

bool criterion_leibniz(Harness& h, std::string& note) {
    Rng rng(101);
    int ok = 0;
    for (int i = 0; i < 200; ++i) {
        const int n = 2 + i % 3;
        const GenParams params{.nvars = n, .max_degree = 2, .max_terms = 2, .coeff_bound = 4};
        const VectorA a = random_vector(rng, n, params);
        const RatFunc psi = random_ratfunc(rng, params);
        const RatFunc phi = random_ratfunc(rng, params);
        ok += h.eq(apply_derivation(a, psi * phi),
                   psi * apply_derivation(a, phi) + phi * apply_derivation(a, psi))
                  ? 1
                  : 0;
    }
    note = std::to_string(ok) + "/200 random triples exact";
    return ok == 200;
}

bool criterion_power_rule(Harness& h, std::string& note) {
    Rng rng(102);
    int ok = 0;
    for (int i = 0; i < 50; ++i) {
        const int n = 2 + i % 3;
        const GenParams params{.nvars = n, .max_degree = 2, .max_terms = 2, .coeff_bound = 4};
        const RatFunc psi = random_nonzero_ratfunc(rng, params);
        const VectorA a = random_vector(rng, n, params);
        const RatFunc lpsi = apply_derivation(a, psi);
        bool inst = true;
        for (long m = -3; m <= 3; ++m) {
            inst = h.eq(apply_derivation(a, psi.pow(m)),
                        RatFunc::constant(n, Scalar(m)) * psi.pow(m - 1) * lpsi) &&
                   inst;
        }
        ok += inst ? 1 : 0;
    }
    note = std::to_string(ok) + "/50 elements, m in {-3..3}, exact";
    return ok == 50;
}

bool criterion_chain_rule(Harness& h, std::string& note) {
    Rng rng(103);
    int ok = 0;
    int made = 0;
    while (made < 100) {
        const int n = 2 + made % 2;
        const int r = 1 + made % 3;
        const GenParams inner{.nvars = n, .max_degree = 2, .max_terms = 2, .coeff_bound = 3};
        const GenParams outer{.nvars = r, .max_degree = 2, .max_terms = 2, .coeff_bound = 3};
        const RatFunc psi = random_ratfunc(rng, outer);
        std::vector<RatFunc> phi;
        for (int j = 0; j < r; ++j) {
            phi.push_back(random_ratfunc(rng, inner));
        }
        RatFunc composed(n);
        try {
            composed = substitute(psi, phi);
        } catch (const UndefinedCompositionError&) {
            continue;  // denominator collapsed; new draw
        }
        ++made;

        bool inst = true;
        // Partial-derivative form: every coordinate direction.
        for (int i = 0; i < n; ++i) {
            RatFunc rhs(n);
            for (int j = 0; j < r; ++j) {
                rhs += substitute(partial(j, psi), phi) * partial(i, phi[j]);
            }
            inst = h.eq(partial(i, composed), rhs) && inst;
            inst = h.require(chain_rule_check(psi, phi, i)) && inst;
        }
        // Derivation form: L through the composition.
        const VectorA a = random_vector(rng, n, inner);
        RatFunc rhs(n);
        for (int j = 0; j < r; ++j) {
            rhs += substitute(partial(j, psi), phi) * apply_derivation(a, phi[j]);
        }
        inst = h.eq(apply_derivation(a, composed), rhs) && inst;
        ok += inst ? 1 : 0;
    }
    note = std::to_string(ok) + "/100 compositions (r <= 3), both rules exact";
    return ok == 100;
}

bool criterion_encoding(Harness& h, std::string& note) {
    const Polynomial p = parse_ratfunc("1/2 + x2 + 3/4*x1^2 + x2^2 + x1^2*x2", 2).num();
    const std::vector<Scalar> seq = encode_sequence(p, 3);
    const std::vector<Scalar> expected = {
        Scalar(1, 2), Scalar(0), Scalar(1), Scalar(3, 4), Scalar(0),
        Scalar(1),    Scalar(0), Scalar(1), Scalar(0),    Scalar(0)};
    const bool match = seq == expected;
    const bool round_trip = h.eq(RatFunc(decode_sequence(2, seq, 3)), RatFunc(p));
    note = match ? "worked example reproduces (1/2, 0, 1, 3/4, 0, 1, 0, 1, 0, 0)"
                 : "sequence mismatch";
    return h.require(match) && round_trip;
}

bool criterion_independence(Harness& h, std::string& note) {
    Rng rng(105);
    bool ok = true;

    // (a) The generating set is independent.
    for (int n = 2; n <= 4; ++n) {
        std::vector<RatFunc> gens;
        for (int v = 0; v < n; ++v) {
            gens.push_back(RatFunc::variable(n, v));
        }
        ok = h.require(is_functionally_independent(gens)) && ok;
    }

    // (b) Constructed dependent sets are detected; evaluation rank never
    // exceeds symbolic rank along the way.
    int detected = 0;
    int rank_points = 0;
    int rank_matches = 0;
    int made = 0;
    while (made < 100) {
        const int n = made % 5 < 2 ? 2 : (made % 5 < 4 ? 3 : 4);
        const int r = 1 + static_cast<int>(rng.uniform(0, n - 2));
        const GenParams params{.nvars = n, .max_degree = 2, .max_terms = 2, .coeff_bound = 3};
        std::vector<RatFunc> phi;
        for (int k = 0; k < r; ++k) {
            phi.push_back(random_ratfunc(rng, params));
        }
        const RatFunc f = random_ratfunc(rng, GenParams{r, 2, 2, 3, rng.next()});
        std::vector<RatFunc> extended = phi;
        try {
            extended.push_back(substitute(f, phi));
        } catch (const UndefinedCompositionError&) {
            continue;
        }
        ++made;
        detected += is_functionally_independent(extended) ? 0 : 1;

        const JacobianMatrix jac = jacobian(extended);
        const int symbolic = rank(jac);
        for (int t = 0; t < 3; ++t) {
            try {
                const int numeric = rank_at_point(jac, random_point(rng, n, 1000000));
                ok = h.require(numeric <= symbolic) && ok;
                ++rank_points;
                rank_matches += numeric == symbolic ? 1 : 0;
            } catch (const PoleError&) {
            }
        }
    }
    ok = h.require(detected == 100) && ok;
    ok = h.require(rank_matches * 100 >= rank_points * 99) && ok;

    // (c) Oversized sets are rejected outright.
    for (int n = 2; n <= 4; ++n) {
        const GenParams params{.nvars = n, .max_degree = 2, .max_terms = 2, .coeff_bound = 3};
        std::vector<RatFunc> big;
        for (int k = 0; k <= n; ++k) {
            big.push_back(random_ratfunc(rng, params));
        }
        ok = h.require(!is_functionally_independent(big)) && ok;
    }

    note = std::to_string(detected) + "/100 dependent sets detected; eval rank <= symbolic on " +
           std::to_string(rank_points) + " points (" + std::to_string(rank_matches) +
           " equal); r = n+1 rejected";
    return ok;
}

bool criterion_kernel_bound(Harness& h, std::string& note) {
    bool ok = true;
    for (int n = 2; n <= 4; ++n) {
        std::vector<RatFunc> stock;
        for (int k = 0; k < n; ++k) {
            stock.push_back(RatFunc::variable(n, k) / RatFunc::variable(n, (k + 1) % n));
        }
        ok = h.require(kernel_rank_bound(euler(n), stock)) && ok;
        ok = h.require(rank(jacobian(stock)) <= n - 1) && ok;

        // A second stock with mixed-degree ratios.
        std::vector<RatFunc> mixed;
        for (int k = 0; k < n; ++k) {
            mixed.push_back(RatFunc::variable(n, k).pow(2) /
                            (RatFunc::variable(n, (k + 1) % n) *
                             RatFunc::variable(n, (k + 2) % n)));
        }
        ok = h.require(kernel_rank_bound(euler(n), mixed)) && ok;
    }
    note = "Euler stock kernel sets of size n have Jacobian rank <= n-1 for n in {2,3,4}";
    return ok;
}

bool criterion_conjugation(Harness& h, std::string& note) {
    Rng rng(107);
    int ok = 0;
    for (int i = 0; i < 100; ++i) {
        const int n = 2 + i % 3;
        const GenParams params{.nvars = n, .max_degree = 2, .max_terms = 2, .coeff_bound = 4};
        const VectorA a = random_vector(rng, n, params);
        const RatFunc eta = random_nonzero_ratfunc(rng, params);
        const RatFunc psi = random_ratfunc(rng, params);
        const NHOperator conj = conjugate(a, eta);
        bool inst = h.eq(nh_apply(conj, psi), eta * apply_derivation(a, psi / eta));
        inst = h.zero(nh_apply(conj, eta)) && inst;
        ok += inst ? 1 : 0;
    }
    note = std::to_string(ok) + "/100 conjugation identities exact";
    return ok == 100;
}

bool criterion_kernel_product(Harness& h, std::string& note) {
    Rng rng(108);
    int ok = 0;
    for (int i = 0; i < 100; ++i) {
        const int n = 2 + i % 3;
        const std::vector<long> w = random_weights(rng, n);
        const VectorA a = weighted_euler(n, w);
        const GenParams params{.nvars = n, .max_degree = 2, .max_terms = 2, .coeff_bound = 4};
        const RatFunc eta = random_nonzero_ratfunc(rng, params);
        const NHOperator op = conjugate(a, eta);
        const RatFunc phi = euler_kernel_element(rng, w);

        bool inst = h.require(verify_product_structure(a, op.q(), eta, phi));
        inst = h.zero(nh_apply(op, eta * phi)) && inst;

        const RatFunc psi = eta * nonzero_euler_kernel_element(rng, w);
        inst = h.require(verify_kernel_factorization(a, op.q(), eta, psi)) && inst;
        inst = h.zero(apply_derivation(a, psi / eta)) && inst;

        // Ratios of particular solutions solve the homogeneous equation.
        const RatFunc xi = eta * nonzero_euler_kernel_element(rng, w);
        inst = h.require(ratio_in_homogeneous_kernel(a, op.q(), psi, xi)) && inst;
        inst = h.zero(apply_derivation(a, psi / xi)) && inst;
        ok += inst ? 1 : 0;
    }
    note = std::to_string(ok) + "/100 instances: both inclusions and the ratio property exact";
    return ok == 100;
}

bool criterion_affine(Harness& h, std::string& note) {
    Rng rng(109);
    int ok = 0;
    for (int i = 0; i < 50; ++i) {
        const int n = 2 + i % 3;
        const std::vector<long> w = random_weights(rng, n);
        const VectorA a = weighted_euler(n, w);
        const GenParams params{.nvars = n, .max_degree = 2, .max_terms = 2, .coeff_bound = 4};
        const RatFunc eta = random_nonzero_ratfunc(rng, params);
        const NHOperator op = conjugate(a, eta);
        const RatFunc chi0 = random_ratfunc(rng, params);
        const RatFunc b = nh_apply(op, chi0);
        const RatFunc psi = eta * euler_kernel_element(rng, w);

        bool inst = h.require(verify_affine_solutions(op, b, chi0, psi));
        inst = h.eq(nh_apply(op, chi0 + psi), b) && inst;
        ok += inst ? 1 : 0;
    }
    note = std::to_string(ok) + "/50 coset-constancy instances exact";
    return ok == 50;
}

bool criterion_annihilator(Harness& h, std::string& note) {
    Rng rng(110);
    bool ok = true;

    // Pinned example: the annihilator of x1/x2 is the Euler line.
    const VectorA line = annihilate({parse_ratfunc("x1/x2", 2)});
    ok = h.require(line == VectorA({RatFunc::variable(2, 0), RatFunc::variable(2, 1)})) && ok;

    int sound = 0;
    for (int i = 0; i < 100; ++i) {
        const int n = i % 5 < 2 ? 2 : (i % 5 < 4 ? 3 : 4);
        const GenParams params{.nvars = n, .max_degree = 2, .max_terms = 2, .coeff_bound = 4};
        std::vector<RatFunc> phi;
        do {
            phi.clear();
            for (int k = 0; k + 1 < n; ++k) {
                phi.push_back(random_ratfunc(rng, params));
            }
        } while (!is_functionally_independent(phi));

        const VectorA a = annihilate(phi);
        bool inst = !a.is_zero();
        for (const RatFunc& f : phi) {
            inst = h.zero(apply_derivation(a, f)) && inst;
        }
        // Nullspace dimension exactly one: the gradient matrix has full row
        // rank n-1.
        inst = h.require(rank(jacobian(phi)) == n - 1) && inst;
        sound += inst ? 1 : 0;
    }
    ok = h.require(sound == 100) && ok;
    note = std::to_string(sound) + "/100 annihilators sound; nullspace dimension 1; "
           "annihilate({x1/x2}) = (x1, x2)";
    return ok;
}

bool criterion_oracle(Harness& h, std::string& note) {
    int ok = 0;
    std::uint64_t seed = 0x5eed;
    for (const auto& [lhs, rhs] : h.equalities) {
        ok += identity_check(lhs, rhs, 5, seed++) ? 1 : 0;
    }
    note = std::to_string(ok) + "/" + std::to_string(h.equalities.size()) +
           " logged equalities confirmed by 5-trial evaluation";
    return ok == static_cast<int>(h.equalities.size());
}

}  // namespace

int main() {
    using clock = std::chrono::steady_clock;
    Harness h;

    struct Entry {
        const char* name;
        std::function<bool(Harness&, std::string&)> run;
        double limit_seconds;  // 0 = no per-criterion limit
    };
    const std::vector<Entry> criteria = {
        {"Leibniz rule on random triples", criterion_leibniz, 10.0},
        {"integer power rule", criterion_power_rule, 0},
        {"chain rule through compositions", criterion_chain_rule, 0},
        {"graded-basis coefficient sequence", criterion_encoding, 0},
        {"independence criterion (rank of the gradient set)", criterion_independence, 0},
        {"homogeneous kernel size bound", criterion_kernel_bound, 0},
        {"conjugation operator identity", criterion_conjugation, 0},
        {"kernel product structure and solution ratios", criterion_kernel_product, 0},
        {"affine structure of non-homogeneous solutions", criterion_affine, 0},
        {"annihilator construction", criterion_annihilator, 0},
        {"oracle consistency of all logged equalities", criterion_oracle, 0},
    };

    int passed = 0;
    int number = 0;
    const auto suite_start = clock::now();
    for (const Entry& entry : criteria) {
        ++number;
        std::string note;
        const auto start = clock::now();
        bool ok = false;
        try {
            ok = entry.run(h, note);
        } catch (const std::exception& e) {
            note = std::string("exception: ") + e.what();
        }
        const double seconds = std::chrono::duration<double>(clock::now() - start).count();
        if (entry.limit_seconds > 0 && seconds >= entry.limit_seconds) {
            ok = false;
            note += " [exceeded " + std::to_string(entry.limit_seconds) + " s limit]";
        }
        std::printf("[%s] %2d. %s: %s (%.2f s)\n", ok ? "PASS" : "FAIL", number, entry.name,
                    note.c_str(), seconds);
        passed += ok ? 1 : 0;
    }

    const double total = std::chrono::duration<double>(clock::now() - suite_start).count();
    const bool wall_ok = total < 120.0;
    std::printf("[%s] %2d. wall clock: %.2f s %s 120 s\n", wall_ok ? "PASS" : "FAIL", number + 1,
                total, wall_ok ? "<" : ">=");
    passed += wall_ok ? 1 : 0;

    std::printf("acceptance: %d/%d criteria passed\n", passed, number + 1);
    return passed == number + 1 ? 0 : 1;
}
