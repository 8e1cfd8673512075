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

#include "linfield/cli.hpp"

#include <functional>
#include <istream>
#include <ostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "linfield/annihilator.hpp"
#include "linfield/errors.hpp"
#include "linfield/independence.hpp"
#include "linfield/oracle.hpp"
#include "linfield/operators.hpp"
#include "linfield/parse.hpp"

namespace linfield {

namespace {

using json = nlohmann::ordered_json;

// Exit codes: 0 success / true verdict, 1 false verdict, 2 error.
constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitError = 2;

struct CommandContext {
    bool json_output = false;
    std::istream* in = nullptr;
    std::ostream* out = nullptr;
};

int emit_value(const CommandContext& ctx, const std::string& value) {
    if (ctx.json_output) {
        *ctx.out << json{{"ok", true}, {"result", value}, {"error", nullptr}} << "\n";
    } else {
        *ctx.out << value << "\n";
    }
    return kExitTrue;
}

int emit_verdict(const CommandContext& ctx, const std::string& label, bool verdict) {
    if (ctx.json_output) {
        *ctx.out << json{{"ok", true}, {"result", verdict}, {"error", nullptr}} << "\n";
    } else {
        *ctx.out << label << ": " << (verdict ? "true" : "false") << "\n";
    }
    return verdict ? kExitTrue : kExitFalse;
}

int emit_error(const CommandContext& ctx, std::ostream& err, const std::string& message) {
    if (ctx.json_output) {
        *ctx.out << json{{"ok", false}, {"result", nullptr}, {"error", message}} << "\n";
    } else {
        err << "error: " << message << "\n";
    }
    return kExitError;
}

// Positional expressions, falling back to stdin lines.
std::vector<std::string> gather_exprs(const CommandContext& ctx,
                                      const std::vector<std::string>& positional) {
    if (!positional.empty()) {
        return positional;
    }
    std::vector<std::string> exprs;
    std::string line;
    while (std::getline(*ctx.in, line)) {
        if (line.find_first_not_of(" \t\r\n") != std::string::npos) {
            exprs.push_back(line);
        }
    }
    return exprs;
}

std::vector<RatFunc> parse_all(const std::vector<std::string>& exprs, int nvars) {
    std::vector<RatFunc> out;
    out.reserve(exprs.size());
    for (const std::string& e : exprs) {
        out.push_back(parse_ratfunc(e, nvars));
    }
    return out;
}

void require_count(const std::vector<std::string>& exprs, std::size_t count,
                   const std::string& what) {
    if (exprs.size() != count) {
        throw Error(what + ": expected " + std::to_string(count) + " expression(s), got " +
                    std::to_string(exprs.size()));
    }
}

NHOperator parse_homogeneous(const std::string& op_text, int nvars, const std::string& cmd) {
    NHOperator op = parse_operator(op_text, nvars);
    if (!op.is_homogeneous()) {
        throw Error(cmd + ": --op must be a homogeneous operator (no zeroth-order part)");
    }
    return op;
}

struct ScalarListFormat {
    static std::string format(const std::vector<Scalar>& seq) {
        std::string s = "(";
        for (std::size_t i = 0; i < seq.size(); ++i) {
            if (i > 0) {
                s += ", ";
            }
            s += seq[i].str();
        }
        return s + ")";
    }
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"Exact first-order differential operators over the rational function field",
                 "linfield"};
    app.require_subcommand(1);

    CommandContext ctx;
    ctx.in = &in;
    ctx.out = &out;

    int nvars = 0;
    int cutoff = 0;
    int trials = 5;
    std::uint64_t seed = 1;
    std::string op_text;
    std::string eta_text;
    std::string b_text;
    std::string chi0_text;
    std::vector<std::string> positional;
    std::function<int()> action;

    const auto add_common = [&](CLI::App* sub, bool with_exprs = true) {
        sub->add_option("-n,--nvars", nvars, "number of variables x1..xn")
            ->required()
            ->check(CLI::Range(1, 64));
        sub->add_flag("--json", ctx.json_output, "emit a JSON object instead of text");
        if (with_exprs) {
            sub->add_option("exprs", positional, "expressions (or stdin lines when omitted)");
        }
        return sub;
    };

    // encode: polynomial -> coefficient sequence on the graded basis.
    {
        CLI::App* sub = add_common(
            app.add_subcommand("encode", "coefficient sequence of a polynomial on the graded basis"));
        sub->add_option("--cutoff", cutoff, "largest total degree included")->required();
        sub->callback([&] {
            action = [&]() {
                const auto exprs = gather_exprs(ctx, positional);
                require_count(exprs, 1, "encode");
                const RatFunc f = parse_ratfunc(exprs[0], nvars);
                if (!f.is_polynomial()) {
                    throw Error("encode: expression is not a polynomial");
                }
                return emit_value(ctx, ScalarListFormat::format(encode_sequence(f.num(), cutoff)));
            };
        });
    }

    // indep: functional independence of a set.
    {
        CLI::App* sub = add_common(
            app.add_subcommand("indep", "decide functional independence of the given elements"));
        sub->callback([&] {
            action = [&]() {
                const auto exprs = gather_exprs(ctx, positional);
                if (exprs.empty()) {
                    throw Error("indep: need at least one expression");
                }
                return emit_verdict(ctx, "independent",
                                    is_functionally_independent(parse_all(exprs, nvars)));
            };
        });
    }

    // grad
    {
        CLI::App* sub = add_common(app.add_subcommand("grad", "gradient of an element"));
        sub->callback([&] {
            action = [&]() {
                const auto exprs = gather_exprs(ctx, positional);
                require_count(exprs, 1, "grad");
                return emit_value(ctx, grad(parse_ratfunc(exprs[0], nvars)).str());
            };
        });
    }

    // apply: (L + q) psi
    {
        CLI::App* sub = add_common(app.add_subcommand("apply", "apply an operator to an element"));
        sub->add_option("--op", op_text, "operator, e.g. \"x1*d1 + x2*d2 - 1\"")->required();
        sub->callback([&] {
            action = [&]() {
                const auto exprs = gather_exprs(ctx, positional);
                require_count(exprs, 1, "apply");
                const NHOperator op = parse_operator(op_text, nvars);
                return emit_value(ctx, nh_apply(op, parse_ratfunc(exprs[0], nvars)).str());
            };
        });
    }

    // annihilate
    {
        CLI::App* sub = add_common(app.add_subcommand(
            "annihilate", "derivation annihilating n-1 independent elements"));
        sub->callback([&] {
            action = [&]() {
                const auto exprs = gather_exprs(ctx, positional);
                return emit_value(ctx, annihilate(parse_all(exprs, nvars)).str());
            };
        });
    }

    // conjugate: eta L eta^{-1}
    {
        CLI::App* sub = add_common(app.add_subcommand(
            "conjugate", "conjugated operator eta L eta^-1 = L + q"), false);
        sub->add_option("--op", op_text, "homogeneous operator L")->required();
        sub->add_option("--eta", eta_text, "conjugating element")->required();
        sub->callback([&] {
            action = [&]() {
                const NHOperator op = parse_homogeneous(op_text, nvars, "conjugate");
                return emit_value(
                    ctx, conjugate(op.a(), parse_ratfunc(eta_text, nvars)).str());
            };
        });
    }

    // kernel-check: (L + q) psi = 0?
    {
        CLI::App* sub = add_common(
            app.add_subcommand("kernel-check", "membership of an element in Ker(L + q)"));
        sub->add_option("--op", op_text, "operator")->required();
        sub->callback([&] {
            action = [&]() {
                const auto exprs = gather_exprs(ctx, positional);
                require_count(exprs, 1, "kernel-check");
                const NHOperator op = parse_operator(op_text, nvars);
                return emit_verdict(ctx, "in kernel",
                                    in_kernel(op, parse_ratfunc(exprs[0], nvars)));
            };
        });
    }

    // coset-check: xi in eta Ker L?
    {
        CLI::App* sub = add_common(
            app.add_subcommand("coset-check", "membership of an element in the coset eta Ker L"));
        sub->add_option("--op", op_text, "homogeneous operator L")->required();
        sub->add_option("--eta", eta_text, "coset representative")->required();
        sub->callback([&] {
            action = [&]() {
                const auto exprs = gather_exprs(ctx, positional);
                require_count(exprs, 1, "coset-check");
                const NHOperator op = parse_homogeneous(op_text, nvars, "coset-check");
                return emit_verdict(ctx, "in coset",
                                    coset_membership(op.a(), parse_ratfunc(eta_text, nvars),
                                                     parse_ratfunc(exprs[0], nvars)));
            };
        });
    }

    // verify-prop2: Ker(L + q) = eta Ker L, forward inclusion on one instance.
    {
        CLI::App* sub = add_common(app.add_subcommand(
            "verify-prop2", "kernel product structure: eta in Ker(L+q), phi in Ker L imply eta*phi in Ker(L+q)"));
        sub->add_option("--op", op_text, "operator L + q")->required();
        sub->add_option("--eta", eta_text, "particular solution of (L+q)psi = 0")->required();
        sub->callback([&] {
            action = [&]() {
                const auto exprs = gather_exprs(ctx, positional);
                require_count(exprs, 1, "verify-prop2");
                const NHOperator op = parse_operator(op_text, nvars);
                return emit_verdict(
                    ctx, "verified",
                    verify_product_structure(op.a(), op.q(), parse_ratfunc(eta_text, nvars),
                                             parse_ratfunc(exprs[0], nvars)));
            };
        });
    }

    // verify-prop5: operator identity eta L eta^{-1} = L + q.
    {
        CLI::App* sub = add_common(app.add_subcommand(
            "verify-prop5", "conjugation identity (eta L eta^-1) psi = eta L(eta^-1 psi) on the given psi"));
        sub->add_option("--op", op_text, "homogeneous operator L")->required();
        sub->add_option("--eta", eta_text, "conjugating element (nonzero)")->required();
        sub->callback([&] {
            action = [&]() {
                const auto exprs = gather_exprs(ctx, positional);
                if (exprs.empty()) {
                    throw Error("verify-prop5: need at least one expression");
                }
                const NHOperator op = parse_homogeneous(op_text, nvars, "verify-prop5");
                const RatFunc eta = parse_ratfunc(eta_text, nvars);
                const NHOperator conj = conjugate(op.a(), eta);
                bool ok = true;
                for (const RatFunc& psi : parse_all(exprs, nvars)) {
                    ok = ok && nh_apply(conj, psi) ==
                                   eta * apply_derivation(op.a(), psi / eta);
                }
                return emit_verdict(ctx, "verified", ok);
            };
        });
    }

    // verify-affine: solution-set coset structure of (L + q) chi = b.
    {
        CLI::App* sub = add_common(app.add_subcommand(
            "verify-affine", "affine solution structure: chi0 + Ker(L+q) maps to b"));
        sub->add_option("--op", op_text, "operator L + q")->required();
        sub->add_option("--b", b_text, "right-hand side")->required();
        sub->add_option("--chi0", chi0_text, "particular solution")->required();
        sub->callback([&] {
            action = [&]() {
                const auto exprs = gather_exprs(ctx, positional);
                require_count(exprs, 1, "verify-affine");
                const NHOperator op = parse_operator(op_text, nvars);
                return emit_verdict(ctx, "verified",
                                    verify_affine_solutions(op, parse_ratfunc(b_text, nvars),
                                                            parse_ratfunc(chi0_text, nvars),
                                                            parse_ratfunc(exprs[0], nvars)));
            };
        });
    }

    // oracle: randomized identity check between two expressions.
    {
        CLI::App* sub = add_common(app.add_subcommand(
            "oracle", "randomized evaluation check that two expressions agree"));
        sub->add_option("--seed", seed, "random seed (reproducible)");
        sub->add_option("--trials", trials, "number of evaluation points")->check(CLI::Range(1, 10000));
        sub->callback([&] {
            action = [&]() {
                const auto exprs = gather_exprs(ctx, positional);
                require_count(exprs, 2, "oracle");
                return emit_verdict(ctx, "identical",
                                    identity_check(parse_ratfunc(exprs[0], nvars),
                                                   parse_ratfunc(exprs[1], nvars), trials, seed));
            };
        });
    }

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("linfield");
    for (const std::string& a : args) {
        argv.push_back(a.c_str());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitTrue;
    } catch (const CLI::ParseError& e) {
        return emit_error(ctx, err, e.what());
    }

    try {
        return action();
    } catch (const std::exception& e) {
        return emit_error(ctx, err, e.what());
    }
}

}  // namespace linfield
