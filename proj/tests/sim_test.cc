// Copyright 2026 The QBF Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <complex>

#include "qbf/compile.h"
#include "qbf/cost.h"
#include "qbf/fixtures.h"
#include "qbf/gates.h"
#include "qbf/lower.h"
#include "qbf/numeric.h"
#include "qbf/parser.h"
#include "qbf/symbolic.h"
#include "support/random.h"

namespace qbf {
namespace {

using testing::Gen;
using Amps = std::pair<std::complex<double>, std::complex<double>>;

const double kP0s[] = {0.13, 0.3, 0.5, 0.71, 0.92};

FieldElem L(const std::string &text) {
    return lower(parse(text));
}

Amps normalized(std::complex<double> a0, std::complex<double> a1) {
    double n = std::sqrt(std::norm(a0) + std::norm(a1));
    return {a0 / n, a1 / n};
}

Amps symbolic_at(const CircuitProgram &prog, double p0) {
    SymbolicResult r = run_symbolic(prog);
    return normalized(r.a0.eval(p0), r.a1.eval(p0));
}

double born_zero(const CircuitProgram &prog, double p0) {
    return std::norm(symbolic_at(prog, p0).first);
}

// Distance between two unit vectors up to a global phase.
double projective_distance(const Amps &u, const Amps &v) {
    return std::abs(u.first * v.second - u.second * v.first);
}

NumericResult monte_carlo(const CircuitProgram &prog, double p0, uint64_t trials, uint64_t seed, int threads = 1) {
    NumericOptions opts;
    opts.p0 = p0;
    opts.trials = trials;
    opts.seed = seed;
    opts.threads = threads;
    return run_numeric(prog, opts);
}

void expect_born(const CircuitProgram &prog, double p0, uint64_t trials, uint64_t seed) {
    double want = born_zero(prog, p0);
    NumericResult r = monte_carlo(prog, p0, trials, seed);
    ASSERT_EQ(r.aborted, 0u);
    double sigma = std::sqrt(std::max(want * (1 - want), 1e-12) / static_cast<double>(r.successes));
    EXPECT_LE(std::abs(r.empirical_p0_prob() - want), 4 * sigma + 1e-12)
        << "p0 " << p0 << ": empirical " << r.empirical_p0_prob() << " vs " << want;
}

TEST(Gates, UnitaryExactly) {
    for (Gate g : {Gate::kX, Gate::kH, Gate::kCnot, Gate::kB}) {
        const GateMatrix &m = gate_matrix(g);
        EXPECT_EQ(m.dim, 1 << gate_arity(g));
        EXPECT_TRUE((m.adjoint() * m).is_identity()) << gate_name(g);
        EXPECT_TRUE((m * m.adjoint()).is_identity()) << gate_name(g);
        const auto &c = gate_matrix_complex(g);
        for (int k = 0; k < m.dim * m.dim; k++) {
            EXPECT_NEAR(std::abs(c[k] - m.entries[k].to_complex()), 0.0, 1e-15);
        }
    }
    EXPECT_FALSE(gate_matrix(Gate::kH).is_identity());
}

TEST(Symbolic, TwoCoin) {
    SymbolicResult r = run_symbolic(two_coin_program());
    ASSERT_FALSE(r.is_infinite());
    EXPECT_EQ(*r.ratio(), L("2*p - 1"));
}

TEST(Symbolic, ObserversSeeEveryStep) {
    CircuitProgram prog = construct_p();
    int after = 0;
    int before = 0;
    run_symbolic(
        prog, [&](int, const GroupedState<FieldElem> &) { after++; },
        [&](int k, const GroupedState<FieldElem> &) {
            EXPECT_EQ(prog.instructions[k].op, Op::kMeasure);
            before++;
        });
    EXPECT_EQ(after, static_cast<int>(prog.instructions.size()));
    EXPECT_EQ(before, prog.count(Op::kMeasure));
}

TEST(Symbolic, ZeroBranch) {
    CircuitProgram prog = emit_mul(const_program(Scalar(0L)), compile_infinity());
    try {
        run_symbolic(prog);
        FAIL() << "expected ZeroBranchError";
    } catch (const ZeroBranchError &e) {
        EXPECT_EQ(prog.instructions[e.instruction()].op, Op::kMeasure);
    }
}

TEST(Postselected, MatchesSymbolicOnRandomPrograms) {
    Gen gen(51);
    int checked = 0;
    for (int trial = 0; trial < 50; trial++) {
        CircuitProgram prog = gen.program(3);
        for (double p0 : kP0s) {
            SymbolicResult r = run_symbolic(prog);
            std::complex<double> a0 = r.a0.eval(p0);
            std::complex<double> a1 = r.a1.eval(p0);
            if (std::norm(a0) + std::norm(a1) < 1e-12) {
                continue;
            }
            Amps want = normalized(a0, a1);
            Amps got = run_postselected(prog, p0);
            EXPECT_NEAR(std::norm(got.first) + std::norm(got.second), 1.0, 1e-12);
            EXPECT_LE(projective_distance(want, got), 1e-9) << prog.to_string() << " at " << p0;
            checked++;
        }
    }
    EXPECT_GE(checked, 240);
}

TEST(Numeric, SingleCoin) {
    CircuitProgram coin = coin_program();
    EXPECT_NEAR(born_zero(coin, 0.25), 0.25, 1e-15);
    expect_born(coin, 0.25, 20000, 1);
    NumericResult r = monte_carlo(coin, 0.25, 1000, 2);
    EXPECT_EQ(r.coins, 1000u);
    EXPECT_EQ(r.consts, 0u);
}

TEST(Numeric, ConstructPAtSevenTenths) {
    CircuitProgram prog = compile(FieldElem::p());
    EXPECT_NEAR(born_zero(prog, 0.7), 0.49 / 1.49, 1e-12);
    expect_born(prog, 0.7, 20000, 3);
}

TEST(Numeric, BornOnRandomPrograms) {
    Gen gen(52);
    int checked = 0;
    for (int trial = 0; trial < 8; trial++) {
        CircuitProgram prog = gen.program(2);
        for (double p0 : {0.3, 0.6}) {
            CostReport cost = expected_cost(prog, p0);
            if (cost.expected_coins + cost.expected_consts > 200) {
                continue;
            }
            expect_born(prog, p0, 4000, 100 + trial);
            checked++;
        }
    }
    EXPECT_GE(checked, 8);
}

TEST(Numeric, DeterministicAcrossThreads) {
    CircuitProgram prog = compile(L("(1 + t)/2"));
    NumericResult one = monte_carlo(prog, 0.4, 3000, 99, 1);
    EXPECT_EQ(monte_carlo(prog, 0.4, 3000, 99, 1), one);
    EXPECT_EQ(monte_carlo(prog, 0.4, 3000, 99, 4), one);
    EXPECT_NE(monte_carlo(prog, 0.4, 3000, 100, 1), one);
    EXPECT_NE(trial_seed(1, 0), trial_seed(1, 1));
    EXPECT_NE(trial_seed(1, 0), trial_seed(2, 0));
}

TEST(Numeric, AbortsCountAgainstRetries) {
    NumericOptions opts;
    opts.p0 = 0.5;
    opts.trials = 2000;
    opts.seed = 4;
    opts.max_retries = 0;
    NumericResult r = run_numeric(construct_p(), opts);
    EXPECT_GT(r.aborted, 0u);
    EXPECT_GT(r.successes, 0u);
    EXPECT_EQ(r.aborted + r.successes, r.trials);
}

TEST(Numeric, RejectsBadOptions) {
    NumericOptions opts;
    opts.p0 = 1.5;
    EXPECT_THROW(run_numeric(coin_program(), opts), std::invalid_argument);
}

TEST(Cost, SingleCoin) {
    CostReport c = expected_cost(coin_program(), 0.3);
    EXPECT_DOUBLE_EQ(c.expected_coins, 1.0);
    EXPECT_DOUBLE_EQ(c.expected_consts, 0.0);
    EXPECT_EQ(c.static_coins, 1);
    EXPECT_TRUE(c.measures.empty());
    EXPECT_THROW(expected_cost(coin_program(), 0.0), std::invalid_argument);
    EXPECT_THROW(expected_cost(coin_program(), 1.0), std::invalid_argument);
}

TEST(Cost, TwoCoinAttempts) {
    CircuitProgram prog = two_coin_program();
    CostReport c = expected_cost(prog, 0.3);
    ASSERT_EQ(c.measures.size(), 1u);
    EXPECT_NEAR(c.measures[0].success_prob, 0.58, 1e-12);
    EXPECT_NEAR(c.expected_coins, 2 / 0.58, 1e-12);
}

TEST(Cost, AgreesWithMonteCarlo) {
    const char *ratios[] = {"p", "1 - 2*p", "(1 + t)/2", "t + i/2"};
    for (const char *text : ratios) {
        CircuitProgram prog = compile(L(text));
        for (double p0 : {0.2, 0.5, 0.8}) {
            CostReport c = expected_cost(prog, p0);
            NumericResult r = monte_carlo(prog, p0, 20000, 7);
            ASSERT_EQ(r.aborted, 0u) << text;
            EXPECT_NEAR(r.mean_coins(), c.expected_coins, 0.05 * c.expected_coins) << text << " at " << p0;
            if (c.expected_consts > 0) {
                EXPECT_NEAR(r.mean_consts(), c.expected_consts, 0.05 * c.expected_consts) << text << " at " << p0;
            }
        }
    }
}

}  // namespace
}  // namespace qbf
