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

// Prints one PASS/FAIL line per acceptance criterion and exits nonzero if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <string>

#include "qbf/analysis.h"
#include "qbf/compile.h"
#include "qbf/cost.h"
#include "qbf/fixtures.h"
#include "qbf/lower.h"
#include "qbf/numeric.h"
#include "qbf/order_form.h"
#include "qbf/parser.h"
#include "qbf/symbolic.h"
#include "support/random.h"

namespace {

using namespace qbf;
using qbf::testing::Gen;

struct Outcome {
    bool pass = true;
    std::string note;

    void require(bool ok, const std::string &what) {
        if (!ok && pass) {
            pass = false;
            note = what;
        }
    }
};

FieldElem field(const std::string &text) {
    return lower(parse(text));
}

Outcome field_axioms() {
    Outcome out;
    Gen gen(101);
    const FieldElem one(RatFn(1L));
    for (int k = 0; k < 200; k++) {
        FieldElem x = gen.field_elem(2);
        FieldElem y = gen.field_elem(2);
        FieldElem z = gen.field_elem(2);
        out.require(x + y == y + x, "addition commutes");
        out.require(x * y == y * x, "multiplication commutes");
        out.require((x + y) + z == x + (y + z), "addition associates");
        out.require((x * y) * z == x * (y * z), "multiplication associates");
        out.require(x * (y + z) == x * y + x * z, "distributivity");
        out.require(x + FieldElem() == x && x * one == x, "identities");
        out.require((x + (-x)).is_zero(), "additive inverse");
        if (!x.is_zero()) {
            out.require(x * x.inverse() == one, "x * inverse(x) = 1 for " + x.to_string());
        }
    }
    return out;
}

Outcome round_trip() {
    Outcome out;
    Gen gen(202);
    for (int k = 0; k < 100; k++) {
        FieldElem h = gen.nonzero_field_elem(1);
        auto r = run_symbolic(compile(h)).ratio();
        out.require(r && *r == h, "run_symbolic(compile(h)) = h for h = " + h.to_string());
    }
    return out;
}

Outcome not_in_field() {
    Outcome out;
    RatioDecision d = decide_qq_ratio(parse("sqrt(p^2/(1-p^2))"));
    out.require(!d.simulable, "reported simulable");
    std::set<std::string> got;
    for (const Poly &f : d.odd_factors) {
        got.insert(f.to_string());
    }
    std::set<std::string> want = {Poly(std::vector<Scalar>{1, -1}).to_string(), Poly(std::vector<Scalar>{1, 1}).to_string()};
    out.require(got == want, "odd factors differ from {1-p, 1+p}");
    return out;
}

Outcome phased_witness() {
    Outcome out;
    out.require(check_phased_witness(field("(sqrt2*p/(1+p))*t + i*p/(1+p)"), RatFn::p() * RatFn::p()), "witness rejected");
    return out;
}

Outcome two_coin() {
    Outcome out;
    CircuitProgram prog = compile(field("1-2*p"));
    out.require(is_two_coin_family(prog), "compiled program is not in the two-coin family");
    out.require(run_symbolic(prog).ratio() == field("1-2*p"), "compiled ratio differs");
    NumericOptions opts;
    opts.p0 = 0.3;
    opts.trials = 100000;
    opts.seed = 7;
    NumericResult r = run_numeric(prog, opts);
    double f = 4.0 / 29.0;
    double sigma = std::sqrt(f * (1 - f) / static_cast<double>(r.successes));
    char buf[96];
    std::snprintf(buf, sizeof buf, "empirical %.6f vs %.6f, |diff| = %.2f sigma", r.empirical_p0_prob(), f,
                  std::abs(r.empirical_p0_prob() - f) / sigma);
    out.require(r.aborted == 0 && std::abs(r.empirical_p0_prob() - f) <= 3 * sigma, buf);
    if (out.pass) {
        out.note = buf;
    }
    return out;
}

Outcome construct_p_cost() {
    Outcome out;
    out.require(run_symbolic(compile(FieldElem::p())).ratio() == FieldElem::p(), "simulate(compile(p)) != p");
    CircuitProgram prog = two_coin_program();
    CostReport cost = expected_cost(prog, 0.3);
    for (const NodeCost &n : cost.nodes) {
        if (n.kind == "mul") {
            out.require(std::abs(n.expected_attempts - 1 / 0.58) < 1e-12, "attempts != 1/0.58");
        }
    }
    out.require(std::abs(cost.expected_coins - 2 / 0.58) < 1e-12, "coins != 2/0.58");
    NumericOptions opts;
    opts.p0 = 0.3;
    opts.trials = 20000;
    opts.seed = 11;
    double mc = run_numeric(prog, opts).mean_coins();
    char buf[96];
    std::snprintf(buf, sizeof buf, "analytic %.4f, Monte-Carlo %.4f", cost.expected_coins, mc);
    out.require(std::abs(mc - cost.expected_coins) <= 0.05 * cost.expected_coins, buf);
    if (out.pass) {
        out.note = buf;
    }
    return out;
}

Outcome relations() {
    Outcome out;
    ClassReport step = classify(step_fixture());
    out.require(step.cc.verdict == Verdict::kYes && step.qq.kind == QqReport::Kind::kNo, "step function not in CC \\ QQ");
    ClassReport bump = classify(bump_fixture());
    out.require(bump.cc.verdict == Verdict::kNo && bump.qq.kind == QqReport::Kind::kYes, "bump not in QQ \\ CC");
    ClassReport square = classify(PiecewiseFn::single(RatFn::p() * RatFn::p()), field("(sqrt2*p/(1+p))*t + i*p/(1+p)"));
    out.require(square.cc.verdict == Verdict::kYes && square.qq.kind == QqReport::Kind::kYes, "p^2 not in CC and QQ");
    Gen gen(707);
    for (int k = 0; k < 100; k++) {
        FieldElem h = gen.nonzero_field_elem(2);
        QcReport qc = classify_qc(h);
        std::string why;
        out.require(qc.verdict == Verdict::kYes, "classify_qc rejected h = " + h.to_string() + ": " + qc.reason);
        bool verified = verify_spb(h, qc, &why);
        out.require(verified, "certificate for h = " + h.to_string() + " failed: " + why);
    }
    return out;
}

Outcome orders() {
    Outcome out;
    Rational half = frac(1, 2);
    out.require(vanishing_order(OrderForm::from(FieldElem::t()), 0).twice_order == 1, "order of t at 0");
    out.require(vanishing_order(OrderForm::from(field("(p-1/2)^2")), half).twice_order == 4, "order of (p-1/2)^2 at 1/2");
    out.require(vanishing_order(OrderForm{Poly(Scalar(half)), Poly(-1L), Poly(1L)}, half).twice_order == 4,
                "order of 1/2 - sqrt(p(1-p)) at 1/2");
    Gen gen(808);
    const Rational points[] = {0, 1, half, frac(1, 5), frac(4, 5), frac(1, 10), frac(1, 3)};
    for (int k = 0; k < 100; k++) {
        Rational z = gen.coin() ? points[gen.integer(0, 6)] : gen.unit_rational();
        OrderForm x = gen.order_form_at(z);
        OrderForm y = gen.order_form_at(z);
        int sum = vanishing_order(x, z).twice_order + vanishing_order(y, z).twice_order;
        out.require(vanishing_order(x * y, z).twice_order == sum,
                    "additivity at " + to_string(z) + " for " + x.to_string() + " and " + y.to_string());
    }
    return out;
}

Outcome determinism() {
    Outcome out;
    CircuitProgram prog = compile(FieldElem::p());
    NumericOptions opts;
    opts.p0 = 0.37;
    opts.trials = 20000;
    opts.seed = 12345;
    NumericResult base = run_numeric(prog, opts);
    out.require(run_numeric(prog, opts) == base, "second run differs");
    for (int threads : {2, 3, 8}) {
        opts.threads = threads;
        out.require(run_numeric(prog, opts) == base, "run with " + std::to_string(threads) + " threads differs");
    }
    return out;
}

}  // namespace

int main() {
    struct Criterion {
        const char *name;
        std::function<Outcome()> run;
        double budget;
    };
    const Criterion criteria[] = {
        {"field axioms and inverses on 200 random elements", field_axioms, 10},
        {"run_symbolic(compile(h)) = h for 100 random h", round_trip, 60},
        {"sqrt(p^2/(1-p^2)) is not simulable, odd factors {1-p, 1+p}", not_in_field, 1},
        {"phased witness for p^2 checks exactly", phased_witness, 1},
        {"compile(1-2p) in the two-coin family, Monte-Carlo within 3 sigma of 4/29", two_coin, 30},
        {"construct-p ratio, two-coin cost 1/0.58 attempts, Monte-Carlo coins within 5%", construct_p_cost, 30},
        {"class relations on the fixtures, 100 random SPB certificates re-verify", relations, 120},
        {"vanishing orders: worked examples and additivity on 100 random cases", orders, 30},
        {"run_numeric bit-identical across runs and thread counts", determinism, 30},
    };
    int failures = 0;
    int index = 1;
    for (const Criterion &c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception &e) {
            o.pass = false;
            o.note = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (o.pass && secs > c.budget) {
            o.pass = false;
            o.note = "took longer than " + std::to_string(static_cast<int>(c.budget)) + " s";
        }
        std::printf("criterion %d: %s  %s (%.2f s)%s%s\n", index++, o.pass ? "PASS" : "FAIL", c.name, secs,
                    o.note.empty() ? "" : ": ", o.note.c_str());
        failures += o.pass ? 0 : 1;
    }
    return failures == 0 ? 0 : 1;
}
