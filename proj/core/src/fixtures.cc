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

#include "qbf/fixtures.h"

#include <cmath>
#include <sstream>

#include "qbf/analysis.h"
#include "qbf/compile.h"
#include "qbf/cost.h"
#include "qbf/lower.h"
#include "qbf/order_form.h"
#include "qbf/parser.h"
#include "qbf/symbolic.h"

namespace qbf {

namespace {

FieldElem field(const std::string &text) {
    return lower(parse(text));
}

RatFn rational(const std::string &text) {
    return field(text).r();
}

std::string verdicts(const ClassReport &r) {
    return "CC:" + to_string(r.cc.verdict) + " QC:" + to_string(r.qc.verdict) + " QQ:" + to_string(r.qq.kind);
}

bool near(double a, double b, double tol) {
    return std::abs(a - b) <= tol;
}

FixtureRow not_in_field() {
    FixtureRow row{"not-in-field", "sqrt(p^2/(1-p^2)) not simulable, odd factors {1-p, 1+p}", false, ""};
    RatioDecision d = decide_qq_ratio(parse("sqrt(p^2/(1-p^2))"));
    std::vector<Poly> want = {Poly(std::vector<Scalar>{1, -1}), Poly(std::vector<Scalar>{1, 1})};
    bool factors = d.odd_factors.size() == 2 &&
                   ((d.odd_factors[0] == want[0] && d.odd_factors[1] == want[1]) ||
                    (d.odd_factors[0] == want[1] && d.odd_factors[1] == want[0]));
    row.pass = !d.simulable && factors;
    row.detail = d.simulable ? "simulable" : "not simulable: " + d.diagnosis;
    return row;
}

FixtureRow phased_witness() {
    FixtureRow row{"phased-witness", "h = (sqrt2 p/(1+p)) t + i p/(1+p) is simulable and |h|^2 = p^2/(1-p^2)", false, ""};
    RatioDecision d = decide_qq_ratio(parse("(sqrt2*p/(1+p))*t + i*p/(1+p)"));
    bool witness = d.simulable && check_phased_witness(*d.value, RatFn::p() * RatFn::p());
    row.pass = witness;
    row.detail = witness ? "simulable, witness checks" : "witness rejected";
    return row;
}

FixtureRow two_coin() {
    FixtureRow row{"two-coin", "compile(1-2p) is mul(coin, coin) plus a Clifford tail; cost at 0.3 is 1/0.58 attempts, 2/0.58 coins", false, ""};
    CircuitProgram prog = compile(field("1-2*p"));
    bool exact = run_symbolic(prog).ratio() == field("1-2*p");
    CostReport fixture = expected_cost(two_coin_program(), 0.3);
    double attempts = fixture.nodes[0].expected_attempts;
    for (const NodeCost &n : fixture.nodes) {
        if (n.kind == "mul") {
            attempts = n.expected_attempts;
        }
    }
    row.pass = exact && is_two_coin_family(prog) && is_two_coin_family(two_coin_program()) &&
               near(attempts, 1 / 0.58, 1e-12) && near(fixture.expected_coins, 2 / 0.58, 1e-12);
    std::ostringstream out;
    out << prog.instructions.size() << " instructions, attempts " << attempts << ", coins " << fixture.expected_coins;
    row.detail = out.str();
    return row;
}

FixtureRow construct_p_row() {
    FixtureRow row{"construct-p", "simulate(compile(p)) = p", false, ""};
    CircuitProgram prog = compile(FieldElem::p());
    auto r = run_symbolic(prog).ratio();
    row.pass = r && *r == FieldElem::p() && prog.count(Op::kCoin) == 2;
    row.detail = r ? "ratio " + r->to_string() : "ratio infinity";
    return row;
}

FixtureRow step_row(ClassReport &out) {
    FixtureRow row{"step", "step function is in CC with n = 1 and not in QQ", false, ""};
    out = classify(step_fixture());
    row.pass = out.cc.verdict == Verdict::kYes && out.cc.witness_n == 1 && out.qq.kind == QqReport::Kind::kNo;
    row.detail = verdicts(out);
    return row;
}

FixtureRow bump_row(ClassReport &out) {
    FixtureRow row{"bump", "(p-1/2)^2/(1+(p-1/2)^2) is in QQ and QC, not in CC", false, ""};
    out = classify(bump_fixture());
    row.pass = out.cc.verdict == Verdict::kNo && out.qq.kind == QqReport::Kind::kYes && out.qc.verdict == Verdict::kYes;
    row.detail = verdicts(out);
    return row;
}

FixtureRow square_row(ClassReport &out) {
    FixtureRow row{"square", "p^2 is in CC, QQ (phased witness) and QC", false, ""};
    out = classify(PiecewiseFn::single(rational("p^2")), field("(sqrt2*p/(1+p))*t + i*p/(1+p)"));
    row.pass = out.cc.verdict == Verdict::kYes && out.qq.kind == QqReport::Kind::kYes && out.qc.verdict == Verdict::kYes;
    row.detail = verdicts(out);
    return row;
}

FixtureRow relations_row(const ClassReport &step, const ClassReport &bump, const ClassReport &square) {
    FixtureRow row{"relations", "QQ not in CC, CC not in QQ, QQ in QC on the fixtures", false, ""};
    bool qq_not_cc = bump.qq.kind == QqReport::Kind::kYes && bump.cc.verdict == Verdict::kNo;
    bool cc_not_qq = step.cc.verdict == Verdict::kYes && step.qq.kind == QqReport::Kind::kNo;
    bool qq_in_qc = true;
    for (const ClassReport *r : {&bump, &square}) {
        if (r->qq.kind == QqReport::Kind::kYes) {
            qq_in_qc = qq_in_qc && r->qc.verdict == Verdict::kYes;
        }
    }
    std::string why;
    bool verified = verify_spb(bump_fixture(), bump.qc, &why) && verify_spb(*square.qq.witness, square.qc, &why);
    row.pass = qq_not_cc && cc_not_qq && qq_in_qc && verified;
    row.detail = verified ? "certificates re-verified" : "certificate rejected: " + why;
    return row;
}

FixtureRow orders_row() {
    FixtureRow row{"orders", "order of t at 0 is 1/2, of (p-1/2)^2 and 1/2 - sqrt(p(1-p)) at 1/2 is 2", false, ""};
    Rational half = frac(1, 2);
    VanishingOrder a = vanishing_order(OrderForm::from(FieldElem::t()), 0);
    VanishingOrder b = vanishing_order(OrderForm::from(field("(p-1/2)^2")), half);
    VanishingOrder c = vanishing_order(OrderForm{Poly(Scalar(half)), Poly(-1L), Poly(1L)}, half);
    row.pass = a.twice_order == 1 && b.twice_order == 4 && c.twice_order == 4;
    row.detail = a.order_string() + ", " + b.order_string() + ", " + c.order_string();
    return row;
}

}  // namespace

PiecewiseFn step_fixture() {
    return parse_piecewise("[0, 1/2) 1/2\n[1/2, 1] p/2 + 1/4\n");
}

PiecewiseFn bump_fixture() {
    return PiecewiseFn::single(rational("(p-1/2)^2/(1+(p-1/2)^2)"));
}

CircuitProgram two_coin_program() {
    return emit_tail(emit_mul(coin_program(), coin_program()), {Gate::kH, Gate::kX}, "clifford");
}

bool is_two_coin_family(const CircuitProgram &prog) {
    const auto &in = prog.instructions;
    if (in.size() < 4 || in.size() > 8 || prog.count(Op::kCoin) != 2 || prog.count(Op::kConst) != 0) {
        return false;
    }
    if (in[0].op != Op::kCoin || in[1].op != Op::kCoin) {
        return false;
    }
    int a = in[0].regs[0];
    int b = in[1].regs[0];
    if (in[2].op != Op::kGate || in[2].gate != Gate::kCnot || in[2].regs != std::vector<int>{a, b}) {
        return false;
    }
    if (in[3].op != Op::kMeasure || in[3].regs[0] != b || in[3].keep != 0) {
        return false;
    }
    for (size_t k = 4; k < in.size(); k++) {
        if (in[k].op != Op::kGate || (in[k].gate != Gate::kX && in[k].gate != Gate::kH) || in[k].regs[0] != a) {
            return false;
        }
    }
    return prog.output == a;
}

std::vector<FixtureRow> run_fixtures() {
    std::vector<FixtureRow> rows;
    auto guarded = [&](const std::string &name, auto fn) {
        try {
            rows.push_back(fn());
        } catch (const std::exception &e) {
            rows.push_back(FixtureRow{name, "", false, std::string("error: ") + e.what()});
        }
    };
    guarded("not-in-field", not_in_field);
    guarded("phased-witness", phased_witness);
    guarded("two-coin", two_coin);
    guarded("construct-p", construct_p_row);
    ClassReport step, bump, square;
    guarded("step", [&] { return step_row(step); });
    guarded("bump", [&] { return bump_row(bump); });
    guarded("square", [&] { return square_row(square); });
    guarded("relations", [&] { return relations_row(step, bump, square); });
    guarded("orders", orders_row);
    return rows;
}

}  // namespace qbf
