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

#include "commands.h"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "qbf/analysis.h"
#include "qbf/compile.h"
#include "qbf/cost.h"
#include "qbf/fixtures.h"
#include "qbf/lower.h"
#include "qbf/numeric.h"
#include "qbf/parser.h"
#include "qbf/program_io.h"
#include "qbf/report.h"
#include "qbf/symbolic.h"

namespace qbf::cli {

namespace {

struct Options {
    bool json = false;
    std::string expr;
    std::string file;
    std::string witness;
    std::string piecewise;
    bool no_complex_witness = false;
    NumericOptions numeric;
    double cost_p0 = 0.5;
};

class Failure : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

std::string slurp(const std::string &path, std::istream &in) {
    if (path.empty() || path == "-") {
        return std::string(std::istreambuf_iterator<char>(in), {});
    }
    std::ifstream f(path);
    if (!f) {
        throw Failure("cannot open '" + path + "'");
    }
    return std::string(std::istreambuf_iterator<char>(f), {});
}

Expr parse_arg(const std::string &text) {
    try {
        return parse(text);
    } catch (const ParseError &e) {
        throw Failure(std::string("parse error: ") + e.what());
    }
}

RatFn rational_arg(const std::string &text) {
    FieldElem f = lower(parse_arg(text));
    if (!f.is_rational_function()) {
        throw Failure("'" + text + "' is not a rational function of p");
    }
    return f.r();
}

CircuitProgram program_arg(const Options &o, std::istream &in) {
    return deserialize(slurp(o.file, in));
}

int dispatch(const std::string &cmd, const Options &o, std::istream &in, std::ostream &out) {
    Format fmt = o.json ? Format::kJson : Format::kText;
    if (cmd == "parse") {
        Expr e = parse_arg(o.expr);
        std::optional<FieldElem> value;
        std::string error;
        try {
            value = lower(e);
        } catch (const LowerError &err) {
            error = err.what();
        }
        out << render_parse(e, value, error, fmt);
        return kOk;
    }
    if (cmd == "decide") {
        RatioDecision d = decide_qq_ratio(parse_arg(o.expr));
        out << render_decision(d, fmt);
        return d.simulable ? kOk : kNegative;
    }
    if (cmd == "corollary") {
        CorollaryDecision d = decide_real_corollary(rational_arg(o.expr));
        out << render_corollary(d, fmt);
        return d.simulable() ? kOk : kNegative;
    }
    if (cmd == "classify") {
        if (o.expr.empty() == o.piecewise.empty()) {
            throw Failure("classify takes an expression or --piecewise FILE, not both");
        }
        PiecewiseFn f = o.piecewise.empty() ? PiecewiseFn::single(rational_arg(o.expr)) : parse_piecewise(slurp(o.piecewise, in));
        std::optional<FieldElem> witness;
        if (!o.witness.empty()) {
            witness = lower(parse_arg(o.witness));
        }
        out << render_classification(classify(f, witness, o.no_complex_witness), fmt);
        return kOk;
    }
    if (cmd == "compile") {
        Expr e = parse_arg(o.expr);
        out << serialize(compile(lower(e)));
        return kOk;
    }
    if (cmd == "simulate") {
        out << render_symbolic(run_symbolic(program_arg(o, in)), fmt);
        return kOk;
    }
    if (cmd == "run") {
        CircuitProgram prog = program_arg(o, in);
        NumericResult r = run_numeric(prog, o.numeric);
        std::optional<double> analytic;
        try {
            analytic = expected_cost(prog, o.numeric.p0).expected_coins;
        } catch (const std::domain_error &) {
        }
        out << render_run(r, analytic, fmt);
        return kOk;
    }
    if (cmd == "cost") {
        out << render_cost(expected_cost(program_arg(o, in), o.cost_p0), fmt);
        return kOk;
    }
    auto rows = run_fixtures();
    out << render_fixtures(rows, fmt);
    return std::all_of(rows.begin(), rows.end(), [](const FixtureRow &r) { return r.pass; }) ? kOk : kNegative;
}

}  // namespace

int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err) {
    CLI::App app{"Exact toolkit for quantum-to-quantum Bernoulli factories", "qbf"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_flag("--json", o.json, "Machine-readable output");

    auto *parse_cmd = app.add_subcommand("parse", "Parse an expression and show its value in the field");
    parse_cmd->add_option("expr", o.expr, "Expression in p, t, i, sqrt2")->required();
    auto *decide = app.add_subcommand("decide", "Decide whether a ratio is simulable");
    decide->add_option("expr", o.expr)->required();
    auto *corollary = app.add_subcommand("corollary", "Decide a real probability function f");
    corollary->add_option("f", o.expr)->required();
    auto *classify_cmd = app.add_subcommand("classify", "CC / QC / QQ membership of f");
    classify_cmd->add_option("f", o.expr);
    classify_cmd->add_option("--piecewise", o.piecewise, "Piecewise definition file");
    classify_cmd->add_option("--witness", o.witness, "Ratio h to check against f");
    classify_cmd->add_flag("--no-complex-witness", o.no_complex_witness, "Assert that no complex witness exists");
    auto *compile_cmd = app.add_subcommand("compile", "Compile a ratio to a program");
    compile_cmd->add_option("expr", o.expr)->required();
    auto *simulate = app.add_subcommand("simulate", "Exact output ratio of a program");
    simulate->add_option("program", o.file, "Program file (default: stdin)");
    auto *run_cmd = app.add_subcommand("run", "Monte-Carlo execution of a program");
    run_cmd->add_option("program", o.file, "Program file (default: stdin)");
    run_cmd->add_option("--p0", o.numeric.p0)->check(CLI::Range(0.0, 1.0));
    run_cmd->add_option("--trials", o.numeric.trials);
    run_cmd->add_option("--seed", o.numeric.seed);
    run_cmd->add_option("--max-retries", o.numeric.max_retries);
    run_cmd->add_option("--threads", o.numeric.threads);
    auto *cost = app.add_subcommand("cost", "Expected coin cost of a program");
    cost->add_option("program", o.file, "Program file (default: stdin)");
    cost->add_option("--p0", o.cost_p0)->check(CLI::Range(0.0, 1.0));
    app.add_subcommand("fixtures", "Run the worked examples");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kError;
    }
    std::string cmd = app.get_subcommands().front()->get_name();
    try {
        return dispatch(cmd, o, in, out);
    } catch (const Failure &e) {
        err << "qbf " << cmd << ": " << e.what() << "\n";
    } catch (const std::exception &e) {
        err << "qbf " << cmd << ": " << e.what() << "\n";
    }
    return kError;
}

}  // namespace qbf::cli
