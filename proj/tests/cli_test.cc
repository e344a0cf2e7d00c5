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

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "commands.h"
#include "qbf/analysis.h"
#include "qbf/compile.h"
#include "qbf/cost.h"
#include "qbf/lower.h"
#include "qbf/parser.h"
#include "qbf/piecewise.h"
#include "qbf/program_io.h"
#include "qbf/report.h"
#include "qbf/symbolic.h"

namespace qbf {
namespace {

const std::string kGoldenDir = QBF_GOLDEN_DIR;

struct CliResult {
    int code = 0;
    std::string out;
    std::string err;
};

CliResult run_cli(const std::vector<std::string> &args, const std::string &input = "") {
    std::istringstream in(input);
    std::ostringstream out;
    std::ostringstream err;
    CliResult r;
    r.code = cli::run(args, in, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::string read_file(const std::string &path) {
    std::ifstream f(path, std::ios::binary);
    EXPECT_TRUE(f.good()) << "missing " << path;
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

std::string golden_path(const std::string &name) {
    return kGoldenDir + "/" + name + ".out";
}

// With QBF_UPDATE_GOLDEN set, rewrites the file instead of comparing.
void expect_golden(const std::string &name, const std::string &actual) {
    if (std::getenv("QBF_UPDATE_GOLDEN") != nullptr) {
        std::ofstream(golden_path(name), std::ios::binary) << actual;
        return;
    }
    EXPECT_EQ(actual, read_file(golden_path(name))) << "golden " << name;
}

struct GoldenCase {
    std::string name;
    std::vector<std::string> args;
    int code;
    /// Golden file whose contents are fed on stdin, if any.
    std::string stdin_from;
};

void PrintTo(const GoldenCase &c, std::ostream *os) {
    *os << c.name;
}

class Golden : public ::testing::TestWithParam<GoldenCase> {};

TEST_P(Golden, MatchesFile) {
    const GoldenCase &c = GetParam();
    std::vector<std::string> args;
    for (const auto &a : c.args) {
        args.push_back(a == "@step" ? kGoldenDir + "/step.pw" : a);
    }
    std::string input = c.stdin_from.empty() ? "" : read_file(golden_path(c.stdin_from));
    CliResult r = run_cli(args, input);
    EXPECT_EQ(r.code, c.code) << r.err;
    expect_golden(c.name, r.out);
}

const GoldenCase kGoldenCases[] = {
    {"parse_sum", {"parse", "t + p - 1/2"}, 0, ""},
    {"parse_json", {"--json", "parse", "sqrt(p/(1-p)) * (1 + i)"}, 0, ""},
    {"parse_not_in_field", {"parse", "sqrt(p)"}, 0, ""},
    {"decide_yes", {"decide", "(p + t)/(2 - p)"}, 0, ""},
    {"decide_no", {"decide", "sqrt(p^2/(1-p^2))"}, 2, ""},
    {"decide_json", {"decide", "--json", "--", "-t/(1+p)"}, 0, ""},
    {"corollary_bump", {"corollary", "(p-1/2)^2/(1+(p-1/2)^2)"}, 0, ""},
    {"corollary_square", {"corollary", "p^2"}, 2, ""},
    {"corollary_json", {"--json", "corollary", "1/3"}, 0, ""},
    {"classify_p", {"classify", "p"}, 0, ""},
    {"classify_step", {"classify", "--piecewise", "@step"}, 0, ""},
    {"classify_square_real", {"classify", "--no-complex-witness", "p^2"}, 0, ""},
    {"classify_square_witness", {"classify", "--witness", "(sqrt2*p/(1+p))*t + i*p/(1+p)", "p^2"}, 0, ""},
    {"classify_json", {"--json", "classify", "4*p*(1-p)"}, 0, ""},
    {"compile_p", {"compile", "p"}, 0, ""},
    {"compile_two_coin", {"compile", "1 - 2*p"}, 0, ""},
    {"simulate_p", {"simulate"}, 0, "compile_p"},
    {"simulate_json", {"--json", "simulate"}, 0, "compile_two_coin"},
    {"run_p", {"run", "--p0", "0.7", "--trials", "2000", "--seed", "5"}, 0, "compile_p"},
    {"run_json", {"--json", "run", "--p0", "0.3", "--trials", "500", "--seed", "9", "--threads", "3"}, 0,
     "compile_two_coin"},
    {"cost_p", {"cost", "--p0", "0.2"}, 0, "compile_p"},
    {"cost_json", {"--json", "cost", "--p0", "0.3"}, 0, "compile_two_coin"},
    {"fixtures", {"fixtures"}, 0, ""},
};

INSTANTIATE_TEST_SUITE_P(Cli, Golden, ::testing::ValuesIn(kGoldenCases),
                         [](const ::testing::TestParamInfo<GoldenCase> &info) { return info.param.name; });

FieldElem L(const std::string &text) {
    return lower(parse(text));
}

PiecewiseFn single(const std::string &text) {
    return PiecewiseFn::single(L(text).r());
}

TEST(Parity, AnalysisMatchesLibrary) {
    EXPECT_EQ(run_cli({"decide", "(p + t)/(2 - p)"}).out,
              render_decision(decide_qq_ratio(parse("(p + t)/(2 - p)")), Format::kText));
    EXPECT_EQ(run_cli({"--json", "decide", "sqrt(p)"}).out, render_decision(decide_qq_ratio(parse("sqrt(p)")), Format::kJson));
    EXPECT_EQ(run_cli({"corollary", "p^2"}).out, render_corollary(decide_real_corollary(L("p^2").r()), Format::kText));
    EXPECT_EQ(run_cli({"--json", "classify", "4*p*(1-p)"}).out,
              render_classification(classify(single("4*p*(1-p)")), Format::kJson));
    PiecewiseFn step = parse_piecewise(read_file(kGoldenDir + "/step.pw"));
    EXPECT_EQ(run_cli({"classify", "--piecewise", kGoldenDir + "/step.pw"}).out,
              render_classification(classify(step), Format::kText));
    EXPECT_EQ(run_cli({"parse", "t + 1"}).out, render_parse(parse("t + 1"), L("t + 1"), "", Format::kText));
}

TEST(Parity, ProgramsMatchLibrary) {
    CircuitProgram prog = compile(L("(1 + t)/2"));
    std::string text = serialize(prog);
    EXPECT_EQ(run_cli({"compile", "(1 + t)/2"}).out, text);
    EXPECT_EQ(run_cli({"simulate"}, text).out, render_symbolic(run_symbolic(prog), Format::kText));
    EXPECT_EQ(run_cli({"--json", "cost", "--p0", "0.4"}, text).out, render_cost(expected_cost(prog, 0.4), Format::kJson));

    NumericOptions opts;
    opts.p0 = 0.4;
    opts.trials = 300;
    opts.seed = 17;
    std::string want = render_run(run_numeric(prog, opts), expected_cost(prog, 0.4).expected_coins, Format::kText);
    EXPECT_EQ(run_cli({"run", "--p0", "0.4", "--trials", "300", "--seed", "17"}, text).out, want);
}

TEST(Pipeline, CompileSimulateRoundTrip) {
    for (const char *h : {"p", "t", "1/3", "(1 + i)*t - sqrt2*p", "t/(1 + p^2)"}) {
        CliResult compiled = run_cli({"compile", h});
        ASSERT_EQ(compiled.code, 0) << compiled.err;
        CliResult sim = run_cli({"--json", "simulate"}, compiled.out);
        ASSERT_EQ(sim.code, 0) << sim.err;
        CircuitProgram prog = deserialize(compiled.out);
        EXPECT_EQ(*run_symbolic(prog).ratio(), L(h)) << h;
    }
}

TEST(Pipeline, ProgramFileArgument) {
    std::string path = ::testing::TempDir() + "/qbf_cli_test_program.json";
    std::ofstream(path) << run_cli({"compile", "t"}).out;
    CliResult r = run_cli({"simulate", path});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "ratio: t\n");
    CliResult missing = run_cli({"simulate", path + ".missing"});
    EXPECT_EQ(missing.code, 1);
    EXPECT_TRUE(missing.out.empty());
    EXPECT_FALSE(missing.err.empty());
}

TEST(ExitCodes, ErrorsGoToStderr) {
    CliResult bad = run_cli({"parse", "1 +* p"});
    EXPECT_EQ(bad.code, 1);
    EXPECT_TRUE(bad.out.empty());
    EXPECT_NE(bad.err.find("position 3"), std::string::npos) << bad.err;

    EXPECT_EQ(run_cli({"decide", "sqrt("}).code, 1);
    EXPECT_EQ(run_cli({"decide", "1/(p-p)"}).code, 1);
    EXPECT_EQ(run_cli({"decide", "sqrt(p)"}).code, 2);
    EXPECT_EQ(run_cli({"decide", "t"}).code, 0);
    EXPECT_EQ(run_cli({"corollary", "2*p"}).code, 2);
    EXPECT_EQ(run_cli({"corollary", "1"}).code, 0);
    EXPECT_EQ(run_cli({}).code, 1);
    EXPECT_EQ(run_cli({"frobnicate"}).code, 1);
    EXPECT_EQ(run_cli({"--help"}).code, 0);
    EXPECT_EQ(run_cli({"simulate"}, "not json").code, 1);
    EXPECT_EQ(run_cli({"run", "--p0", "1.5"}, run_cli({"compile", "t"}).out).code, 1);
    EXPECT_EQ(run_cli({"classify"}).code, 1);
}

TEST(ExitCodes, PiecewiseFileErrors) {
    std::string path = ::testing::TempDir() + "/qbf_cli_test_bad.pw";
    std::ofstream(path) << "[0, 1/2) 1/2\n[1/2, 1] p^2 +\n";
    CliResult r = run_cli({"classify", "--piecewise", path});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("line 2"), std::string::npos) << r.err;
}

}  // namespace
}  // namespace qbf
