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

#ifndef QBF_REPORT_H
#define QBF_REPORT_H

#include <optional>
#include <string>
#include <vector>

#include "qbf/analysis.h"
#include "qbf/cost.h"
#include "qbf/expr.h"
#include "qbf/fixtures.h"
#include "qbf/numeric.h"
#include "qbf/symbolic.h"

namespace qbf {

/// Renderings shared by the command-line tool and the golden tests. Text is
/// one "key: value" per line; JSON has sorted keys and ends with a newline.
enum class Format { kText, kJson };

/// `error` is the lowering diagnosis when `value` is empty.
std::string render_parse(const Expr &e, const std::optional<FieldElem> &value, const std::string &error, Format fmt);
std::string render_decision(const RatioDecision &d, Format fmt);
std::string render_corollary(const CorollaryDecision &d, Format fmt);
std::string render_classification(const ClassReport &r, Format fmt);
std::string render_symbolic(const SymbolicResult &r, Format fmt);
/// `analytic_coins` is the expected coin count from expected_cost, when it exists.
std::string render_run(const NumericResult &r, std::optional<double> analytic_coins, Format fmt);
std::string render_cost(const CostReport &r, Format fmt);
std::string render_fixtures(const std::vector<FixtureRow> &rows, Format fmt);

/// Shortest decimal that reads back to the same double.
std::string format_double(double x);

}  // namespace qbf

#endif  // QBF_REPORT_H
