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

#ifndef QBF_FIXTURES_H
#define QBF_FIXTURES_H

#include <string>
#include <vector>

#include "qbf/piecewise.h"
#include "qbf/program.h"

namespace qbf {

struct FixtureRow {
    std::string name;
    std::string claim;
    bool pass = false;
    /// What was observed, for the table.
    std::string detail;
};

/// The step function 1/2 on [0, 1/2), p/2 + 1/4 on [1/2, 1].
PiecewiseFn step_fixture();
/// (p - 1/2)^2 / (1 + (p - 1/2)^2).
PiecewiseFn bump_fixture();
/// Two coins, CNOT, keep 0 on the second, then H and X: ratio 2p - 1.
CircuitProgram two_coin_program();

/// True for mul(coin, coin) followed by at most four X/H gates on the output.
bool is_two_coin_family(const CircuitProgram &prog);

/// Runs every worked example and the class relations between them.
std::vector<FixtureRow> run_fixtures();

}  // namespace qbf

#endif  // QBF_FIXTURES_H
