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

#ifndef QBF_NUMERIC_H
#define QBF_NUMERIC_H

#include <complex>
#include <cstdint>
#include <utility>

#include "qbf/program.h"

namespace qbf {

struct NumericOptions {
    double p0 = 0.5;
    uint64_t trials = 1000;
    uint64_t seed = 0;
    /// Failed postselections tolerated per macro node before the trial aborts.
    int max_retries = 1000;
    /// Worker threads; results do not depend on this.
    int threads = 1;
};

struct NumericResult {
    double p0 = 0;
    uint64_t trials = 0;
    uint64_t seed = 0;
    /// Trials that produced an output state.
    uint64_t successes = 0;
    /// Trials that exhausted max_retries somewhere.
    uint64_t aborted = 0;
    /// Successful trials whose output read 0.
    uint64_t zeros = 0;
    /// |p> coins and constant coins consumed by successful trials.
    uint64_t coins = 0;
    uint64_t consts = 0;

    double empirical_p0_prob() const { return successes ? static_cast<double>(zeros) / successes : 0.0; }
    double mean_coins() const { return successes ? static_cast<double>(coins) / successes : 0.0; }
    double mean_consts() const { return successes ? static_cast<double>(consts) / successes : 0.0; }
    friend bool operator==(const NumericResult &a, const NumericResult &b) = default;
};

/// Monte-Carlo execution. Each trial draws from its own generator seeded by
/// splitmix64 from (seed, trial index), so the result depends only on
/// (program, p0, trials, seed, max_retries).
NumericResult run_numeric(const CircuitProgram &prog, const NumericOptions &opts);

/// Floating execution with every measurement forced to its kept outcome;
/// returns the output amplitudes (a0, a1), normalised.
std::pair<std::complex<double>, std::complex<double>> run_postselected(const CircuitProgram &prog, double p0);

/// splitmix64 mixing of (seed, index).
uint64_t trial_seed(uint64_t seed, uint64_t index);

}  // namespace qbf

#endif  // QBF_NUMERIC_H
