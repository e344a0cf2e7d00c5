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

#ifndef QBF_COST_H
#define QBF_COST_H

#include <string>
#include <vector>

#include "qbf/program.h"

namespace qbf {

struct MeasureCost {
    int instruction = 0;
    int node = 0;
    /// Probability of the kept outcome, given that the node reached it.
    double success_prob = 0;
};

struct NodeCost {
    int node = 0;
    std::string kind;
    /// Probability that one attempt at the node passes all of its own measurements.
    double success_prob = 1;
    double expected_attempts = 1;
    /// Expected coins consumed until the node succeeds, retries included.
    double expected_coins = 0;
    double expected_consts = 0;
};

struct CostReport {
    double p0 = 0;
    std::vector<MeasureCost> measures;
    std::vector<NodeCost> nodes;
    double expected_coins = 0;
    double expected_consts = 0;
    /// Coins and constants in one pass through the program with no failures.
    int static_coins = 0;
    int static_consts = 0;
};

/// Expected resources under the rebuild-on-failure policy:
///   E[node] = (sum over its items of cost(item) * P(reach item)) / P(node passes)
/// where items are child nodes and allocations, and the measurement
/// probabilities come from the exact state evaluated at p0. Throws
/// std::domain_error when some measurement cannot succeed at p0.
CostReport expected_cost(const CircuitProgram &prog, double p0);

}  // namespace qbf

#endif  // QBF_COST_H
