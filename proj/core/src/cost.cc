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

#include "qbf/cost.h"

#include <map>
#include <stdexcept>

#include "qbf/symbolic.h"

namespace qbf {

namespace {

double mass_at(const std::vector<FieldElem> &amps, double p0) {
    double m = 0;
    for (const auto &a : amps) {
        if (!a.is_zero()) {
            m += std::norm(a.eval(p0));
        }
    }
    return m;
}

}  // namespace

CostReport expected_cost(const CircuitProgram &prog, double p0) {
    if (!(p0 > 0 && p0 < 1)) {
        throw std::invalid_argument("p0 must lie in (0, 1)");
    }
    CostReport out;
    out.p0 = p0;
    out.static_coins = prog.count(Op::kCoin);
    out.static_consts = prog.count(Op::kConst);
    std::map<int, double> prob;
    run_symbolic(prog, {}, [&](int k, const GroupedState<FieldElem> &state) {
        const Instr &in = prog.instructions[k];
        int reg = in.regs[0];
        double total = mass_at(state.groups()[state.group_of(reg)].amps, p0);
        double kept = mass_at(state.branch(reg, in.keep), p0);
        double q = total > 0 ? kept / total : 0;
        if (!(q > 0)) {
            throw std::domain_error("measurement " + std::to_string(k) + " cannot succeed at p0 = " + std::to_string(p0));
        }
        prob[k] = q;
        out.measures.push_back(MeasureCost{k, in.node, q});
    });

    // Children always have smaller ids than their parents.
    out.nodes.resize(prog.nodes.size());
    for (const MacroNode &node : prog.nodes) {
        std::map<int, int> child_at;
        for (int c : node.children) {
            child_at[prog.nodes[c].begin] = c;
        }
        double reach = 1;
        double coins = 0;
        double consts = 0;
        for (int k = node.begin; k < node.end;) {
            if (auto it = child_at.find(k); it != child_at.end() && prog.nodes[it->second].end > k) {
                const NodeCost &c = out.nodes[it->second];
                coins += reach * c.expected_coins;
                consts += reach * c.expected_consts;
                k = prog.nodes[it->second].end;
                continue;
            }
            const Instr &in = prog.instructions[k];
            if (in.op == Op::kCoin) {
                coins += reach;
            } else if (in.op == Op::kConst) {
                consts += reach;
            } else if (in.op == Op::kMeasure) {
                reach *= prob.at(k);
            }
            k++;
        }
        NodeCost &nc = out.nodes[node.id];
        nc.node = node.id;
        nc.kind = node.kind;
        nc.success_prob = reach;
        nc.expected_attempts = 1 / reach;
        nc.expected_coins = coins / reach;
        nc.expected_consts = consts / reach;
    }
    out.expected_coins = out.nodes.back().expected_coins;
    out.expected_consts = out.nodes.back().expected_consts;
    return out;
}

}  // namespace qbf
