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

#include "qbf/symbolic.h"

#include <algorithm>

namespace qbf {

std::optional<FieldElem> SymbolicResult::ratio() const {
    if (a1.is_zero()) {
        return std::nullopt;
    }
    return a0 / a1;
}

std::string SymbolicResult::to_string() const {
    auto r = ratio();
    return r ? r->to_string() : "infinity";
}

SymbolicResult run_symbolic(const CircuitProgram &prog, const SymbolicObserver &after, const MeasureObserver &before_measure) {
    validate(prog);
    GroupedState<FieldElem> state;
    const FieldElem one(RatFn(1L));
    for (int k = 0; k < static_cast<int>(prog.instructions.size()); k++) {
        const Instr &in = prog.instructions[k];
        switch (in.op) {
            case Op::kCoin:
                state.alloc(in.regs[0], FieldElem::t(), one);
                break;
            case Op::kConst:
                state.alloc(in.regs[0], FieldElem::constant(in.value), one);
                break;
            case Op::kGate:
                state.apply(gate_matrix(in.gate).entries, in.regs);
                break;
            case Op::kMeasure: {
                if (before_measure) {
                    before_measure(k, state);
                }
                auto kept = state.branch(in.regs[0], in.keep);
                if (std::all_of(kept.begin(), kept.end(), [](const FieldElem &x) { return x.is_zero(); })) {
                    throw ZeroBranchError("instruction " + std::to_string(k) + " keeps a branch that is zero for every p", k);
                }
                state.project(in.regs[0], in.keep);
                break;
            }
        }
        if (after) {
            after(k, state);
        }
    }
    const auto &grp = state.groups().at(state.group_of(prog.output));
    return SymbolicResult{grp.amps[0], grp.amps[1]};
}

}  // namespace qbf
