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

#ifndef QBF_SYMBOLIC_H
#define QBF_SYMBOLIC_H

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

#include "qbf/program.h"
#include "qbf/state.h"

namespace qbf {

/// A measurement kept a branch whose amplitudes vanish for every p.
class ZeroBranchError : public std::runtime_error {
   public:
    ZeroBranchError(const std::string &message, int instruction)
        : std::runtime_error(message), instruction_(instruction) {}
    int instruction() const { return instruction_; }

   private:
    int instruction_;
};

/// Final state a0|0> + a1|1> of the output register, up to a global factor.
struct SymbolicResult {
    FieldElem a0;
    FieldElem a1;

    bool is_infinite() const { return a1.is_zero(); }
    /// a0 / a1; nullopt for the infinite ratio.
    std::optional<FieldElem> ratio() const;
    std::string to_string() const;
};

/// Called after every instruction with its index and the current state.
using SymbolicObserver = std::function<void(int, const GroupedState<FieldElem> &)>;
/// Called before every measurement with its index and the state it acts on.
using MeasureObserver = std::function<void(int, const GroupedState<FieldElem> &)>;

/// Exact execution along the kept branch of every measurement. A coin starts
/// as t|0> + |1>, a constant a as a|0> + |1>; amplitudes are never normalised,
/// so they stay free of poles in (0, 1). Throws ZeroBranchError and
/// std::invalid_argument for malformed programs.
SymbolicResult run_symbolic(const CircuitProgram &prog, const SymbolicObserver &after = {},
                            const MeasureObserver &before_measure = {});

}  // namespace qbf

#endif  // QBF_SYMBOLIC_H
