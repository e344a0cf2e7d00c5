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

#ifndef QBF_PROGRAM_H
#define QBF_PROGRAM_H

#include <string>
#include <vector>

#include "qbf/scalar.h"

namespace qbf {

enum class Op { kCoin, kConst, kGate, kMeasure };
enum class Gate { kX, kH, kCnot, kB };

std::string gate_name(Gate g);
/// Inverse of gate_name; throws std::invalid_argument.
Gate gate_from_name(const std::string &name);
int gate_arity(Gate g);

/// One program step. Registers are single qubits, each allocated exactly once.
struct Instr {
    Op op = Op::kCoin;
    /// kCoin, kConst, kMeasure: one register. kGate: one or two, first register
    /// is the control for CNOT and the high bit for B.
    std::vector<int> regs;
    /// kConst: the constant a of the state a|0> + |1>.
    Scalar value;
    /// kGate only.
    Gate gate = Gate::kX;
    /// kMeasure only: the outcome to keep, and the macro node rebuilt when the
    /// other outcome occurs.
    int keep = 0;
    int rebuild = -1;
    /// Macro node that emitted this instruction.
    int node = -1;

    static Instr coin(int reg, int node);
    static Instr constant(int reg, Scalar value, int node);
    static Instr gate1(Gate g, int reg, int node);
    static Instr gate2(Gate g, int a, int b, int node);
    static Instr measure(int reg, int keep, int rebuild, int node);

    std::string to_string() const;
    friend bool operator==(const Instr &a, const Instr &b);
};

/// Macro provenance: node `id` emitted the instructions [begin, end), which
/// include the ranges of all of its children.
struct MacroNode {
    int id = 0;
    std::string kind;
    int begin = 0;
    int end = 0;
    std::vector<int> children;

    friend bool operator==(const MacroNode &a, const MacroNode &b) = default;
};

/// A postselected circuit. Registers hold states a|0> + |1> (up to
/// normalisation); the program's ratio is that of its output register.
///
/// Programs are values: the emit functions build new programs from old ones,
/// renumbering registers and nodes so the operands' instructions come first.
/// The root macro node is always the last one.
struct CircuitProgram {
    int registers = 0;
    int output = -1;
    std::vector<Instr> instructions;
    std::vector<MacroNode> nodes;

    int root() const { return static_cast<int>(nodes.size()) - 1; }
    int count(Op op) const;
    /// Ids of `node` and all of its descendants.
    std::vector<int> subtree(int node) const;
    std::string to_string() const;

    friend bool operator==(const CircuitProgram &a, const CircuitProgram &b) = default;
};

/// A fresh |p> coin: ratio t.
CircuitProgram coin_program();
/// A constant coin a|0> + |1>: ratio a.
CircuitProgram const_program(const Scalar &a);
/// X on the output: ratio 1/h.
CircuitProgram emit_inv(const CircuitProgram &x);
/// CNOT from x's output onto y's, then keep 0 on y's: ratio h1 * h2.
CircuitProgram emit_mul(const CircuitProgram &x, const CircuitProgram &y);
/// B, keep 0 on x's output (ratio sqrt2/(h1 + h2) on y's), then X and a
/// multiplication by the constant sqrt2: ratio h1 + h2.
CircuitProgram emit_add(const CircuitProgram &x, const CircuitProgram &y);
/// Appends single-qubit gates on the output under a new node of the given kind.
CircuitProgram emit_tail(const CircuitProgram &x, const std::vector<Gate> &gates, const std::string &kind);
/// Adds a parent node with no instructions of its own.
CircuitProgram wrap(const CircuitProgram &x, const std::string &kind);

/// Structural checks: register discipline (allocation before use, no use after
/// a measurement retires it), gate arity, exactly one live register at the end
/// which is `output`, properly nested node ranges, measurement rebuild targets
/// equal to the emitting node, and subtree closure (a node's instructions only
/// touch registers allocated within its range). Throws std::invalid_argument.
void validate(const CircuitProgram &prog);

}  // namespace qbf

#endif  // QBF_PROGRAM_H
