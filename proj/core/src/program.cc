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

#include "qbf/program.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qbf {

std::string gate_name(Gate g) {
    switch (g) {
        case Gate::kX:
            return "X";
        case Gate::kH:
            return "H";
        case Gate::kCnot:
            return "CNOT";
        case Gate::kB:
            return "B";
    }
    return "?";
}

Gate gate_from_name(const std::string &name) {
    if (name == "X") {
        return Gate::kX;
    }
    if (name == "H") {
        return Gate::kH;
    }
    if (name == "CNOT") {
        return Gate::kCnot;
    }
    if (name == "B") {
        return Gate::kB;
    }
    throw std::invalid_argument("unknown gate '" + name + "'");
}

int gate_arity(Gate g) {
    return g == Gate::kCnot || g == Gate::kB ? 2 : 1;
}

Instr Instr::coin(int reg, int node) {
    Instr in;
    in.op = Op::kCoin;
    in.regs = {reg};
    in.node = node;
    return in;
}

Instr Instr::constant(int reg, Scalar value, int node) {
    Instr in;
    in.op = Op::kConst;
    in.regs = {reg};
    in.value = std::move(value);
    in.node = node;
    return in;
}

Instr Instr::gate1(Gate g, int reg, int node) {
    Instr in;
    in.op = Op::kGate;
    in.gate = g;
    in.regs = {reg};
    in.node = node;
    return in;
}

Instr Instr::gate2(Gate g, int a, int b, int node) {
    Instr in;
    in.op = Op::kGate;
    in.gate = g;
    in.regs = {a, b};
    in.node = node;
    return in;
}

Instr Instr::measure(int reg, int keep, int rebuild, int node) {
    Instr in;
    in.op = Op::kMeasure;
    in.regs = {reg};
    in.keep = keep;
    in.rebuild = rebuild;
    in.node = node;
    return in;
}

std::string Instr::to_string() const {
    std::ostringstream out;
    switch (op) {
        case Op::kCoin:
            out << "COIN r" << regs[0];
            break;
        case Op::kConst:
            out << "CONST r" << regs[0] << " = " << value.to_string();
            break;
        case Op::kGate:
            out << gate_name(gate);
            for (int r : regs) {
                out << " r" << r;
            }
            break;
        case Op::kMeasure:
            out << "MEASURE r" << regs[0] << " keep " << keep << " else rebuild #" << rebuild;
            break;
    }
    out << "  @" << node;
    return out.str();
}

bool operator==(const Instr &a, const Instr &b) {
    return a.op == b.op && a.regs == b.regs && a.value == b.value && a.gate == b.gate && a.keep == b.keep &&
           a.rebuild == b.rebuild && a.node == b.node;
}

int CircuitProgram::count(Op op) const {
    return static_cast<int>(std::count_if(instructions.begin(), instructions.end(), [op](const Instr &in) { return in.op == op; }));
}

std::vector<int> CircuitProgram::subtree(int node) const {
    std::vector<int> out{node};
    for (size_t k = 0; k < out.size(); k++) {
        for (int c : nodes.at(out[k]).children) {
            out.push_back(c);
        }
    }
    return out;
}

std::string CircuitProgram::to_string() const {
    std::ostringstream out;
    out << "registers " << registers << ", output r" << output << "\n";
    for (size_t k = 0; k < instructions.size(); k++) {
        out << k << ": " << instructions[k].to_string() << "\n";
    }
    return out.str();
}

namespace {

CircuitProgram leaf(Instr in, const std::string &kind) {
    CircuitProgram p;
    p.registers = 1;
    p.output = 0;
    in.node = 0;
    p.instructions.push_back(std::move(in));
    p.nodes.push_back(MacroNode{0, kind, 0, 1, {}});
    return p;
}

// Appends y after x with y's registers, instructions and nodes shifted.
CircuitProgram concat(const CircuitProgram &x, const CircuitProgram &y) {
    CircuitProgram out = x;
    int reg_shift = x.registers;
    int instr_shift = static_cast<int>(x.instructions.size());
    int node_shift = static_cast<int>(x.nodes.size());
    out.registers += y.registers;
    for (Instr in : y.instructions) {
        for (int &r : in.regs) {
            r += reg_shift;
        }
        in.node += node_shift;
        if (in.rebuild >= 0) {
            in.rebuild += node_shift;
        }
        out.instructions.push_back(std::move(in));
    }
    for (MacroNode n : y.nodes) {
        n.id += node_shift;
        n.begin += instr_shift;
        n.end += instr_shift;
        for (int &c : n.children) {
            c += node_shift;
        }
        out.nodes.push_back(std::move(n));
    }
    return out;
}

// Adds the parent node over everything emitted so far; returns its id.
int add_parent(CircuitProgram &p, const std::string &kind, std::vector<int> children) {
    int id = static_cast<int>(p.nodes.size());
    p.nodes.push_back(MacroNode{id, kind, 0, 0, std::move(children)});
    return id;
}

void close_parent(CircuitProgram &p, int id) {
    p.nodes[id].end = static_cast<int>(p.instructions.size());
}

}  // namespace

CircuitProgram coin_program() {
    return leaf(Instr::coin(0, 0), "coin");
}

CircuitProgram const_program(const Scalar &a) {
    return leaf(Instr::constant(0, a, 0), "const");
}

CircuitProgram emit_inv(const CircuitProgram &x) {
    CircuitProgram out = x;
    int id = add_parent(out, "inv", {x.root()});
    out.instructions.push_back(Instr::gate1(Gate::kX, out.output, id));
    close_parent(out, id);
    return out;
}

CircuitProgram emit_mul(const CircuitProgram &x, const CircuitProgram &y) {
    int y_root = static_cast<int>(x.nodes.size()) + y.root();
    int y_out = x.registers + y.output;
    CircuitProgram out = concat(x, y);
    int id = add_parent(out, "mul", {x.root(), y_root});
    out.instructions.push_back(Instr::gate2(Gate::kCnot, x.output, y_out, id));
    out.instructions.push_back(Instr::measure(y_out, 0, id, id));
    out.output = x.output;
    close_parent(out, id);
    return out;
}

CircuitProgram emit_add(const CircuitProgram &x, const CircuitProgram &y) {
    int y_root = static_cast<int>(x.nodes.size()) + y.root();
    int y_out = x.registers + y.output;
    CircuitProgram out = concat(x, y);
    int id = add_parent(out, "add", {x.root(), y_root});
    out.instructions.push_back(Instr::gate2(Gate::kB, x.output, y_out, id));
    out.instructions.push_back(Instr::measure(x.output, 0, id, id));
    out.instructions.push_back(Instr::gate1(Gate::kX, y_out, id));
    int c = out.registers++;
    out.instructions.push_back(Instr::constant(c, Scalar::sqrt2(), id));
    out.instructions.push_back(Instr::gate2(Gate::kCnot, y_out, c, id));
    out.instructions.push_back(Instr::measure(c, 0, id, id));
    out.output = y_out;
    close_parent(out, id);
    return out;
}

CircuitProgram emit_tail(const CircuitProgram &x, const std::vector<Gate> &gates, const std::string &kind) {
    CircuitProgram out = x;
    int id = add_parent(out, kind, {x.root()});
    for (Gate g : gates) {
        if (gate_arity(g) != 1) {
            throw std::invalid_argument("emit_tail takes single-qubit gates");
        }
        out.instructions.push_back(Instr::gate1(g, out.output, id));
    }
    close_parent(out, id);
    return out;
}

CircuitProgram wrap(const CircuitProgram &x, const std::string &kind) {
    CircuitProgram out = x;
    int id = add_parent(out, kind, {x.root()});
    close_parent(out, id);
    return out;
}

void validate(const CircuitProgram &prog) {
    auto bad = [](const std::string &msg) { return std::invalid_argument("invalid program: " + msg); };
    int n = static_cast<int>(prog.instructions.size());
    int m = static_cast<int>(prog.nodes.size());
    if (prog.registers < 1 || n < 1 || m < 1) {
        throw bad("empty program");
    }
    for (int id = 0; id < m; id++) {
        const MacroNode &node = prog.nodes[id];
        if (node.id != id) {
            throw bad("node id mismatch at " + std::to_string(id));
        }
        if (node.begin < 0 || node.begin > node.end || node.end > n) {
            throw bad("node " + std::to_string(id) + " has a bad range");
        }
        for (int c : node.children) {
            if (c < 0 || c >= id) {
                throw bad("node " + std::to_string(id) + " has a bad child " + std::to_string(c));
            }
            const MacroNode &child = prog.nodes[c];
            if (child.begin < node.begin || child.end > node.end) {
                throw bad("node " + std::to_string(c) + " is not nested in its parent " + std::to_string(id));
            }
        }
        std::vector<std::pair<int, int>> spans;
        for (int c : node.children) {
            spans.emplace_back(prog.nodes[c].begin, prog.nodes[c].end);
        }
        std::sort(spans.begin(), spans.end());
        for (size_t k = 0; k + 1 < spans.size(); k++) {
            if (spans[k].second > spans[k + 1].first) {
                throw bad("children of node " + std::to_string(id) + " overlap");
            }
        }
    }
    const MacroNode &root = prog.nodes.back();
    if (root.begin != 0 || root.end != n) {
        throw bad("root node must cover the program");
    }
    std::vector<int> parents(m, -1);
    for (int id = 0; id < m; id++) {
        for (int c : prog.nodes[id].children) {
            if (parents[c] != -1) {
                throw bad("node " + std::to_string(c) + " has two parents");
            }
            parents[c] = id;
        }
    }
    for (int id = 0; id < m; id++) {
        if (id != m - 1 && parents[id] == -1) {
            throw bad("node " + std::to_string(id) + " is detached");
        }
    }
    enum class RegState { kFresh, kLive, kRetired };
    std::vector<RegState> state(prog.registers, RegState::kFresh);
    std::vector<int> alloc_at(prog.registers, -1);
    for (int k = 0; k < n; k++) {
        const Instr &in = prog.instructions[k];
        std::string where = "instruction " + std::to_string(k) + " (" + in.to_string() + ")";
        if (in.node < 0 || in.node >= m) {
            throw bad(where + " has no macro node");
        }
        const MacroNode &node = prog.nodes[in.node];
        if (k < node.begin || k >= node.end) {
            throw bad(where + " lies outside its node's range");
        }
        for (int c : node.children) {
            if (k >= prog.nodes[c].begin && k < prog.nodes[c].end) {
                throw bad(where + " belongs to a child node");
            }
        }
        size_t want = in.op == Op::kGate ? static_cast<size_t>(gate_arity(in.gate)) : 1;
        if (in.regs.size() != want) {
            throw bad(where + " has the wrong number of registers");
        }
        if (in.regs.size() == 2 && in.regs[0] == in.regs[1]) {
            throw bad(where + " uses one register twice");
        }
        for (int r : in.regs) {
            if (r < 0 || r >= prog.registers) {
                throw bad(where + " uses an unknown register");
            }
        }
        if (in.op == Op::kCoin || in.op == Op::kConst) {
            int r = in.regs[0];
            if (state[r] != RegState::kFresh) {
                throw bad(where + " reallocates r" + std::to_string(r));
            }
            state[r] = RegState::kLive;
            alloc_at[r] = k;
            continue;
        }
        for (int r : in.regs) {
            if (state[r] == RegState::kFresh) {
                throw bad(where + " uses r" + std::to_string(r) + " before allocation");
            }
            if (state[r] == RegState::kRetired) {
                throw bad(where + " uses r" + std::to_string(r) + " after it was measured");
            }
            if (alloc_at[r] < node.begin) {
                throw bad(where + " touches r" + std::to_string(r) + " from outside its node");
            }
        }
        if (in.op == Op::kMeasure) {
            if (in.keep != 0 && in.keep != 1) {
                throw bad(where + " keeps an outcome other than 0 or 1");
            }
            if (in.rebuild != in.node) {
                throw bad(where + " must rebuild its own node");
            }
            state[in.regs[0]] = RegState::kRetired;
        }
    }
    int live = 0;
    for (int r = 0; r < prog.registers; r++) {
        if (state[r] == RegState::kLive) {
            live++;
        }
        if (state[r] == RegState::kFresh) {
            throw bad("register r" + std::to_string(r) + " is never allocated");
        }
    }
    if (live != 1 || prog.output < 0 || prog.output >= prog.registers || state[prog.output] != RegState::kLive) {
        throw bad("exactly one register, the output, must be live at the end");
    }
    // Closure: registers used by a node's instructions (directly or through
    // children) are allocated inside that node.
    for (const MacroNode &node : prog.nodes) {
        for (int k = node.begin; k < node.end; k++) {
            for (int r : prog.instructions[k].regs) {
                if (alloc_at[r] < node.begin || alloc_at[r] >= node.end) {
                    throw bad("node " + std::to_string(node.id) + " touches r" + std::to_string(r) + " allocated outside it");
                }
            }
        }
    }
}

}  // namespace qbf
