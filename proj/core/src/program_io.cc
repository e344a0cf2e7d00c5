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

#include "qbf/program_io.h"

#include <algorithm>
#include <functional>
#include <nlohmann/json.hpp>
#include <stdexcept>

namespace qbf {

using nlohmann::json;

namespace {

const char *op_name(Op op) {
    switch (op) {
        case Op::kCoin:
            return "coin";
        case Op::kConst:
            return "const";
        case Op::kGate:
            return "gate";
        case Op::kMeasure:
            return "measure";
    }
    return "?";
}

Op op_from_name(const std::string &name) {
    if (name == "coin") {
        return Op::kCoin;
    }
    if (name == "const") {
        return Op::kConst;
    }
    if (name == "gate") {
        return Op::kGate;
    }
    if (name == "measure") {
        return Op::kMeasure;
    }
    throw std::invalid_argument("unknown op '" + name + "'");
}

json instr_to_json(const Instr &in) {
    json j;
    j["op"] = op_name(in.op);
    j["node"] = in.node;
    switch (in.op) {
        case Op::kCoin:
            j["reg"] = in.regs[0];
            break;
        case Op::kConst:
            j["reg"] = in.regs[0];
            j["value"] = {to_string(in.value.a()), to_string(in.value.b()), to_string(in.value.c()), to_string(in.value.d())};
            break;
        case Op::kGate:
            j["gate"] = gate_name(in.gate);
            j["regs"] = in.regs;
            break;
        case Op::kMeasure:
            j["reg"] = in.regs[0];
            j["keep"] = in.keep;
            j["rebuild"] = in.rebuild;
            break;
    }
    return j;
}

Instr instr_from_json(const json &j) {
    Instr in;
    in.op = op_from_name(j.at("op").get<std::string>());
    in.node = j.at("node").get<int>();
    switch (in.op) {
        case Op::kCoin:
            in.regs = {j.at("reg").get<int>()};
            break;
        case Op::kConst: {
            in.regs = {j.at("reg").get<int>()};
            const json &v = j.at("value");
            if (!v.is_array() || v.size() != 4) {
                throw std::invalid_argument("const value must hold four rationals");
            }
            in.value = Scalar(parse_rational(v[0].get<std::string>()), parse_rational(v[1].get<std::string>()),
                              parse_rational(v[2].get<std::string>()), parse_rational(v[3].get<std::string>()));
            break;
        }
        case Op::kGate:
            in.gate = gate_from_name(j.at("gate").get<std::string>());
            in.regs = j.at("regs").get<std::vector<int>>();
            break;
        case Op::kMeasure:
            in.regs = {j.at("reg").get<int>()};
            in.keep = j.at("keep").get<int>();
            in.rebuild = j.at("rebuild").get<int>();
            break;
    }
    return in;
}

json node_tree(const CircuitProgram &prog, int id) {
    const MacroNode &n = prog.nodes[id];
    json children = json::array();
    for (int c : n.children) {
        children.push_back(node_tree(prog, c));
    }
    return {{"id", n.id}, {"kind", n.kind}, {"begin", n.begin}, {"end", n.end}, {"children", children}};
}

void flatten(const json &j, std::vector<MacroNode> &out, int depth) {
    if (depth > 100000) {
        throw std::invalid_argument("provenance tree is too deep");
    }
    MacroNode n;
    n.id = j.at("id").get<int>();
    n.kind = j.at("kind").get<std::string>();
    n.begin = j.at("begin").get<int>();
    n.end = j.at("end").get<int>();
    for (const json &c : j.at("children")) {
        n.children.push_back(c.at("id").get<int>());
        flatten(c, out, depth + 1);
    }
    out.push_back(std::move(n));
}

}  // namespace

std::string serialize(const CircuitProgram &prog) {
    json j;
    j["format"] = kProgramFormat;
    j["registers"] = prog.registers;
    j["output"] = prog.output;
    json instrs = json::array();
    for (const Instr &in : prog.instructions) {
        instrs.push_back(instr_to_json(in));
    }
    j["instructions"] = instrs;
    j["provenance"] = prog.nodes.empty() ? json(nullptr) : node_tree(prog, prog.root());
    return j.dump(2) + "\n";
}

CircuitProgram deserialize(std::string_view text) {
    CircuitProgram prog;
    try {
        json j = json::parse(text);
        if (j.at("format").get<std::string>() != kProgramFormat) {
            throw std::invalid_argument("unsupported format '" + j.at("format").get<std::string>() + "'");
        }
        prog.registers = j.at("registers").get<int>();
        prog.output = j.at("output").get<int>();
        for (const json &in : j.at("instructions")) {
            prog.instructions.push_back(instr_from_json(in));
        }
        if (!j.at("provenance").is_null()) {
            flatten(j.at("provenance"), prog.nodes, 0);
        }
    } catch (const json::exception &e) {
        throw std::invalid_argument(std::string("malformed program: ") + e.what());
    }
    std::sort(prog.nodes.begin(), prog.nodes.end(), [](const MacroNode &a, const MacroNode &b) { return a.id < b.id; });
    for (int k = 0; k < static_cast<int>(prog.nodes.size()); k++) {
        if (prog.nodes[k].id != k) {
            throw std::invalid_argument("provenance node ids must be 0.." + std::to_string(prog.nodes.size() - 1));
        }
    }
    validate(prog);
    return prog;
}

}  // namespace qbf
