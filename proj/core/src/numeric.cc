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

#include "qbf/numeric.h"

#include <cmath>
#include <random>
#include <stdexcept>
#include <thread>

#include "qbf/state.h"

namespace qbf {

using Complex = std::complex<double>;

uint64_t trial_seed(uint64_t seed, uint64_t index) {
    uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

namespace {

double uniform(std::mt19937_64 &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double mass(const std::vector<Complex> &amps) {
    double m = 0;
    for (const auto &a : amps) {
        m += std::norm(a);
    }
    return m;
}

void normalize_all(GroupedState<Complex> &state) {
    for (auto &grp : state.groups()) {
        double m = std::sqrt(mass(grp.amps));
        if (m > 0) {
            for (auto &a : grp.amps) {
                a /= m;
            }
        }
    }
}

void alloc(GroupedState<Complex> &state, const Instr &in, double p0) {
    if (in.op == Op::kCoin) {
        state.alloc(in.regs[0], std::sqrt(p0), std::sqrt(1 - p0));
        return;
    }
    Complex a = in.value.to_complex();
    double n = std::sqrt(std::norm(a) + 1);
    state.alloc(in.regs[0], a / n, 1.0 / n);
}

// Everything a trial needs that does not change between trials.
struct Plan {
    const CircuitProgram *prog;
    std::vector<int> alloc_at;
    std::vector<std::vector<int>> descendants;
};

Plan make_plan(const CircuitProgram &prog) {
    validate(prog);
    Plan plan{&prog, std::vector<int>(prog.registers, -1), {}};
    for (int k = 0; k < static_cast<int>(prog.instructions.size()); k++) {
        const Instr &in = prog.instructions[k];
        if (in.op == Op::kCoin || in.op == Op::kConst) {
            plan.alloc_at[in.regs[0]] = k;
        }
    }
    for (int id = 0; id < static_cast<int>(prog.nodes.size()); id++) {
        auto sub = prog.subtree(id);
        sub.erase(sub.begin());
        plan.descendants.push_back(std::move(sub));
    }
    return plan;
}

struct Tally {
    uint64_t successes = 0, aborted = 0, zeros = 0, coins = 0, consts = 0;
};

void run_trial(const Plan &plan, const NumericOptions &opts, uint64_t index, Tally &tally) {
    const CircuitProgram &prog = *plan.prog;
    std::mt19937_64 rng(trial_seed(opts.seed, index));
    GroupedState<Complex> state;
    std::vector<int> retries(prog.nodes.size(), 0);
    uint64_t coins = 0;
    uint64_t consts = 0;
    int n = static_cast<int>(prog.instructions.size());
    int pc = 0;
    while (pc < n) {
        const Instr &in = prog.instructions[pc];
        switch (in.op) {
            case Op::kCoin:
            case Op::kConst:
                alloc(state, in, opts.p0);
                (in.op == Op::kCoin ? coins : consts)++;
                pc++;
                break;
            case Op::kGate:
                state.apply(gate_matrix_complex(in.gate), in.regs);
                pc++;
                break;
            case Op::kMeasure: {
                int reg = in.regs[0];
                double total = mass(state.groups()[state.group_of(reg)].amps);
                double kept = mass(state.branch(reg, in.keep));
                if (uniform(rng) * total < kept) {
                    state.project(reg, in.keep);
                    normalize_all(state);
                    pc++;
                    break;
                }
                const MacroNode &node = prog.nodes[in.rebuild];
                if (++retries[node.id] > opts.max_retries) {
                    tally.aborted++;
                    return;
                }
                for (int d : plan.descendants[node.id]) {
                    retries[d] = 0;
                }
                state.drop_groups([&](int r) { return plan.alloc_at[r] >= node.begin && plan.alloc_at[r] < node.end; });
                pc = node.begin;
                break;
            }
        }
    }
    const auto &out = state.groups()[state.group_of(prog.output)].amps;
    double p_zero = std::norm(out[0]) / (std::norm(out[0]) + std::norm(out[1]));
    if (uniform(rng) < p_zero) {
        tally.zeros++;
    }
    tally.successes++;
    tally.coins += coins;
    tally.consts += consts;
}

}  // namespace

NumericResult run_numeric(const CircuitProgram &prog, const NumericOptions &opts) {
    if (!(opts.p0 > 0 && opts.p0 < 1)) {
        throw std::invalid_argument("p0 must lie in (0, 1)");
    }
    if (opts.trials < 1) {
        throw std::invalid_argument("trials must be at least 1");
    }
    Plan plan = make_plan(prog);
    int threads = std::max(1, opts.threads);
    std::vector<Tally> tallies(threads);
    auto work = [&](int w) {
        uint64_t lo = opts.trials * w / threads;
        uint64_t hi = opts.trials * (w + 1) / threads;
        for (uint64_t k = lo; k < hi; k++) {
            run_trial(plan, opts, k, tallies[w]);
        }
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < threads; w++) {
            pool.emplace_back(work, w);
        }
        for (auto &th : pool) {
            th.join();
        }
    }
    NumericResult out;
    out.p0 = opts.p0;
    out.trials = opts.trials;
    out.seed = opts.seed;
    for (const auto &t : tallies) {
        out.successes += t.successes;
        out.aborted += t.aborted;
        out.zeros += t.zeros;
        out.coins += t.coins;
        out.consts += t.consts;
    }
    return out;
}

std::pair<Complex, Complex> run_postselected(const CircuitProgram &prog, double p0) {
    validate(prog);
    GroupedState<Complex> state;
    for (const Instr &in : prog.instructions) {
        switch (in.op) {
            case Op::kCoin:
            case Op::kConst:
                alloc(state, in, p0);
                break;
            case Op::kGate:
                state.apply(gate_matrix_complex(in.gate), in.regs);
                break;
            case Op::kMeasure: {
                state.project(in.regs[0], in.keep);
                normalize_all(state);
                break;
            }
        }
    }
    const auto &out = state.groups()[state.group_of(prog.output)].amps;
    double m = std::sqrt(mass(out));
    return {out[0] / m, out[1] / m};
}

}  // namespace qbf
