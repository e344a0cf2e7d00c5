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

#include "qbf/compile.h"

#include <deque>

namespace qbf {

CircuitProgram construct_p() {
    CircuitProgram x = emit_mul(coin_program(), coin_program());
    x = emit_add(x, const_program(Scalar(1L)));
    x = emit_inv(x);
    x = emit_add(x, const_program(Scalar(-1L)));
    x = emit_mul(x, const_program(Scalar(-1L)));
    return wrap(x, "construct_p");
}

CircuitProgram compile_poly(const Poly &g) {
    if (g.degree() <= 0) {
        return const_program(g.coeff(0));
    }
    std::optional<CircuitProgram> acc;
    if (!g.lead().is_one()) {
        acc = const_program(g.lead());
    }
    for (int k = g.degree() - 1; k >= 0; k--) {
        acc = acc ? emit_mul(*acc, construct_p()) : construct_p();
        if (!g.coeff(k).is_zero()) {
            acc = emit_add(*acc, const_program(g.coeff(k)));
        }
    }
    return wrap(*acc, "poly");
}

namespace {

// g = num/den as a program; multiplication by 1 is skipped.
CircuitProgram compile_quotient(const RatFn &g) {
    CircuitProgram num = compile_poly(g.num());
    if (g.den().degree() == 0) {
        return num;
    }
    return emit_mul(num, emit_inv(compile_poly(g.den())));
}

// Projective ratio num : den. X and H are total on it.
struct Projective {
    FieldElem num;
    FieldElem den;
};

}  // namespace

std::optional<std::vector<Gate>> clifford_word(const FieldElem &from, const FieldElem &to, int max_len) {
    struct Item {
        Projective r;
        std::vector<Gate> word;
    };
    std::deque<Item> queue;
    queue.push_back({{from, FieldElem(RatFn(1L))}, {}});
    while (!queue.empty()) {
        Item it = std::move(queue.front());
        queue.pop_front();
        if (!it.r.den.is_zero() && it.r.num == to * it.r.den) {
            return it.word;
        }
        if (static_cast<int>(it.word.size()) == max_len) {
            continue;
        }
        for (Gate g : {Gate::kX, Gate::kH}) {
            Item next = it;
            next.word.push_back(g);
            if (g == Gate::kX) {
                std::swap(next.r.num, next.r.den);
            } else {
                next.r = {it.r.num + it.r.den, it.r.num - it.r.den};
            }
            queue.push_back(std::move(next));
        }
    }
    return std::nullopt;
}

CircuitProgram compile(const FieldElem &h) {
    if (h.is_zero()) {
        return wrap(const_program(Scalar()), "program");
    }
    for (int coins = 1; coins <= 2; coins++) {
        FieldElem base = coins == 1 ? FieldElem::t() : FieldElem(RatFn::tau());
        if (auto word = clifford_word(base, h)) {
            CircuitProgram prog = coins == 1 ? coin_program() : emit_mul(coin_program(), coin_program());
            if (word->empty()) {
                return wrap(prog, "program");
            }
            return wrap(emit_tail(prog, *word, "clifford"), "program");
        }
    }
    std::optional<CircuitProgram> r_part;
    std::optional<CircuitProgram> s_part;
    if (!h.r().is_zero()) {
        r_part = compile_quotient(h.r());
    }
    if (!h.s().is_zero()) {
        s_part = h.s().is_one() ? coin_program() : emit_mul(compile_quotient(h.s()), coin_program());
    }
    CircuitProgram body = r_part && s_part ? emit_add(*r_part, *s_part) : (r_part ? *r_part : *s_part);
    return wrap(body, "program");
}

CircuitProgram compile_infinity() {
    return wrap(emit_inv(const_program(Scalar())), "program");
}

}  // namespace qbf
