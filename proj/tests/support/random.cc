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

#include "random.h"

namespace qbf::testing {

int Gen::integer(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
}

bool Gen::coin(double p) {
    return std::bernoulli_distribution(p)(rng_);
}

Rational Gen::rational(int max_num, int max_den) {
    return frac(integer(-max_num, max_num), integer(1, max_den));
}

Rational Gen::unit_rational(int max_den) {
    int d = integer(2, max_den);
    return frac(integer(1, d - 1), d);
}

Scalar Gen::scalar() {
    auto part = [&] { return coin() ? rational() : Rational(0); };
    Rational a = rational();
    return Scalar(a, part(), part(), part());
}

Scalar Gen::real_scalar() {
    return Scalar(rational(), coin(0.3) ? rational() : Rational(0), 0, 0);
}

Poly Gen::poly(int max_degree, bool real) {
    std::vector<Scalar> c;
    int deg = integer(0, max_degree);
    for (int k = 0; k <= deg; k++) {
        c.push_back(real ? real_scalar() : scalar());
    }
    return Poly(c);
}

Poly Gen::nonzero_poly(int max_degree, bool real) {
    for (;;) {
        Poly f = poly(max_degree, real);
        if (!f.is_zero()) {
            return f;
        }
    }
}

RatFn Gen::ratfn(int max_degree, bool real) {
    return RatFn(poly(max_degree, real), nonzero_poly(max_degree, real));
}

FieldElem Gen::field_elem(int max_degree, bool real) {
    return FieldElem(ratfn(max_degree, real), coin(0.7) ? ratfn(max_degree, real) : RatFn());
}

FieldElem Gen::nonzero_field_elem(int max_degree, bool real) {
    for (;;) {
        FieldElem x = field_elem(max_degree, real);
        if (!x.is_zero()) {
            return x;
        }
    }
}

OrderForm Gen::order_form_at(const Rational &z) {
    OrderForm x{nonzero_poly(2, true), coin() ? poly(2, true) : Poly(), nonzero_poly(1, true)};
    OrderForm factor{Poly::linear_power(z, integer(0, 2)), Poly(), Poly(1L)};
    x = x * factor;
    Rational m = z * (1 - z);
    if (auto root = rational_sqrt(m); root && sgn(m) > 0 && coin()) {
        x = x * OrderForm{Poly(Scalar(*root)), Poly(-1L), Poly(1L)};
    }
    return x;
}

CircuitProgram Gen::program(int depth) {
    if (depth == 0 || coin(0.25)) {
        if (coin(0.6)) {
            return coin_program();
        }
        Scalar a(integer(-3, 3));
        if (coin(0.3)) {
            a += Scalar::sqrt2();
        }
        return const_program(a);
    }
    switch (integer(0, 3)) {
        case 0:
            return emit_inv(program(depth - 1));
        case 1:
            return emit_mul(program(depth - 1), program(depth - 1));
        case 2:
            return emit_add(program(depth - 1), program(depth - 1));
        default:
            return emit_tail(program(depth - 1), {coin() ? Gate::kH : Gate::kX}, "clifford");
    }
}

}  // namespace qbf::testing
