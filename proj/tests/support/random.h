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

#ifndef QBF_TESTS_SUPPORT_RANDOM_H
#define QBF_TESTS_SUPPORT_RANDOM_H

#include <cstdint>
#include <random>

#include "qbf/field_elem.h"
#include "qbf/order_form.h"
#include "qbf/program.h"

namespace qbf::testing {

/// Seeded generator of random algebraic objects with small coefficients.
class Gen {
   public:
    explicit Gen(uint64_t seed) : rng_(seed) {}

    int integer(int lo, int hi);
    bool coin(double p = 0.5);
    /// n/d with |n| <= max_num, 1 <= d <= max_den.
    Rational rational(int max_num = 5, int max_den = 4);
    /// Rational strictly inside (0, 1).
    Rational unit_rational(int max_den = 12);
    /// a + b sqrt2 + c i + d i sqrt2 with each part zero half the time.
    Scalar scalar();
    Scalar real_scalar();
    Poly poly(int max_degree, bool real = false);
    Poly nonzero_poly(int max_degree, bool real = false);
    RatFn ratfn(int max_degree, bool real = false);
    FieldElem field_elem(int max_degree, bool real = false);
    FieldElem nonzero_field_elem(int max_degree, bool real = false);
    /// Random real form multiplied by a factor vanishing at z, sometimes to
    /// half-integer order through sqrt(p(1-p)) - sqrt(z(1-z)).
    OrderForm order_form_at(const Rational &z);
    /// Random composition of coins and constants through the emit functions.
    CircuitProgram program(int depth);

    std::mt19937_64 &engine() { return rng_; }

   private:
    std::mt19937_64 rng_;
};

}  // namespace qbf::testing

#endif  // QBF_TESTS_SUPPORT_RANDOM_H
