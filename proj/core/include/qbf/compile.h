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

#ifndef QBF_COMPILE_H
#define QBF_COMPILE_H

#include <optional>
#include <vector>

#include "qbf/field_elem.h"
#include "qbf/program.h"

namespace qbf {

/// Ratio p from two coins: mul(coin, coin) gives p/(1-p); add 1 gives
/// 1/(1-p); inv gives 1-p; add -1 gives -p; mul by -1 gives p.
CircuitProgram construct_p();

/// Horner evaluation g = a0 + p (a1 + p (...)) with one construct_p per power.
CircuitProgram compile_poly(const Poly &g);

/// Compiles h = (g1/g2) t + g3/g4. When h is reachable from one or two coins
/// by at most four X/H gates, that shorter program is emitted instead.
CircuitProgram compile(const FieldElem &h);

/// The infinite ratio (state |0>): constant 0 followed by X.
CircuitProgram compile_infinity();

/// The X/H word (applied left to right) that takes base ratio `from` to `to`,
/// if one of length <= max_len exists.
std::optional<std::vector<Gate>> clifford_word(const FieldElem &from, const FieldElem &to, int max_len = 4);

}  // namespace qbf

#endif  // QBF_COMPILE_H
