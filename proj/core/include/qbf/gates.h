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

#ifndef QBF_GATES_H
#define QBF_GATES_H

#include <complex>
#include <vector>

#include "qbf/program.h"
#include "qbf/scalar.h"

namespace qbf {

/// Row-major square matrix over Q(i, sqrt2), in the basis |0>, |1> (or
/// |00>, |01>, |10>, |11> with the first register as the high bit).
struct GateMatrix {
    int dim = 0;
    std::vector<Scalar> entries;

    const Scalar &at(int row, int col) const { return entries[row * dim + col]; }
    GateMatrix adjoint() const;
    friend GateMatrix operator*(const GateMatrix &a, const GateMatrix &b);
    bool is_identity() const;
};

/// X, H, CNOT, and
///     B = [[0, 0, 0, 1], [0, 1/sqrt2, 1/sqrt2, 0], [0, 1/sqrt2, -1/sqrt2, 0], [1, 0, 0, 0]].
const GateMatrix &gate_matrix(Gate g);

/// Floating copy of gate_matrix(g), row-major.
const std::vector<std::complex<double>> &gate_matrix_complex(Gate g);

}  // namespace qbf

#endif  // QBF_GATES_H
