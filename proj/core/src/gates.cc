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

#include "qbf/gates.h"

#include <array>

namespace qbf {

GateMatrix GateMatrix::adjoint() const {
    GateMatrix out{dim, std::vector<Scalar>(entries.size())};
    for (int r = 0; r < dim; r++) {
        for (int c = 0; c < dim; c++) {
            out.entries[c * dim + r] = at(r, c).conj();
        }
    }
    return out;
}

GateMatrix operator*(const GateMatrix &a, const GateMatrix &b) {
    GateMatrix out{a.dim, std::vector<Scalar>(a.entries.size())};
    for (int r = 0; r < a.dim; r++) {
        for (int c = 0; c < a.dim; c++) {
            Scalar acc;
            for (int k = 0; k < a.dim; k++) {
                acc += a.at(r, k) * b.at(k, c);
            }
            out.entries[r * a.dim + c] = acc;
        }
    }
    return out;
}

bool GateMatrix::is_identity() const {
    for (int r = 0; r < dim; r++) {
        for (int c = 0; c < dim; c++) {
            if (!(at(r, c) == Scalar(r == c ? 1L : 0L))) {
                return false;
            }
        }
    }
    return true;
}

namespace {

std::array<GateMatrix, 4> build() {
    Scalar o(0L);
    Scalar l(1L);
    Scalar h = Scalar::inv_sqrt2();
    return {
        GateMatrix{2, {o, l, l, o}},
        GateMatrix{2, {h, h, h, -h}},
        GateMatrix{4, {l, o, o, o, o, l, o, o, o, o, o, l, o, o, l, o}},
        GateMatrix{4, {o, o, o, l, o, h, h, o, o, h, -h, o, l, o, o, o}},
    };
}

}  // namespace

const GateMatrix &gate_matrix(Gate g) {
    static const std::array<GateMatrix, 4> all = build();
    return all[static_cast<int>(g)];
}

const std::vector<std::complex<double>> &gate_matrix_complex(Gate g) {
    static const std::array<std::vector<std::complex<double>>, 4> all = [] {
        std::array<std::vector<std::complex<double>>, 4> out;
        for (int k = 0; k < 4; k++) {
            for (const auto &e : gate_matrix(static_cast<Gate>(k)).entries) {
                out[k].push_back(e.to_complex());
            }
        }
        return out;
    }();
    return all[static_cast<int>(g)];
}

}  // namespace qbf
