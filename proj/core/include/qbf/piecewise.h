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

#ifndef QBF_PIECEWISE_H
#define QBF_PIECEWISE_H

#include <string>
#include <string_view>
#include <vector>

#include "qbf/ratfn.h"

namespace qbf {

/// f = fn on [lo, hi), or on [lo, hi] for the last piece.
struct Piece {
    Rational lo;
    Rational hi;
    RatFn fn;
};

/// A function on [0, 1] given by real rational pieces.
class PiecewiseFn {
   public:
    /// Throws std::invalid_argument unless the pieces partition [0, 1] in order,
    /// every piece is real with rational coefficients, and no piece has a pole
    /// on its closed interval.
    explicit PiecewiseFn(std::vector<Piece> pieces);
    static PiecewiseFn single(RatFn f);

    const std::vector<Piece> &pieces() const { return pieces_; }
    bool is_single() const { return pieces_.size() == 1; }
    /// Index of the piece whose interval contains x.
    size_t piece_at(const Rational &x) const;
    Rational eval(const Rational &x) const;
    double eval(double x) const;
    /// True when every piece is the same constant.
    bool is_constant() const;
    std::string to_string() const;

   private:
    std::vector<Piece> pieces_;
};

/// Reads records `[a,b) expr`, one per line, with `[a,b] expr` for the last
/// piece. Blank lines and text after '#' are ignored. Each expr must lower to a
/// real rational function. Throws std::invalid_argument with a line number.
PiecewiseFn parse_piecewise(std::string_view text);

}  // namespace qbf

#endif  // QBF_PIECEWISE_H
