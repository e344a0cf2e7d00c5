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

#ifndef QBF_LOWER_H
#define QBF_LOWER_H

#include <stdexcept>
#include <string>
#include <vector>

#include "qbf/expr.h"
#include "qbf/field_elem.h"

namespace qbf {

class LowerError : public std::runtime_error {
   public:
    enum class Kind {
        /// A square root leaves the field; `odd_factors` names the obstruction.
        kNotInField,
        /// A square root argument that is not a real rational function, or a
        /// constant whose square root is outside Q(i, sqrt2).
        kUnsupported,
        kDivisionByZero,
    };

    LowerError(Kind kind, const std::string &message, std::vector<Poly> odd_factors = {})
        : std::runtime_error(message), kind_(kind), odd_factors_(std::move(odd_factors)) {}

    Kind kind() const { return kind_; }
    /// Odd-multiplicity factors of the failed radicand, each with a positive
    /// value at p = 0 when it is nonzero there (so p - 1 is listed as 1 - p).
    const std::vector<Poly> &odd_factors() const { return odd_factors_; }

   private:
    Kind kind_;
    std::vector<Poly> odd_factors_;
};

/// Evaluates e in the field of ratios. Throws LowerError.
///
/// sqrt(u) needs u to be a real rational function with u = q^2 (result q) or
/// u = q^2 p/(1-p) (result q t), where a negative u is handled as i sqrt(-u).
/// The representative q is the one that is positive at p = 1/2, or just to the
/// right of 1/2 when q(1/2) = 0.
FieldElem lower(const Expr &e);

/// q or -q, whichever is positive at p = 1/2 (or just to its right).
RatFn sign_normalized(const RatFn &q);

/// Display form used in diagnoses: -f when f(0) < 0, else f.
Poly display_factor(const Poly &f);

}  // namespace qbf

#endif  // QBF_LOWER_H
