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

#ifndef QBF_ROOTS_H
#define QBF_ROOTS_H

#include <optional>
#include <string>
#include <vector>

#include "qbf/ratfn.h"

namespace qbf {

struct SquarefreeFactor {
    Poly factor;  // monic, squarefree, pairwise coprime with the other factors
    int multiplicity;
};

struct SquarefreeDecomposition {
    Scalar unit;  // leading coefficient
    std::vector<SquarefreeFactor> factors;
};

/// Yun's algorithm: f = unit * prod factor_i^multiplicity_i. Zero is rejected.
SquarefreeDecomposition squarefree_decompose(const Poly &f);
/// f / gcd(f, f'), monic.
Poly squarefree_part(const Poly &f);

/// Distinct rational roots of f (any coefficients), ascending.
std::vector<Rational> rational_roots(const Poly &f);

/// Odd-multiplicity factors of a nonzero rational function: the obstruction to
/// being a square. Linear factors with rational roots are split off.
std::vector<Poly> odd_factors(const RatFn &f);

/// Returns q with q^2 = f when one exists with coefficients in Q(sqrt2). f must
/// have rational coefficients (std::invalid_argument otherwise).
/// The leading coefficient must be a rational square or twice one.
std::optional<RatFn> is_square(const RatFn &f);

/// Number of distinct real roots of f in the open interval (a, b).
/// f must have real coefficients; zero polynomial rejected; requires a < b.
int sturm_count(const Poly &f, const Rational &a, const Rational &b);

/// True iff f >= 0 on the closed interval [a, b] (real coefficients).
bool certify_nonneg(const Poly &f, const Rational &a, const Rational &b);

/// A real algebraic number given either exactly or by an isolating interval
/// (lo, hi) containing exactly one root of the squarefree real polynomial `poly`.
class RealRoot {
   public:
    static RealRoot exact(Rational z);
    RealRoot(Poly poly, Rational lo, Rational hi);

    bool is_exact() const { return exact_.has_value(); }
    const Rational &value() const { return *exact_; }
    const Poly &poly() const { return poly_; }
    const Rational &lo() const { return lo_; }
    const Rational &hi() const { return hi_; }
    double approx() const;

    /// Bisects until the interval is narrower than width (or the root is hit exactly).
    void refine(const Rational &width);
    /// True iff q vanishes at this point (q with real coefficients).
    bool is_root_of(const Poly &q) const;
    /// Multiplicity of this point as a root of q (real coefficients, q != 0).
    int multiplicity_in(const Poly &q) const;
    /// Exact sign of q at this point (real coefficients).
    int sign_of(const Poly &q);

    std::string to_string() const;

   private:
    RealRoot() = default;
    void bisect_once();

    std::optional<Rational> exact_;
    Poly poly_;
    Rational lo_;
    Rational hi_;
};

/// Distinct real roots of f in the closed interval [a, b], ascending. Complex
/// coefficients are allowed: real roots are those of gcd(Re f, Im f).
std::vector<RealRoot> real_roots(const Poly &f, const Rational &a, const Rational &b);

}  // namespace qbf

#endif  // QBF_ROOTS_H
