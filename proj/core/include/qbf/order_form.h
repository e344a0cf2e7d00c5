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

#ifndef QBF_ORDER_FORM_H
#define QBF_ORDER_FORM_H

#include <complex>
#include <string>

#include "qbf/field_elem.h"
#include "qbf/roots.h"

namespace qbf {

/// (a(p) + b(p) * sqrt(p(1-p))) / c(p). Every FieldElem has this shape after
/// clearing denominators, using t = sqrt(p(1-p)) / (1-p).
struct OrderForm {
    Poly a;
    Poly b;
    Poly c{1L};

    static OrderForm from(const FieldElem &x);
    FieldElem to_field_elem() const;

    bool is_zero() const { return a.is_zero() && b.is_zero(); }
    bool is_real() const { return a.is_real() && b.is_real() && c.is_real(); }
    /// Floating value at p0 in [0, 1]; throws std::domain_error at a zero of c.
    std::complex<double> eval(double p0) const;
    std::string to_string() const;

    friend OrderForm operator*(const OrderForm &x, const OrderForm &y);
};

/// Value u + v * sqrt(m) with u, v in Q(i, sqrt2) and m a nonnegative rational.
struct QuadraticValue {
    Scalar u;
    Scalar v;
    Rational m;

    bool is_zero() const;
    std::complex<double> approx() const;
    std::string to_string() const;
};

/// Order k/2 of x at z, x = (p - z)^(k/2) m(p) with m(z) != 0, plus the data
/// that certifies m(z) != 0:
///   m(z) = numerator_residual / (conjugate * denominator_residual)
/// where `conjugate` is 1 unless the conjugate route was taken.
struct VanishingOrder {
    enum class Route { kEndpoint, kDirect, kConjugate };

    int twice_order = 0;
    Route route = Route::kDirect;
    int extracted = 0;  // common (p - z) factors pulled out of a and b
    QuadraticValue numerator_residual;
    QuadraticValue conjugate;
    Scalar denominator_residual;

    double order() const { return twice_order / 2.0; }
    /// "2", "1/2", "-3/2", ...
    std::string order_string() const;
    /// Floating estimate of m(z).
    std::complex<double> residual_approx() const;
};

/// Order of vanishing of a nonzero OrderForm at a rational z in [0, 1].
/// Throws std::domain_error on zero input or z outside [0, 1].
VanishingOrder vanishing_order(const OrderForm &x, const Rational &z);

/// Twice the order of a real-coefficient OrderForm at an interior algebraic
/// point. Works through multiplicities and exact signs rather than evaluation,
/// so z may be irrational.
int twice_order_at(const OrderForm &x, RealRoot &z);

}  // namespace qbf

#endif  // QBF_ORDER_FORM_H
