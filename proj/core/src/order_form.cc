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

#include "qbf/order_form.h"

#include <algorithm>
#include <climits>
#include <cmath>
#include <stdexcept>

namespace qbf {

namespace {

const Poly &one_minus_p() {
    static const Poly v = Poly(1L) - Poly::p();
    return v;
}

const Poly &p_one_minus_p() {
    static const Poly v = Poly::p() * one_minus_p();
    return v;
}

int poly_order(const Poly &f, const Rational &z) {
    return f.is_zero() ? INT_MAX : f.order_at(z);
}

}  // namespace

OrderForm OrderForm::from(const FieldElem &x) {
    // r + s t = (rn sd (1-p) + sn rd sqrt(p(1-p))) / (rd sd (1-p)).
    const RatFn &r = x.r();
    const RatFn &s = x.s();
    if (s.is_zero()) {
        return OrderForm{r.num(), Poly(), r.den()};
    }
    if (r.is_zero()) {
        return OrderForm{Poly(), s.num(), s.den() * one_minus_p()};
    }
    return OrderForm{r.num() * s.den() * one_minus_p(), s.num() * r.den(), r.den() * s.den() * one_minus_p()};
}

FieldElem OrderForm::to_field_elem() const {
    if (c.is_zero()) {
        throw std::domain_error("OrderForm with zero denominator");
    }
    return FieldElem(RatFn(a, c), RatFn(b * one_minus_p(), c));
}

std::complex<double> OrderForm::eval(double p0) const {
    std::complex<double> x(p0, 0.0);
    std::complex<double> den = c.eval(x);
    if (den == 0.0) {
        throw std::domain_error("OrderForm pole at evaluation point");
    }
    double root = std::sqrt(std::max(0.0, p0 * (1.0 - p0)));
    return (a.eval(x) + b.eval(x) * root) / den;
}

std::string OrderForm::to_string() const {
    return "(" + a.to_string() + " + (" + b.to_string() + ")*sqrt(p(1-p)))/(" + c.to_string() + ")";
}

OrderForm operator*(const OrderForm &x, const OrderForm &y) {
    return OrderForm{x.a * y.a + x.b * y.b * p_one_minus_p(), x.a * y.b + x.b * y.a, x.c * y.c};
}

namespace {

// Square root of a nonnegative rational inside Q(i, sqrt2), if it lives there.
std::optional<Scalar> root_in_field(const Rational &m) {
    return Scalar(m).sqrt_of_rational();
}

}  // namespace

bool QuadraticValue::is_zero() const {
    if (v.is_zero()) {
        return u.is_zero();
    }
    if (auto r = root_in_field(m)) {
        return (u + v * *r).is_zero();
    }
    // sqrt(m) is not in Q(i, sqrt2), so 1 and sqrt(m) are linearly independent.
    return u.is_zero() && v.is_zero();
}

std::complex<double> QuadraticValue::approx() const {
    return u.to_complex() + v.to_complex() * std::sqrt(to_double(m));
}

std::string QuadraticValue::to_string() const {
    if (v.is_zero()) {
        return u.to_string();
    }
    return "(" + u.to_string() + ") + (" + v.to_string() + ")*sqrt(" + m.get_str() + ")";
}

std::string VanishingOrder::order_string() const {
    if (twice_order % 2 == 0) {
        return std::to_string(twice_order / 2);
    }
    return std::to_string(twice_order) + "/2";
}

std::complex<double> VanishingOrder::residual_approx() const {
    return numerator_residual.approx() / (conjugate.approx() * denominator_residual.to_complex());
}

VanishingOrder vanishing_order(const OrderForm &x, const Rational &z) {
    if (x.is_zero()) {
        throw std::domain_error("vanishing order of the zero element");
    }
    if (x.c.is_zero()) {
        throw std::domain_error("OrderForm with zero denominator");
    }
    if (sgn(z) < 0 || z > 1) {
        throw std::domain_error("vanishing order requires z in [0, 1]");
    }
    VanishingOrder out;
    out.conjugate = QuadraticValue{Scalar(1L), Scalar(), Rational(0)};
    Scalar zs(z);

    int c_order = x.c.order_at(z);
    out.denominator_residual = x.c.deflate(z, c_order).eval(zs);

    if (sgn(z) == 0 || z == 1) {
        // sqrt(p(1-p)) has order 1/2 here and a unit cofactor, so the integer
        // order of a and the half-integer order of b*sqrt cannot cancel.
        out.route = VanishingOrder::Route::kEndpoint;
        int ta = x.a.is_zero() ? INT_MAX : 2 * x.a.order_at(z);
        int tb = x.b.is_zero() ? INT_MAX : 2 * x.b.order_at(z) + 1;
        if (ta < tb) {
            out.numerator_residual = QuadraticValue{x.a.deflate(z, ta / 2).eval(zs), Scalar(), Rational(0)};
            out.twice_order = ta - 2 * c_order;
        } else {
            out.numerator_residual = QuadraticValue{x.b.deflate(z, tb / 2).eval(zs), Scalar(), Rational(0)};
            out.twice_order = tb - 2 * c_order;
        }
        return out;
    }

    Rational m = z * (1 - z);
    Poly a = x.a;
    Poly b = x.b;
    int common = std::min(poly_order(a, z), poly_order(b, z));
    if (common > 0) {
        // Both parts vanish at z: pull (p - z) out of each and continue.
        a = a.is_zero() ? a : a.deflate(z, common);
        b = b.is_zero() ? b : b.deflate(z, common);
        out.extracted = common;
    }
    QuadraticValue plus{a.eval(zs), b.eval(zs), m};
    if (!plus.is_zero()) {
        out.route = VanishingOrder::Route::kDirect;
        out.numerator_residual = plus;
        out.twice_order = 2 * (out.extracted - c_order);
        return out;
    }
    // a(z) + b(z) sqrt(m) = 0 while a, b do not both vanish: the conjugate is a
    // unit at z, and (a + b sqrt)(a - b sqrt) = a^2 - b^2 p(1-p) is a polynomial.
    out.route = VanishingOrder::Route::kConjugate;
    out.conjugate = QuadraticValue{a.eval(zs), -b.eval(zs), m};
    Poly norm = a * a - b * b * p_one_minus_p();
    int k = norm.order_at(z);
    out.numerator_residual = QuadraticValue{norm.deflate(z, k).eval(zs), Scalar(), Rational(0)};
    out.twice_order = 2 * (out.extracted + k - c_order);
    return out;
}

int twice_order_at(const OrderForm &x, RealRoot &z) {
    if (z.is_exact()) {
        return vanishing_order(x, z.value()).twice_order;
    }
    if (!x.is_real()) {
        throw std::invalid_argument("twice_order_at requires real coefficients");
    }
    if (x.is_zero()) {
        throw std::domain_error("vanishing order of the zero element");
    }
    int c_order = z.multiplicity_in(x.c);
    int num_order;
    if (x.b.is_zero()) {
        num_order = z.multiplicity_in(x.a);
    } else if (x.a.is_zero()) {
        num_order = z.multiplicity_in(x.b);
    } else {
        Poly g = gcd(x.a, x.b);
        int e = z.multiplicity_in(g);
        Poly a = exact_div(x.a, g);
        Poly b = exact_div(x.b, g);
        int sa = z.sign_of(a);
        int sb = z.sign_of(b);
        if (sa == 0 || sb == 0 || sa == sb) {
            // a + b sqrt(p(1-p)) cannot cancel at z.
            num_order = e;
        } else {
            Poly norm = a * a - b * b * p_one_minus_p();
            num_order = e + z.multiplicity_in(norm);
        }
    }
    return 2 * (num_order - c_order);
}

}  // namespace qbf
