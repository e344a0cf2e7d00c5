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

#include "qbf/ratfn.h"

#include <cmath>
#include <stdexcept>

#include "text.h"

namespace qbf {

RatFn::RatFn(Poly num) : num_(std::move(num)), den_(1L) {}

RatFn::RatFn(Poly num, Poly den) {
    if (den.is_zero()) {
        throw std::domain_error("rational function with zero denominator");
    }
    if (num.is_zero()) {
        num_ = Poly();
        den_ = Poly(1L);
        return;
    }
    Poly g = gcd(num, den);
    if (g.degree() > 0) {
        num = exact_div(num, g);
        den = exact_div(den, g);
    }
    Scalar lead = den.lead();
    if (!lead.is_one()) {
        Scalar inv = lead.inverse();
        num = num.scaled(inv);
        den = den.scaled(inv);
    }
    num_ = std::move(num);
    den_ = std::move(den);
}

const RatFn &RatFn::tau() {
    static const RatFn value(Poly::p(), Poly(1L) - Poly::p());
    return value;
}

RatFn RatFn::inverse() const {
    if (is_zero()) {
        throw std::domain_error("inverse of the zero rational function");
    }
    return RatFn(den_, num_);
}

Scalar RatFn::eval(const Scalar &x) const {
    Scalar d = den_.eval(x);
    if (d.is_zero()) {
        throw std::domain_error("pole of " + to_string() + " at p = " + x.to_string());
    }
    return num_.eval(x) / d;
}

std::complex<double> RatFn::eval(std::complex<double> x) const {
    std::complex<double> d = den_.eval(x);
    if (d == 0.0 || !std::isfinite(std::abs(d))) {
        throw std::domain_error("pole of " + to_string() + " near the evaluation point");
    }
    return num_.eval(x) / d;
}

std::string RatFn::to_string(const std::string &var) const {
    if (den_.is_constant()) {
        return num_.to_string(var);
    }
    std::string n = num_.to_string(var);
    std::string d = den_.to_string(var);
    return text::wrap_if(text::is_sum(n), n) + "/" + text::wrap_if(!text::is_atom(d), d);
}

RatFn operator+(const RatFn &a, const RatFn &b) {
    if (a.is_zero()) {
        return b;
    }
    if (b.is_zero()) {
        return a;
    }
    if (a.den_ == b.den_) {
        return RatFn(a.num_ + b.num_, a.den_);
    }
    if (a.is_polynomial() && b.is_polynomial()) {
        return RatFn(a.num_ + b.num_, Poly(1L), RatFn::Canonical{});
    }
    // Henrici: with g = gcd(den_a, den_b), only g can share factors with the new numerator.
    Poly g = gcd(a.den_, b.den_);
    Poly da = g.degree() > 0 ? exact_div(a.den_, g) : a.den_;
    Poly db = g.degree() > 0 ? exact_div(b.den_, g) : b.den_;
    Poly num = a.num_ * db + b.num_ * da;
    if (num.is_zero()) {
        return RatFn();
    }
    Poly den = a.den_ * db;
    if (g.degree() > 0) {
        Poly h = gcd(num, g);
        if (h.degree() > 0) {
            num = exact_div(num, h);
            den = exact_div(den, h);
        }
    }
    Scalar lead = den.lead();
    if (!lead.is_one()) {
        Scalar inv = lead.inverse();
        num = num.scaled(inv);
        den = den.scaled(inv);
    }
    return RatFn(std::move(num), std::move(den), RatFn::Canonical{});
}

RatFn operator-(const RatFn &a, const RatFn &b) {
    return a + (-b);
}

RatFn operator*(const RatFn &a, const RatFn &b) {
    if (a.is_zero() || b.is_zero()) {
        return RatFn();
    }
    if (a.is_polynomial() && b.is_polynomial()) {
        return RatFn(a.num_ * b.num_, Poly(1L), RatFn::Canonical{});
    }
    // Cross-cancel before multiplying; both inputs are already reduced.
    Poly g1 = gcd(a.num_, b.den_);
    Poly g2 = gcd(b.num_, a.den_);
    Poly n1 = g1.degree() > 0 ? exact_div(a.num_, g1) : a.num_;
    Poly d2 = g1.degree() > 0 ? exact_div(b.den_, g1) : b.den_;
    Poly n2 = g2.degree() > 0 ? exact_div(b.num_, g2) : b.num_;
    Poly d1 = g2.degree() > 0 ? exact_div(a.den_, g2) : a.den_;
    Poly num = n1 * n2;
    Poly den = d1 * d2;
    Scalar lead = den.lead();
    if (!lead.is_one()) {
        Scalar inv = lead.inverse();
        num = num.scaled(inv);
        den = den.scaled(inv);
    }
    return RatFn(std::move(num), std::move(den), RatFn::Canonical{});
}

RatFn operator/(const RatFn &a, const RatFn &b) {
    return a * b.inverse();
}

RatFn pow(const RatFn &base, int exponent) {
    if (exponent < 0) {
        return pow(base.inverse(), -exponent);
    }
    return RatFn(pow(base.num(), exponent), pow(base.den(), exponent));
}

}  // namespace qbf
