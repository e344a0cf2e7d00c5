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

#include "qbf/field_elem.h"

#include <cmath>
#include <stdexcept>

#include "text.h"

namespace qbf {

FieldElem operator*(const FieldElem &a, const FieldElem &b) {
    if (a.s_.is_zero() && b.s_.is_zero()) {
        return FieldElem(a.r_ * b.r_);
    }
    RatFn r = a.r_ * b.r_ + a.s_ * b.s_ * RatFn::tau();
    RatFn s = a.r_ * b.s_ + a.s_ * b.r_;
    return FieldElem(std::move(r), std::move(s));
}

FieldElem operator*(const Scalar &c, const FieldElem &x) {
    RatFn k{Poly(c)};
    return FieldElem(k * x.r(), k * x.s());
}

FieldElem FieldElem::inverse() const {
    if (is_zero()) {
        throw std::domain_error("inverse of the zero field element");
    }
    if (s_.is_zero()) {
        return FieldElem(r_.inverse());
    }
    // Norm to the rational function field, nonzero for x != 0.
    RatFn norm = r_ * r_ - s_ * s_ * RatFn::tau();
    RatFn inv = norm.inverse();
    return FieldElem(r_ * inv, -(s_ * inv));
}

FieldElem FieldElem::mod_squared() const {
    return *this * conj();
}

std::complex<double> FieldElem::eval(double p0) const {
    if (!(p0 > 0.0 && p0 < 1.0)) {
        throw std::domain_error("evaluation point must lie in (0, 1)");
    }
    std::complex<double> x(p0, 0.0);
    std::complex<double> value = r_.eval(x);
    if (!s_.is_zero()) {
        value += s_.eval(x) * std::sqrt(p0 / (1.0 - p0));
    }
    return value;
}

std::string FieldElem::to_string() const {
    if (s_.is_zero()) {
        return r_.to_string();
    }
    std::string sc = s_.to_string();
    bool neg = !text::is_sum(sc) && sc.front() == '-';
    if (neg) {
        sc = sc.substr(1);
    }
    std::string st = sc == "1" ? "t" : text::wrap_if(text::is_sum(sc), sc) + "*t";
    if (r_.is_zero()) {
        return (neg ? "-" : "") + st;
    }
    return r_.to_string() + (neg ? " - " : " + ") + st;
}

FieldElem pow(const FieldElem &base, int exponent) {
    if (exponent < 0) {
        return pow(base.inverse(), -exponent);
    }
    FieldElem result = FieldElem(RatFn(1L));
    FieldElem b = base;
    while (exponent > 0) {
        if (exponent & 1) {
            result = result * b;
        }
        exponent >>= 1;
        if (exponent > 0) {
            b = b * b;
        }
    }
    return result;
}

}  // namespace qbf
