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

#ifndef QBF_FIELD_ELEM_H
#define QBF_FIELD_ELEM_H

#include <complex>
#include <string>

#include "qbf/ratfn.h"

namespace qbf {

/// Element r(p) + s(p)*t of the ratio field, where t = sqrt(p/(1-p)).
///
/// t has degree two over the rational function field (p(1-p) is squarefree),
/// so the pair (r, s) of canonical rational functions is a unique normal form
/// and equality is componentwise.
///
/// Conjugation acts on scalar coefficients only: p and t are real on (0, 1).
class FieldElem {
   public:
    FieldElem() = default;
    FieldElem(RatFn r) : r_(std::move(r)) {}  // NOLINT(google-explicit-constructor)
    FieldElem(RatFn r, RatFn s) : r_(std::move(r)), s_(std::move(s)) {}

    static FieldElem constant(const Scalar &c) { return FieldElem(RatFn(Poly(c))); }
    static FieldElem p() { return FieldElem(RatFn::p()); }
    static FieldElem t() { return FieldElem(RatFn(), RatFn(1L)); }

    const RatFn &r() const { return r_; }
    const RatFn &s() const { return s_; }

    bool is_zero() const { return r_.is_zero() && s_.is_zero(); }
    bool is_one() const { return r_.is_one() && s_.is_zero(); }
    bool is_rational_function() const { return s_.is_zero(); }
    bool is_constant() const { return s_.is_zero() && r_.is_constant(); }

    /// (r - s t) / (r^2 - s^2 p/(1-p)). Throws std::domain_error on zero.
    FieldElem inverse() const;
    FieldElem conj() const { return FieldElem(r_.conj(), s_.conj()); }
    /// x * conj(x); always self-conjugate.
    FieldElem mod_squared() const;

    /// Floating evaluation with t = sqrt(p0/(1-p0)) >= 0. Throws std::domain_error
    /// outside (0, 1) or at a pole of either component.
    std::complex<double> eval(double p0) const;

    std::string to_string() const;

    FieldElem operator-() const { return FieldElem(-r_, -s_); }
    friend FieldElem operator+(const FieldElem &a, const FieldElem &b) { return FieldElem(a.r_ + b.r_, a.s_ + b.s_); }
    friend FieldElem operator-(const FieldElem &a, const FieldElem &b) { return FieldElem(a.r_ - b.r_, a.s_ - b.s_); }
    friend FieldElem operator*(const FieldElem &a, const FieldElem &b);
    friend FieldElem operator/(const FieldElem &a, const FieldElem &b) { return a * b.inverse(); }
    FieldElem &operator+=(const FieldElem &o) { return *this = *this + o; }
    FieldElem &operator-=(const FieldElem &o) { return *this = *this - o; }
    FieldElem &operator*=(const FieldElem &o) { return *this = *this * o; }
    friend bool operator==(const FieldElem &a, const FieldElem &b) { return a.r_ == b.r_ && a.s_ == b.s_; }

   private:
    RatFn r_;
    RatFn s_;
};

FieldElem operator*(const Scalar &c, const FieldElem &x);
FieldElem pow(const FieldElem &base, int exponent);

}  // namespace qbf

#endif  // QBF_FIELD_ELEM_H
