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

#include "qbf/lower.h"

#include "qbf/roots.h"

namespace qbf {

namespace {

int sign_right_of_half(const Poly &f) {
    Rational half = frac(1, 2);
    int k = f.order_at(half);
    return f.deflate(half, k).eval(Scalar(half)).sign();
}

FieldElem lower_sqrt(const FieldElem &u) {
    if (u.is_zero()) {
        return u;
    }
    if (!u.is_rational_function() || !u.r().is_rational()) {
        throw LowerError(LowerError::Kind::kUnsupported,
                         "sqrt argument must be a real rational function with rational coefficients, got " + u.to_string());
    }
    const RatFn &v = u.r();
    for (const auto &[w, unit] : {std::pair{v, Scalar(1L)}, std::pair{-v, Scalar::i()}}) {
        if (auto q = is_square(w)) {
            return FieldElem::constant(unit) * FieldElem(sign_normalized(*q));
        }
        if (auto q = is_square(w / RatFn::tau())) {
            return FieldElem::constant(unit) * FieldElem(RatFn(), sign_normalized(*q));
        }
    }
    std::vector<Poly> odd;
    for (const auto &f : odd_factors(v)) {
        odd.push_back(display_factor(f));
    }
    if (odd.empty()) {
        throw LowerError(LowerError::Kind::kUnsupported,
                         "sqrt of constant " + v.num().lead().to_string() + " is outside Q(i, sqrt2)");
    }
    std::string listed;
    for (const auto &f : odd) {
        listed += (listed.empty() ? "" : ", ") + f.to_string();
    }
    throw LowerError(LowerError::Kind::kNotInField,
                     "sqrt(" + u.r().to_string() + ") is not in the field: neither u nor u(1-p)/p is a square; odd factors {" +
                         listed + "}",
                     odd);
}

}  // namespace

RatFn sign_normalized(const RatFn &q) {
    if (q.is_zero()) {
        return q;
    }
    int s = sign_right_of_half(q.num()) * sign_right_of_half(q.den());
    return s < 0 ? -q : q;
}

Poly display_factor(const Poly &f) {
    Scalar c0 = f.coeff(0);
    if (c0.is_real() && c0.sign() < 0) {
        return -f;
    }
    return f;
}

FieldElem lower(const Expr &e) {
    switch (e.kind()) {
        case ExprKind::kRational:
            return FieldElem::constant(Scalar(e.value()));
        case ExprKind::kI:
            return FieldElem::constant(Scalar::i());
        case ExprKind::kSqrt2:
            return FieldElem::constant(Scalar::sqrt2());
        case ExprKind::kP:
            return FieldElem::p();
        case ExprKind::kT:
            return FieldElem::t();
        case ExprKind::kAdd:
            return lower(e.child(0)) + lower(e.child(1));
        case ExprKind::kSub:
            return lower(e.child(0)) - lower(e.child(1));
        case ExprKind::kMul:
            return lower(e.child(0)) * lower(e.child(1));
        case ExprKind::kDiv: {
            FieldElem den = lower(e.child(1));
            if (den.is_zero()) {
                throw LowerError(LowerError::Kind::kDivisionByZero, "division by zero in '" + e.to_string() + "'");
            }
            return lower(e.child(0)) * den.inverse();
        }
        case ExprKind::kNeg:
            return -lower(e.child(0));
        case ExprKind::kPow: {
            FieldElem base = lower(e.child(0));
            if (base.is_zero() && e.exponent() < 0) {
                throw LowerError(LowerError::Kind::kDivisionByZero, "negative power of zero in '" + e.to_string() + "'");
            }
            return pow(base, e.exponent());
        }
        case ExprKind::kSqrt:
            return lower_sqrt(lower(e.child(0)));
    }
    throw std::logic_error("unreachable");
}

}  // namespace qbf
