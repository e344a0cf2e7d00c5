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

#include <stdexcept>

#include "qbf/analysis.h"
#include "qbf/lower.h"
#include "qbf/roots.h"

namespace qbf {

RatioDecision decide_qq_ratio(const Expr &e) {
    RatioDecision out;
    try {
        FieldElem v = lower(e);
        out.simulable = true;
        out.g1 = v.s().num();
        out.g2 = v.s().den();
        out.g3 = v.r().num();
        out.g4 = v.r().den();
        out.value = std::move(v);
    } catch (const LowerError &err) {
        if (err.kind() != LowerError::Kind::kNotInField) {
            throw;
        }
        out.simulable = false;
        out.diagnosis = err.what();
        out.odd_factors = err.odd_factors();
    }
    return out;
}

namespace {

// Splits u = c * q^2 with c the leading coefficient of u, if possible.
std::optional<std::pair<Rational, RatFn>> scaled_square(const RatFn &u) {
    Rational c = u.num().lead().a();
    if (auto q = is_square(u * RatFn(Poly(Scalar(1 / c))))) {
        return std::make_pair(c, *q);
    }
    return std::nullopt;
}

}  // namespace

CorollaryDecision decide_real_corollary(const RatFn &f) {
    if (!f.is_rational()) {
        throw std::invalid_argument("decide_real_corollary requires rational coefficients");
    }
    CorollaryDecision out;
    if (!real_roots(f.den(), 0, 1).empty()) {
        out.status = CorollaryDecision::Status::kRangeViolation;
        out.reason = "f has a pole in [0, 1]";
        return out;
    }
    if (f.is_one()) {
        out.status = CorollaryDecision::Status::kDegenerateOne;
        out.reason = "f = 1: the ratio is infinite (state |0>)";
        return out;
    }
    const Poly &num = f.num();
    const Poly &den = f.den();
    if (!certify_nonneg(num * den, 0, 1) || !certify_nonneg((den - num) * den, 0, 1)) {
        out.status = CorollaryDecision::Status::kRangeViolation;
        out.reason = "f leaves [0, 1] on [0, 1]";
        return out;
    }
    if (f.is_zero()) {
        out.status = CorollaryDecision::Status::kSimulable;
        out.radicand = 0;
        out.h = FieldElem();
        out.reason = "f = 0: the ratio is 0 (state |1>)";
        return out;
    }
    RatFn u = f / (RatFn(1L) - f);
    auto accept = [&](const Rational &c, const RatFn &q, bool uses_t) {
        out.status = CorollaryDecision::Status::kSimulable;
        out.radicand = c;
        out.q = sign_normalized(q);
        out.uses_t = uses_t;
        if (auto root = Scalar(c).sqrt_of_rational()) {
            RatFn scaled = sign_normalized(RatFn(Poly(*root)) * q);
            out.h = uses_t ? FieldElem(RatFn(), scaled) : FieldElem(scaled);
        } else {
            out.reason = "witness needs the constant sqrt(" + c.get_str() + "), outside Q(i, sqrt2)";
        }
    };
    if (auto sq = scaled_square(u)) {
        accept(sq->first, sq->second, false);
        return out;
    }
    if (auto sq = scaled_square(u / RatFn::tau())) {
        accept(sq->first, sq->second, true);
        return out;
    }
    out.status = CorollaryDecision::Status::kNotSimulable;
    std::string listed;
    for (const auto &g : odd_factors(u)) {
        listed += (listed.empty() ? "" : ", ") + display_factor(g).to_string();
    }
    out.reason = "neither f/(1-f) nor f(1-p)/((1-f)p) is a constant times a square; odd factors of f/(1-f): {" + listed + "}";
    return out;
}

bool check_phased_witness(const FieldElem &h, const RatFn &f) {
    if (f.is_one()) {
        return false;
    }
    return h.mod_squared() == FieldElem(f / (RatFn(1L) - f));
}

}  // namespace qbf
