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

#include "qbf/expr.h"

#include <cmath>
#include <stdexcept>

namespace qbf {

struct Expr::Node {
    ExprKind kind;
    std::vector<Expr> children;
    Rational value;
    int exponent;
};

Expr Expr::make(ExprKind kind, std::vector<Expr> children, Rational value, int exponent) {
    return Expr(std::make_shared<const Node>(Node{kind, std::move(children), std::move(value), exponent}));
}

Expr Expr::rational(Rational v) {
    v.canonicalize();
    return make(ExprKind::kRational, {}, std::move(v));
}

Expr Expr::i() {
    return make(ExprKind::kI, {});
}

Expr Expr::sqrt2() {
    return make(ExprKind::kSqrt2, {});
}

Expr Expr::p() {
    return make(ExprKind::kP, {});
}

Expr Expr::t() {
    return make(ExprKind::kT, {});
}

Expr Expr::add(Expr a, Expr b) {
    return make(ExprKind::kAdd, {std::move(a), std::move(b)});
}

Expr Expr::sub(Expr a, Expr b) {
    return make(ExprKind::kSub, {std::move(a), std::move(b)});
}

Expr Expr::mul(Expr a, Expr b) {
    return make(ExprKind::kMul, {std::move(a), std::move(b)});
}

Expr Expr::div(Expr a, Expr b) {
    if (a.kind() == ExprKind::kRational && b.kind() == ExprKind::kRational && sgn(b.value()) != 0) {
        return rational(a.value() / b.value());
    }
    return make(ExprKind::kDiv, {std::move(a), std::move(b)});
}

Expr Expr::neg(Expr a) {
    if (a.kind() == ExprKind::kRational) {
        return rational(-a.value());
    }
    return make(ExprKind::kNeg, {std::move(a)});
}

Expr Expr::pow(Expr base, int exponent) {
    return make(ExprKind::kPow, {std::move(base)}, 0, exponent);
}

Expr Expr::sqrt(Expr a) {
    // sqrt(p/(1-p)) is the coin ratio t.
    if (a.kind() == ExprKind::kDiv && a.child(0).kind() == ExprKind::kP && a.child(1).kind() == ExprKind::kSub) {
        const Expr &d = a.child(1);
        if (d.child(0).kind() == ExprKind::kRational && d.child(0).value() == 1 && d.child(1).kind() == ExprKind::kP) {
            return t();
        }
    }
    return make(ExprKind::kSqrt, {std::move(a)});
}

ExprKind Expr::kind() const {
    return node_->kind;
}

const Rational &Expr::value() const {
    if (node_->kind != ExprKind::kRational) {
        throw std::logic_error("Expr::value on a non-literal");
    }
    return node_->value;
}

int Expr::exponent() const {
    if (node_->kind != ExprKind::kPow) {
        throw std::logic_error("Expr::exponent on a non-power");
    }
    return node_->exponent;
}

size_t Expr::arity() const {
    return node_->children.size();
}

const Expr &Expr::child(size_t k) const {
    return node_->children.at(k);
}

size_t Expr::size() const {
    size_t n = 1;
    for (const auto &c : node_->children) {
        n += c.size();
    }
    return n;
}

std::complex<double> Expr::eval(double p0) const {
    using C = std::complex<double>;
    switch (kind()) {
        case ExprKind::kRational:
            return to_double(value());
        case ExprKind::kI:
            return C(0.0, 1.0);
        case ExprKind::kSqrt2:
            return std::sqrt(2.0);
        case ExprKind::kP:
            return p0;
        case ExprKind::kT:
            return std::sqrt(p0 / (1.0 - p0));
        case ExprKind::kAdd:
            return child(0).eval(p0) + child(1).eval(p0);
        case ExprKind::kSub:
            return child(0).eval(p0) - child(1).eval(p0);
        case ExprKind::kMul:
            return child(0).eval(p0) * child(1).eval(p0);
        case ExprKind::kDiv:
            return child(0).eval(p0) / child(1).eval(p0);
        case ExprKind::kNeg:
            return -child(0).eval(p0);
        case ExprKind::kPow: {
            C base = child(0).eval(p0);
            C acc = 1.0;
            for (int k = 0; k < std::abs(exponent()); k++) {
                acc *= base;
            }
            return exponent() < 0 ? 1.0 / acc : acc;
        }
        case ExprKind::kSqrt:
            return std::sqrt(child(0).eval(p0));
    }
    throw std::logic_error("unreachable");
}

namespace {

// Binding strength used by the printer; higher binds tighter.
int precedence(const Expr &e) {
    switch (e.kind()) {
        case ExprKind::kAdd:
        case ExprKind::kSub:
            return 1;
        case ExprKind::kMul:
        case ExprKind::kDiv:
            return 2;
        case ExprKind::kNeg:
            return 3;
        case ExprKind::kPow:
            return 4;
        case ExprKind::kRational:
            if (sgn(e.value()) < 0) {
                return 0;
            }
            return e.value().get_den() == 1 ? 5 : 2;
        default:
            return 5;
    }
}

void print(const Expr &e, std::string &out);

void print_at(const Expr &e, int min_prec, std::string &out) {
    if (precedence(e) < min_prec) {
        out += '(';
        print(e, out);
        out += ')';
    } else {
        print(e, out);
    }
}

void print(const Expr &e, std::string &out) {
    switch (e.kind()) {
        case ExprKind::kRational:
            out += e.value().get_str();
            return;
        case ExprKind::kI:
            out += 'i';
            return;
        case ExprKind::kSqrt2:
            out += "sqrt2";
            return;
        case ExprKind::kP:
            out += 'p';
            return;
        case ExprKind::kT:
            out += 't';
            return;
        case ExprKind::kAdd:
        case ExprKind::kSub:
        case ExprKind::kMul:
        case ExprKind::kDiv: {
            int prec = precedence(e);
            print_at(e.child(0), prec, out);
            const char *op = e.kind() == ExprKind::kAdd   ? " + "
                             : e.kind() == ExprKind::kSub ? " - "
                             : e.kind() == ExprKind::kMul ? "*"
                                                          : "/";
            out += op;
            print_at(e.child(1), prec + 1, out);
            return;
        }
        case ExprKind::kNeg:
            out += '-';
            print_at(e.child(0), 3, out);
            return;
        case ExprKind::kPow:
            print_at(e.child(0), 5, out);
            out += '^';
            out += std::to_string(e.exponent());
            return;
        case ExprKind::kSqrt:
            out += "sqrt(";
            print(e.child(0), out);
            out += ')';
            return;
    }
}

}  // namespace

std::string Expr::to_string() const {
    std::string out;
    print(*this, out);
    return out;
}

bool operator==(const Expr &a, const Expr &b) {
    if (a.node_ == b.node_) {
        return true;
    }
    if (a.kind() != b.kind() || a.arity() != b.arity()) {
        return false;
    }
    if (a.kind() == ExprKind::kRational && a.value() != b.value()) {
        return false;
    }
    if (a.kind() == ExprKind::kPow && a.exponent() != b.exponent()) {
        return false;
    }
    for (size_t k = 0; k < a.arity(); k++) {
        if (!(a.child(k) == b.child(k))) {
            return false;
        }
    }
    return true;
}

}  // namespace qbf
