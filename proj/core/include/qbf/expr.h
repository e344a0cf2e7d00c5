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

#ifndef QBF_EXPR_H
#define QBF_EXPR_H

#include <memory>
#include <string>
#include <vector>

#include "qbf/scalar.h"

namespace qbf {

enum class ExprKind { kRational, kI, kSqrt2, kP, kT, kAdd, kSub, kMul, kDiv, kNeg, kPow, kSqrt };

/// Immutable expression tree over the variable p.
///
/// The smart constructors fold literals: a negated literal is a literal, a
/// quotient of literals is a literal, and sqrt(p/(1-p)) is the token t.
/// Printing and re-parsing is the identity.
class Expr {
   public:
    static Expr rational(Rational v);
    static Expr integer(long v) { return rational(Rational(v)); }
    static Expr i();
    static Expr sqrt2();
    static Expr p();
    static Expr t();
    static Expr add(Expr a, Expr b);
    static Expr sub(Expr a, Expr b);
    static Expr mul(Expr a, Expr b);
    static Expr div(Expr a, Expr b);
    static Expr neg(Expr a);
    static Expr pow(Expr base, int exponent);
    static Expr sqrt(Expr a);

    ExprKind kind() const;
    /// Literal value; only for kRational.
    const Rational &value() const;
    /// Only for kPow.
    int exponent() const;
    size_t arity() const;
    const Expr &child(size_t k) const;

    /// Number of nodes in the tree.
    size_t size() const;
    /// Floating value at p0, with t = sqrt(p0/(1-p0)) and sqrt taken as the
    /// principal complex square root.
    std::complex<double> eval(double p0) const;
    /// Text in the surface grammar; parse(to_string()) == *this.
    std::string to_string() const;

    friend bool operator==(const Expr &a, const Expr &b);

   private:
    struct Node;
    explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    static Expr make(ExprKind kind, std::vector<Expr> children, Rational value = 0, int exponent = 0);
    std::shared_ptr<const Node> node_;
};

}  // namespace qbf

#endif  // QBF_EXPR_H
