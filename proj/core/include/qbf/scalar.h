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

#ifndef QBF_SCALAR_H
#define QBF_SCALAR_H

#include <gmpxx.h>

#include <complex>
#include <optional>
#include <string>
#include <string_view>

namespace qbf {

using Rational = mpq_class;

/// Canonical n/d. Throws std::domain_error when d == 0.
Rational frac(long n, long d);

/// Parses "n" or "n/d" (optional leading '-'). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational &q);
double to_double(const Rational &q);
/// Exact square root when q is the square of a rational.
std::optional<Rational> rational_sqrt(const Rational &q);

/// Element x + y*sqrt(2) of the real quadratic field Q(sqrt 2).
struct Real2 {
    Rational x;
    Rational y;

    bool is_zero() const { return sgn(x) == 0 && sgn(y) == 0; }
    bool is_rational() const { return sgn(y) == 0; }
    /// Exact sign, decided by comparing x^2 against 2y^2 when the parts disagree.
    int sign() const;
    Real2 conj2() const { return {x, -y}; }
    Real2 inverse() const;
    double to_double() const;

    Real2 operator-() const { return {-x, -y}; }
    Real2 &operator+=(const Real2 &o);
    Real2 &operator-=(const Real2 &o);
    friend Real2 operator+(Real2 a, const Real2 &b) { return a += b; }
    friend Real2 operator-(Real2 a, const Real2 &b) { return a -= b; }
    friend Real2 operator*(const Real2 &a, const Real2 &b);
    friend bool operator==(const Real2 &a, const Real2 &b) { return a.x == b.x && a.y == b.y; }
};

/// Exact element a + b*sqrt2 + c*i + d*i*sqrt2 of Q(i, sqrt 2).
///
/// This is the coefficient field of every polynomial, rational function and
/// gate matrix in the library: the smallest field containing the 1/sqrt2
/// entries of H and B as well as the imaginary unit.
class Scalar {
   public:
    Scalar() = default;
    Scalar(long v) : re_{Rational(v), 0} {}  // NOLINT(google-explicit-constructor)
    Scalar(const Rational &v) : re_{v, 0} {}  // NOLINT(google-explicit-constructor)
    Scalar(Rational a, Rational b, Rational c, Rational d) : re_{std::move(a), std::move(b)}, im_{std::move(c), std::move(d)} {}
    Scalar(Real2 re, Real2 im) : re_(std::move(re)), im_(std::move(im)) {}

    static Scalar i() { return Scalar(0, 0, 1, 0); }
    static Scalar sqrt2() { return Scalar(0, 1, 0, 0); }
    /// 1/sqrt2 = sqrt2/2.
    static Scalar inv_sqrt2() { return Scalar(0, frac(1, 2), 0, 0); }

    const Rational &a() const { return re_.x; }
    const Rational &b() const { return re_.y; }
    const Rational &c() const { return im_.x; }
    const Rational &d() const { return im_.y; }
    const Real2 &real_part() const { return re_; }
    const Real2 &imag_part() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_one() const { return re_.x == 1 && sgn(re_.y) == 0 && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }
    bool is_rational() const { return im_.is_zero() && sgn(re_.y) == 0; }

    /// Sign of a real scalar. Throws std::domain_error on non-real input.
    int sign() const;

    /// Complex conjugation: negates c and d.
    Scalar conj() const { return Scalar(re_, -im_); }
    /// Throws std::domain_error on zero.
    Scalar inverse() const;
    /// Square root inside Q(sqrt 2) of a nonnegative rational: covers q^2 and 2q^2.
    std::optional<Scalar> sqrt_of_rational() const;
    bool is_square_rational() const;

    std::complex<double> to_complex() const;
    /// Canonical text, e.g. "1/2 + 3*sqrt2 - i*sqrt2".
    std::string to_string() const;

    Scalar operator-() const { return Scalar(-re_, -im_); }
    Scalar &operator+=(const Scalar &o);
    Scalar &operator-=(const Scalar &o);
    Scalar &operator*=(const Scalar &o);
    Scalar &operator/=(const Scalar &o) { return *this *= o.inverse(); }
    friend Scalar operator+(Scalar a, const Scalar &b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar &b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar &b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar &b) { return a /= b; }
    friend bool operator==(const Scalar &a, const Scalar &b) { return a.re_ == b.re_ && a.im_ == b.im_; }

   private:
    Real2 re_;
    Real2 im_;
};

}  // namespace qbf

#endif  // QBF_SCALAR_H
