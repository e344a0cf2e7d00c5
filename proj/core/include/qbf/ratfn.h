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

#ifndef QBF_RATFN_H
#define QBF_RATFN_H

#include <complex>
#include <string>

#include "qbf/poly.h"

namespace qbf {

/// Rational function num/den in canonical form: gcd(num, den) = 1 and den monic.
/// The zero function is 0/1.
class RatFn {
   public:
    RatFn() : den_(1L) {}
    RatFn(Poly num);  // NOLINT(google-explicit-constructor)
    RatFn(long c) : RatFn(Poly(c)) {}  // NOLINT(google-explicit-constructor)
    /// Throws std::domain_error when den is zero.
    RatFn(Poly num, Poly den);

    static RatFn p() { return RatFn(Poly::p()); }
    /// p / (1 - p), the square of the coin ratio.
    static const RatFn &tau();

    const Poly &num() const { return num_; }
    const Poly &den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_.is_constant() && num_.is_constant() && num_.lead().is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    bool is_polynomial() const { return den_.is_constant(); }
    bool is_real() const { return num_.is_real() && den_.is_real(); }
    bool is_rational() const { return num_.is_rational() && den_.is_rational(); }
    /// Value of a constant function.
    Scalar constant_value() const { return num_.coeff(0); }

    RatFn conj() const { return RatFn(num_.conj(), den_.conj(), Canonical{}); }
    /// Throws std::domain_error on zero.
    RatFn inverse() const;

    /// Exact evaluation; throws std::domain_error at a pole.
    Scalar eval(const Scalar &x) const;
    /// Floating evaluation; throws std::domain_error at a pole.
    std::complex<double> eval(std::complex<double> x) const;

    std::string to_string(const std::string &var = "p") const;

    RatFn operator-() const { return RatFn(-num_, den_, Canonical{}); }
    friend RatFn operator+(const RatFn &a, const RatFn &b);
    friend RatFn operator-(const RatFn &a, const RatFn &b);
    friend RatFn operator*(const RatFn &a, const RatFn &b);
    friend RatFn operator/(const RatFn &a, const RatFn &b);
    RatFn &operator+=(const RatFn &o) { return *this = *this + o; }
    RatFn &operator-=(const RatFn &o) { return *this = *this - o; }
    RatFn &operator*=(const RatFn &o) { return *this = *this * o; }
    friend bool operator==(const RatFn &a, const RatFn &b) { return a.num_ == b.num_ && a.den_ == b.den_; }

   private:
    struct Canonical {};
    RatFn(Poly num, Poly den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}

    Poly num_;
    Poly den_;
};

RatFn pow(const RatFn &base, int exponent);

}  // namespace qbf

#endif  // QBF_RATFN_H
