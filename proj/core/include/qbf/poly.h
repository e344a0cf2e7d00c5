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

#ifndef QBF_POLY_H
#define QBF_POLY_H

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "qbf/scalar.h"

namespace qbf {

/// Univariate polynomial in p over Q(i, sqrt2), coefficients in ascending degree.
/// The coefficient list never has a trailing zero; the empty list is the zero polynomial.
class Poly {
   public:
    Poly() = default;
    Poly(Scalar c);  // NOLINT(google-explicit-constructor)
    Poly(long c) : Poly(Scalar(c)) {}  // NOLINT(google-explicit-constructor)
    explicit Poly(std::vector<Scalar> coeffs);

    /// The monomial p.
    static Poly p();
    static Poly monomial(Scalar c, int degree);
    /// (p - z)^k.
    static Poly linear_power(const Rational &z, int k);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    const std::vector<Scalar> &coeffs() const { return coeffs_; }
    /// Coefficient of p^k (zero beyond the degree).
    Scalar coeff(int k) const;
    /// Leading coefficient; zero for the zero polynomial.
    Scalar lead() const;

    bool is_real() const;
    bool is_rational() const;

    Poly conj() const;
    Poly monic() const;
    Poly derivative() const;
    Poly scaled(const Scalar &c) const;

    Scalar eval(const Scalar &x) const;
    std::complex<double> eval(std::complex<double> x) const;

    /// Multiplicity of z as a root (0 when f(z) != 0). Zero polynomial is rejected.
    int order_at(const Rational &z) const;
    /// f / (p - z)^k, exact. Precondition: (p-z)^k divides f.
    Poly deflate(const Rational &z, int k) const;

    /// Splits f = f_rational + sqrt2 f_sqrt2 + i f_i + i sqrt2 f_isqrt2 into four Q[p] parts.
    std::vector<Poly> rational_parts() const;
    /// Real and imaginary parts, each with coefficients in Q(sqrt2).
    std::pair<Poly, Poly> real_imag() const;

    std::string to_string(const std::string &var = "p") const;

    Poly operator-() const;
    Poly &operator+=(const Poly &o);
    Poly &operator-=(const Poly &o);
    Poly &operator*=(const Poly &o);
    friend Poly operator+(Poly a, const Poly &b) { return a += b; }
    friend Poly operator-(Poly a, const Poly &b) { return a -= b; }
    friend Poly operator*(const Poly &a, const Poly &b);
    friend bool operator==(const Poly &a, const Poly &b) { return a.coeffs_ == b.coeffs_; }

   private:
    void trim();
    std::vector<Scalar> coeffs_;
};

/// Euclidean division; throws std::domain_error when the divisor is zero.
std::pair<Poly, Poly> divmod(const Poly &a, const Poly &b);
/// Exact quotient. Throws std::logic_error if b does not divide a.
Poly exact_div(const Poly &a, const Poly &b);
/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly &a, const Poly &b);
Poly pow(const Poly &base, int exponent);

}  // namespace qbf

#endif  // QBF_POLY_H
