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

#include "qbf/scalar.h"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qbf {

Rational frac(long n, long d) {
    if (d == 0) {
        throw std::domain_error("zero denominator");
    }
    Rational q{mpz_class(n), mpz_class(d)};
    q.canonicalize();
    return q;
}

Rational parse_rational(std::string_view text) {
    std::string s(text);
    if (s.empty()) {
        throw std::invalid_argument("empty rational literal");
    }
    size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    size_t slash = s.find('/');
    auto all_digits = [&](size_t from, size_t to) {
        if (from >= to) {
            return false;
        }
        for (size_t k = from; k < to; k++) {
            if (s[k] < '0' || s[k] > '9') {
                return false;
            }
        }
        return true;
    };
    bool ok = slash == std::string::npos ? all_digits(start, s.size())
                                         : all_digits(start, slash) && all_digits(slash + 1, s.size());
    if (!ok) {
        throw std::invalid_argument("malformed rational literal '" + s + "'");
    }
    if (s[0] == '+') {
        s.erase(0, 1);
    }
    Rational q;
    if (slash == std::string::npos) {
        q = Rational(mpz_class(s));
    } else {
        mpz_class den(s.substr(s.find('/') + 1));
        if (den == 0) {
            throw std::invalid_argument("zero denominator in rational literal '" + s + "'");
        }
        q = Rational(mpz_class(s.substr(0, s.find('/'))), den);
        q.canonicalize();
    }
    return q;
}

std::string to_string(const Rational &q) {
    return q.get_str();
}

double to_double(const Rational &q) {
    return q.get_d();
}

std::optional<Rational> rational_sqrt(const Rational &q) {
    if (sgn(q) < 0) {
        return std::nullopt;
    }
    const mpz_class &n = q.get_num();
    const mpz_class &d = q.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) {
        return std::nullopt;
    }
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    Rational r(rn, rd);
    r.canonicalize();
    return r;
}

int Real2::sign() const {
    int sx = sgn(x);
    int sy = sgn(y);
    if (sy == 0) {
        return sx;
    }
    if (sx == 0 || sx == sy) {
        return sy;
    }
    // Opposite signs: compare x^2 with 2 y^2.
    Rational lhs = x * x;
    Rational rhs = 2 * y * y;
    int c = cmp(lhs, rhs);
    return c > 0 ? sx : sy;
}

Real2 Real2::inverse() const {
    Rational norm = x * x - 2 * y * y;
    if (sgn(norm) == 0) {
        throw std::domain_error("division by zero in Q(sqrt2)");
    }
    return {x / norm, -y / norm};
}

double Real2::to_double() const {
    return x.get_d() + y.get_d() * std::sqrt(2.0);
}

Real2 &Real2::operator+=(const Real2 &o) {
    x += o.x;
    y += o.y;
    return *this;
}

Real2 &Real2::operator-=(const Real2 &o) {
    x -= o.x;
    y -= o.y;
    return *this;
}

Real2 operator*(const Real2 &a, const Real2 &b) {
    if (sgn(a.y) == 0 && sgn(b.y) == 0) {
        return {a.x * b.x, 0};
    }
    return {a.x * b.x + 2 * a.y * b.y, a.x * b.y + a.y * b.x};
}

int Scalar::sign() const {
    if (!is_real()) {
        throw std::domain_error("sign of non-real scalar " + to_string());
    }
    return re_.sign();
}

Scalar Scalar::inverse() const {
    if (is_zero()) {
        throw std::domain_error("scalar division by zero");
    }
    if (im_.is_zero()) {
        return Scalar(re_.inverse(), Real2{});
    }
    // 1/(u + vi) = (u - vi)/(u^2 + v^2) with u, v real in Q(sqrt2).
    Real2 norm = re_ * re_ + im_ * im_;
    Real2 inv = norm.inverse();
    return Scalar(re_ * inv, -(im_ * inv));
}

std::optional<Scalar> Scalar::sqrt_of_rational() const {
    if (!is_rational() || sgn(a()) < 0) {
        return std::nullopt;
    }
    if (auto r = rational_sqrt(a())) {
        return Scalar(*r);
    }
    // q = 2 m^2  =>  sqrt(q) = m sqrt2.
    if (auto r = rational_sqrt(a() / 2)) {
        return Scalar(0, *r, 0, 0);
    }
    return std::nullopt;
}

bool Scalar::is_square_rational() const {
    return is_rational() && rational_sqrt(a()).has_value();
}

std::complex<double> Scalar::to_complex() const {
    return {re_.to_double(), im_.to_double()};
}

std::string Scalar::to_string() const {
    std::ostringstream out;
    bool first = true;
    auto term = [&](const Rational &coef, const char *unit) {
        if (sgn(coef) == 0) {
            return;
        }
        Rational mag = abs(coef);
        if (first) {
            if (sgn(coef) < 0) {
                out << "-";
            }
        } else {
            out << (sgn(coef) < 0 ? " - " : " + ");
        }
        first = false;
        if (*unit == '\0') {
            out << mag.get_str();
        } else if (mag == 1) {
            out << unit;
        } else {
            out << mag.get_str() << "*" << unit;
        }
    };
    term(re_.x, "");
    term(re_.y, "sqrt2");
    term(im_.x, "i");
    term(im_.y, "i*sqrt2");
    if (first) {
        return "0";
    }
    return out.str();
}

Scalar &Scalar::operator+=(const Scalar &o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

Scalar &Scalar::operator-=(const Scalar &o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

Scalar &Scalar::operator*=(const Scalar &o) {
    if (im_.is_zero() && o.im_.is_zero()) {
        re_ = re_ * o.re_;
        return *this;
    }
    Real2 re = re_ * o.re_ - im_ * o.im_;
    Real2 im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

}  // namespace qbf
