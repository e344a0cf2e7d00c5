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

#include "qbf/poly.h"

#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "text.h"

namespace qbf {

namespace {

// Q(i, sqrt2) = Q(zeta8) embeds into F_P for a prime P = 1 mod 8.
constexpr uint64_t kPrime = 998244353;

uint64_t mul_mod(uint64_t a, uint64_t b) {
    return a * b % kPrime;
}

uint64_t pow_mod(uint64_t b, uint64_t e) {
    uint64_t r = 1;
    for (; e; e >>= 1, b = mul_mod(b, b)) {
        if (e & 1) {
            r = mul_mod(r, b);
        }
    }
    return r;
}

uint64_t inv_mod(uint64_t a) {
    return pow_mod(a, kPrime - 2);
}

struct Embedding {
    uint64_t i;
    uint64_t sqrt2;
};

const Embedding &embedding() {
    static const Embedding e = [] {
        uint64_t zeta = pow_mod(3, (kPrime - 1) / 8);
        return Embedding{mul_mod(zeta, zeta), (zeta + pow_mod(zeta, 7)) % kPrime};
    }();
    return e;
}

std::optional<uint64_t> reduce(const Rational &q) {
    uint64_t den = mpz_fdiv_ui(q.get_den_mpz_t(), kPrime);
    if (den == 0) {
        return std::nullopt;
    }
    return mul_mod(mpz_fdiv_ui(q.get_num_mpz_t(), kPrime), inv_mod(den));
}

std::optional<uint64_t> reduce(const Scalar &c) {
    auto a = reduce(c.a()), b = reduce(c.b()), x = reduce(c.c()), d = reduce(c.d());
    if (!a || !b || !x || !d) {
        return std::nullopt;
    }
    const Embedding &e = embedding();
    uint64_t im = (*x + mul_mod(*d, e.sqrt2)) % kPrime;
    return (*a + mul_mod(*b, e.sqrt2) + mul_mod(im, e.i)) % kPrime;
}

// Reduction with the leading coefficient kept nonzero.
std::optional<std::vector<uint64_t>> reduce(const Poly &f) {
    std::vector<uint64_t> out;
    for (const Scalar &c : f.coeffs()) {
        auto r = reduce(c);
        if (!r) {
            return std::nullopt;
        }
        out.push_back(*r);
    }
    if (out.empty() || out.back() == 0) {
        return std::nullopt;
    }
    return out;
}

int modular_gcd_degree(std::vector<uint64_t> a, std::vector<uint64_t> b) {
    auto trim = [](std::vector<uint64_t> &v) {
        while (!v.empty() && v.back() == 0) {
            v.pop_back();
        }
    };
    while (!b.empty()) {
        uint64_t inv = inv_mod(b.back());
        while (a.size() >= b.size()) {
            uint64_t q = mul_mod(a.back(), inv);
            size_t shift = a.size() - b.size();
            for (size_t j = 0; j < b.size(); j++) {
                a[shift + j] = (a[shift + j] + kPrime - mul_mod(q, b[j])) % kPrime;
            }
            trim(a);
            if (a.empty()) {
                break;
            }
        }
        std::swap(a, b);
    }
    return static_cast<int>(a.size()) - 1;
}

}  // namespace

Poly::Poly(Scalar c) {
    if (!c.is_zero()) {
        coeffs_.push_back(std::move(c));
    }
}

Poly::Poly(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

Poly Poly::p() {
    return Poly(std::vector<Scalar>{Scalar(0), Scalar(1)});
}

Poly Poly::monomial(Scalar c, int degree) {
    if (c.is_zero()) {
        return Poly();
    }
    std::vector<Scalar> v(degree + 1);
    v[degree] = std::move(c);
    return Poly(std::move(v));
}

Poly Poly::linear_power(const Rational &z, int k) {
    Poly factor(std::vector<Scalar>{Scalar(Rational(-z)), Scalar(1)});
    return pow(factor, k);
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
}

Scalar Poly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) {
        return Scalar();
    }
    return coeffs_[k];
}

Scalar Poly::lead() const {
    return coeffs_.empty() ? Scalar() : coeffs_.back();
}

bool Poly::is_real() const {
    for (const auto &c : coeffs_) {
        if (!c.is_real()) {
            return false;
        }
    }
    return true;
}

bool Poly::is_rational() const {
    for (const auto &c : coeffs_) {
        if (!c.is_rational()) {
            return false;
        }
    }
    return true;
}

Poly Poly::conj() const {
    std::vector<Scalar> v;
    v.reserve(coeffs_.size());
    for (const auto &c : coeffs_) {
        v.push_back(c.conj());
    }
    return Poly(std::move(v));
}

Poly Poly::monic() const {
    if (is_zero() || lead().is_one()) {
        return *this;
    }
    return scaled(lead().inverse());
}

Poly Poly::derivative() const {
    if (coeffs_.size() <= 1) {
        return Poly();
    }
    std::vector<Scalar> v(coeffs_.size() - 1);
    for (size_t k = 1; k < coeffs_.size(); k++) {
        v[k - 1] = coeffs_[k] * Scalar(static_cast<long>(k));
    }
    return Poly(std::move(v));
}

Poly Poly::scaled(const Scalar &c) const {
    if (c.is_zero()) {
        return Poly();
    }
    std::vector<Scalar> v;
    v.reserve(coeffs_.size());
    for (const auto &x : coeffs_) {
        v.push_back(x * c);
    }
    return Poly(std::move(v));
}

Scalar Poly::eval(const Scalar &x) const {
    Scalar acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

std::complex<double> Poly::eval(std::complex<double> x) const {
    std::complex<double> acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + it->to_complex();
    }
    return acc;
}

namespace {

// Synthetic division by (p - z); returns quotient and remainder.
std::pair<Poly, Scalar> divide_linear(const Poly &f, const Scalar &z) {
    const auto &c = f.coeffs();
    if (c.empty()) {
        return {Poly(), Scalar()};
    }
    std::vector<Scalar> q(c.size() - 1);
    Scalar carry;
    for (size_t k = c.size(); k-- > 0;) {
        Scalar v = c[k] + carry * z;
        if (k == 0) {
            return {Poly(std::move(q)), v};
        }
        q[k - 1] = v;
        carry = std::move(v);
    }
    return {Poly(std::move(q)), Scalar()};
}

}  // namespace

int Poly::order_at(const Rational &z) const {
    if (is_zero()) {
        throw std::domain_error("order of the zero polynomial is undefined");
    }
    Scalar zs(z);
    int k = 0;
    Poly cur = *this;
    while (true) {
        auto [q, r] = divide_linear(cur, zs);
        if (!r.is_zero()) {
            return k;
        }
        cur = std::move(q);
        k++;
    }
}

Poly Poly::deflate(const Rational &z, int k) const {
    Scalar zs(z);
    Poly cur = *this;
    for (int j = 0; j < k; j++) {
        auto [q, r] = divide_linear(cur, zs);
        if (!r.is_zero()) {
            throw std::logic_error("deflate: (p - z)^k does not divide the polynomial");
        }
        cur = std::move(q);
    }
    return cur;
}

std::vector<Poly> Poly::rational_parts() const {
    std::vector<std::vector<Scalar>> parts(4, std::vector<Scalar>(coeffs_.size()));
    for (size_t k = 0; k < coeffs_.size(); k++) {
        parts[0][k] = Scalar(coeffs_[k].a());
        parts[1][k] = Scalar(coeffs_[k].b());
        parts[2][k] = Scalar(coeffs_[k].c());
        parts[3][k] = Scalar(coeffs_[k].d());
    }
    std::vector<Poly> out;
    for (auto &v : parts) {
        out.emplace_back(std::move(v));
    }
    return out;
}

std::pair<Poly, Poly> Poly::real_imag() const {
    std::vector<Scalar> re(coeffs_.size()), im(coeffs_.size());
    for (size_t k = 0; k < coeffs_.size(); k++) {
        re[k] = Scalar(coeffs_[k].real_part(), Real2{});
        im[k] = Scalar(coeffs_[k].imag_part(), Real2{});
    }
    return {Poly(std::move(re)), Poly(std::move(im))};
}

std::string Poly::to_string(const std::string &var) const {
    if (is_zero()) {
        return "0";
    }
    std::ostringstream out;
    bool first = true;
    for (size_t k = coeffs_.size(); k-- > 0;) {
        const Scalar &c = coeffs_[k];
        if (c.is_zero()) {
            continue;
        }
        std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
        bool simple_real = c.is_rational();
        if (simple_real) {
            Rational mag = abs(c.a());
            bool neg = sgn(c.a()) < 0;
            out << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
            if (mono.empty()) {
                out << mag.get_str();
            } else if (mag == 1) {
                out << mono;
            } else {
                out << mag.get_str() << "*" << mono;
            }
        } else if (std::string cs = c.to_string(); !text::is_sum(cs)) {
            bool neg = cs.front() == '-';
            out << (first ? (neg ? "-" : "") : (neg ? " - " : " + ")) << (neg ? cs.substr(1) : cs);
            if (!mono.empty()) {
                out << "*" << mono;
            }
        } else {
            out << (first ? "" : " + ") << "(" << cs << ")";
            if (!mono.empty()) {
                out << "*" << mono;
            }
        }
        first = false;
    }
    return out.str();
}

Poly Poly::operator-() const {
    std::vector<Scalar> v;
    v.reserve(coeffs_.size());
    for (const auto &c : coeffs_) {
        v.push_back(-c);
    }
    Poly r;
    r.coeffs_ = std::move(v);
    return r;
}

Poly &Poly::operator+=(const Poly &o) {
    if (o.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(o.coeffs_.size());
    }
    for (size_t k = 0; k < o.coeffs_.size(); k++) {
        coeffs_[k] += o.coeffs_[k];
    }
    trim();
    return *this;
}

Poly &Poly::operator-=(const Poly &o) {
    if (o.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(o.coeffs_.size());
    }
    for (size_t k = 0; k < o.coeffs_.size(); k++) {
        coeffs_[k] -= o.coeffs_[k];
    }
    trim();
    return *this;
}

Poly &Poly::operator*=(const Poly &o) {
    *this = *this * o;
    return *this;
}

Poly operator*(const Poly &a, const Poly &b) {
    if (a.is_zero() || b.is_zero()) {
        return Poly();
    }
    std::vector<Scalar> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (size_t i = 0; i < a.coeffs_.size(); i++) {
        if (a.coeffs_[i].is_zero()) {
            continue;
        }
        for (size_t j = 0; j < b.coeffs_.size(); j++) {
            v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return Poly(std::move(v));
}

std::pair<Poly, Poly> divmod(const Poly &a, const Poly &b) {
    if (b.is_zero()) {
        throw std::domain_error("polynomial division by zero");
    }
    if (a.degree() < b.degree()) {
        return {Poly(), a};
    }
    std::vector<Scalar> rem = a.coeffs();
    std::vector<Scalar> quot(a.degree() - b.degree() + 1);
    Scalar inv_lead = b.lead().inverse();
    const auto &bc = b.coeffs();
    int db = b.degree();
    for (int k = a.degree(); k >= db; k--) {
        if (rem[k].is_zero()) {
            continue;
        }
        Scalar q = rem[k] * inv_lead;
        for (int j = 0; j <= db; j++) {
            rem[k - db + j] -= q * bc[j];
        }
        quot[k - db] = std::move(q);
    }
    rem.resize(db);
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly exact_div(const Poly &a, const Poly &b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) {
        throw std::logic_error("exact_div: nonzero remainder");
    }
    return q;
}

Poly gcd(const Poly &a, const Poly &b) {
    if (!a.is_zero() && !b.is_zero()) {
        auto ra = reduce(a);
        auto rb = reduce(b);
        if (ra && rb && modular_gcd_degree(*ra, *rb) == 0) {
            return Poly(1L);
        }
    }
    Poly x = a.monic();
    Poly y = b.monic();
    while (!y.is_zero()) {
        Poly r = divmod(x, y).second.monic();
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

Poly pow(const Poly &base, int exponent) {
    if (exponent < 0) {
        throw std::domain_error("negative polynomial power");
    }
    Poly result(1L);
    Poly b = base;
    while (exponent > 0) {
        if (exponent & 1) {
            result *= b;
        }
        exponent >>= 1;
        if (exponent > 0) {
            b *= b;
        }
    }
    return result;
}

}  // namespace qbf
