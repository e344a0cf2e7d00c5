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

#include "qbf/roots.h"

#include <algorithm>
#include <stdexcept>

namespace qbf {

SquarefreeDecomposition squarefree_decompose(const Poly &f) {
    if (f.is_zero()) {
        throw std::domain_error("squarefree decomposition of zero");
    }
    SquarefreeDecomposition out{f.lead(), {}};
    Poly monic = f.monic();
    if (monic.degree() == 0) {
        return out;
    }
    Poly fp = monic.derivative();
    Poly a = gcd(monic, fp);
    Poly b = exact_div(monic, a);
    Poly c = exact_div(fp, a);
    Poly d = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        Poly g = gcd(b, d);
        if (g.degree() > 0) {
            out.factors.push_back({g, i});
        }
        b = exact_div(b, g);
        c = exact_div(d, g);
        d = c - b.derivative();
        i++;
    }
    return out;
}

Poly squarefree_part(const Poly &f) {
    if (f.is_zero()) {
        throw std::domain_error("squarefree part of zero");
    }
    Poly monic = f.monic();
    if (monic.degree() <= 0) {
        return Poly(1L);
    }
    return exact_div(monic, gcd(monic, monic.derivative()));
}

namespace {

int sign_at(const Poly &f, const Rational &x) {
    return f.eval(Scalar(x)).sign();
}

void require_real(const Poly &f, const char *what) {
    if (!f.is_real()) {
        throw std::invalid_argument(std::string(what) + " requires real coefficients");
    }
}

// Sturm chain f, f', -rem(...), each rescaled to a leading coefficient of +-1.
std::vector<Poly> sturm_chain(const Poly &f) {
    auto normalize = [](const Poly &g) {
        Scalar lead = g.lead();
        return lead.sign() > 0 ? g.scaled(lead.inverse()) : g.scaled(-lead.inverse());
    };
    std::vector<Poly> chain{normalize(f)};
    Poly next = f.derivative();
    while (!next.is_zero()) {
        chain.push_back(normalize(next));
        const Poly &prev = chain[chain.size() - 2];
        next = -divmod(prev, chain.back()).second;
    }
    return chain;
}

int variations(const std::vector<Poly> &chain, const Rational &x) {
    int count = 0;
    int last = 0;
    for (const auto &g : chain) {
        int s = sign_at(g, x);
        if (s == 0) {
            continue;
        }
        if (last != 0 && s != last) {
            count++;
        }
        last = s;
    }
    return count;
}

// Roots of a squarefree real polynomial in (lo, hi); lo and hi need not be non-roots.
void isolate(const Poly &sqf, const Rational &lo, const Rational &hi, std::vector<RealRoot> &out);

Rational cauchy_bound(const Poly &f) {
    Rational lead = abs(f.lead().a());
    Rational best = 0;
    for (int k = 0; k < f.degree(); k++) {
        Rational v = abs(f.coeff(k).a()) / lead;
        if (v > best) {
            best = v;
        }
    }
    return best + 2;
}

// Integer leading coefficient of the primitive integer multiple of a rational polynomial.
mpz_class integer_lead(const Poly &f) {
    mpz_class l = 1;
    for (const auto &c : f.coeffs()) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.a().get_den_mpz_t());
    }
    mpz_class content = 0;
    for (const auto &c : f.coeffs()) {
        mpz_class v = c.a().get_num() * (l / c.a().get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    }
    mpz_class lead = f.lead().a().get_num() * (l / f.lead().a().get_den());
    lead /= content;
    return abs(lead);
}

Poly rational_core(const Poly &f) {
    Poly g;
    for (const auto &part : f.rational_parts()) {
        if (!part.is_zero()) {
            g = g.is_zero() ? part.monic() : gcd(g, part);
        }
    }
    return g;
}

}  // namespace

int sturm_count(const Poly &f, const Rational &a, const Rational &b) {
    if (f.is_zero()) {
        throw std::domain_error("sturm_count of the zero polynomial");
    }
    if (!(a < b)) {
        throw std::invalid_argument("sturm_count requires a < b");
    }
    require_real(f, "sturm_count");
    Poly g = squarefree_part(f);
    if (g.degree() <= 0) {
        return 0;
    }
    if (g.eval(Scalar(a)).is_zero()) {
        g = g.deflate(a, 1);
    }
    if (g.degree() > 0 && g.eval(Scalar(b)).is_zero()) {
        g = g.deflate(b, 1);
    }
    if (g.degree() <= 0) {
        return 0;
    }
    auto chain = sturm_chain(g);
    return variations(chain, a) - variations(chain, b);
}

bool certify_nonneg(const Poly &f, const Rational &a, const Rational &b) {
    require_real(f, "certify_nonneg");
    if (f.is_zero()) {
        return true;
    }
    if (!(a < b)) {
        throw std::invalid_argument("certify_nonneg requires a < b");
    }
    auto dec = squarefree_decompose(f);
    Poly odd(1L);
    for (const auto &sf : dec.factors) {
        if (sf.multiplicity % 2 == 1) {
            odd *= sf.factor;
        }
    }
    if (odd.degree() > 0 && sturm_count(odd, a, b) > 0) {
        return false;
    }
    // No sign change inside (a, b): the sign at any non-root interior point decides.
    for (int n = 2;; n++) {
        for (int k = 1; k < n; k++) {
            Rational x = a + (b - a) * frac(k, n);
            int s = sign_at(f, x);
            if (s != 0) {
                return s > 0;
            }
        }
    }
}

std::vector<Rational> rational_roots(const Poly &f) {
    if (f.is_zero()) {
        throw std::domain_error("rational_roots of the zero polynomial");
    }
    Poly core = rational_core(f);
    if (core.degree() <= 0) {
        return {};
    }
    Rational bound = cauchy_bound(core);
    std::vector<Rational> out;
    for (auto &root : real_roots(core, -bound, bound)) {
        if (root.is_exact()) {
            out.push_back(root.value());
        }
    }
    return out;
}

std::vector<Poly> odd_factors(const RatFn &f) {
    if (f.is_zero()) {
        throw std::domain_error("odd_factors of zero");
    }
    std::vector<Poly> out;
    auto collect = [&](const Poly &g) {
        if (g.degree() <= 0) {
            return;
        }
        for (const auto &sf : squarefree_decompose(g).factors) {
            if (sf.multiplicity % 2 == 0) {
                continue;
            }
            Poly rest = sf.factor;
            for (const auto &z : rational_roots(sf.factor)) {
                out.push_back(Poly::linear_power(z, 1));
                rest = rest.deflate(z, 1);
            }
            if (rest.degree() > 0) {
                out.push_back(rest.monic());
            }
        }
    };
    collect(f.num());
    collect(f.den());
    return out;
}

std::optional<RatFn> is_square(const RatFn &f) {
    if (!f.is_rational()) {
        throw std::invalid_argument("is_square requires rational coefficients");
    }
    if (f.is_zero()) {
        return RatFn();
    }
    auto root_of = [](const Poly &g) -> std::optional<Poly> {
        auto dec = squarefree_decompose(g);
        Poly q(1L);
        for (const auto &sf : dec.factors) {
            if (sf.multiplicity % 2 != 0) {
                return std::nullopt;
            }
            q *= pow(sf.factor, sf.multiplicity / 2);
        }
        return q;
    };
    auto num_root = root_of(f.num());
    auto den_root = root_of(f.den());
    if (!num_root || !den_root) {
        return std::nullopt;
    }
    // den is monic, so the leading coefficient of f is that of num.
    auto unit = f.num().lead().sqrt_of_rational();
    if (!unit) {
        return std::nullopt;
    }
    return RatFn(num_root->scaled(*unit), *den_root);
}

RealRoot RealRoot::exact(Rational z) {
    RealRoot r;
    r.exact_ = z;
    r.poly_ = Poly::linear_power(z, 1);
    r.lo_ = z;
    r.hi_ = z;
    return r;
}

RealRoot::RealRoot(Poly poly, Rational lo, Rational hi) : poly_(std::move(poly)), lo_(std::move(lo)), hi_(std::move(hi)) {}

void RealRoot::bisect_once() {
    if (exact_) {
        return;
    }
    Rational mid = (lo_ + hi_) / 2;
    int sm = sign_at(poly_, mid);
    if (sm == 0) {
        exact_ = mid;
        lo_ = mid;
        hi_ = mid;
        return;
    }
    if (sign_at(poly_, lo_) != sm) {
        hi_ = mid;
    } else {
        lo_ = mid;
    }
}

void RealRoot::refine(const Rational &width) {
    while (!exact_ && hi_ - lo_ >= width) {
        bisect_once();
    }
}

double RealRoot::approx() const {
    if (exact_) {
        return to_double(*exact_);
    }
    RealRoot copy = *this;
    copy.refine(frac(1, 1L << 52));
    return copy.exact_ ? to_double(*copy.exact_) : to_double((copy.lo_ + copy.hi_) / 2);
}

bool RealRoot::is_root_of(const Poly &q) const {
    if (q.is_zero()) {
        return true;
    }
    if (exact_) {
        return q.eval(Scalar(*exact_)).is_zero();
    }
    Poly g = gcd(q, poly_);
    if (g.degree() <= 0) {
        return false;
    }
    // g divides the squarefree poly_, whose only root in (lo, hi) is this point.
    return sign_at(g, lo_) != sign_at(g, hi_);
}

int RealRoot::multiplicity_in(const Poly &q) const {
    if (q.is_zero()) {
        throw std::domain_error("multiplicity in the zero polynomial");
    }
    int m = 0;
    Poly cur = q;
    while (!cur.is_zero() && is_root_of(cur)) {
        m++;
        cur = cur.derivative();
    }
    return m;
}

int RealRoot::sign_of(const Poly &q) {
    if (exact_) {
        return sign_at(q, *exact_);
    }
    if (q.is_zero() || is_root_of(q)) {
        return 0;
    }
    while (!exact_) {
        if (sign_at(q, lo_) != 0 && sign_at(q, hi_) != 0 && sturm_count(q, lo_, hi_) == 0) {
            return sign_at(q, lo_);
        }
        bisect_once();
    }
    return sign_at(q, *exact_);
}

std::string RealRoot::to_string() const {
    if (exact_) {
        return exact_->get_str();
    }
    return "root of " + poly_.to_string() + " in (" + lo_.get_str() + ", " + hi_.get_str() + ")";
}

namespace {

void isolate(const Poly &sqf, const Rational &lo, const Rational &hi, std::vector<RealRoot> &out) {
    int n = sturm_count(sqf, lo, hi);
    if (n == 0) {
        return;
    }
    bool lo_ok = !sqf.eval(Scalar(lo)).is_zero();
    bool hi_ok = !sqf.eval(Scalar(hi)).is_zero();
    if (n == 1 && lo_ok && hi_ok) {
        out.emplace_back(sqf, lo, hi);
        return;
    }
    Rational mid = (lo + hi) / 2;
    isolate(sqf, lo, mid, out);
    if (sqf.eval(Scalar(mid)).is_zero()) {
        out.push_back(RealRoot::exact(mid));
    }
    isolate(sqf, mid, hi, out);
}

}  // namespace

std::vector<RealRoot> real_roots(const Poly &f, const Rational &a, const Rational &b) {
    if (f.is_zero()) {
        throw std::domain_error("real_roots of the zero polynomial");
    }
    if (b < a) {
        throw std::invalid_argument("real_roots requires a <= b");
    }
    Poly g = f;
    if (!f.is_real()) {
        auto [re, im] = f.real_imag();
        g = re.is_zero() ? im : (im.is_zero() ? re : gcd(re, im));
    }
    std::vector<RealRoot> out;
    if (g.degree() <= 0) {
        return out;
    }
    Poly sqf = squarefree_part(g);
    if (sqf.eval(Scalar(a)).is_zero()) {
        out.push_back(RealRoot::exact(a));
    }
    if (a < b) {
        isolate(sqf, a, b, out);
        if (sqf.eval(Scalar(b)).is_zero()) {
            out.push_back(RealRoot::exact(b));
        }
    }
    // Irrational-looking intervals may still hold rational roots: those are roots of
    // the rational core, and z * lead is an integer for its primitive integer form.
    Poly core = rational_core(sqf);
    if (core.degree() > 0) {
        Poly h = gcd(core, sqf);
        if (h.degree() > 0 && h.is_rational()) {
            Poly hs = squarefree_part(h);
            mpz_class lead = integer_lead(hs);
            Rational width(mpz_class(1), lead);
            for (auto &root : out) {
                if (root.is_exact() || !root.is_root_of(hs)) {
                    continue;
                }
                root.refine(width);
                if (root.is_exact()) {
                    continue;
                }
                mpz_class k;
                Rational scaled = root.lo() * lead;
                mpz_cdiv_q(k.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
                Rational candidate(k, lead);
                candidate.canonicalize();
                if (candidate > root.lo() && candidate < root.hi() && hs.eval(Scalar(candidate)).is_zero()) {
                    root = RealRoot::exact(candidate);
                }
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const RealRoot &x, const RealRoot &y) { return x.lo() < y.lo(); });
    return out;
}

}  // namespace qbf
