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

#include <gtest/gtest.h>

#include <cmath>

#include "qbf/field_elem.h"
#include "qbf/order_form.h"
#include "qbf/roots.h"
#include "support/random.h"

namespace qbf {
namespace {

using testing::Gen;

Poly P(std::vector<long> c) {
    std::vector<Scalar> s(c.begin(), c.end());
    return Poly(s);
}

Poly lin(const Rational &z) {
    return Poly::linear_power(z, 1);
}

TEST(Scalar, InverseOracle) {
    Scalar x(1, 1, 1, 0);
    EXPECT_EQ(x.inverse(), Scalar(0, frac(1, 4), frac(-1, 2), frac(1, 4)));
    EXPECT_EQ(Scalar(3, -2, 0, 0).inverse(), Scalar(3, 2, 0, 0));
    EXPECT_TRUE((x * x.inverse()).is_one());
}

TEST(Scalar, SqrtTwoSquared) {
    EXPECT_EQ(Scalar::sqrt2() * Scalar::sqrt2(), Scalar(2));
    EXPECT_EQ(Scalar::i() * Scalar::i(), Scalar(-1));
    EXPECT_EQ(Scalar::inv_sqrt2() * Scalar::sqrt2(), Scalar(1));
}

TEST(Scalar, SignOfRealQuadratic) {
    EXPECT_EQ(Scalar(Rational(3), Rational(-2), 0, 0).sign(), 1);
    EXPECT_EQ(Scalar(Rational(1), Rational(-1), 0, 0).sign(), -1);
    EXPECT_EQ(Scalar(Rational(-7), Rational(5), 0, 0).sign(), 1);
    EXPECT_THROW(Scalar::i().sign(), std::domain_error);
}

TEST(Scalar, SqrtOfRational) {
    EXPECT_EQ(Scalar(frac(9, 4)).sqrt_of_rational(), Scalar(frac(3, 2)));
    EXPECT_EQ(Scalar(8).sqrt_of_rational(), Scalar(0, 2, 0, 0));
    EXPECT_FALSE(Scalar(3).sqrt_of_rational());
    EXPECT_FALSE(Scalar(-4).sqrt_of_rational());
}

TEST(Scalar, ParseRational) {
    EXPECT_EQ(parse_rational("-6/4"), frac(-3, 2));
    EXPECT_EQ(parse_rational("7"), Rational(7));
    EXPECT_THROW(parse_rational("1/0"), std::exception);
    EXPECT_THROW(parse_rational("x"), std::invalid_argument);
}

TEST(Scalar, FieldProperties) {
    Gen gen(1);
    for (int k = 0; k < 300; k++) {
        Scalar a = gen.scalar(), b = gen.scalar(), c = gen.scalar();
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ((a * b).conj(), a.conj() * b.conj());
        if (!a.is_zero()) {
            EXPECT_TRUE((a * a.inverse()).is_one());
        }
        std::complex<double> z = (a * b).to_complex() - a.to_complex() * b.to_complex();
        EXPECT_LT(std::abs(z), 1e-9);
    }
}

TEST(Poly, GcdOracle) {
    Poly a = pow(lin(1), 2) * lin(-2);
    Poly b = lin(1) * lin(3);
    EXPECT_EQ(gcd(a, b), lin(1));
    EXPECT_EQ(gcd(a, Poly()), a.monic());
    EXPECT_EQ(gcd(lin(frac(1, 2)), lin(frac(1, 3))), Poly(1L));
}

TEST(Poly, DivmodProperty) {
    Gen gen(2);
    for (int k = 0; k < 200; k++) {
        Poly a = gen.poly(5);
        Poly b = gen.nonzero_poly(3);
        auto [q, r] = divmod(a, b);
        EXPECT_EQ(q * b + r, a);
        EXPECT_LT(r.degree(), b.degree() == 0 ? 0 : b.degree());
    }
}

TEST(Poly, GcdDividesBoth) {
    Gen gen(3);
    for (int k = 0; k < 100; k++) {
        Poly common = gen.nonzero_poly(2);
        Poly a = common * gen.nonzero_poly(2);
        Poly b = common * gen.nonzero_poly(2);
        Poly g = gcd(a, b);
        EXPECT_TRUE(divmod(a, g).second.is_zero());
        EXPECT_TRUE(divmod(b, g).second.is_zero());
        EXPECT_TRUE(divmod(g, common.monic()).second.is_zero());
    }
}

TEST(Poly, OrderAndDeflate) {
    Poly f = pow(lin(frac(1, 2)), 3) * lin(2);
    EXPECT_EQ(f.order_at(frac(1, 2)), 3);
    EXPECT_EQ(f.order_at(0), 0);
    EXPECT_EQ(f.deflate(frac(1, 2), 3), lin(2));
}

TEST(Poly, RationalParts) {
    Poly f(std::vector<Scalar>{Scalar(1, 2, 3, 4), Scalar(0, 1, 0, 0)});
    auto parts = f.rational_parts();
    ASSERT_EQ(parts.size(), 4u);
    EXPECT_EQ(parts[0], P({1}));
    EXPECT_EQ(parts[1], P({2, 1}));
    EXPECT_EQ(parts[2], P({3}));
    EXPECT_EQ(parts[3], P({4}));
}

TEST(RatFn, CanonicalForm) {
    RatFn f(P({-2, 2}), P({-3, 0, 3}));
    EXPECT_EQ(f.num(), Poly(Scalar(frac(2, 3))));
    EXPECT_EQ(f.den(), P({1, 1}));
    EXPECT_THROW(RatFn(P({1}), Poly()), std::domain_error);
}

TEST(RatFn, CanonicalProperty) {
    Gen gen(4);
    for (int k = 0; k < 150; k++) {
        RatFn a = gen.ratfn(2), b = gen.ratfn(2);
        for (const RatFn &x : {a + b, a * b, a - b}) {
            EXPECT_TRUE(x.den().lead().is_one());
            EXPECT_EQ(gcd(x.num(), x.den()).degree(), 0);
        }
        if (!b.is_zero()) {
            EXPECT_EQ(a / b * b, a);
        }
        EXPECT_EQ(a + b - b, a);
    }
}

TEST(Roots, SquarefreeOracle) {
    Poly f = pow(lin(1), 2) * pow(lin(-2), 3);
    auto d = squarefree_decompose(f.scaled(Scalar(5)));
    EXPECT_EQ(d.unit, Scalar(5));
    ASSERT_EQ(d.factors.size(), 2u);
    EXPECT_EQ(d.factors[0].factor, lin(1));
    EXPECT_EQ(d.factors[0].multiplicity, 2);
    EXPECT_EQ(d.factors[1].factor, lin(-2));
    EXPECT_EQ(d.factors[1].multiplicity, 3);
}

TEST(Roots, SquarefreeProperty) {
    Gen gen(5);
    for (int k = 0; k < 60; k++) {
        Poly f = gen.nonzero_poly(2) * pow(gen.nonzero_poly(1), 2);
        auto d = squarefree_decompose(f);
        Poly back(d.unit);
        for (const auto &fac : d.factors) {
            back *= pow(fac.factor, fac.multiplicity);
        }
        EXPECT_EQ(back, f);
    }
}

TEST(Roots, RationalRootsOracle) {
    Poly f = P({-1, 6, -11, 6});
    std::vector<Rational> want = {frac(1, 3), frac(1, 2), Rational(1)};
    EXPECT_EQ(rational_roots(f), want);
}

TEST(Roots, IsSquare) {
    EXPECT_EQ(is_square(RatFn(pow(P({1, 1}), 2), P({4}))), RatFn(P({1, 1}), P({2})));
    auto r = is_square(RatFn(P({0, 0, 2})));
    ASSERT_TRUE(r);
    EXPECT_EQ(*r * *r, RatFn(P({0, 0, 2})));
    EXPECT_FALSE(is_square(RatFn::p()));
    EXPECT_FALSE(is_square(RatFn(P({0, 0, 3}))));
}

TEST(Roots, IsSquareProperty) {
    Gen gen(6);
    for (int k = 0; k < 100; k++) {
        auto rational_poly = [&](int lo) {
            std::vector<Scalar> c;
            for (int j = 0, n = gen.integer(lo, 2); j <= n; j++) {
                c.push_back(Scalar(gen.rational()));
            }
            return Poly(c);
        };
        Poly den = rational_poly(0);
        if (den.is_zero()) {
            continue;
        }
        RatFn q(rational_poly(0), den);
        if (q.is_zero()) {
            continue;
        }
        auto r = is_square(q * q);
        ASSERT_TRUE(r) << q.to_string();
        EXPECT_EQ(*r * *r, q * q);
    }
}

TEST(Roots, OddFactors) {
    RatFn f(P({0, 0, -1}), P({-1, 0, 1}));
    auto odd = odd_factors(f);
    ASSERT_EQ(odd.size(), 2u);
}

TEST(Roots, SturmAndNonneg) {
    Poly f(std::vector<Scalar>{Scalar(frac(-1, 2)), 0, 1});
    EXPECT_EQ(sturm_count(f, 0, 1), 1);
    EXPECT_EQ(sturm_count(f, -1, 1), 2);
    EXPECT_TRUE(certify_nonneg(pow(lin(frac(1, 2)), 2), 0, 1));
    EXPECT_FALSE(certify_nonneg(lin(frac(1, 2)), 0, 1));
    EXPECT_TRUE(certify_nonneg(lin(frac(1, 2)), frac(1, 2), 1));
}

TEST(Roots, IrrationalRootIsolation) {
    Poly f(std::vector<Scalar>{Scalar(frac(-2, 9)), 0, 1});
    auto roots = real_roots(f, 0, 1);
    ASSERT_EQ(roots.size(), 1u);
    EXPECT_FALSE(roots[0].is_exact());
    roots[0].refine(Rational(1, 1000000));
    EXPECT_NEAR(roots[0].approx(), std::sqrt(2.0) / 3, 1e-6);
    EXPECT_EQ(roots[0].multiplicity_in(f * f * lin(0)), 2);
    EXPECT_EQ(roots[0].sign_of(lin(frac(1, 2))), -1);
}

TEST(Roots, RealRootsMatchPlantedRoots) {
    Gen gen(7);
    for (int k = 0; k < 60; k++) {
        std::vector<Rational> planted;
        Poly f(1L);
        int n = gen.integer(1, 3);
        for (int j = 0; j < n; j++) {
            Rational z = gen.unit_rational();
            planted.push_back(z);
            f *= lin(z);
        }
        f *= Poly(std::vector<Scalar>{Scalar(2), 0, 1});
        std::sort(planted.begin(), planted.end());
        planted.erase(std::unique(planted.begin(), planted.end()), planted.end());
        auto roots = real_roots(f, 0, 1);
        ASSERT_EQ(roots.size(), planted.size());
        for (size_t j = 0; j < roots.size(); j++) {
            EXPECT_TRUE(roots[j].is_root_of(lin(planted[j])));
        }
    }
}

TEST(FieldElem, TSquaredIsTau) {
    FieldElem t = FieldElem::t();
    EXPECT_EQ(t * t, FieldElem(RatFn::tau()));
    EXPECT_EQ((FieldElem::constant(Scalar::i()) * t).mod_squared(), FieldElem(RatFn::tau()));
}

TEST(FieldElem, InverseOracle) {
    FieldElem x = FieldElem(RatFn(1L), RatFn(1L));
    RatFn k(P({1, -1}), P({1, -2}));
    EXPECT_EQ(x.inverse(), FieldElem(k, -k));
    EXPECT_THROW(FieldElem().inverse(), std::domain_error);
}

TEST(FieldElem, EvalOracle) {
    EXPECT_NEAR(FieldElem::t().eval(0.2).real(), 0.5, 1e-15);
    FieldElem x(RatFn(P({1, 1})), RatFn(Poly(Scalar::i())));
    auto v = x.eval(0.5);
    EXPECT_NEAR(v.real(), 1.5, 1e-15);
    EXPECT_NEAR(v.imag(), 1.0, 1e-15);
    EXPECT_THROW(FieldElem::t().eval(1.0), std::domain_error);
}

TEST(FieldElem, EvalIsHomomorphism) {
    Gen gen(8);
    for (int k = 0; k < 100; k++) {
        FieldElem x = gen.field_elem(2), y = gen.field_elem(2);
        double p0 = 0.05 + 0.9 * (k % 17) / 17.0;
        try {
            auto lhs = (x * y).eval(p0);
            auto rhs = x.eval(p0) * y.eval(p0);
            EXPECT_LT(std::abs(lhs - rhs), 1e-6 * (1 + std::abs(rhs)));
            auto m = x.mod_squared().eval(p0);
            EXPECT_NEAR(m.real(), std::norm(x.eval(p0)), 1e-6 * (1 + m.real()));
            EXPECT_NEAR(m.imag(), 0.0, 1e-6 * (1 + m.real()));
        } catch (const std::domain_error &) {
        }
    }
}

TEST(FieldElem, ConjugationIsAutomorphism) {
    Gen gen(9);
    for (int k = 0; k < 100; k++) {
        FieldElem x = gen.field_elem(1), y = gen.field_elem(1);
        EXPECT_EQ((x * y).conj(), x.conj() * y.conj());
        EXPECT_EQ((x + y).conj(), x.conj() + y.conj());
        EXPECT_EQ(x.mod_squared().conj(), x.mod_squared());
    }
}

TEST(OrderForm, RoundTrip) {
    Gen gen(10);
    for (int k = 0; k < 100; k++) {
        FieldElem x = gen.field_elem(2);
        EXPECT_EQ(OrderForm::from(x).to_field_elem(), x);
    }
}

TEST(OrderForm, WorkedOrders) {
    Rational half = frac(1, 2);
    VanishingOrder t0 = vanishing_order(OrderForm::from(FieldElem::t()), 0);
    EXPECT_EQ(t0.twice_order, 1);
    EXPECT_EQ(t0.route, VanishingOrder::Route::kEndpoint);
    EXPECT_EQ(vanishing_order(OrderForm::from(FieldElem::t()), 1).twice_order, -1);
    EXPECT_EQ(vanishing_order(OrderForm{pow(lin(half), 2), Poly(), Poly(1L)}, half).twice_order, 4);
    VanishingOrder c = vanishing_order(OrderForm{Poly(Scalar(half)), Poly(-1L), Poly(1L)}, half);
    EXPECT_EQ(c.twice_order, 4);
    EXPECT_EQ(c.route, VanishingOrder::Route::kConjugate);
    EXPECT_EQ(c.order_string(), "2");
    EXPECT_EQ(vanishing_order(OrderForm{Poly(Scalar(frac(2, 5))), Poly(-1L), Poly(1L)}, frac(1, 5)).twice_order, 2);
}

TEST(OrderForm, ResidualIsNonzero) {
    Gen gen(11);
    for (int k = 0; k < 100; k++) {
        Rational z = gen.coin() ? Rational(frac(1, 5)) : gen.unit_rational();
        OrderForm x = gen.order_form_at(z);
        VanishingOrder v = vanishing_order(x, z);
        if (v.route != VanishingOrder::Route::kEndpoint) {
            EXPECT_GT(std::abs(v.residual_approx()), 0.0) << x.to_string();
        }
        EXPECT_GE(v.twice_order, 0);
    }
}

TEST(OrderForm, MatchesNumericDecay) {
    OrderForm x{pow(lin(frac(1, 3)), 3), Poly(), P({1, 1})};
    VanishingOrder v = vanishing_order(x, frac(1, 3));
    double ratio = std::abs(x.eval(1.0 / 3 + 1e-3)) / std::abs(x.eval(1.0 / 3 + 2e-3));
    EXPECT_NEAR(std::log2(1 / ratio), v.order(), 1e-2);
}

}  // namespace
}  // namespace qbf
