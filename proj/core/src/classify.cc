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

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <set>
#include <stdexcept>

#include "qbf/analysis.h"
#include "qbf/roots.h"

namespace qbf {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::kYes:
            return "yes";
        case Verdict::kNo:
            return "no";
        case Verdict::kUnknown:
            return "unknown";
    }
    return "?";
}

std::string to_string(QqReport::Kind k) {
    switch (k) {
        case QqReport::Kind::kYes:
            return "yes";
        case QqReport::Kind::kNo:
            return "no";
        case QqReport::Kind::kNoForRealForm:
            return "no-for-real-form";
        case QqReport::Kind::kUnknown:
            return "unknown";
    }
    return "?";
}

std::string SpbPoint::location() const {
    if (exact) {
        return exact->get_str();
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", approx);
    return std::string("~") + buf;
}

namespace {

const Poly &p_one_minus_p() {
    static const Poly v = Poly::p() * (Poly(1L) - Poly::p());
    return v;
}

Poly norm_of(const OrderForm &x) {
    return x.a * x.a - x.b * x.b * p_one_minus_p();
}

SpbPoint point_from(RealRoot root) {
    SpbPoint pt;
    if (root.is_exact()) {
        pt.exact = root.value();
        pt.poly = root.poly();
        pt.lo = root.value();
        pt.hi = root.value();
        pt.approx = to_double(root.value());
        return pt;
    }
    root.refine(Rational(mpz_class(1), mpz_class(1) << 60));
    pt.poly = root.poly();
    pt.lo = root.lo();
    pt.hi = root.hi();
    pt.approx = root.approx();
    if (root.is_exact()) {
        pt.exact = root.value();
    }
    return pt;
}

RealRoot root_of(const SpbPoint &pt) {
    return pt.exact ? RealRoot::exact(*pt.exact) : RealRoot(pt.poly, pt.lo, pt.hi);
}

int k_for(int twice_order) {
    // c (p - z)^(2k) <= f with f of order twice_order / 2 needs 4k >= twice_order.
    return (twice_order + 3) / 4;
}

// Fills delta and c for every point. `value(p)` is f near zeros and 1 - f near ones.
void fill_bounds(std::vector<SpbPoint> &zeros, std::vector<SpbPoint> &ones, const std::function<double(double)> &f,
                 std::string *problem) {
    std::vector<double> all;
    for (const auto &z : zeros) {
        all.push_back(z.approx);
    }
    for (const auto &w : ones) {
        all.push_back(w.approx);
    }
    auto fill = [&](SpbPoint &pt, bool is_one) {
        double delta = 0.125;
        for (double other : all) {
            double d = std::abs(other - pt.approx);
            if (d > 0) {
                delta = std::min(delta, d / 2);
            }
        }
        pt.delta = delta;
        pt.k = k_for(pt.twice_order);
        double inf = std::numeric_limits<double>::infinity();
        for (int j = 1; j <= 100; j++) {
            for (int side : {-1, 1}) {
                double d = side * delta * j / 100.0;
                double x = pt.approx + d;
                if (x < 0 || x > 1) {
                    continue;
                }
                double v = is_one ? 1.0 - f(x) : f(x);
                double ratio = v / std::pow(std::abs(d), 2 * pt.k);
                inf = std::min(inf, ratio);
            }
        }
        pt.c = inf / 2;
        if (!(pt.c > 0) || !std::isfinite(pt.c)) {
            if (problem->empty()) {
                *problem = "no positive local constant found near " + pt.location();
            }
        }
    };
    for (auto &z : zeros) {
        fill(z, false);
    }
    for (auto &w : ones) {
        fill(w, true);
    }
}

// f = |h|^2 / (1 + |h|^2) evaluated as |a + b s|^2 / (|a + b s|^2 + |c|^2).
std::function<double(double)> numeric_f(const FieldElem &h) {
    OrderForm x = OrderForm::from(h);
    return [x](double p0) {
        std::complex<double> pz(p0, 0.0);
        double s = std::sqrt(std::max(0.0, p0 * (1 - p0)));
        double top = std::norm(x.a.eval(pz) + x.b.eval(pz) * s);
        double bottom = std::norm(x.c.eval(pz));
        return top / (top + bottom);
    };
}

// Points of [0, 1] where x has positive order, searched among the real roots
// of candidates.
std::vector<SpbPoint> special_points(const Poly &candidates, const OrderForm &x) {
    std::vector<SpbPoint> out;
    for (auto &root : real_roots(candidates, 0, 1)) {
        int twice = twice_order_at(x, root);
        if (twice <= 0) {
            continue;
        }
        SpbPoint pt = point_from(root);
        pt.twice_order = twice;
        if (pt.exact) {
            pt.certificate = vanishing_order(x, *pt.exact);
        }
        out.push_back(std::move(pt));
    }
    return out;
}

// Range and continuity checks shared by the CC and QC routes. Returns an empty
// string when f is a continuous map [0, 1] -> [0, 1].
std::string range_problem(const PiecewiseFn &f) {
    for (const auto &pc : f.pieces()) {
        const Poly &num = pc.fn.num();
        const Poly &den = pc.fn.den();
        if (!certify_nonneg(num * den, pc.lo, pc.hi)) {
            return "f < 0 somewhere on [" + pc.lo.get_str() + ", " + pc.hi.get_str() + "]";
        }
        if (!certify_nonneg((den - num) * den, pc.lo, pc.hi)) {
            return "f > 1 somewhere on [" + pc.lo.get_str() + ", " + pc.hi.get_str() + "]";
        }
    }
    const auto &ps = f.pieces();
    for (size_t k = 0; k + 1 < ps.size(); k++) {
        Scalar knot(ps[k].hi);
        if (!(ps[k].fn.eval(knot) == ps[k + 1].fn.eval(knot))) {
            return "f is discontinuous at " + ps[k].hi.get_str();
        }
    }
    return "";
}

bool is_interior(const RealRoot &r) {
    if (r.is_exact()) {
        return sgn(r.value()) > 0 && r.value() < 1;
    }
    return true;
}

bool bounded_with(const PiecewiseFn &f, int n) {
    const Rational half = frac(1, 2);
    const Poly pn = pow(Poly::p(), n);
    const Poly qn = pow(Poly(1L) - Poly::p(), n);
    for (const auto &pc : f.pieces()) {
        const Poly &num = pc.fn.num();
        const Poly &den = pc.fn.den();
        struct Half {
            Rational lo, hi;
            const Poly *m;
        };
        for (const Half &hf : {Half{0, half, &pn}, Half{half, 1, &qn}}) {
            Rational lo = std::max(pc.lo, hf.lo);
            Rational hi = std::min(pc.hi, hf.hi);
            if (!(lo < hi)) {
                continue;
            }
            Poly md = *hf.m * den;
            if (!certify_nonneg((num - md) * den, lo, hi) || !certify_nonneg((den - num - md) * den, lo, hi)) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace

CcReport classify_cc(const PiecewiseFn &f) {
    CcReport out;
    if (auto why = range_problem(f); !why.empty()) {
        out.verdict = Verdict::kNo;
        out.reason = why;
        return out;
    }
    if (f.is_constant()) {
        out.verdict = Verdict::kYes;
        out.witness_n = 0;
        out.reason = "constant";
        return out;
    }
    for (const auto &pc : f.pieces()) {
        const Poly &num = pc.fn.num();
        const Poly &rest = pc.fn.den() - num;
        for (const auto &[g, what] : {std::pair{&num, "0"}, std::pair{&rest, "1"}}) {
            if (g->is_zero()) {
                out.verdict = Verdict::kNo;
                out.reason = std::string("f = ") + what + " on [" + pc.lo.get_str() + ", " + pc.hi.get_str() + "]";
                return out;
            }
            for (auto &r : real_roots(*g, pc.lo, pc.hi)) {
                if (is_interior(r)) {
                    out.verdict = Verdict::kNo;
                    out.reason = std::string("f = ") + what + " at interior point " + point_from(r).location();
                    return out;
                }
            }
        }
    }
    int good = -1;
    int bad = 0;
    for (int n = 1; n <= kMaxWitnessN; n *= 2) {
        if (bounded_with(f, n)) {
            good = n;
            break;
        }
        bad = n;
    }
    if (good < 0) {
        out.verdict = Verdict::kUnknown;
        out.reason = "no witness found for n <= " + std::to_string(kMaxWitnessN);
        return out;
    }
    while (good - bad > 1) {
        int mid = (good + bad) / 2;
        if (bounded_with(f, mid)) {
            good = mid;
        } else {
            bad = mid;
        }
    }
    out.verdict = Verdict::kYes;
    out.witness_n = good;
    out.reason = "min(f, 1-f) >= min(p^n, (1-p)^n) with n = " + std::to_string(good);
    return out;
}

QcReport classify_qc(const FieldElem &h) {
    if (h.is_zero()) {
        throw std::invalid_argument("classify_qc needs a nonzero ratio");
    }
    QcReport out;
    OrderForm form = OrderForm::from(h);
    out.zeros = special_points(norm_of(form), OrderForm::from(h.mod_squared()));
    out.ones = special_points(form.c, OrderForm::from(h.inverse().mod_squared()));
    std::string problem;
    fill_bounds(out.zeros, out.ones, numeric_f(h), &problem);
    if (!problem.empty()) {
        out.verdict = Verdict::kUnknown;
        out.reason = problem;
        return out;
    }
    out.verdict = Verdict::kYes;
    out.reason = "SPB: " + std::to_string(out.zeros.size()) + " zero(s), " + std::to_string(out.ones.size()) + " one(s)";
    return out;
}

namespace {

// Multiplicity of a zero (or one) of f at a point, maximised over the pieces
// whose closed interval contains it.
int piecewise_multiplicity(const PiecewiseFn &f, RealRoot &at, bool is_one) {
    int best = 0;
    for (const auto &pc : f.pieces()) {
        bool inside;
        if (at.is_exact()) {
            inside = pc.lo <= at.value() && at.value() <= pc.hi;
        } else {
            inside = pc.lo <= at.lo() && at.hi() <= pc.hi;
        }
        if (!inside) {
            continue;
        }
        Poly g = is_one ? pc.fn.den() - pc.fn.num() : pc.fn.num();
        best = std::max(best, at.multiplicity_in(g));
    }
    return best;
}

void merge_point(std::vector<SpbPoint> &into, SpbPoint pt) {
    for (auto &q : into) {
        if (q.exact && pt.exact && *q.exact == *pt.exact) {
            q.twice_order = std::max(q.twice_order, pt.twice_order);
            return;
        }
    }
    into.push_back(std::move(pt));
}

}  // namespace

QcReport classify_qc(const PiecewiseFn &f) {
    QcReport out;
    if (auto why = range_problem(f); !why.empty()) {
        out.verdict = Verdict::kNo;
        out.reason = why;
        return out;
    }
    if (f.is_constant()) {
        out.verdict = Verdict::kYes;
        out.reason = "constant";
        return out;
    }
    for (const auto &pc : f.pieces()) {
        for (bool is_one : {false, true}) {
            Poly g = is_one ? pc.fn.den() - pc.fn.num() : pc.fn.num();
            if (g.is_zero()) {
                out.verdict = Verdict::kNo;
                out.reason = std::string("f = ") + (is_one ? "1" : "0") + " on [" + pc.lo.get_str() + ", " + pc.hi.get_str() +
                             "]: infinitely many " + (is_one ? "ones" : "zeros");
                return out;
            }
            for (auto &r : real_roots(g, pc.lo, pc.hi)) {
                SpbPoint pt = point_from(r);
                RealRoot at = root_of(pt);
                pt.twice_order = 2 * piecewise_multiplicity(f, at, is_one);
                merge_point(is_one ? out.ones : out.zeros, std::move(pt));
            }
        }
    }
    auto by_location = [](const SpbPoint &a, const SpbPoint &b) { return a.approx < b.approx; };
    std::sort(out.zeros.begin(), out.zeros.end(), by_location);
    std::sort(out.ones.begin(), out.ones.end(), by_location);
    std::string problem;
    fill_bounds(out.zeros, out.ones, [&f](double x) { return f.eval(x); }, &problem);
    if (!problem.empty()) {
        out.verdict = Verdict::kUnknown;
        out.reason = problem;
        return out;
    }
    out.verdict = Verdict::kYes;
    out.reason = "SPB: " + std::to_string(out.zeros.size()) + " zero(s), " + std::to_string(out.ones.size()) + " one(s)";
    return out;
}

QqReport classify_qq(const PiecewiseFn &f, const std::optional<FieldElem> &witness, bool no_complex_witness) {
    QqReport out;
    const auto &ps = f.pieces();
    bool all_same = std::all_of(ps.begin(), ps.end(), [&](const Piece &pc) { return pc.fn == ps[0].fn; });
    if (!all_same) {
        for (size_t k = 0; k + 1 < ps.size(); k++) {
            if (!(ps[k].fn == ps[k + 1].fn)) {
                out.kind = QqReport::Kind::kNo;
                out.reason = "f equals " + ps[k].fn.to_string() + " on [" + ps[k].lo.get_str() + ", " + ps[k].hi.get_str() +
                             ") but not on all of [0, 1]; a QQ function is one rational function of p and sqrt(p(1-p)) on "
                             "the whole interval";
                return out;
            }
        }
    }
    const RatFn &g = ps[0].fn;
    if (witness) {
        if (check_phased_witness(*witness, g)) {
            out.kind = QqReport::Kind::kYes;
            out.witness = *witness;
            out.reason = "supplied witness satisfies |h|^2 = f/(1-f)";
            return out;
        }
    }
    CorollaryDecision dec = decide_real_corollary(g);
    std::string witness_note = witness ? "supplied witness fails |h|^2 = f/(1-f); " : "";
    switch (dec.status) {
        case CorollaryDecision::Status::kDegenerateOne:
            out.kind = QqReport::Kind::kYes;
            out.reason = witness_note + "f = 1 is the state |0>";
            return out;
        case CorollaryDecision::Status::kRangeViolation:
            out.kind = QqReport::Kind::kNo;
            out.reason = witness_note + dec.reason;
            return out;
        case CorollaryDecision::Status::kSimulable:
            out.kind = QqReport::Kind::kYes;
            out.witness = dec.h;
            out.reason = witness_note + (dec.h ? "real witness h = " + dec.h->to_string() : dec.reason);
            return out;
        case CorollaryDecision::Status::kNotSimulable:
            break;
    }
    if (no_complex_witness) {
        out.kind = QqReport::Kind::kNoForRealForm;
        out.reason = witness_note + dec.reason;
    } else {
        out.kind = QqReport::Kind::kUnknown;
        out.reason = witness_note + dec.reason + "; complex witnesses are not decided";
    }
    return out;
}

ClassReport classify(const PiecewiseFn &f, const std::optional<FieldElem> &witness, bool no_complex_witness) {
    ClassReport out;
    out.cc = classify_cc(f);
    out.qq = classify_qq(f, witness, no_complex_witness);
    if (out.qq.witness && !out.qq.witness->is_zero()) {
        out.qc = classify_qc(*out.qq.witness);
    } else {
        out.qc = classify_qc(f);
    }
    return out;
}

namespace {

bool fail(std::string *why, const std::string &msg) {
    if (why) {
        *why = msg;
    }
    return false;
}

bool check_bounds(const QcReport &report, const std::function<double(double)> &f, std::string *why) {
    std::vector<std::pair<double, double>> covered;
    for (bool is_one : {false, true}) {
        for (const auto &pt : is_one ? report.ones : report.zeros) {
            if (4 * pt.k < pt.twice_order) {
                return fail(why, "k too small at " + pt.location());
            }
            if (!(pt.c > 0) || !(pt.delta > 0)) {
                return fail(why, "nonpositive constant at " + pt.location());
            }
            covered.emplace_back(pt.approx - pt.delta, pt.approx + pt.delta);
            for (int j = -128; j <= 128; j++) {
                double d = pt.delta * j / 128.0;
                double x = pt.approx + d;
                if (x < 0 || x > 1) {
                    continue;
                }
                double v = is_one ? 1.0 - f(x) : f(x);
                double bound = pt.c * std::pow(std::abs(d), 2 * pt.k);
                if (v < bound * (1 - 1e-9) - 1e-300) {
                    return fail(why, "local bound fails near " + pt.location());
                }
            }
        }
    }
    for (int j = 0; j <= 1000; j++) {
        double x = j / 1000.0;
        bool near = std::any_of(covered.begin(), covered.end(),
                                [x](const auto &iv) { return iv.first <= x && x <= iv.second; });
        if (near) {
            continue;
        }
        double v = f(x);
        if (!(v > 0) || !(v < 1)) {
            return fail(why, "unlisted zero or one near " + std::to_string(x));
        }
    }
    return true;
}

}  // namespace

namespace {

// The listed points are pairwise distinct and as many as the points found.
bool complete(const std::vector<SpbPoint> &listed, int found, int side, std::string *why) {
    for (size_t a = 0; a < listed.size(); a++) {
        for (size_t b = a + 1; b < listed.size(); b++) {
            if (listed[a].approx == listed[b].approx) {
                return fail(why, "point listed twice at " + listed[a].location());
            }
        }
    }
    if (static_cast<int>(listed.size()) != found) {
        return fail(why, std::string(side ? "ones" : "zeros") + ": " + std::to_string(listed.size()) + " listed, " +
                             std::to_string(found) + " present");
    }
    return true;
}

}  // namespace

bool verify_spb(const FieldElem &h, const QcReport &report, std::string *why) {
    if (report.verdict != Verdict::kYes) {
        return fail(why, "report is not an SPB certificate");
    }
    OrderForm forms[2] = {OrderForm::from(h.mod_squared()), OrderForm::from(h.inverse().mod_squared())};
    for (int side = 0; side < 2; side++) {
        for (const auto &pt : side ? report.ones : report.zeros) {
            int twice;
            if (pt.exact) {
                twice = vanishing_order(forms[side], *pt.exact).twice_order;
            } else {
                RealRoot at(pt.poly, pt.lo, pt.hi);
                twice = twice_order_at(forms[side], at);
            }
            if (twice != pt.twice_order || twice <= 0) {
                return fail(why, "order mismatch at " + pt.location());
            }
        }
    }
    OrderForm form = OrderForm::from(h);
    Poly candidates[2] = {norm_of(form), form.c};
    for (int side = 0; side < 2; side++) {
        int found = 0;
        for (auto &root : real_roots(candidates[side], 0, 1)) {
            found += twice_order_at(forms[side], root) > 0 ? 1 : 0;
        }
        if (!complete(side ? report.ones : report.zeros, found, side, why)) {
            return false;
        }
    }
    return check_bounds(report, numeric_f(h), why);
}

bool verify_spb(const PiecewiseFn &f, const QcReport &report, std::string *why) {
    if (report.verdict != Verdict::kYes) {
        return fail(why, "report is not an SPB certificate");
    }
    for (int side = 0; side < 2; side++) {
        for (const auto &pt : side ? report.ones : report.zeros) {
            if (pt.exact) {
                Rational v = f.eval(*pt.exact);
                if (v != side) {
                    return fail(why, "f(" + pt.location() + ") = " + v.get_str());
                }
            }
            RealRoot at = root_of(pt);
            if (2 * piecewise_multiplicity(f, at, side == 1) != pt.twice_order) {
                return fail(why, "order mismatch at " + pt.location());
            }
        }
    }
    for (int side = 0; side < 2; side++) {
        std::set<Rational> exact;
        int irrational = 0;
        for (const auto &pc : f.pieces()) {
            Poly g = side ? pc.fn.den() - pc.fn.num() : pc.fn.num();
            if (g.is_zero()) {
                return fail(why, "f is identically " + std::to_string(side) + " on a piece");
            }
            for (auto &r : real_roots(g, pc.lo, pc.hi)) {
                if (r.is_exact()) {
                    exact.insert(r.value());
                } else {
                    irrational++;
                }
            }
        }
        int found = static_cast<int>(exact.size()) + irrational;
        if (!complete(side ? report.ones : report.zeros, found, side, why)) {
            return false;
        }
    }
    if (f.is_constant() && report.zeros.empty() && report.ones.empty()) {
        return true;
    }
    return check_bounds(report, [&f](double x) { return f.eval(x); }, why);
}

}  // namespace qbf
