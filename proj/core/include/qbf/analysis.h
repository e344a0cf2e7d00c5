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

#ifndef QBF_ANALYSIS_H
#define QBF_ANALYSIS_H

#include <optional>
#include <string>
#include <vector>

#include "qbf/expr.h"
#include "qbf/field_elem.h"
#include "qbf/order_form.h"
#include "qbf/piecewise.h"

namespace qbf {

// ---------------------------------------------------------------------------
// Simulability of ratios.

struct RatioDecision {
    bool simulable = false;
    /// The ratio as a field element, when simulable.
    std::optional<FieldElem> value;
    /// Witness decomposition value = (g1/g2) t + g3/g4.
    Poly g1, g2, g3, g4;
    /// Why lowering failed, when not simulable.
    std::string diagnosis;
    std::vector<Poly> odd_factors;
};

/// A ratio is simulable exactly when it lowers into the field. Lowering errors
/// other than non-membership (division by zero, unsupported constants) are
/// rethrown as LowerError.
RatioDecision decide_qq_ratio(const Expr &e);

struct CorollaryDecision {
    enum class Status {
        kSimulable,
        kNotSimulable,
        /// f = 1 everywhere: the ratio is infinite, the state |0>.
        kDegenerateOne,
        /// f has a pole on [0, 1] or leaves [0, 1] somewhere.
        kRangeViolation,
    };

    Status status = Status::kNotSimulable;
    /// h with h^2 = f/(1-f), when such an h has coefficients in Q(i, sqrt2).
    std::optional<FieldElem> h;
    /// f/(1-f) = radicand * q^2 (uses_t false) or radicand * q^2 p/(1-p) (uses_t true).
    Rational radicand{1};
    RatFn q;
    bool uses_t = false;
    std::string reason;

    bool simulable() const { return status == Status::kSimulable || status == Status::kDegenerateOne; }
};

/// Decides whether a real rational probability function f equals |k0|^2 for a
/// simulable tuple with real amplitudes.
CorollaryDecision decide_real_corollary(const RatFn &f);

/// |h|^2 == f/(1-f) exactly, that is |k0|^2 = f for the tuple with ratio h.
bool check_phased_witness(const FieldElem &h, const RatFn &f);

// ---------------------------------------------------------------------------
// CC / QC / QQ classification.

enum class Verdict { kYes, kNo, kUnknown };

std::string to_string(Verdict v);

struct CcReport {
    Verdict verdict = Verdict::kUnknown;
    /// Witness n of min(f, 1-f) >= min(p^n, (1-p)^n); 0 for a constant f.
    int witness_n = -1;
    std::string reason;
};

/// One zero (f = 0) or one (f = 1) of f with its local bound
/// c (p - z)^(2k) <= f (or <= 1 - f) on [z - delta, z + delta].
struct SpbPoint {
    /// Exact location when rational.
    std::optional<Rational> exact;
    /// Otherwise an isolating interval of a root of `poly`.
    Poly poly;
    Rational lo, hi;
    double approx = 0;

    /// Order of f (or 1 - f) at the point, in half units.
    int twice_order = 0;
    int k = 0;
    double c = 0;
    double delta = 0;
    /// Nonzero-residual certificate, present for rational points on the h route.
    std::optional<VanishingOrder> certificate;

    std::string location() const;
};

struct QcReport {
    Verdict verdict = Verdict::kUnknown;
    std::vector<SpbPoint> zeros;
    std::vector<SpbPoint> ones;
    std::string reason;
};

struct QqReport {
    enum class Kind { kYes, kNo, kNoForRealForm, kUnknown };
    Kind kind = Kind::kUnknown;
    std::optional<FieldElem> witness;
    std::string reason;
};

std::string to_string(QqReport::Kind k);

struct ClassReport {
    CcReport cc;
    QcReport qc;
    QqReport qq;
};

/// Largest n tried by the polynomial-boundedness search.
constexpr int kMaxWitnessN = 64;

CcReport classify_cc(const PiecewiseFn &f);

/// SPB certificate for f = |h|^2 / (1 + |h|^2). Throws std::invalid_argument for h = 0.
QcReport classify_qc(const FieldElem &h);

/// SPB certificate computed from the pieces of f directly.
QcReport classify_qc(const PiecewiseFn &f);

/// `witness` is a caller-supplied ratio h; `no_complex_witness` asserts that no
/// complex h exists beyond the real forms, which turns a failed corollary into
/// kNoForRealForm.
QqReport classify_qq(const PiecewiseFn &f, const std::optional<FieldElem> &witness = std::nullopt,
                     bool no_complex_witness = false);

/// Runs all three classifiers. QC uses the QQ witness when there is one and
/// the pieces of f otherwise.
ClassReport classify(const PiecewiseFn &f, const std::optional<FieldElem> &witness = std::nullopt,
                     bool no_complex_witness = false);

/// Re-checks an SPB certificate for f = |h|^2/(1+|h|^2) independently of
/// classify_qc: exact orders at rational points, k >= order/2, and the local
/// bounds on a fresh grid. On failure `why` names the first broken claim.
bool verify_spb(const FieldElem &h, const QcReport &report, std::string *why = nullptr);

/// Same for a piecewise f.
bool verify_spb(const PiecewiseFn &f, const QcReport &report, std::string *why = nullptr);

}  // namespace qbf

#endif  // QBF_ANALYSIS_H
