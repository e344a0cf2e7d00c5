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

#include "qbf/report.h"

#include <charconv>
#include <nlohmann/json.hpp>
#include <sstream>

namespace qbf {

using nlohmann::json;

std::string format_double(double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

namespace {

std::string dump(const json &j) {
    return j.dump(2) + "\n";
}

std::string join(const std::vector<Poly> &polys) {
    std::string out;
    for (const Poly &f : polys) {
        out += (out.empty() ? "" : ", ") + f.to_string();
    }
    return out;
}

json poly_list(const std::vector<Poly> &polys) {
    json out = json::array();
    for (const Poly &f : polys) {
        out.push_back(f.to_string());
    }
    return out;
}

json point_json(const SpbPoint &pt) {
    json j{{"location", pt.location()},
           {"approx", pt.approx},
           {"order", pt.twice_order / 2.0},
           {"k", pt.k},
           {"c", pt.c},
           {"delta", pt.delta}};
    if (pt.certificate) {
        j["residual"] = format_double(std::abs(pt.certificate->residual_approx()));
    }
    return j;
}

std::string point_text(const std::string &what, const SpbPoint &pt) {
    std::ostringstream out;
    out << "  " << what << " at " << pt.location() << ": order " << format_double(pt.twice_order / 2.0) << ", k " << pt.k
        << ", c " << format_double(pt.c) << ", delta " << format_double(pt.delta) << "\n";
    return out.str();
}

const char *status_name(CorollaryDecision::Status s) {
    switch (s) {
        case CorollaryDecision::Status::kSimulable:
            return "simulable";
        case CorollaryDecision::Status::kNotSimulable:
            return "not-simulable";
        case CorollaryDecision::Status::kDegenerateOne:
            return "degenerate-one";
        case CorollaryDecision::Status::kRangeViolation:
            return "range-violation";
    }
    return "?";
}

}  // namespace

std::string render_parse(const Expr &e, const std::optional<FieldElem> &value, const std::string &error, Format fmt) {
    if (fmt == Format::kJson) {
        json j{{"expr", e.to_string()}, {"size", e.size()}};
        j["value"] = value ? json(value->to_string()) : json(nullptr);
        j["error"] = value ? json(nullptr) : json(error);
        return dump(j);
    }
    std::string out = "expr: " + e.to_string() + "\n";
    if (value) {
        return out + "value: " + value->to_string() + "\n";
    }
    return out + "value: none\nerror: " + error + "\n";
}

std::string render_decision(const RatioDecision &d, Format fmt) {
    if (fmt == Format::kJson) {
        json j{{"simulable", d.simulable}};
        if (d.simulable) {
            j["value"] = d.value->to_string();
            j["g1"] = d.g1.to_string();
            j["g2"] = d.g2.to_string();
            j["g3"] = d.g3.to_string();
            j["g4"] = d.g4.to_string();
        } else {
            j["diagnosis"] = d.diagnosis;
            j["odd_factors"] = poly_list(d.odd_factors);
        }
        return dump(j);
    }
    if (!d.simulable) {
        std::string out = "simulable: no\ndiagnosis: " + d.diagnosis + "\n";
        if (!d.odd_factors.empty()) {
            out += "odd factors: " + join(d.odd_factors) + "\n";
        }
        return out;
    }
    return "simulable: yes\nvalue: " + d.value->to_string() + "\ng1: " + d.g1.to_string() + "\ng2: " + d.g2.to_string() +
           "\ng3: " + d.g3.to_string() + "\ng4: " + d.g4.to_string() + "\n";
}

std::string render_corollary(const CorollaryDecision &d, Format fmt) {
    std::string radicand = d.uses_t ? "(" + to_string(d.radicand) + ") * q^2 * p/(1-p)" : "(" + to_string(d.radicand) + ") * q^2";
    if (fmt == Format::kJson) {
        json j{{"status", status_name(d.status)}, {"simulable", d.simulable()}, {"reason", d.reason}};
        j["h"] = d.h ? json(d.h->to_string()) : json(nullptr);
        if (d.status == CorollaryDecision::Status::kSimulable) {
            j["radicand"] = to_string(d.radicand);
            j["q"] = d.q.to_string();
            j["uses_t"] = d.uses_t;
        }
        return dump(j);
    }
    std::string out = std::string("status: ") + status_name(d.status) + "\n";
    if (d.status == CorollaryDecision::Status::kSimulable) {
        out += "f/(1-f): " + radicand + "\nq: " + d.q.to_string() + "\n";
        out += "h: " + (d.h ? d.h->to_string() : std::string("none with coefficients in Q(i, sqrt2)")) + "\n";
    } else if (d.h) {
        out += "h: " + d.h->to_string() + "\n";
    }
    if (!d.reason.empty()) {
        out += "reason: " + d.reason + "\n";
    }
    return out;
}

std::string render_classification(const ClassReport &r, Format fmt) {
    if (fmt == Format::kJson) {
        json cc{{"verdict", to_string(r.cc.verdict)}, {"reason", r.cc.reason}};
        cc["n"] = r.cc.verdict == Verdict::kYes ? json(r.cc.witness_n) : json(nullptr);
        json zeros = json::array();
        json ones = json::array();
        for (const auto &pt : r.qc.zeros) {
            zeros.push_back(point_json(pt));
        }
        for (const auto &pt : r.qc.ones) {
            ones.push_back(point_json(pt));
        }
        json qc{{"verdict", to_string(r.qc.verdict)}, {"reason", r.qc.reason}, {"zeros", zeros}, {"ones", ones}};
        json qq{{"verdict", to_string(r.qq.kind)}, {"reason", r.qq.reason}};
        qq["witness"] = r.qq.witness ? json(r.qq.witness->to_string()) : json(nullptr);
        return dump(json{{"cc", cc}, {"qc", qc}, {"qq", qq}});
    }
    std::string out = "CC: " + to_string(r.cc.verdict);
    if (r.cc.verdict == Verdict::kYes) {
        out += " (n=" + std::to_string(r.cc.witness_n) + ")";
    }
    out += r.cc.reason.empty() ? "\n" : "  " + r.cc.reason + "\n";
    out += "QC: " + to_string(r.qc.verdict) + (r.qc.reason.empty() ? "\n" : "  " + r.qc.reason + "\n");
    for (const auto &pt : r.qc.zeros) {
        out += point_text("zero", pt);
    }
    for (const auto &pt : r.qc.ones) {
        out += point_text("one", pt);
    }
    out += "QQ: " + to_string(r.qq.kind) + (r.qq.reason.empty() ? "\n" : "  " + r.qq.reason + "\n");
    if (r.qq.witness) {
        out += "  witness: " + r.qq.witness->to_string() + "\n";
    }
    return out;
}

std::string render_symbolic(const SymbolicResult &r, Format fmt) {
    if (fmt == Format::kJson) {
        return dump(json{{"ratio", r.to_string()}, {"a0", r.a0.to_string()}, {"a1", r.a1.to_string()}});
    }
    return "ratio: " + r.to_string() + "\n";
}

std::string render_run(const NumericResult &r, std::optional<double> analytic_coins, Format fmt) {
    if (fmt == Format::kJson) {
        json j{{"p0", r.p0},
               {"trials", r.trials},
               {"seed", r.seed},
               {"successes", r.successes},
               {"aborted", r.aborted},
               {"empirical_p0_prob", r.empirical_p0_prob()},
               {"expected_coins_empirical", r.mean_coins()},
               {"expected_consts_empirical", r.mean_consts()}};
        j["expected_coins_analytic"] = analytic_coins ? json(*analytic_coins) : json(nullptr);
        return dump(j);
    }
    std::ostringstream out;
    out << "p0: " << format_double(r.p0) << "\n"
        << "trials: " << r.trials << "\n"
        << "seed: " << r.seed << "\n"
        << "successes: " << r.successes << "\n"
        << "aborted: " << r.aborted << "\n"
        << "empirical_p0_prob: " << format_double(r.empirical_p0_prob()) << "\n"
        << "expected_coins_empirical: " << format_double(r.mean_coins()) << "\n"
        << "expected_consts_empirical: " << format_double(r.mean_consts()) << "\n"
        << "expected_coins_analytic: " << (analytic_coins ? format_double(*analytic_coins) : "none") << "\n";
    return out.str();
}

std::string render_cost(const CostReport &r, Format fmt) {
    if (fmt == Format::kJson) {
        json measures = json::array();
        for (const auto &m : r.measures) {
            measures.push_back({{"instruction", m.instruction}, {"node", m.node}, {"success_prob", m.success_prob}});
        }
        json nodes = json::array();
        for (const auto &n : r.nodes) {
            nodes.push_back({{"node", n.node},
                             {"kind", n.kind},
                             {"success_prob", n.success_prob},
                             {"expected_attempts", n.expected_attempts},
                             {"expected_coins", n.expected_coins},
                             {"expected_consts", n.expected_consts}});
        }
        return dump(json{{"p0", r.p0},
                         {"measures", measures},
                         {"nodes", nodes},
                         {"expected_coins", r.expected_coins},
                         {"expected_consts", r.expected_consts},
                         {"static_coins", r.static_coins},
                         {"static_consts", r.static_consts}});
    }
    std::ostringstream out;
    out << "p0: " << format_double(r.p0) << "\n"
        << "expected_coins: " << format_double(r.expected_coins) << "\n"
        << "expected_consts: " << format_double(r.expected_consts) << "\n"
        << "static_coins: " << r.static_coins << "\n"
        << "static_consts: " << r.static_consts << "\n"
        << "measurements: " << r.measures.size() << "\n";
    for (const auto &m : r.measures) {
        out << "  instruction " << m.instruction << " (node " << m.node << "): success " << format_double(m.success_prob) << "\n";
    }
    for (const auto &n : r.nodes) {
        out << "  node " << n.node << " " << n.kind << ": attempts " << format_double(n.expected_attempts) << ", coins "
            << format_double(n.expected_coins) << ", consts " << format_double(n.expected_consts) << "\n";
    }
    return out.str();
}

std::string render_fixtures(const std::vector<FixtureRow> &rows, Format fmt) {
    if (fmt == Format::kJson) {
        json out = json::array();
        for (const auto &row : rows) {
            out.push_back({{"name", row.name}, {"claim", row.claim}, {"pass", row.pass}, {"detail", row.detail}});
        }
        return dump(out);
    }
    std::string out;
    for (const auto &row : rows) {
        out += (row.pass ? "PASS  " : "FAIL  ") + row.name + ": " + row.claim + "\n";
        out += "      " + row.detail + "\n";
    }
    return out;
}

}  // namespace qbf
