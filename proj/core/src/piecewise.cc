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

#include "qbf/piecewise.h"

#include <sstream>
#include <stdexcept>

#include "qbf/lower.h"
#include "qbf/parser.h"
#include "qbf/roots.h"

namespace qbf {

PiecewiseFn::PiecewiseFn(std::vector<Piece> pieces) : pieces_(std::move(pieces)) {
    if (pieces_.empty()) {
        throw std::invalid_argument("piecewise function needs at least one piece");
    }
    if (sgn(pieces_.front().lo) != 0) {
        throw std::invalid_argument("pieces must start at 0");
    }
    if (pieces_.back().hi != 1) {
        throw std::invalid_argument("pieces must end at 1");
    }
    for (size_t k = 0; k < pieces_.size(); k++) {
        const Piece &pc = pieces_[k];
        if (!(pc.lo < pc.hi)) {
            throw std::invalid_argument("empty piece [" + pc.lo.get_str() + ", " + pc.hi.get_str() + ")");
        }
        if (k + 1 < pieces_.size() && pc.hi != pieces_[k + 1].lo) {
            throw std::invalid_argument("pieces do not cover [0, 1]: gap or overlap at " + pc.hi.get_str());
        }
        if (!pc.fn.is_rational()) {
            throw std::invalid_argument("piece " + pc.fn.to_string() + " is not a real rational function");
        }
        if (!real_roots(pc.fn.den(), pc.lo, pc.hi).empty()) {
            throw std::invalid_argument("piece " + pc.fn.to_string() + " has a pole on [" + pc.lo.get_str() + ", " +
                                        pc.hi.get_str() + "]");
        }
    }
}

PiecewiseFn PiecewiseFn::single(RatFn f) {
    return PiecewiseFn({Piece{0, 1, std::move(f)}});
}

size_t PiecewiseFn::piece_at(const Rational &x) const {
    for (size_t k = 0; k + 1 < pieces_.size(); k++) {
        if (x < pieces_[k].hi) {
            return k;
        }
    }
    return pieces_.size() - 1;
}

Rational PiecewiseFn::eval(const Rational &x) const {
    return pieces_[piece_at(x)].fn.eval(Scalar(x)).a();
}

double PiecewiseFn::eval(double x) const {
    size_t k = pieces_.size() - 1;
    for (size_t j = 0; j + 1 < pieces_.size(); j++) {
        if (x < to_double(pieces_[j].hi)) {
            k = j;
            break;
        }
    }
    return pieces_[k].fn.eval(std::complex<double>(x, 0.0)).real();
}

bool PiecewiseFn::is_constant() const {
    for (const auto &pc : pieces_) {
        if (!pc.fn.is_constant() || !(pc.fn == pieces_[0].fn)) {
            return false;
        }
    }
    return true;
}

std::string PiecewiseFn::to_string() const {
    if (is_single()) {
        return pieces_[0].fn.to_string();
    }
    std::ostringstream out;
    for (size_t k = 0; k < pieces_.size(); k++) {
        const Piece &pc = pieces_[k];
        out << (k ? "; " : "") << "[" << pc.lo.get_str() << "," << pc.hi.get_str() << (k + 1 == pieces_.size() ? "]" : ")")
            << " " << pc.fn.to_string();
    }
    return out.str();
}

PiecewiseFn parse_piecewise(std::string_view text) {
    std::vector<Piece> pieces;
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    bool closed_seen = false;
    while (std::getline(in, line)) {
        line_no++;
        auto where = [&](const std::string &msg) { return std::invalid_argument("line " + std::to_string(line_no) + ": " + msg); };
        if (size_t hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) {
            continue;
        }
        if (closed_seen) {
            throw where("piece after the closed final piece");
        }
        if (line[first] != '[') {
            throw where("expected '['");
        }
        size_t comma = line.find(',', first);
        size_t close = line.find_first_of(")]", first);
        if (comma == std::string::npos || close == std::string::npos || close < comma) {
            throw where("expected '[a,b)' or '[a,b]'");
        }
        auto trim = [](std::string s) {
            size_t a = s.find_first_not_of(" \t");
            size_t b = s.find_last_not_of(" \t");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        Piece pc;
        try {
            pc.lo = parse_rational(trim(line.substr(first + 1, comma - first - 1)));
            pc.hi = parse_rational(trim(line.substr(comma + 1, close - comma - 1)));
        } catch (const std::invalid_argument &e) {
            throw where(e.what());
        }
        closed_seen = line[close] == ']';
        std::string body = line.substr(close + 1);
        FieldElem v;
        try {
            v = lower(parse(body));
        } catch (const ParseError &e) {
            throw where(e.what());
        } catch (const LowerError &e) {
            throw where(e.what());
        }
        if (!v.is_rational_function()) {
            throw where("piece is not a rational function of p");
        }
        pc.fn = v.r();
        pieces.push_back(std::move(pc));
    }
    if (pieces.empty()) {
        throw std::invalid_argument("no pieces");
    }
    if (!closed_seen) {
        throw std::invalid_argument("last piece must be closed: [a,1]");
    }
    return PiecewiseFn(std::move(pieces));
}

}  // namespace qbf
