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

#include "qbf/parser.h"

#include <cctype>
#include <climits>

namespace qbf {

namespace {

enum class Tok { kInt, kIdent, kPlus, kMinus, kStar, kSlash, kCaret, kLParen, kRParen, kEnd };

struct Token {
    Tok kind;
    std::string text;
    size_t pos;
};

std::vector<Token> lex(std::string_view s) {
    std::vector<Token> out;
    size_t k = 0;
    while (k < s.size()) {
        char c = s[k];
        if (std::isspace(static_cast<unsigned char>(c))) {
            k++;
            continue;
        }
        size_t start = k;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) {
                k++;
            }
            out.push_back({Tok::kInt, std::string(s.substr(start, k - start)), start});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            while (k < s.size() && std::isalnum(static_cast<unsigned char>(s[k]))) {
                k++;
            }
            out.push_back({Tok::kIdent, std::string(s.substr(start, k - start)), start});
            continue;
        }
        Tok kind;
        switch (c) {
            case '+':
                kind = Tok::kPlus;
                break;
            case '-':
                kind = Tok::kMinus;
                break;
            case '*':
                kind = Tok::kStar;
                break;
            case '/':
                kind = Tok::kSlash;
                break;
            case '^':
                kind = Tok::kCaret;
                break;
            case '(':
                kind = Tok::kLParen;
                break;
            case ')':
                kind = Tok::kRParen;
                break;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", start);
        }
        out.push_back({kind, std::string(1, c), start});
        k++;
    }
    out.push_back({Tok::kEnd, "", s.size()});
    return out;
}

class Parser {
   public:
    explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

    Expr parse_all() {
        Expr e = expr();
        if (peek().kind != Tok::kEnd) {
            throw ParseError("unexpected '" + peek().text + "'", peek().pos);
        }
        return e;
    }

   private:
    const Token &peek() const { return toks_[at_]; }
    const Token &next() { return toks_[at_++]; }

    void expect(Tok kind, const char *what) {
        if (peek().kind != kind) {
            throw ParseError(std::string("expected ") + what, peek().pos);
        }
        at_++;
    }

    Expr expr() {
        Expr lhs = term();
        while (peek().kind == Tok::kPlus || peek().kind == Tok::kMinus) {
            bool plus = next().kind == Tok::kPlus;
            Expr rhs = term();
            lhs = plus ? Expr::add(std::move(lhs), std::move(rhs)) : Expr::sub(std::move(lhs), std::move(rhs));
        }
        return lhs;
    }

    Expr term() {
        Expr lhs = factor();
        while (peek().kind == Tok::kStar || peek().kind == Tok::kSlash) {
            bool star = next().kind == Tok::kStar;
            Expr rhs = factor();
            lhs = star ? Expr::mul(std::move(lhs), std::move(rhs)) : Expr::div(std::move(lhs), std::move(rhs));
        }
        return lhs;
    }

    Expr factor() {
        if (peek().kind == Tok::kMinus) {
            next();
            return Expr::neg(factor());
        }
        Expr base = atom();
        if (peek().kind != Tok::kCaret) {
            return base;
        }
        next();
        bool negative = false;
        if (peek().kind == Tok::kMinus) {
            next();
            negative = true;
        }
        const Token &tok = peek();
        if (tok.kind != Tok::kInt) {
            throw ParseError("expected integer exponent", tok.pos);
        }
        next();
        mpz_class v(tok.text);
        if (v > INT_MAX) {
            throw ParseError("exponent too large", tok.pos);
        }
        int e = static_cast<int>(v.get_si());
        return Expr::pow(std::move(base), negative ? -e : e);
    }

    Expr atom() {
        const Token &tok = peek();
        switch (tok.kind) {
            case Tok::kInt:
                next();
                return Expr::rational(Rational(mpz_class(tok.text)));
            case Tok::kLParen: {
                next();
                Expr e = expr();
                expect(Tok::kRParen, "')'");
                return e;
            }
            case Tok::kIdent: {
                next();
                if (tok.text == "p") {
                    return Expr::p();
                }
                if (tok.text == "i") {
                    return Expr::i();
                }
                if (tok.text == "t") {
                    return Expr::t();
                }
                if (tok.text == "sqrt2") {
                    return Expr::sqrt2();
                }
                if (tok.text == "sqrt") {
                    expect(Tok::kLParen, "'(' after sqrt");
                    Expr e = expr();
                    expect(Tok::kRParen, "')'");
                    return Expr::sqrt(std::move(e));
                }
                throw ParseError("unknown identifier '" + tok.text + "'", tok.pos);
            }
            case Tok::kEnd:
                throw ParseError("unexpected end of input", tok.pos);
            default:
                throw ParseError("unexpected '" + tok.text + "'", tok.pos);
        }
    }

    std::vector<Token> toks_;
    size_t at_ = 0;
};

}  // namespace

Expr parse(std::string_view text) {
    return Parser(lex(text)).parse_all();
}

}  // namespace qbf
