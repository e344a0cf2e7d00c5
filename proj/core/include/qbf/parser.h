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

#ifndef QBF_PARSER_H
#define QBF_PARSER_H

#include <stdexcept>
#include <string>
#include <string_view>

#include "qbf/expr.h"

namespace qbf {

/// Syntax error at a 0-based character offset.
class ParseError : public std::runtime_error {
   public:
    ParseError(const std::string &message, size_t position)
        : std::runtime_error(message + " at position " + std::to_string(position)), position_(position) {}
    size_t position() const { return position_; }

   private:
    size_t position_;
};

/// Parses the expression grammar
///
///     expr   := term (('+' | '-') term)*
///     term   := factor (('*' | '/') factor)*
///     factor := '-' factor | atom ('^' ['-'] int)?
///     atom   := int | 'p' | 'i' | 'sqrt2' | 't' | 'sqrt' '(' expr ')' | '(' expr ')'
///
/// Rational literals such as 3/4 are quotients of integer literals and fold to
/// a single literal node. Throws ParseError.
Expr parse(std::string_view text);

}  // namespace qbf

#endif  // QBF_PARSER_H
