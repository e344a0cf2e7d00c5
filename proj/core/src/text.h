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

#ifndef QBF_SRC_TEXT_H
#define QBF_SRC_TEXT_H

#include <string>
#include <string_view>

namespace qbf::text {

/// True when s has a binary + or - outside parentheses.
inline bool is_sum(std::string_view s) {
    int depth = 0;
    for (size_t k = 0; k < s.size(); k++) {
        char c = s[k];
        if (c == '(') {
            depth++;
        } else if (c == ')') {
            depth--;
        } else if (depth == 0 && k > 0 && (c == '+' || c == '-') && s[k - 1] == ' ') {
            return true;
        }
    }
    return false;
}

/// True when s is one token or a parenthesised group, safe as a divisor.
inline bool is_atom(std::string_view s) {
    if (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
        int depth = 0;
        for (size_t k = 0; k + 1 < s.size(); k++) {
            depth += s[k] == '(' ? 1 : (s[k] == ')' ? -1 : 0);
            if (depth == 0) {
                return false;
            }
        }
        return true;
    }
    return s.find_first_of(" */-") == std::string_view::npos;
}

inline std::string wrap_if(bool cond, const std::string &s) {
    return cond ? "(" + s + ")" : s;
}

}  // namespace qbf::text

#endif  // QBF_SRC_TEXT_H
