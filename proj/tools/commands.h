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

#ifndef QBF_TOOLS_COMMANDS_H
#define QBF_TOOLS_COMMANDS_H

#include <iosfwd>
#include <string>
#include <vector>

namespace qbf::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kError = 1;
/// The command ran and the answer is negative (not simulable, a failed fixture).
inline constexpr int kNegative = 2;

/// Runs one invocation; args excludes the program name. `in` supplies programs
/// when no file is given.
int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err);

}  // namespace qbf::cli

#endif  // QBF_TOOLS_COMMANDS_H
