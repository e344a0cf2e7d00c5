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

#ifndef QBF_PROGRAM_IO_H
#define QBF_PROGRAM_IO_H

#include <string>
#include <string_view>

#include "qbf/program.h"

namespace qbf {

/// Format tag written to and required from every serialized program.
inline constexpr const char *kProgramFormat = "qbf-program/1";

/// JSON text with sorted keys and two-space indentation. Constants are stored
/// as the four rational coordinates [a, b, c, d] of a + b sqrt2 + c i + d i sqrt2,
/// and the macro nodes as a tree under "provenance".
std::string serialize(const CircuitProgram &prog);

/// Inverse of serialize; the result is validated. Throws std::invalid_argument
/// on malformed input.
CircuitProgram deserialize(std::string_view text);

}  // namespace qbf

#endif  // QBF_PROGRAM_IO_H
