// Copyright 2026 The bosdsl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace bosdsl::cli {

/// Process exit codes. Every failure maps to exactly one of these.
enum ExitCode : int {
  kOk = 0,
  kParseError = 1,     ///< unreadable file, malformed document, bad flags
  kSemanticError = 2,  ///< static-semantics violation
  kResourceError = 3,  ///< enumeration or size cap exceeded
  kNumericError = 4,   ///< non-finite objective or gradient
};

/// Seed used by `sample`, `optimize` and `optimize-structure` when --seed
/// is absent.
inline constexpr std::uint64_t kDefaultSeed = 42;

/// Runs one command line (args excludes the program name). Reports go to
/// `out`, diagnostics and errors to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bosdsl::cli
