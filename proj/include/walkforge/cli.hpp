// Copyright 2026 The WalkForge Authors
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

#include <iosfwd>
#include <string>
#include <vector>

#include "walkforge/error.hpp"

namespace walkforge::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kPrecondition = 3,
  kDegreeMismatch = 4,
  kNotCommuting = 5,
  kEmbedding = 6,
  kResource = 7,
  kConvergence = 8,
  kIo = 9,
  kInternal = 10,
};

int exit_code_for(ErrorKind kind);

/// Decimal literal or a multiple of pi: "0.25", "pi", "-0.5pi", "2 pi".
double parse_real(const std::string& text);

/// Comma-separated parse_real values.
std::vector<double> parse_real_list(const std::string& text);

/// Comma-separated integers, with "a..b" ranges.
std::vector<int> parse_int_list(const std::string& text);

/// Unitary-extraction wire cap: WALKFORGE_CAP when set, else the default.
int default_wire_cap();

/// Runs the command line; artifacts go to --out or `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace walkforge::cli
