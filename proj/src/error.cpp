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

#include "walkforge/error.hpp"

#include <sstream>

namespace walkforge {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::DegreeMismatch: return "degree-mismatch";
    case ErrorKind::NotCommuting: return "not-commuting";
    case ErrorKind::Embedding: return "embedding";
    case ErrorKind::Dimension: return "dimension";
    case ErrorKind::Resource: return "resource";
    case ErrorKind::Convergence: return "convergence";
    case ErrorKind::Io: return "io";
    case ErrorKind::Internal: return "internal";
  }
  return "unknown";
}

namespace {

std::string describe(std::size_t offset, const std::set<std::string>& expected,
                     const std::string& found) {
  std::ostringstream os;
  os << "syntax error at byte " << offset << ": expected ";
  bool first = true;
  for (const auto& e : expected) {
    if (!first) os << " | ";
    os << e;
    first = false;
  }
  os << ", found " << (found.empty() ? "end of input" : "'" + found + "'");
  return os.str();
}

}  // namespace

ParseError::ParseError(std::size_t offset, std::set<std::string> expected,
                       const std::string& found)
    : Error(ErrorKind::Parse, describe(offset, expected, found)),
      offset_(offset),
      expected_(std::move(expected)) {}

}  // namespace walkforge
