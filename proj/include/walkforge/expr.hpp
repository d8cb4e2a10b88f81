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

// Walk expressions: graph-family leaves and composition operators.
//
// Text grammar (whitespace-insensitive, decimal integers):
//
//   expr := "path2"
//         | "complete(" int ")"        | "bipartite(" int "," int ")"
//         | "star(" int ")"            | "hypercube(" int ")"
//         | "book(" int ")"            | "cartesian(" expr "," expr ")"
//         | "interdep_id(" expr ")"    | "interdep_complete(" expr "," expr ")"
//         | "commuting_sum(" expr "," expr ")"

#pragma once

#include <array>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace walkforge {

class WalkExpr {
 public:
  enum class Kind {
    Path2,
    Complete,
    Bipartite,
    Star,
    Hypercube,
    Book,
    Cartesian,
    InterdepIdentity,
    InterdepComplete,
    CommutingSum,
  };

  // Leaf constructors check their parameter ranges.
  static WalkExpr path2();
  static WalkExpr complete(int m);
  static WalkExpr bipartite(int m1, int m2);
  static WalkExpr star(int m);
  static WalkExpr hypercube(int n);
  static WalkExpr book(int m);
  static WalkExpr cartesian(WalkExpr a, WalkExpr b);
  static WalkExpr interdep_identity(WalkExpr a);
  static WalkExpr interdep_complete(WalkExpr a, WalkExpr b);
  static WalkExpr commuting_sum(WalkExpr a, WalkExpr b);

  Kind kind() const { return node_->kind; }
  int param(std::size_t i) const { return node_->params.at(i); }
  const std::vector<WalkExpr>& children() const { return node_->children; }
  const WalkExpr& child(std::size_t i) const { return node_->children.at(i); }

  friend bool operator==(const WalkExpr& a, const WalkExpr& b);

 private:
  struct Node {
    Kind kind;
    std::array<int, 2> params{};
    std::vector<WalkExpr> children;
  };

  explicit WalkExpr(Node node);

  std::shared_ptr<const Node> node_;
};

/// Largest exponent accepted for any leaf parameter.
inline constexpr int kMaxLeafExponent = 24;

/// Canonical text, e.g. "cartesian(star(3), path2)".
std::string to_string(const WalkExpr& e);

/// Throws ParseError (byte offset, expected set) or PreconditionError.
WalkExpr parse_expr(std::string_view text);

}  // namespace walkforge
