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

#include "walkforge/expr.hpp"

#include <cctype>
#include <map>
#include <set>

#include "walkforge/error.hpp"

namespace walkforge {

WalkExpr::WalkExpr(Node node) : node_(std::make_shared<const Node>(std::move(node))) {}

namespace {

void check_range(const char* name, int value, int lo) {
  if (value < lo || value > kMaxLeafExponent) {
    throw PreconditionError(std::string(name) + " must lie in [" + std::to_string(lo) +
                            ", " + std::to_string(kMaxLeafExponent) + "], got " +
                            std::to_string(value));
  }
}

}  // namespace

WalkExpr WalkExpr::path2() { return WalkExpr(Node{Kind::Path2, {}, {}}); }

WalkExpr WalkExpr::complete(int m) {
  check_range("complete(m): m", m, 1);
  return WalkExpr(Node{Kind::Complete, {m, 0}, {}});
}

WalkExpr WalkExpr::bipartite(int m1, int m2) {
  check_range("bipartite(m1, m2): m1", m1, 1);
  check_range("bipartite(m1, m2): m2", m2, 0);
  if (m1 < m2) {
    throw PreconditionError("bipartite(m1, m2) requires m1 >= m2 (n1 >= n2), got m1=" +
                            std::to_string(m1) + ", m2=" + std::to_string(m2));
  }
  return WalkExpr(Node{Kind::Bipartite, {m1, m2}, {}});
}

WalkExpr WalkExpr::star(int m) {
  check_range("star(m): m", m, 1);
  return WalkExpr(Node{Kind::Star, {m, 0}, {}});
}

WalkExpr WalkExpr::hypercube(int n) {
  check_range("hypercube(n): n", n, 1);
  return WalkExpr(Node{Kind::Hypercube, {n, 0}, {}});
}

WalkExpr WalkExpr::book(int m) {
  check_range("book(m): m", m, 1);
  return WalkExpr(Node{Kind::Book, {m, 0}, {}});
}

WalkExpr WalkExpr::cartesian(WalkExpr a, WalkExpr b) {
  return WalkExpr(Node{Kind::Cartesian, {}, {std::move(a), std::move(b)}});
}

WalkExpr WalkExpr::interdep_identity(WalkExpr a) {
  return WalkExpr(Node{Kind::InterdepIdentity, {}, {std::move(a)}});
}

WalkExpr WalkExpr::interdep_complete(WalkExpr a, WalkExpr b) {
  return WalkExpr(Node{Kind::InterdepComplete, {}, {std::move(a), std::move(b)}});
}

WalkExpr WalkExpr::commuting_sum(WalkExpr a, WalkExpr b) {
  return WalkExpr(Node{Kind::CommutingSum, {}, {std::move(a), std::move(b)}});
}

bool operator==(const WalkExpr& a, const WalkExpr& b) {
  if (a.node_ == b.node_) return true;
  return a.node_->kind == b.node_->kind && a.node_->params == b.node_->params &&
         a.node_->children == b.node_->children;
}

std::string to_string(const WalkExpr& e) {
  using K = WalkExpr::Kind;
  auto one = [&](const char* name) { return std::string(name) + "(" + std::to_string(e.param(0)) + ")"; };
  auto unary = [&](const char* name) { return std::string(name) + "(" + to_string(e.child(0)) + ")"; };
  auto binary = [&](const char* name) {
    return std::string(name) + "(" + to_string(e.child(0)) + ", " + to_string(e.child(1)) + ")";
  };
  switch (e.kind()) {
    case K::Path2: return "path2";
    case K::Complete: return one("complete");
    case K::Bipartite:
      return "bipartite(" + std::to_string(e.param(0)) + ", " + std::to_string(e.param(1)) + ")";
    case K::Star: return one("star");
    case K::Hypercube: return one("hypercube");
    case K::Book: return one("book");
    case K::Cartesian: return binary("cartesian");
    case K::InterdepIdentity: return unary("interdep_id");
    case K::InterdepComplete: return binary("interdep_complete");
    case K::CommutingSum: return binary("commuting_sum");
  }
  return "?";
}

// --- Parser ------------------------------------------------------------------

namespace {

const std::set<std::string>& expr_starts() {
  static const std::set<std::string> s = {
      "path2", "complete(", "bipartite(", "star(", "hypercube(", "book(",
      "cartesian(", "interdep_id(", "interdep_complete(", "commuting_sum("};
  return s;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  WalkExpr parse() {
    WalkExpr e = expr();
    skip_ws();
    if (pos_ != s_.size()) fail({"end of input"});
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  std::string peek_token() {
    skip_ws();
    if (pos_ >= s_.size()) return {};
    std::size_t end = pos_;
    if (std::isalnum(static_cast<unsigned char>(s_[end])) || s_[end] == '_') {
      while (end < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[end])) || s_[end] == '_')) {
        ++end;
      }
    } else {
      ++end;
    }
    return std::string(s_.substr(pos_, end - pos_));
  }

  [[noreturn]] void fail(std::set<std::string> expected) {
    skip_ws();
    throw ParseError(pos_, std::move(expected), peek_token());
  }

  void expect(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return;
    }
    fail({std::string(1, c)});
  }

  int integer() {
    skip_ws();
    const std::size_t start = pos_;
    long long value = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      value = value * 10 + (s_[pos_] - '0');
      if (value > 1'000'000) {
        throw PreconditionError("integer at byte " + std::to_string(start) + " is too large");
      }
      ++pos_;
    }
    if (pos_ == start) fail({"integer"});
    return static_cast<int>(value);
  }

  WalkExpr expr() {
    using K = WalkExpr::Kind;
    static const std::map<std::string, K> keywords = {
        {"path2", K::Path2},
        {"complete", K::Complete},
        {"bipartite", K::Bipartite},
        {"star", K::Star},
        {"hypercube", K::Hypercube},
        {"book", K::Book},
        {"cartesian", K::Cartesian},
        {"interdep_id", K::InterdepIdentity},
        {"interdep_complete", K::InterdepComplete},
        {"commuting_sum", K::CommutingSum},
    };
    skip_ws();
    const std::size_t start = pos_;
    const std::string word = peek_token();
    const auto it = keywords.find(word);
    if (it == keywords.end()) fail(expr_starts());
    pos_ += word.size();
    const K kind = it->second;
    if (kind == K::Path2) return WalkExpr::path2();
    if (++depth_ > kMaxDepth) {
      throw PreconditionError("at byte " + std::to_string(start) + ": nesting deeper than " +
                              std::to_string(kMaxDepth));
    }

    expect('(');
    WalkExpr result = WalkExpr::path2();
    try {
      switch (kind) {
        case K::Complete: result = WalkExpr::complete(integer()); break;
        case K::Star: result = WalkExpr::star(integer()); break;
        case K::Hypercube: result = WalkExpr::hypercube(integer()); break;
        case K::Book: result = WalkExpr::book(integer()); break;
        case K::Bipartite: {
          const int m1 = integer();
          expect(',');
          const int m2 = integer();
          result = WalkExpr::bipartite(m1, m2);
          break;
        }
        case K::InterdepIdentity: result = WalkExpr::interdep_identity(expr()); break;
        case K::Cartesian:
        case K::InterdepComplete:
        case K::CommutingSum: {
          WalkExpr a = expr();
          expect(',');
          WalkExpr b = expr();
          result = kind == K::Cartesian          ? WalkExpr::cartesian(a, b)
                   : kind == K::InterdepComplete ? WalkExpr::interdep_complete(a, b)
                                                 : WalkExpr::commuting_sum(a, b);
          break;
        }
        case K::Path2: break;
      }
    } catch (const ParseError&) {
      throw;
    } catch (const PreconditionError& e) {
      if (std::string_view(e.what()).starts_with("at byte")) throw;
      throw PreconditionError("at byte " + std::to_string(start) + ": " + e.what());
    }
    expect(')');
    --depth_;
    return result;
  }

  static constexpr int kMaxDepth = 256;

  std::string_view s_;
  std::size_t pos_ = 0;
  int depth_ = 0;
};

}  // namespace

WalkExpr parse_expr(std::string_view text) { return Parser(text).parse(); }

}  // namespace walkforge
