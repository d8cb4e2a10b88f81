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

#include "walkforge/graph.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

#include "json.hpp"

#include "walkforge/error.hpp"

namespace walkforge {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

int log2_exact(std::size_t n) {
  if (!is_power_of_two(n)) {
    throw PreconditionError(std::to_string(n) + " is not a power of two");
  }
  int w = 0;
  while ((std::size_t{1} << w) < n) ++w;
  return w;
}

WalkParams::WalkParams(double gamma_, double t_) : gamma(gamma_), t(t_) {
  if (!std::isfinite(gamma) || !std::isfinite(t)) {
    throw PreconditionError("gamma and t must be finite");
  }
}

// --- Graph -------------------------------------------------------------------

Graph::Graph(std::size_t dim, std::vector<Row> rows, std::vector<bool> active,
             std::string label)
    : rows_(std::move(rows)), active_(std::move(active)), label_(std::move(label)) {
  if (!is_power_of_two(dim)) {
    throw PreconditionError("graph dimension " + std::to_string(dim) +
                            " is not a power of two");
  }
  if (rows_.size() != dim || active_.size() != dim) {
    throw DimensionError("adjacency rows or active mask do not match dim");
  }
  wires_ = log2_exact(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    auto& row = rows_[i];
    std::sort(row.begin(), row.end(),
              [](const Neighbor& a, const Neighbor& b) { return a.index < b.index; });
    for (std::size_t k = 0; k < row.size(); ++k) {
      const auto& nb = row[k];
      if (nb.index >= dim) throw DimensionError("neighbor index out of range");
      if (nb.index == i) throw PreconditionError("self loop at vertex " + std::to_string(i));
      if (nb.weight <= 0) throw PreconditionError("edge weights must be positive");
      if (k > 0 && row[k - 1].index == nb.index) {
        throw PreconditionError("duplicate edge entry");
      }
    }
    if (!active_[i] && !row.empty()) {
      throw PreconditionError("padding vertex " + std::to_string(i) + " has edges");
    }
  }
  for (std::size_t i = 0; i < dim; ++i) {
    for (const auto& nb : rows_[i]) {
      if (weight(nb.index, i) != nb.weight) {
        throw PreconditionError("adjacency is not symmetric");
      }
    }
  }
}

std::size_t Graph::active_count() const {
  return static_cast<std::size_t>(std::count(active_.begin(), active_.end(), true));
}

std::int64_t Graph::weight(std::size_t i, std::size_t j) const {
  const auto& row = rows_.at(i);
  auto it = std::lower_bound(row.begin(), row.end(), j,
                             [](const Neighbor& n, std::size_t v) { return n.index < v; });
  return (it != row.end() && it->index == j) ? it->weight : 0;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& row : rows_) twice += row.size();
  return twice / 2;
}

Eigen::MatrixXd Graph::dense() const {
  const auto n = static_cast<Eigen::Index>(dim());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t i = 0; i < dim(); ++i) {
    for (const auto& nb : rows_[i]) {
      a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(nb.index)) =
          static_cast<double>(nb.weight);
    }
  }
  return a;
}

Graph Graph::relabeled(std::string label) const {
  Graph g = *this;
  g.label_ = std::move(label);
  return g;
}

// --- GraphBuilder ------------------------------------------------------------

GraphBuilder::GraphBuilder(std::size_t dim) : dim_(dim), rows_(dim), active_(dim, false) {}

GraphBuilder& GraphBuilder::add_edge(std::size_t i, std::size_t j, std::int64_t weight) {
  if (i >= dim_ || j >= dim_) throw DimensionError("edge endpoint out of range");
  if (i == j) throw PreconditionError("self loop at vertex " + std::to_string(i));
  auto bump = [&](std::size_t a, std::size_t b) {
    auto& row = rows_[a];
    auto it = std::find_if(row.begin(), row.end(),
                           [b](const Neighbor& n) { return n.index == b; });
    if (it == row.end()) {
      row.push_back({b, weight});
    } else {
      it->weight += weight;
    }
  };
  bump(i, j);
  bump(j, i);
  active_[i] = true;
  active_[j] = true;
  return *this;
}

GraphBuilder& GraphBuilder::set_active(std::size_t v, bool on) {
  active_.at(v) = on;
  return *this;
}

GraphBuilder& GraphBuilder::set_all_active() {
  std::fill(active_.begin(), active_.end(), true);
  return *this;
}

Graph GraphBuilder::build(std::string label) && {
  return Graph(dim_, std::move(rows_), std::move(active_), std::move(label));
}

Graph InterdependentPair::combined() const {
  return graph_sum(intra, inter, intra.label());
}

// --- Families ----------------------------------------------------------------

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError(what);
}

std::size_t pow2(int e) { return std::size_t{1} << e; }

void check_dim(std::size_t dim, const Limits& limits) {
  if (dim > limits.max_graph_dim) {
    throw ResourceError("graph dimension " + std::to_string(dim) +
                        " exceeds the limit " + std::to_string(limits.max_graph_dim));
  }
}

constexpr int kMaxExponent = 30;

}  // namespace

Graph single_vertex() {
  return std::move(GraphBuilder(1).set_all_active()).build("K1");
}

Graph path2() {
  return std::move(GraphBuilder(2).add_edge(0, 1)).build("P2");
}

Graph complete_graph(int m) {
  require(m >= 1, "complete(m) requires m >= 1");
  require(m <= kMaxExponent, "complete(m): m too large");
  check_dim(pow2(m), default_limits());
  const std::size_t n = pow2(m);
  GraphBuilder b(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) b.add_edge(i, j);
  }
  return std::move(b).build("K" + std::to_string(n));
}

Graph complete_bipartite(int m1, int m2) {
  require(m1 >= 1, "bipartite(m1, m2) requires m1 >= 1");
  require(m2 >= 0, "bipartite(m1, m2) requires m2 >= 0");
  require(m1 >= m2, "bipartite(m1, m2) requires m1 >= m2 (n1 >= n2)");
  require(m1 < kMaxExponent, "bipartite(m1, m2): m1 too large");
  check_dim(pow2(m1 + 1), default_limits());
  const std::size_t n1 = pow2(m1);
  const std::size_t n2 = pow2(m2);
  GraphBuilder b(2 * n1);
  for (std::size_t i = 0; i < n1; ++i) {
    for (std::size_t j = 0; j < n2; ++j) b.add_edge(i, n1 + j);
  }
  return std::move(b).build("K" + std::to_string(n1) + "," + std::to_string(n2));
}

Graph star(int m) {
  require(m >= 1, "star(m) requires m >= 1");
  return complete_bipartite(m, 0).relabeled("S" + std::to_string(pow2(m) + 1));
}

Graph hypercube(int n) {
  require(n >= 1, "hypercube(n) requires n >= 1");
  require(n <= kMaxExponent, "hypercube(n): n too large");
  check_dim(pow2(n), default_limits());
  const std::size_t dim = pow2(n);
  GraphBuilder b(dim);
  for (std::size_t v = 0; v < dim; ++v) {
    for (int bit = 0; bit < n; ++bit) {
      const std::size_t u = v ^ pow2(bit);
      if (u > v) b.add_edge(v, u);
    }
  }
  return std::move(b).build("Q" + std::to_string(n));
}

Graph book(int m) {
  require(m >= 1, "book(m) requires m >= 1");
  return cartesian(star(m), path2()).relabeled("B" + std::to_string(pow2(m)));
}

// --- Composites --------------------------------------------------------------

Graph cartesian(const Graph& g1, const Graph& g2, const Limits& limits) {
  const std::size_t d1 = g1.dim();
  const std::size_t d2 = g2.dim();
  if (d2 != 0 && d1 > limits.max_graph_dim / d2) {
    throw ResourceError("cartesian product dimension exceeds the limit " +
                        std::to_string(limits.max_graph_dim));
  }
  check_dim(d1 * d2, limits);
  const std::size_t dim = d1 * d2;
  std::vector<Graph::Row> rows(dim);
  std::vector<bool> active(dim, false);
  for (std::size_t a = 0; a < d1; ++a) {
    for (std::size_t b = 0; b < d2; ++b) {
      if (!g1.active(a) || !g2.active(b)) continue;
      const std::size_t v = a * d2 + b;
      active[v] = true;
      auto& row = rows[v];
      for (const auto& nb : g1.neighbors(a)) row.push_back({nb.index * d2 + b, nb.weight});
      for (const auto& nb : g2.neighbors(b)) row.push_back({a * d2 + nb.index, nb.weight});
    }
  }
  return Graph(dim, std::move(rows), std::move(active),
               "(" + g1.label() + " x " + g2.label() + ")");
}

Graph disjoint_union(const Graph& g1, const Graph& g2, const Limits& limits) {
  const std::size_t block = std::max(g1.dim(), g2.dim());
  check_dim(2 * block, limits);
  const std::size_t dim = 2 * block;
  std::vector<Graph::Row> rows(dim);
  std::vector<bool> active(dim, false);
  auto place = [&](const Graph& g, std::size_t offset) {
    for (std::size_t v = 0; v < g.dim(); ++v) {
      active[offset + v] = g.active(v);
      for (const auto& nb : g.neighbors(v)) {
        rows[offset + v].push_back({offset + nb.index, nb.weight});
      }
    }
  };
  place(g1, 0);
  place(g2, block);
  return Graph(dim, std::move(rows), std::move(active),
               "(" + g1.label() + " + " + g2.label() + ")");
}

Graph graph_sum(const Graph& a, const Graph& b, std::string label) {
  if (a.dim() != b.dim()) throw DimensionError("graph_sum: dimension mismatch");
  const std::size_t dim = a.dim();
  std::vector<Graph::Row> rows(dim);
  std::vector<bool> active(dim);
  for (std::size_t v = 0; v < dim; ++v) {
    active[v] = a.active(v) || b.active(v);
    std::map<std::size_t, std::int64_t> acc;
    for (const auto& nb : a.neighbors(v)) acc[nb.index] += nb.weight;
    for (const auto& nb : b.neighbors(v)) acc[nb.index] += nb.weight;
    for (const auto& [idx, w] : acc) rows[v].push_back({idx, w});
  }
  if (label.empty()) label = "(" + a.label() + " | " + b.label() + ")";
  return Graph(dim, std::move(rows), std::move(active), std::move(label));
}

InterdependentPair identity_interlink(const Graph& g1, const Limits& limits) {
  Graph intra = disjoint_union(g1, g1, limits);
  const std::size_t n = g1.dim();
  GraphBuilder b(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (g1.active(i)) b.add_edge(i, n + i);
  }
  Graph inter = std::move(b).build("I" + std::to_string(g1.active_count()));
  return {intra.relabeled("(" + g1.label() + " =I= " + g1.label() + ")"),
          std::move(inter), n};
}

InterdependentPair complete_interlink(const Graph& g1, const Graph& g2,
                                      const Limits& limits) {
  const auto d1 = is_degree_regular(g1);
  const auto d2 = is_degree_regular(g2);
  if (!d1 || !d2 || *d1 != *d2) {
    auto show = [](const std::optional<std::int64_t>& d) {
      return d ? std::to_string(*d) : std::string("irregular");
    };
    throw DegreeMismatchError(
        "complete interlinks require deg(A1)_v = deg(A2)_v = d for every vertex; "
        "got degrees " + show(d1) + " and " + show(d2));
  }
  const std::size_t n1 = g1.active_count();
  const std::size_t n2 = g2.active_count();
  if (!is_power_of_two(n1) || !is_power_of_two(n2)) {
    throw PreconditionError("complete interlinks require power-of-two vertex counts");
  }
  if (n1 < n2) {
    throw PreconditionError("complete interlinks require n1 >= n2");
  }
  Graph intra = disjoint_union(g1, g2, limits);
  const std::size_t block = intra.dim() / 2;
  GraphBuilder b(intra.dim());
  for (std::size_t i = 0; i < g1.dim(); ++i) {
    if (!g1.active(i)) continue;
    for (std::size_t j = 0; j < g2.dim(); ++j) {
      if (g2.active(j)) b.add_edge(i, block + j);
    }
  }
  Graph inter = std::move(b).build("J" + std::to_string(n1) + "," + std::to_string(n2));
  if (!commutes(intra, inter)) {
    throw InternalError("complete interlink does not commute with the intra graph");
  }
  return {intra.relabeled("(" + g1.label() + " =J= " + g2.label() + ")"),
          std::move(inter), block};
}

bool commutes(const Graph& a, const Graph& b) {
  if (a.dim() != b.dim()) throw DimensionError("commutes: dimension mismatch");
  const std::size_t dim = a.dim();
  std::vector<std::int64_t> ab(dim, 0);
  std::vector<std::int64_t> ba(dim, 0);
  std::vector<std::size_t> touched;
  for (std::size_t i = 0; i < dim; ++i) {
    touched.clear();
    for (const auto& x : a.neighbors(i)) {
      for (const auto& y : b.neighbors(x.index)) {
        ab[y.index] += x.weight * y.weight;
        touched.push_back(y.index);
      }
    }
    for (const auto& x : b.neighbors(i)) {
      for (const auto& y : a.neighbors(x.index)) {
        ba[y.index] += x.weight * y.weight;
        touched.push_back(y.index);
      }
    }
    bool equal = true;
    for (auto k : touched) {
      if (ab[k] != ba[k]) equal = false;
    }
    for (auto k : touched) ab[k] = ba[k] = 0;
    if (!equal) return false;
  }
  return true;
}

std::int64_t degree(const Graph& g, std::size_t v) {
  if (v >= g.dim()) throw DimensionError("degree: vertex out of range");
  if (!g.active(v)) throw PreconditionError("degree: vertex " + std::to_string(v) + " is padding");
  std::int64_t d = 0;
  for (const auto& nb : g.neighbors(v)) d += nb.weight;
  return d;
}

std::optional<std::int64_t> is_degree_regular(const Graph& g) {
  std::optional<std::int64_t> common;
  for (std::size_t v = 0; v < g.dim(); ++v) {
    if (!g.active(v)) continue;
    const auto d = degree(g, v);
    if (common && *common != d) return std::nullopt;
    common = d;
  }
  return common;
}

std::size_t component_count(const Graph& g) {
  std::vector<bool> seen(g.dim(), false);
  std::size_t count = 0;
  std::vector<std::size_t> stack;
  for (std::size_t s = 0; s < g.dim(); ++s) {
    if (!g.active(s) || seen[s]) continue;
    ++count;
    seen[s] = true;
    stack.push_back(s);
    while (!stack.empty()) {
      const auto v = stack.back();
      stack.pop_back();
      for (const auto& nb : g.neighbors(v)) {
        if (!seen[nb.index]) {
          seen[nb.index] = true;
          stack.push_back(nb.index);
        }
      }
    }
  }
  return count;
}

// --- Export ------------------------------------------------------------------

namespace {

void dot_vertices(std::ostream& os, const Graph& g) {
  for (std::size_t v = 0; v < g.dim(); ++v) {
    if (g.active(v)) os << "  " << v << ";\n";
  }
}

void dot_edges(std::ostream& os, const Graph& g, const char* attrs) {
  for (std::size_t v = 0; v < g.dim(); ++v) {
    for (const auto& nb : g.neighbors(v)) {
      if (nb.index <= v) continue;
      os << "  " << v << " -- " << nb.index;
      if (attrs[0] != '\0' || nb.weight != 1) {
        os << " [";
        os << attrs;
        if (nb.weight != 1) os << (attrs[0] ? ", " : "") << "label=\"" << nb.weight << "\"";
        os << "]";
      }
      os << ";\n";
    }
  }
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_dot(const Graph& g) {
  std::ostringstream os;
  os << "graph " << quoted(g.label()) << " {\n";
  dot_vertices(os, g);
  dot_edges(os, g, "");
  os << "}\n";
  return os.str();
}

std::string to_dot(const InterdependentPair& pair) {
  std::ostringstream os;
  os << "graph " << quoted(pair.intra.label()) << " {\n";
  const Graph all = pair.combined();
  dot_vertices(os, all);
  dot_edges(os, pair.intra, "style=solid, color=red");
  dot_edges(os, pair.inter, "style=dashed, color=blue");
  os << "}\n";
  return os.str();
}

std::string to_json(const Graph& g) {
  nlohmann::ordered_json j;
  j["dim"] = g.dim();
  j["active"] = g.active_mask();
  auto edges = nlohmann::ordered_json::array();
  for (std::size_t v = 0; v < g.dim(); ++v) {
    for (const auto& nb : g.neighbors(v)) {
      if (nb.index <= v) continue;
      if (nb.weight == 1) {
        edges.push_back({v, nb.index});
      } else {
        edges.push_back({v, nb.index, nb.weight});
      }
    }
  }
  j["edges"] = std::move(edges);
  j["label"] = g.label();
  return j.dump();
}

}  // namespace walkforge
