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

// Graph families and composites on a padded power-of-two vertex space.
//
// Every graph lives in dimension 2^w so that it maps onto w wires. Families
// whose natural vertex count is not a power of two (K_{8,4}, the book graphs)
// are embedded with isolated padding vertices, tracked by the active mask.
// The walk generated by such a graph acts as the identity on padding.

#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "walkforge/config.hpp"

namespace walkforge {

struct Neighbor {
  std::size_t index;
  std::int64_t weight;

  friend bool operator==(const Neighbor&, const Neighbor&) = default;
};

/// Undirected graph with integer edge weights (0/1 for every family here),
/// stored as sorted adjacency rows.
class Graph {
 public:
  using Row = std::vector<Neighbor>;

  /// Validates symmetry, zero diagonal, isolated padding and dim = 2^w.
  Graph(std::size_t dim, std::vector<Row> rows, std::vector<bool> active,
        std::string label);

  std::size_t dim() const { return rows_.size(); }
  int wires() const { return wires_; }
  const std::string& label() const { return label_; }

  bool active(std::size_t v) const { return active_.at(v); }
  const std::vector<bool>& active_mask() const { return active_; }
  std::size_t active_count() const;
  bool fully_active() const { return active_count() == dim(); }

  const Row& neighbors(std::size_t v) const { return rows_.at(v); }
  std::int64_t weight(std::size_t i, std::size_t j) const;

  /// Number of undirected edges (weights ignored).
  std::size_t edge_count() const;

  Eigen::MatrixXd dense() const;

  Graph relabeled(std::string label) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.rows_ == b.rows_ && a.active_ == b.active_;
  }

 private:
  std::vector<Row> rows_;
  std::vector<bool> active_;
  std::string label_;
  int wires_ = 0;
};

/// Accumulates edges and emits a validated Graph.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t dim);

  GraphBuilder& add_edge(std::size_t i, std::size_t j, std::int64_t weight = 1);
  GraphBuilder& set_active(std::size_t v, bool on = true);
  GraphBuilder& set_all_active();

  Graph build(std::string label) &&;

 private:
  std::size_t dim_;
  std::vector<Graph::Row> rows_;
  std::vector<bool> active_;
};

/// A = diag(A1, A2) together with the interlink graph B.
struct InterdependentPair {
  Graph intra;
  Graph inter;
  std::size_t split;  // index where the second block begins

  Graph combined() const;
};

/// Hopping rate and evolution time for H = gamma * A.
struct WalkParams {
  double gamma = 1.0;
  double t = 1.0;

  WalkParams() = default;
  WalkParams(double gamma_, double t_);
};

bool is_power_of_two(std::size_t n);
int log2_exact(std::size_t n);

Graph single_vertex();
Graph path2();
Graph complete_graph(int m);
Graph complete_bipartite(int m1, int m2);
Graph star(int m);
Graph hypercube(int n);
Graph book(int m);

/// Kronecker sum A1 (x) I + I (x) A2 restricted to the active product vertices.
Graph cartesian(const Graph& g1, const Graph& g2,
                const Limits& limits = default_limits());

/// Two blocks of size max(dim1, dim2) selected by a new leading wire.
Graph disjoint_union(const Graph& g1, const Graph& g2,
                     const Limits& limits = default_limits());

/// Adds adjacency weights; active masks are OR-ed.
Graph graph_sum(const Graph& a, const Graph& b, std::string label = {});

InterdependentPair identity_interlink(const Graph& g1,
                                      const Limits& limits = default_limits());
InterdependentPair complete_interlink(const Graph& g1, const Graph& g2,
                                      const Limits& limits = default_limits());

/// Exact integer test of A B == B A.
bool commutes(const Graph& a, const Graph& b);

std::int64_t degree(const Graph& g, std::size_t v);
std::optional<std::int64_t> is_degree_regular(const Graph& g);

/// Connected components among active vertices.
std::size_t component_count(const Graph& g);

std::string to_dot(const Graph& g);
std::string to_dot(const InterdependentPair& pair);
std::string to_json(const Graph& g);

}  // namespace walkforge
