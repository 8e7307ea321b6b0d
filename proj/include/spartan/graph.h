// Copyright 2026 The Spartan Authors
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

#ifndef SPARTAN_GRAPH_H_
#define SPARTAN_GRAPH_H_

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

namespace spartan {

// Exhaustive analyses (cover enumeration, goodness, game solving) index
// vertices with 64-bit masks.
inline constexpr int kMaxAnalysisVertices = 64;

using Mask = std::uint64_t;

inline Mask bit(int v) { return Mask{1} << v; }

// Unordered pair of vertex indices, stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool has(int x) const { return u == x || v == x; }
  int other(int x) const { return x == u ? v : u; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Sorted, duplicate-free list of vertex indices.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<int> members);
  explicit VertexSet(std::vector<int> members);

  static VertexSet from_mask(Mask mask);
  static VertexSet range(int n);

  const std::vector<int>& members() const { return members_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }
  bool contains(int v) const;
  // Requires every member < 64.
  Mask mask() const;

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  int operator[](int i) const { return members_[i]; }

  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<int> members_;
};

VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);

// Immutable simple undirected graph with labeled vertices.
class Graph {
 public:
  Graph() = default;

  // Validates simplicity: throws ValidationError on self-loops, duplicate
  // edges, duplicate labels or out-of-range endpoints.
  Graph(std::vector<std::string> labels, const std::vector<Edge>& edges);

  int vertex_count() const { return static_cast<int>(labels_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int v) const { return labels_[v]; }
  std::optional<int> index_of(std::string_view label) const;
  // Throws ValidationError naming the label when it is unknown.
  int require_index(std::string_view label) const;

  std::span<const int> neighbors(int v) const { return adjacency_[v]; }
  int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  bool adjacent(int u, int v) const;
  // Requires vertex_count() <= 64.
  Mask neighbor_mask(int v) const { return neighbor_masks_[v]; }
  Mask all_mask() const;

  std::vector<int> isolated_vertices() const;
  std::string label_list(const VertexSet& s) const;

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> index_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<Edge> edges_;
  std::vector<Mask> neighbor_masks_;
};

// Edge-list text: whitespace separated label pairs, '#' comments. Vertices
// are numbered in order of first appearance.
Graph parse_edge_list(std::string_view text);
// {"vertices": [...], "edges": [[u, v], ...]}. Isolated vertices allowed.
Graph parse_json_graph(std::string_view text);
// Dispatches on the first non-blank character ('{' means JSON).
Graph parse_graph(std::string_view text);
Graph load_graph_file(const std::string& path);

// Canonical edge list, one "u v" line per edge in index order.
std::string to_edge_list(const Graph& g);

std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);

// Graph on `vertices` (in their index order) keeping labels.
Graph induced_subgraph(const Graph& g, const VertexSet& vertices);

// Requires a connected graph.
VertexSet cut_vertices(const Graph& g);

struct Bipartition {
  VertexSet side_a;  // contains vertex 0
  VertexSet side_b;
};

struct OddCycle {
  std::vector<int> cycle;  // consecutive vertices adjacent, closing edge implied
};

// Requires a connected graph.
std::variant<Bipartition, OddCycle> bipartition(const Graph& g);

// Two-colouring of every component, or an odd cycle from the first
// non-bipartite component.
std::variant<Bipartition, OddCycle> bipartition_any(const Graph& g);

bool is_vertex_cover(const Graph& g, Mask cover);
bool is_vertex_cover(const Graph& g, const VertexSet& cover);
bool is_independent(const Graph& g, const VertexSet& s);

// Open neighbourhood of a set.
VertexSet neighborhood(const Graph& g, const VertexSet& s);

}  // namespace spartan

#endif  // SPARTAN_GRAPH_H_
