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

#include "spartan/graph.h"

#include <algorithm>
#include <bit>
#include <fstream>
#include <queue>
#include <set>
#include <sstream>

#include "json.hpp"
#include "spartan/errors.h"

namespace spartan {

VertexSet::VertexSet(std::initializer_list<int> members)
    : VertexSet(std::vector<int>(members)) {}

VertexSet::VertexSet(std::vector<int> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
    throw PreconditionError("vertex set has duplicate members");
  }
  if (!members_.empty() && members_.front() < 0) {
    throw PreconditionError("vertex set has a negative index");
  }
}

VertexSet VertexSet::from_mask(Mask mask) {
  std::vector<int> out;
  while (mask != 0) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  VertexSet s;
  s.members_ = std::move(out);
  return s;
}

VertexSet VertexSet::range(int n) {
  VertexSet s;
  s.members_.resize(n);
  for (int i = 0; i < n; ++i) s.members_[i] = i;
  return s;
}

bool VertexSet::contains(int v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

Mask VertexSet::mask() const {
  Mask m = 0;
  for (int v : members_) {
    if (v >= kMaxAnalysisVertices) {
      throw PreconditionError("vertex index exceeds the 64-vertex mask limit");
    }
    m |= bit(v);
  }
  return m;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  std::vector<int> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return VertexSet(std::move(out));
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return VertexSet(std::move(out));
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return VertexSet(std::move(out));
}

Graph::Graph(std::vector<std::string> labels, const std::vector<Edge>& edges)
    : labels_(std::move(labels)) {
  const int n = vertex_count();
  for (int i = 0; i < n; ++i) {
    if (!index_.emplace(labels_[i], i).second) {
      throw ValidationError("duplicate vertex label '" + labels_[i] + "'");
    }
  }
  adjacency_.assign(n, {});
  std::set<Edge> seen;
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v >= n) {
      throw ValidationError("edge endpoint out of range");
    }
    if (e.u == e.v) {
      throw ValidationError("self-loop on '" + labels_[e.u] + "'");
    }
    if (!seen.insert(e).second) {
      throw ValidationError("duplicate edge '" + labels_[e.u] + " " +
                            labels_[e.v] + "'");
    }
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  edges_.assign(seen.begin(), seen.end());
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
  if (n <= kMaxAnalysisVertices) {
    neighbor_masks_.assign(n, 0);
    for (const Edge& e : edges_) {
      neighbor_masks_[e.u] |= bit(e.v);
      neighbor_masks_[e.v] |= bit(e.u);
    }
  }
}

std::optional<int> Graph::index_of(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int Graph::require_index(std::string_view label) const {
  auto idx = index_of(label);
  if (!idx) {
    throw ValidationError("unknown vertex label '" + std::string(label) + "'");
  }
  return *idx;
}

bool Graph::adjacent(int u, int v) const {
  if (!neighbor_masks_.empty()) return (neighbor_masks_[u] & bit(v)) != 0;
  const auto& nbrs = adjacency_[u];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

Mask Graph::all_mask() const {
  const int n = vertex_count();
  return n >= 64 ? ~Mask{0} : (bit(n) - 1);
}

std::vector<int> Graph::isolated_vertices() const {
  std::vector<int> out;
  for (int v = 0; v < vertex_count(); ++v) {
    if (adjacency_[v].empty()) out.push_back(v);
  }
  return out;
}

std::string Graph::label_list(const VertexSet& s) const {
  std::string out = "{";
  for (int i = 0; i < s.size(); ++i) {
    if (i > 0) out += ",";
    out += labels_[s[i]];
  }
  return out + "}";
}

namespace {

struct GraphBuilder {
  std::vector<std::string> labels;
  std::unordered_map<std::string, int> index;
  std::vector<Edge> edges;
  std::set<Edge> seen;

  int intern(const std::string& label) {
    auto [it, inserted] =
        index.emplace(label, static_cast<int>(labels.size()));
    if (inserted) labels.push_back(label);
    return it->second;
  }

  void add_edge(const std::string& a, const std::string& b, int line) {
    if (a == b) {
      throw ValidationError("line " + std::to_string(line) + ": self-loop on '" +
                            a + "'");
    }
    int ia = intern(a);
    int ib = intern(b);
    Edge e(ia, ib);
    if (!seen.insert(e).second) {
      throw ValidationError("line " + std::to_string(line) +
                            ": duplicate edge '" + a + " " + b + "'");
    }
    edges.push_back(e);
  }
};

std::string json_label(const nlohmann::json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw ParseError(1, "vertex labels must be strings or integers");
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  GraphBuilder b;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream tokens(line);
    std::vector<std::string> toks;
    for (std::string t; tokens >> t;) toks.push_back(t);
    if (toks.size() % 2 != 0) {
      throw ParseError(line_no, "odd number of tokens; expected label pairs");
    }
    for (size_t i = 0; i < toks.size(); i += 2) {
      b.add_edge(toks[i], toks[i + 1], line_no);
    }
  }
  return Graph(std::move(b.labels), b.edges);
}

Graph parse_json_graph(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(1, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("edges") || !doc["edges"].is_array()) {
    throw ParseError(1, "JSON graph needs an \"edges\" array");
  }
  GraphBuilder b;
  if (doc.contains("vertices")) {
    if (!doc["vertices"].is_array()) {
      throw ParseError(1, "\"vertices\" must be an array");
    }
    for (const auto& v : doc["vertices"]) {
      std::string label = json_label(v);
      if (b.index.count(label)) {
        throw ValidationError("duplicate vertex label '" + label + "'");
      }
      b.intern(label);
    }
  }
  const bool declared = doc.contains("vertices");
  int item = 0;
  for (const auto& e : doc["edges"]) {
    ++item;
    if (!e.is_array() || e.size() != 2) {
      throw ParseError(item, "each edge must be a two-element array");
    }
    std::string a = json_label(e[0]);
    std::string c = json_label(e[1]);
    for (const std::string& l : {a, c}) {
      if (declared && !b.index.count(l)) {
        throw ValidationError("edge " + std::to_string(item) +
                              " uses undeclared vertex '" + l + "'");
      }
    }
    b.add_edge(a, c, item);
  }
  return Graph(std::move(b.labels), b.edges);
}

Graph parse_graph(std::string_view text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    return parse_json_graph(text);
  }
  return parse_edge_list(text);
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

std::string to_edge_list(const Graph& g) {
  std::string out;
  for (const Edge& e : g.edges()) {
    out += g.label(e.u) + " " + g.label(e.v) + "\n";
  }
  return out;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> comp(n, -1);
  std::vector<VertexSet> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    std::vector<int> members{s};
    comp[s] = static_cast<int>(out.size());
    for (size_t i = 0; i < members.size(); ++i) {
      for (int w : g.neighbors(members[i])) {
        if (comp[w] == -1) {
          comp[w] = comp[s];
          members.push_back(w);
        }
      }
    }
    out.emplace_back(std::move(members));
  }
  return out;
}

bool is_connected(const Graph& g) {
  return connected_components(g).size() <= 1;
}

Graph induced_subgraph(const Graph& g, const VertexSet& vertices) {
  std::vector<int> local(g.vertex_count(), -1);
  std::vector<std::string> labels;
  for (int v : vertices) {
    local[v] = static_cast<int>(labels.size());
    labels.push_back(g.label(v));
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (local[e.u] >= 0 && local[e.v] >= 0) {
      edges.emplace_back(local[e.u], local[e.v]);
    }
  }
  return Graph(std::move(labels), edges);
}

VertexSet cut_vertices(const Graph& g) {
  if (!is_connected(g)) {
    throw PreconditionError("cut_vertices requires a connected graph");
  }
  const int n = g.vertex_count();
  std::vector<int> order(n, -1), low(n, 0), parent(n, -1);
  std::vector<size_t> next(n, 0);
  std::vector<bool> cut(n, false);
  int timer = 0;
  if (n == 0) return {};
  // Iterative lowpoint DFS from vertex 0.
  std::vector<int> stack{0};
  order[0] = low[0] = timer++;
  int root_children = 0;
  while (!stack.empty()) {
    int v = stack.back();
    auto nbrs = g.neighbors(v);
    if (next[v] < nbrs.size()) {
      int w = nbrs[next[v]++];
      if (order[w] == -1) {
        parent[w] = v;
        order[w] = low[w] = timer++;
        if (v == 0) ++root_children;
        stack.push_back(w);
      } else if (w != parent[v]) {
        low[v] = std::min(low[v], order[w]);
      }
    } else {
      stack.pop_back();
      int p = parent[v];
      if (p >= 0) {
        low[p] = std::min(low[p], low[v]);
        if (p != 0 && low[v] >= order[p]) cut[p] = true;
      }
    }
  }
  if (root_children > 1) cut[0] = true;
  std::vector<int> out;
  for (int v = 0; v < n; ++v) {
    if (cut[v]) out.push_back(v);
  }
  return VertexSet(std::move(out));
}

namespace {

// Two-colours the component of `start`; on conflict returns the odd cycle
// closed by the offending edge.
std::optional<OddCycle> colour_component(const Graph& g, int start,
                                         std::vector<int>& colour) {
  std::vector<int> parent(g.vertex_count(), -1);
  std::vector<int> depth(g.vertex_count(), 0);
  std::queue<int> q;
  colour[start] = 0;
  q.push(start);
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    for (int y : g.neighbors(x)) {
      if (colour[y] == -1) {
        colour[y] = 1 - colour[x];
        parent[y] = x;
        depth[y] = depth[x] + 1;
        q.push(y);
      } else if (colour[y] == colour[x]) {
        std::vector<int> up_x{x}, up_y{y};
        int a = x, b = y;
        while (depth[a] > depth[b]) up_x.push_back(a = parent[a]);
        while (depth[b] > depth[a]) up_y.push_back(b = parent[b]);
        while (a != b) {
          up_x.push_back(a = parent[a]);
          up_y.push_back(b = parent[b]);
        }
        // up_x ends at the common ancestor; walk it down to x, then climb
        // from y to just below the ancestor.
        OddCycle odd;
        odd.cycle.assign(up_x.rbegin(), up_x.rend());
        for (size_t i = 0; i + 1 < up_y.size(); ++i) {
          odd.cycle.push_back(up_y[i]);
        }
        return odd;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::variant<Bipartition, OddCycle> bipartition_any(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> colour(n, -1);
  for (int s = 0; s < n; ++s) {
    if (colour[s] != -1) continue;
    if (auto odd = colour_component(g, s, colour)) return *odd;
  }
  std::vector<int> a, b;
  for (int v = 0; v < n; ++v) (colour[v] == 0 ? a : b).push_back(v);
  return Bipartition{VertexSet(std::move(a)), VertexSet(std::move(b))};
}

std::variant<Bipartition, OddCycle> bipartition(const Graph& g) {
  if (!is_connected(g)) {
    throw PreconditionError("bipartition requires a connected graph");
  }
  return bipartition_any(g);
}

bool is_vertex_cover(const Graph& g, Mask cover) {
  for (const Edge& e : g.edges()) {
    if ((cover & (bit(e.u) | bit(e.v))) == 0) return false;
  }
  return true;
}

bool is_vertex_cover(const Graph& g, const VertexSet& cover) {
  for (const Edge& e : g.edges()) {
    if (!cover.contains(e.u) && !cover.contains(e.v)) return false;
  }
  return true;
}

bool is_independent(const Graph& g, const VertexSet& s) {
  for (int i = 0; i < s.size(); ++i) {
    for (int j = i + 1; j < s.size(); ++j) {
      if (g.adjacent(s[i], s[j])) return false;
    }
  }
  return true;
}

VertexSet neighborhood(const Graph& g, const VertexSet& s) {
  std::vector<bool> in(g.vertex_count(), false);
  for (int v : s) {
    for (int w : g.neighbors(v)) in[w] = true;
  }
  std::vector<int> out;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (in[v]) out.push_back(v);
  }
  return VertexSet(std::move(out));
}

}  // namespace spartan
