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

#include "spartan/matching.h"

#include <algorithm>
#include <limits>
#include <queue>

#include "spartan/covers.h"
#include "spartan/errors.h"

namespace spartan {

int Matching::partner(int v) const {
  for (const Edge& e : pairs) {
    if (e.has(v)) return e.other(v);
  }
  return -1;
}

bool is_matching(const Graph& g, const Matching& m) {
  std::vector<bool> used(g.vertex_count(), false);
  for (const Edge& e : m.pairs) {
    if (e.u < 0 || e.v >= g.vertex_count() || !g.adjacent(e.u, e.v)) {
      return false;
    }
    if (used[e.u] || used[e.v]) return false;
    used[e.u] = used[e.v] = true;
  }
  return true;
}

namespace {

// Edmonds' blossom algorithm on the subgraph of non-removed vertices.
class Blossom {
 public:
  Blossom(const Graph& g, const std::vector<bool>& removed)
      : g_(g),
        removed_(removed),
        n_(g.vertex_count()),
        match_(n_, -1),
        parent_(n_),
        base_(n_),
        used_(n_),
        in_blossom_(n_) {}

  int run() {
    int size = 0;
    // Greedy start keeps the augmentation count small.
    for (int v = 0; v < n_; ++v) {
      if (removed_[v] || match_[v] != -1) continue;
      for (int w : g_.neighbors(v)) {
        if (!removed_[w] && match_[w] == -1) {
          match_[v] = w;
          match_[w] = v;
          ++size;
          break;
        }
      }
    }
    for (int v = 0; v < n_; ++v) {
      if (removed_[v] || match_[v] != -1) continue;
      int end = find_path(v);
      if (end == -1) continue;
      ++size;
      while (end != -1) {
        int pv = parent_[end];
        int ppv = match_[pv];
        match_[end] = pv;
        match_[pv] = end;
        end = ppv;
      }
    }
    return size;
  }

  const std::vector<int>& mate() const { return match_; }

 private:
  int lca(int a, int b) {
    std::vector<bool> seen(n_, false);
    while (true) {
      a = base_[a];
      seen[a] = true;
      if (match_[a] == -1) break;
      a = parent_[match_[a]];
    }
    while (true) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = in_blossom_[base_[match_[v]]] = true;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  int find_path(int root) {
    std::fill(used_.begin(), used_.end(), false);
    std::fill(parent_.begin(), parent_.end(), -1);
    for (int i = 0; i < n_; ++i) base_[i] = i;
    used_[root] = true;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int to : g_.neighbors(v)) {
        if (removed_[to] || base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
          int cur = lca(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), false);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (int i = 0; i < n_; ++i) {
            if (!removed_[i] && in_blossom_[base_[i]]) {
              base_[i] = cur;
              if (!used_[i]) {
                used_[i] = true;
                q.push(i);
              }
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (match_[to] == -1) return to;
          used_[match_[to]] = true;
          q.push(match_[to]);
        }
      }
    }
    return -1;
  }

  const Graph& g_;
  const std::vector<bool>& removed_;
  int n_;
  std::vector<int> match_, parent_, base_;
  std::vector<bool> used_, in_blossom_;
};

int blossom_size(const Graph& g, const std::vector<bool>& removed) {
  return Blossom(g, removed).run();
}

}  // namespace

int matching_number(const Graph& g) {
  std::vector<bool> removed(g.vertex_count(), false);
  return blossom_size(g, removed);
}

Matching max_matching(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<bool> removed(n, false);
  const int target = blossom_size(g, removed);
  Matching out;
  // Scan edges in order, keeping e whenever a maximum matching still
  // extends the chosen prefix plus e.
  for (const Edge& e : g.edges()) {
    if (out.size() == target) break;
    if (removed[e.u] || removed[e.v]) continue;
    removed[e.u] = removed[e.v] = true;
    if (blossom_size(g, removed) == target - out.size() - 1) {
      out.pairs.push_back(e);
    } else {
      removed[e.u] = removed[e.v] = false;
    }
  }
  if (out.size() != target) {
    throw IntegrityError("canonical matching lost cardinality");
  }
  return out;
}

Matching max_matching_exhaustive(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 12) {
    throw PreconditionError("exhaustive matching is limited to 12 vertices");
  }
  std::vector<Edge> best, current;
  std::vector<bool> used(n, false);
  // Branch on the lowest undecided vertex: leave it unmatched or match it.
  auto rec = [&](auto&& self, int v) -> void {
    while (v < n && used[v]) ++v;
    if (v >= n) {
      if (current.size() > best.size()) best = current;
      return;
    }
    int free_left = 0;
    for (int w = v; w < n; ++w) free_left += used[w] ? 0 : 1;
    if (current.size() + free_left / 2 <= best.size()) return;
    used[v] = true;
    for (int w : g.neighbors(v)) {
      if (w > v && !used[w]) {
        used[w] = true;
        current.emplace_back(v, w);
        self(self, v + 1);
        current.pop_back();
        used[w] = false;
      }
    }
    self(self, v + 1);
    used[v] = false;
  };
  rec(rec, 0);
  Matching m;
  m.pairs = best;
  std::sort(m.pairs.begin(), m.pairs.end());
  return m;
}

namespace {

// Hopcroft-Karp over an explicit left->right adjacency.
class HopcroftKarp {
 public:
  HopcroftKarp(int left, int right, std::vector<std::vector<int>> adj)
      : adj_(std::move(adj)),
        match_left_(left, -1),
        match_right_(right, -1),
        dist_(left) {}

  int run() {
    int size = 0;
    while (bfs()) {
      for (int l = 0; l < static_cast<int>(adj_.size()); ++l) {
        if (match_left_[l] == -1 && dfs(l)) ++size;
      }
    }
    return size;
  }

  const std::vector<int>& match_left() const { return match_left_; }
  const std::vector<int>& match_right() const { return match_right_; }

 private:
  static constexpr int kInf = std::numeric_limits<int>::max();

  bool bfs() {
    std::queue<int> q;
    bool found = false;
    for (int l = 0; l < static_cast<int>(adj_.size()); ++l) {
      if (match_left_[l] == -1) {
        dist_[l] = 0;
        q.push(l);
      } else {
        dist_[l] = kInf;
      }
    }
    while (!q.empty()) {
      int l = q.front();
      q.pop();
      for (int r : adj_[l]) {
        int next = match_right_[r];
        if (next == -1) {
          found = true;
        } else if (dist_[next] == kInf) {
          dist_[next] = dist_[l] + 1;
          q.push(next);
        }
      }
    }
    return found;
  }

  bool dfs(int l) {
    for (int r : adj_[l]) {
      int next = match_right_[r];
      if (next == -1 || (dist_[next] == dist_[l] + 1 && dfs(next))) {
        match_left_[l] = r;
        match_right_[r] = l;
        return true;
      }
    }
    dist_[l] = kInf;
    return false;
  }

  std::vector<std::vector<int>> adj_;
  std::vector<int> match_left_, match_right_, dist_;
};

struct SideIndex {
  std::vector<int> left_pos, right_pos;
};

HopcroftKarp make_hk(const Graph& g, const VertexSet& left,
                     const VertexSet& right, int skip_left = -1,
                     int skip_right = -1) {
  std::vector<int> right_pos(g.vertex_count(), -1);
  for (int i = 0; i < right.size(); ++i) right_pos[right[i]] = i;
  std::vector<std::vector<int>> adj(left.size());
  for (int i = 0; i < left.size(); ++i) {
    if (left[i] == skip_left) continue;
    for (int w : g.neighbors(left[i])) {
      if (right_pos[w] >= 0 && w != skip_right) adj[i].push_back(right_pos[w]);
    }
  }
  return HopcroftKarp(left.size(), right.size(), std::move(adj));
}

Matching to_matching(const HopcroftKarp& hk, const VertexSet& left,
                     const VertexSet& right) {
  Matching m;
  const auto& ml = hk.match_left();
  for (int i = 0; i < left.size(); ++i) {
    if (ml[i] != -1) m.pairs.emplace_back(left[i], right[ml[i]]);
  }
  std::sort(m.pairs.begin(), m.pairs.end());
  return m;
}

// Sources reachable by alternating paths from unmatched sources; their
// neighbourhood is matched back into the set, so the set is deficient.
VertexSet deficient_set(const Graph& g, const VertexSet& sources,
                        const VertexSet& targets, const HopcroftKarp& hk) {
  std::vector<int> right_pos(g.vertex_count(), -1);
  for (int i = 0; i < targets.size(); ++i) right_pos[targets[i]] = i;
  std::vector<int> src_pos(g.vertex_count(), -1);
  for (int i = 0; i < sources.size(); ++i) src_pos[sources[i]] = i;
  std::vector<bool> reached(sources.size(), false);
  std::queue<int> q;
  for (int i = 0; i < sources.size(); ++i) {
    if (hk.match_left()[i] == -1) {
      reached[i] = true;
      q.push(i);
    }
  }
  while (!q.empty()) {
    int i = q.front();
    q.pop();
    for (int w : g.neighbors(sources[i])) {
      if (right_pos[w] < 0) continue;
      int back = hk.match_right()[right_pos[w]];
      if (back != -1 && !reached[back]) {
        reached[back] = true;
        q.push(back);
      }
    }
  }
  std::vector<int> out;
  for (int i = 0; i < sources.size(); ++i) {
    if (reached[i]) out.push_back(sources[i]);
  }
  return VertexSet(std::move(out));
}

void require_hall_preconditions(const Graph& g, const VertexSet& sources,
                                const VertexSet& targets) {
  if (!set_intersection(sources, targets).empty()) {
    throw PreconditionError("hall_check: sources and targets overlap");
  }
  if (!is_independent(g, sources)) {
    throw PreconditionError("hall_check: sources are not independent");
  }
  for (int v : sources) {
    for (int w : g.neighbors(v)) {
      if (!targets.contains(w)) {
        throw PreconditionError(
            "hall_check: a source has a neighbour outside targets");
      }
    }
  }
}

}  // namespace

Matching bipartite_max_matching(const Graph& g, const VertexSet& left,
                                const VertexSet& right) {
  HopcroftKarp hk = make_hk(g, left, right);
  hk.run();
  return to_matching(hk, left, right);
}

std::optional<Matching> perfect_matching_through_edge(const Graph& g,
                                                      const VertexSet& side_a,
                                                      const VertexSet& side_b,
                                                      Edge e) {
  if (!set_intersection(side_a, side_b).empty()) {
    throw PreconditionError("perfect_matching_through_edge: sides overlap");
  }
  int a = -1, b = -1;
  if (side_a.contains(e.u) && side_b.contains(e.v)) {
    a = e.u;
    b = e.v;
  } else if (side_a.contains(e.v) && side_b.contains(e.u)) {
    a = e.v;
    b = e.u;
  } else {
    throw PreconditionError(
        "perfect_matching_through_edge: edge does not cross the sides");
  }
  if (!g.adjacent(a, b)) {
    throw PreconditionError("perfect_matching_through_edge: not an edge");
  }
  if (side_a.size() != side_b.size()) return std::nullopt;
  HopcroftKarp hk = make_hk(g, side_a, side_b, a, b);
  if (hk.run() != side_a.size() - 1) return std::nullopt;
  Matching m = to_matching(hk, side_a, side_b);
  m.pairs.emplace_back(a, b);
  std::sort(m.pairs.begin(), m.pairs.end());
  return m;
}

std::variant<Matching, HallWitness> hall_check(const Graph& g,
                                               const VertexSet& sources,
                                               const VertexSet& targets) {
  require_hall_preconditions(g, sources, targets);
  HopcroftKarp hk = make_hk(g, sources, targets);
  if (hk.run() == sources.size()) return to_matching(hk, sources, targets);

  VertexSet violator = deficient_set(g, sources, targets, hk);
  // One greedy pass, largest member first. Non-saturability is closed under
  // supersets, so the survivor is inclusion-wise minimal.
  std::vector<int> members = violator.members();
  for (int i = static_cast<int>(members.size()) - 1; i >= 0; --i) {
    std::vector<int> rest = members;
    rest.erase(rest.begin() + i);
    VertexSet candidate(rest);
    HopcroftKarp sub = make_hk(g, candidate, targets);
    if (sub.run() < candidate.size()) members = std::move(rest);
  }
  violator = VertexSet(members);
  HallWitness w;
  w.violator = violator;
  w.neighborhood = neighborhood(g, violator);
  w.kind = HallWitness::Kind::kDeficient;
  if (w.neighborhood.size() >= w.violator.size()) {
    throw IntegrityError("hall_check produced a non-deficient violator");
  }
  return w;
}

std::optional<HallWitness> find_tight_set(const Graph& g,
                                          const VertexSet& sources,
                                          const VertexSet& targets) {
  require_hall_preconditions(g, sources, targets);
  HopcroftKarp hk = make_hk(g, sources, targets);
  if (hk.run() != sources.size()) return std::nullopt;
  std::vector<int> right_pos(g.vertex_count(), -1);
  for (int i = 0; i < targets.size(); ++i) right_pos[targets[i]] = i;
  std::vector<int> src_pos(g.vertex_count(), -1);
  for (int i = 0; i < sources.size(); ++i) src_pos[sources[i]] = i;

  std::optional<HallWitness> best;
  for (int start = 0; start < sources.size(); ++start) {
    // Smallest tight set containing `start`: close under "neighbour, then
    // its matched partner"; fails if a neighbour is unmatched.
    std::vector<bool> in(sources.size(), false);
    std::vector<int> order{start};
    in[start] = true;
    bool tight = true;
    for (size_t i = 0; i < order.size() && tight; ++i) {
      for (int w : g.neighbors(sources[order[i]])) {
        int back = hk.match_right()[right_pos[w]];
        if (back == -1) {
          tight = false;
          break;
        }
        if (!in[back]) {
          in[back] = true;
          order.push_back(back);
        }
      }
    }
    if (!tight || static_cast<int>(order.size()) == sources.size()) continue;
    std::vector<int> members;
    for (int i : order) members.push_back(sources[i]);
    VertexSet x(std::move(members));
    if (!best || x.size() < best->violator.size()) {
      HallWitness w;
      w.violator = x;
      w.neighborhood = neighborhood(g, x);
      w.kind = HallWitness::Kind::kTight;
      best = std::move(w);
    }
  }
  return best;
}

ElementaryResult is_elementary(const Graph& g) {
  if (g.vertex_count() == 0 || !is_connected(g)) {
    throw PreconditionError("is_elementary requires a connected graph");
  }
  auto parts = bipartition(g);
  if (!std::holds_alternative<Bipartition>(parts)) {
    throw PreconditionError("is_elementary requires a bipartite graph");
  }
  const auto& sides = std::get<Bipartition>(parts);
  ElementaryResult result;
  result.elementary = true;
  for (const Edge& e : g.edges()) {
    if (!perfect_matching_through_edge(g, sides.side_a, sides.side_b, e)) {
      result.elementary = false;
      result.edge_in_no_perfect_matching = e;
      break;
    }
  }
  if (!result.elementary) {
    result.tight_set = find_tight_set(g, sides.side_a, sides.side_b);
  }
  if (g.vertex_count() <= 16) {
    CoverSet covers = enumerate_min_vcs(g, 1 << 16);
    std::vector<VertexSet> expected{sides.side_a, sides.side_b};
    std::sort(expected.begin(), expected.end());
    bool only_sides = !covers.truncated && covers.covers == expected;
    if (only_sides != result.elementary) {
      throw IntegrityError(
          "is_elementary: perfect-matching test disagrees with the "
          "minimum-cover family");
    }
  }
  return result;
}

}  // namespace spartan
