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

#include "spartan/reachability.h"

#include <algorithm>
#include <map>

#include "spartan/covers.h"
#include "spartan/errors.h"
#include "spartan/flow.h"
#include "spartan/matching.h"

namespace spartan {

GuardConfiguration::GuardConfiguration(std::vector<int> counts)
    : counts_(std::move(counts)) {
  for (int c : counts_) {
    if (c < 0) throw PreconditionError("guard counts must be non-negative");
    total_ += c;
  }
}

GuardConfiguration GuardConfiguration::from_set(int n, const VertexSet& s) {
  std::vector<int> counts(n, 0);
  for (int v : s) counts[v] = 1;
  return GuardConfiguration(std::move(counts));
}

VertexSet GuardConfiguration::support() const {
  std::vector<int> out;
  for (int v = 0; v < vertex_count(); ++v) {
    if (counts_[v] > 0) out.push_back(v);
  }
  return VertexSet(std::move(out));
}

bool GuardConfiguration::is_set() const {
  return std::all_of(counts_.begin(), counts_.end(),
                     [](int c) { return c <= 1; });
}

void GuardConfiguration::add(int v, int delta) {
  if (counts_[v] + delta < 0) {
    throw PreconditionError("guard count would become negative");
  }
  counts_[v] += delta;
  total_ += delta;
}

std::string describe(const Graph& g, const GuardConfiguration& c) {
  std::string out = "{";
  bool first = true;
  for (int v = 0; v < c.vertex_count(); ++v) {
    if (c.count(v) == 0) continue;
    if (!first) out += ",";
    first = false;
    out += g.label(v);
    if (c.count(v) > 1) out += ":" + std::to_string(c.count(v));
  }
  return out + "}";
}

namespace {

// Node-split network: in(x) = 2x, out(x) = 2x + 1.
struct SplitNetwork {
  FlowNetwork net;
  int source;
  int sink;

  explicit SplitNetwork(int n) : net(2 * n + 2), source(2 * n), sink(2 * n + 1) {}
};

// Capacities are indexed by vertex: starts, ends and pass-through.
std::optional<std::vector<std::vector<int>>> split_flow_paths(
    const Graph& g, const std::vector<int>& starts, const std::vector<int>& ends,
    const std::vector<int>& pass, int demand) {
  const int n = g.vertex_count();
  SplitNetwork s(n);
  int total = 0;
  for (int x = 0; x < n; ++x) {
    if (starts[x] > 0) s.net.add_arc(s.source, 2 * x + 1, starts[x]);
    total += starts[x];
  }
  for (int x = 0; x < n; ++x) {
    if (pass[x] > 0) s.net.add_arc(2 * x, 2 * x + 1, pass[x]);
    if (ends[x] > 0) s.net.add_arc(2 * x, s.sink, ends[x]);
  }
  for (int x = 0; x < n; ++x) {
    if (starts[x] == 0 && pass[x] == 0) continue;
    for (int y : g.neighbors(x)) {
      if (ends[y] > 0 || pass[y] > 0) s.net.add_arc(2 * x + 1, 2 * y, total);
    }
  }
  if (s.net.max_flow(s.source, s.sink, demand) < demand) return std::nullopt;
  std::vector<std::vector<int>> paths;
  for (const auto& nodes : s.net.decompose(s.source, s.sink)) {
    std::vector<int> path;
    for (int node : nodes) {
      if (node == s.source || node == s.sink) continue;
      int v = node / 2;
      if (path.empty() || path.back() != v) path.push_back(v);
    }
    paths.push_back(std::move(path));
  }
  std::sort(paths.begin(), paths.end());
  return paths;
}

void fail(std::string* why, const std::string& reason) {
  if (why) *why = reason;
}

}  // namespace

std::optional<PathSystem> disjoint_paths(const Graph& g,
                                         const VertexSet& sources,
                                         const VertexSet& sinks,
                                         const VertexSet& allowed_interior,
                                         int count) {
  if (!set_intersection(sources, sinks).empty() ||
      !set_intersection(sources, allowed_interior).empty() ||
      !set_intersection(sinks, allowed_interior).empty()) {
    throw PreconditionError("disjoint_paths: vertex roles overlap");
  }
  if (count > sources.size() || count > sinks.size()) return std::nullopt;
  PathSystem ps{{}, sources, sinks, allowed_interior};
  if (count <= 0) return ps;
  const int n = g.vertex_count();
  std::vector<int> starts(n, 0), ends(n, 0), pass(n, 0);
  for (int v : sources) starts[v] = 1;
  for (int v : sinks) ends[v] = 1;
  for (int v : allowed_interior) pass[v] = 1;
  auto paths = split_flow_paths(g, starts, ends, pass, count);
  if (!paths) return std::nullopt;
  ps.paths = std::move(*paths);
  return ps;
}

Compatibility compatible(const Graph& g, const VertexSet& s1,
                         const VertexSet& s2) {
  if (s1.size() != s2.size()) {
    throw PreconditionError("compatible: sets differ in size");
  }
  VertexSet from = set_difference(s1, s2);
  VertexSet to = set_difference(s2, s1);
  VertexSet shared = set_intersection(s1, s2);
  Compatibility out;
  auto ps = disjoint_paths(g, from, to, shared, from.size());
  if (ps) {
    out.compatible = true;
    out.witness = std::move(*ps);
  } else {
    out.witness = PathSystem{{}, from, to, shared};
  }
  return out;
}

Compatibility compatible_configs(const Graph& g, const GuardConfiguration& c1,
                                 const GuardConfiguration& c2) {
  if (c1.total() != c2.total()) {
    throw PreconditionError("compatible_configs: totals differ");
  }
  const int n = g.vertex_count();
  if (c1.vertex_count() != n || c2.vertex_count() != n) {
    throw PreconditionError("compatible_configs: configuration size mismatch");
  }
  std::vector<int> starts(n), ends(n), pass(n);
  std::vector<int> from, to, shared;
  int demand = 0;
  for (int x = 0; x < n; ++x) {
    starts[x] = std::max(0, c1.count(x) - c2.count(x));
    ends[x] = std::max(0, c2.count(x) - c1.count(x));
    pass[x] = std::min(c1.count(x), c2.count(x));
    demand += starts[x];
    if (starts[x]) from.push_back(x);
    if (ends[x]) to.push_back(x);
    if (pass[x]) shared.push_back(x);
  }
  Compatibility out;
  out.witness.sources = VertexSet(from);
  out.witness.sinks = VertexSet(to);
  out.witness.allowed_interior = VertexSet(shared);
  if (demand == 0) {
    out.compatible = true;
    return out;
  }
  auto paths = split_flow_paths(g, starts, ends, pass, demand);
  if (paths) {
    out.compatible = true;
    out.witness.paths = std::move(*paths);
  }
  return out;
}

std::optional<std::vector<GuardMove>> crossing_response(
    const Graph& g, const GuardConfiguration& from,
    const GuardConfiguration& to, int u, int v) {
  if (!g.adjacent(u, v)) {
    throw PreconditionError("crossing_response: attacked pair is not an edge");
  }
  if (from.count(u) == 0 || to.count(v) == 0) return std::nullopt;
  GuardConfiguration rest_from = from;
  GuardConfiguration rest_to = to;
  rest_from.add(u, -1);
  rest_to.add(v, -1);
  Compatibility c = compatible_configs(g, rest_from, rest_to);
  if (!c.compatible) return std::nullopt;
  std::vector<GuardMove> moves = path_moves(c.witness.paths);
  moves.push_back({u, v});
  std::sort(moves.begin(), moves.end());
  return moves;
}

std::optional<GuardConfiguration> replay_moves(
    const Graph& g, const GuardConfiguration& start,
    const std::vector<GuardMove>& moves, std::string* why) {
  std::vector<int> leaving(g.vertex_count(), 0);
  std::vector<int> counts = start.counts();
  for (const GuardMove& m : moves) {
    if (m.from < 0 || m.from >= g.vertex_count() || m.to < 0 ||
        m.to >= g.vertex_count() || !g.adjacent(m.from, m.to)) {
      fail(why, "move is not along an edge");
      return std::nullopt;
    }
    if (++leaving[m.from] > start.count(m.from)) {
      fail(why, "more guards leave " + g.label(m.from) + " than stand on it");
      return std::nullopt;
    }
    counts[m.from] -= 1;
    counts[m.to] += 1;
  }
  return GuardConfiguration(std::move(counts));
}

bool validate_defense(const Graph& g, const GuardConfiguration& start,
                      const GuardConfiguration& target, int u, int v,
                      const std::vector<GuardMove>& moves, std::string* why) {
  auto end = replay_moves(g, start, moves, why);
  if (!end) return false;
  if (!(*end == target)) {
    fail(why, "replayed moves end in " + describe(g, *end) + ", expected " +
                  describe(g, target));
    return false;
  }
  if (std::find(moves.begin(), moves.end(), GuardMove{u, v}) == moves.end()) {
    fail(why, "no guard crosses the attacked edge");
    return false;
  }
  if (!is_vertex_cover(g, end->support())) {
    fail(why, "guards do not cover every edge after the move");
    return false;
  }
  return true;
}

std::vector<GuardMove> path_moves(const std::vector<std::vector<int>>& paths) {
  std::vector<GuardMove> moves;
  for (const auto& p : paths) {
    for (size_t i = 0; i + 1 < p.size(); ++i) moves.push_back({p[i], p[i + 1]});
  }
  std::sort(moves.begin(), moves.end());
  return moves;
}

std::vector<std::vector<int>> move_chains(std::vector<GuardMove> moves) {
  std::sort(moves.begin(), moves.end());
  std::map<int, int> balance;
  for (const GuardMove& m : moves) {
    balance[m.from] += 1;
    balance[m.to] -= 1;
  }
  std::vector<bool> used(moves.size(), false);
  auto next_from = [&](int x) -> int {
    for (size_t i = 0; i < moves.size(); ++i) {
      if (!used[i] && moves[i].from == x) return static_cast<int>(i);
    }
    return -1;
  };
  auto walk = [&](int first) {
    std::vector<int> chain{moves[first].from};
    for (int i = first; i != -1; i = next_from(chain.back())) {
      used[i] = true;
      chain.push_back(moves[i].to);
      if (chain.back() == chain.front()) break;
    }
    return chain;
  };
  std::vector<std::vector<int>> chains;
  for (size_t i = 0; i < moves.size(); ++i) {
    if (!used[i] && balance[moves[i].from] > 0) {
      balance[moves[i].from] -= 1;
      chains.push_back(walk(static_cast<int>(i)));
    }
  }
  for (size_t i = 0; i < moves.size(); ++i) {
    if (!used[i]) chains.push_back(walk(static_cast<int>(i)));
  }
  return chains;
}

bool validate_path_system(const Graph& g, const PathSystem& ps,
                          std::string* why) {
  std::vector<bool> seen(g.vertex_count(), false);
  for (const auto& p : ps.paths) {
    if (p.empty()) {
      fail(why, "empty path");
      return false;
    }
    if (!ps.sources.contains(p.front()) || !ps.sinks.contains(p.back())) {
      fail(why, "path endpoints outside sources/sinks");
      return false;
    }
    for (size_t i = 0; i < p.size(); ++i) {
      if (seen[p[i]]) {
        fail(why, "paths share vertex " + g.label(p[i]));
        return false;
      }
      seen[p[i]] = true;
      if (i > 0 && !g.adjacent(p[i - 1], p[i])) {
        fail(why, "consecutive path vertices not adjacent");
        return false;
      }
      if (i > 0 && i + 1 < p.size() && !ps.allowed_interior.contains(p[i])) {
        fail(why, "interior vertex " + g.label(p[i]) + " not allowed");
        return false;
      }
    }
  }
  return true;
}

bool validate_config_paths(const Graph& g, const GuardConfiguration& c1,
                           const GuardConfiguration& c2,
                           const std::vector<std::vector<int>>& paths,
                           std::string* why) {
  const int n = g.vertex_count();
  std::vector<int> starts(n, 0), ends(n, 0), through(n, 0);
  for (const auto& p : paths) {
    if (p.size() < 2) {
      fail(why, "path without a move");
      return false;
    }
    starts[p.front()] += 1;
    ends[p.back()] += 1;
    for (size_t i = 1; i < p.size(); ++i) {
      if (!g.adjacent(p[i - 1], p[i])) {
        fail(why, "consecutive path vertices not adjacent");
        return false;
      }
      if (i + 1 < p.size()) through[p[i]] += 1;
    }
  }
  for (int x = 0; x < n; ++x) {
    if (starts[x] != std::max(0, c1.count(x) - c2.count(x)) ||
        ends[x] != std::max(0, c2.count(x) - c1.count(x))) {
      fail(why, "path endpoints do not match the configuration difference");
      return false;
    }
    if (through[x] > std::min(c1.count(x), c2.count(x))) {
      fail(why, "vertex " + g.label(x) + " passed through too often");
      return false;
    }
  }
  return true;
}

PairwiseCompatibilityReport min_covers_compatible_check(const Graph& g) {
  PairwiseCompatibilityReport report;
  CoverSet all = enumerate_min_vcs(g);
  report.covers = static_cast<int>(all.covers.size());
  report.truncated = all.truncated;
  for (size_t i = 0; i < all.covers.size(); ++i) {
    for (size_t j = i + 1; j < all.covers.size(); ++j) {
      ++report.pairs;
      const VertexSet& s = all.covers[i];
      const VertexSet& t = all.covers[j];
      VertexSet left = set_difference(s, t);
      Matching m = bipartite_max_matching(g, left, set_difference(t, s));
      Compatibility c = compatible(g, s, t);
      if (m.size() != left.size() || !c.compatible) {
        report.counterexamples.emplace_back(s, t);
      }
    }
  }
  return report;
}

}  // namespace spartan
