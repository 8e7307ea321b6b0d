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

#ifndef SPARTAN_REACHABILITY_H_
#define SPARTAN_REACHABILITY_H_

#include <optional>
#include <string>
#include <vector>

#include "spartan/graph.h"

namespace spartan {

// Multiset of guard positions, one count per vertex.
class GuardConfiguration {
 public:
  GuardConfiguration() = default;
  explicit GuardConfiguration(std::vector<int> counts);
  static GuardConfiguration from_set(int n, const VertexSet& s);

  int vertex_count() const { return static_cast<int>(counts_.size()); }
  int count(int v) const { return counts_[v]; }
  const std::vector<int>& counts() const { return counts_; }
  int total() const { return total_; }
  VertexSet support() const;
  bool is_set() const;

  void add(int v, int delta);

  friend bool operator==(const GuardConfiguration& a,
                         const GuardConfiguration& b) {
    return a.counts_ == b.counts_;
  }
  friend auto operator<=>(const GuardConfiguration& a,
                          const GuardConfiguration& b) {
    return a.counts_ <=> b.counts_;
  }

 private:
  std::vector<int> counts_;
  int total_ = 0;
};

// "{a:2,b}" style rendering with labels.
std::string describe(const Graph& g, const GuardConfiguration& c);

struct PathSystem {
  std::vector<std::vector<int>> paths;
  VertexSet sources;
  VertexSet sinks;
  VertexSet allowed_interior;
};

// One guard stepping along an edge.
struct GuardMove {
  int from = 0;
  int to = 0;
  friend auto operator<=>(const GuardMove&, const GuardMove&) = default;
};

// Vertex-disjoint paths from `sources` to `sinks` whose interiors lie in
// `allowed_interior`. The three sets must be pairwise disjoint.
std::optional<PathSystem> disjoint_paths(const Graph& g,
                                         const VertexSet& sources,
                                         const VertexSet& sinks,
                                         const VertexSet& allowed_interior,
                                         int count);

struct Compatibility {
  bool compatible = false;
  PathSystem witness;
};

// |s1 \ s2| vertex-disjoint paths from s1 \ s2 to s2 \ s1 with interiors in
// s1 ∩ s2. Requires |s1| == |s2|.
Compatibility compatible(const Graph& g, const VertexSet& s1,
                         const VertexSet& s2);

// Multiset version: every excess guard of c1 over c2 starts a path, every
// deficit ends one, and a vertex x can be passed through at most
// min(c1(x), c2(x)) times. Path endpoints do not use that capacity.
Compatibility compatible_configs(const Graph& g, const GuardConfiguration& c1,
                                 const GuardConfiguration& c2);

// Simultaneous one-step movement from `from` to `to` in which a guard
// crosses the attacked edge from u to v.
std::optional<std::vector<GuardMove>> crossing_response(
    const Graph& g, const GuardConfiguration& from,
    const GuardConfiguration& to, int u, int v);

// Applies the moves simultaneously. Fails (nullopt, reason in *why) if a
// move is not along an edge or more guards leave a vertex than stand on it.
std::optional<GuardConfiguration> replay_moves(
    const Graph& g, const GuardConfiguration& start,
    const std::vector<GuardMove>& moves, std::string* why = nullptr);

// Full defense check: replay succeeds, ends in `target`, some move is u->v
// and the target covers every edge.
bool validate_defense(const Graph& g, const GuardConfiguration& start,
                      const GuardConfiguration& target, int u, int v,
                      const std::vector<GuardMove>& moves,
                      std::string* why = nullptr);

// Moves along every consecutive pair of every path.
std::vector<GuardMove> path_moves(const std::vector<std::vector<int>>& paths);

// Groups moves into guard chains: a move into x followed by the move out of
// x become one path. Cycles are cut at their smallest vertex.
std::vector<std::vector<int>> move_chains(std::vector<GuardMove> moves);

// Checks the set-mode invariants: endpoints, interior containment,
// adjacency and pairwise vertex-disjointness.
bool validate_path_system(const Graph& g, const PathSystem& ps,
                          std::string* why = nullptr);

// Checks a configuration-mode witness against c1 and c2.
bool validate_config_paths(const Graph& g, const GuardConfiguration& c1,
                           const GuardConfiguration& c2,
                           const std::vector<std::vector<int>>& paths,
                           std::string* why = nullptr);

struct PairwiseCompatibilityReport {
  int covers = 0;
  int pairs = 0;
  bool truncated = false;
  // Pairs lacking a perfect matching between S \ T and T \ S.
  std::vector<std::pair<VertexSet, VertexSet>> counterexamples;
};

// Every pair of minimum covers must be joined by a perfect matching between
// the two difference sides.
PairwiseCompatibilityReport min_covers_compatible_check(const Graph& g);

}  // namespace spartan

#endif  // SPARTAN_REACHABILITY_H_
