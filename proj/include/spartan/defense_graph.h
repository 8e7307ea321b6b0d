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

#ifndef SPARTAN_DEFENSE_GRAPH_H_
#define SPARTAN_DEFENSE_GRAPH_H_

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "spartan/graph.h"
#include "spartan/reachability.h"

namespace spartan {

// Edge of the auxiliary multigraph; color < 0 marks a real edge.
struct AuxEdge {
  int left = 0;
  int right = 0;
  int color = -1;

  bool real() const { return color < 0; }
  friend auto operator<=>(const AuxEdge&, const AuxEdge&) = default;
};

// Bipartite multigraph on S \ T (left) and T \ S (right). Real edges are
// edges of G; a helper edge of colour i joins u and v when both have a
// neighbour in the i-th component of G[S ∩ T].
struct AuxiliaryGraph {
  VertexSet s;
  VertexSet t;
  VertexSet left;
  VertexSet right;
  std::vector<AuxEdge> real_edges;
  std::vector<AuxEdge> helper_edges;
  std::vector<VertexSet> colors;  // ordered by smallest member
  VertexSet dead_zone;

  bool has_real(int left, int right) const;
  bool has_helper(int left, int right, int color) const;
  // Colour whose component contains x, or -1.
  int color_of(int x) const;
};

// Requires s and t to be vertex covers of equal size.
AuxiliaryGraph build_aux(const Graph& g, const VertexSet& s,
                         const VertexSet& t);

// Perfect matching on the real edges only. Throws IntegrityError if none
// exists (which cannot happen for two minimum covers).
std::vector<AuxEdge> all_real_pm(const AuxiliaryGraph& aux);

struct RainbowRequest {
  enum class Mode { kForcedReal, kHelperAdjacent };
  Mode mode = Mode::kForcedReal;
  // kForcedReal: the real edge left-right must be matched.
  // kHelperAdjacent: `right` must be matched to a left vertex with a
  // neighbour in colors[color]; its guard path is routed through `via`.
  int left = -1;
  int right = -1;
  int color = -1;
  int via = -1;
};

struct RainbowMatching {
  std::vector<AuxEdge> edges;  // sorted by left vertex
  AuxEdge forced;
  std::optional<int> via;
  int exchanges = 0;
};

// A perfect matching of the auxiliary graph meeting the request and using
// at most one helper edge per colour, or nullopt when no perfect matching
// meets the request at all.
std::optional<RainbowMatching> rainbow_pm_with_edge(const AuxiliaryGraph& aux,
                                                    const RainbowRequest& req);

// Exhaustive oracle over all perfect matchings (sides of at most 10).
struct ExhaustiveRainbow {
  bool any_meeting_request = false;
  std::optional<RainbowMatching> rainbow;
  long long matchings = 0;
};
ExhaustiveRainbow rainbow_pm_exhaustive(const AuxiliaryGraph& aux,
                                        const RainbowRequest& req);

// Checks perfectness, the request and the one-helper-per-colour rule.
bool validate_rainbow(const AuxiliaryGraph& aux, const RainbowRequest& req,
                      const RainbowMatching& m, std::string* why = nullptr);

// Guard paths: a real edge is a single step; a helper edge of colour i runs
// through the i-th component along a shortest path (lexicographically least
// among shortest). The forced helper of kHelperAdjacent ends via `via`.
PathSystem matching_to_paths(const Graph& g, const AuxiliaryGraph& aux,
                             const RainbowMatching& m);

struct Defense {
  VertexSet target;
  int target_index = -1;
  int condition = 0;  // 1: u leaves the cover, 2: u stays
  std::vector<std::vector<int>> paths;
  std::vector<GuardMove> moves;
};

struct DefenseFailure {
  struct Reason {
    VertexSet target;
    std::string reason;
  };
  std::vector<Reason> reasons;
};

// Answers the attack u->v (u in s, v not in s) with a cover from
// `candidates` (scanned in order), or lists why every candidate failed.
// Every successful defense is replayed before it is returned.
std::variant<Defense, DefenseFailure> check_defense(
    const Graph& g, const VertexSet& s, int u, int v,
    const std::vector<VertexSet>& candidates,
    const std::vector<bool>* alive = nullptr);

}  // namespace spartan

#endif  // SPARTAN_DEFENSE_GRAPH_H_
