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

#ifndef SPARTAN_MATCHING_H_
#define SPARTAN_MATCHING_H_

#include <optional>
#include <variant>
#include <vector>

#include "spartan/graph.h"

namespace spartan {

struct Matching {
  std::vector<Edge> pairs;  // sorted

  int size() const { return static_cast<int>(pairs.size()); }
  // Partner of v, or -1.
  int partner(int v) const;
  friend bool operator==(const Matching&, const Matching&) = default;
};

// Checks the Matching invariants against g.
bool is_matching(const Graph& g, const Matching& m);

// Maximum matching via blossom contraction. Among maximum matchings the
// lexicographically smallest sorted pair list is returned.
Matching max_matching(const Graph& g);
// mm(G) without canonicalisation.
int matching_number(const Graph& g);
// Exhaustive search; refuses graphs with more than 12 vertices.
Matching max_matching_exhaustive(const Graph& g);

// Hopcroft-Karp on the bipartite graph whose left vertices are `left`,
// right vertices `right`, keeping only edges of g between the two sides.
Matching bipartite_max_matching(const Graph& g, const VertexSet& left,
                                const VertexSet& right);

// Perfect matching between the two sides containing e, if any.
// Throws PreconditionError if e does not cross the sides or the sides are
// not disjoint.
std::optional<Matching> perfect_matching_through_edge(const Graph& g,
                                                      const VertexSet& side_a,
                                                      const VertexSet& side_b,
                                                      Edge e);

struct HallWitness {
  enum class Kind { kDeficient, kTight };
  VertexSet violator;
  VertexSet neighborhood;
  Kind kind = Kind::kDeficient;
};

// Either a matching saturating `sources` into `targets` or an
// inclusion-wise minimal deficient set (|N(X)| < |X|).
// Requires sources independent, disjoint from targets, N(sources) in targets.
std::variant<Matching, HallWitness> hall_check(const Graph& g,
                                               const VertexSet& sources,
                                               const VertexSet& targets);

// A non-empty X strictly inside `sources` with |N(X)| = |X|, assuming
// `sources` can be saturated. Returns nullopt when none exists (or when
// saturation fails).
std::optional<HallWitness> find_tight_set(const Graph& g,
                                          const VertexSet& sources,
                                          const VertexSet& targets);

struct ElementaryResult {
  bool elementary = false;
  std::optional<Edge> edge_in_no_perfect_matching;
  std::optional<HallWitness> tight_set;
};

// Requires a connected bipartite graph. Every edge must lie in a perfect
// matching. For n <= 16 the answer is cross-checked against the minimum
// vertex covers (elementary iff they are exactly the two colour classes) and
// an IntegrityError is raised on disagreement.
ElementaryResult is_elementary(const Graph& g);

}  // namespace spartan

#endif  // SPARTAN_MATCHING_H_
