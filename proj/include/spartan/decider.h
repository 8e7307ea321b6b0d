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

#ifndef SPARTAN_DECIDER_H_
#define SPARTAN_DECIDER_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spartan/covers.h"
#include "spartan/game.h"
#include "spartan/graph.h"
#include "spartan/matching.h"
#include "spartan/reachability.h"

namespace spartan {

enum class Method { kFixpoint, kKonig, kGameOracle, kPerComponent };
std::string to_string(Method m);

// Defense of `attack` from covers[from], ending in covers[to].
struct Transition {
  int from = 0;
  Attack attack;
  int to = 0;
  int condition = 0;
  std::vector<std::vector<int>> paths;
  std::vector<GuardMove> moves;
};

// Minimum covers closed under defended attacks, with one recorded defense
// per (cover, attack).
struct DefenseFamily {
  std::vector<VertexSet> covers;
  std::vector<Transition> transitions;  // by (from, attack)
};

// Non-empty, all covers minimum, a transition for every attack from every
// cover, and every transition replays into its target. With `component`,
// f belongs to the connected component of g on those vertices.
bool validate_family(const Graph& g, const DefenseFamily& f,
                     std::string* why = nullptr,
                     const VertexSet* component = nullptr);

struct Deletion {
  int round = 0;
  VertexSet cover;
  Attack attack;  // the attack no surviving cover answers
};

struct FixpointOptions {
  // Delete one cover at a time in a seeded random order instead of the
  // bulk-synchronous rounds.
  std::optional<std::uint64_t> random_schedule;
  int threads = 1;
};

struct FixpointResult {
  std::vector<VertexSet> candidates;
  std::vector<bool> alive;
  std::optional<DefenseFamily> family;  // present iff some cover survives
  std::vector<Deletion> trace;
  int rounds = 0;
};

// Greatest family of the candidates (all minimum covers of g) in which every
// attack is answered inside the family.
FixpointResult spartan_fixpoint(const Graph& g,
                                const std::vector<VertexSet>& candidates,
                                FixpointOptions options = {});

struct Certificate {
  enum class Kind {
    kOddCycle,
    kEdgeInNoPerfectMatching,
    kDeletionTrace,
    kGameOracle,
  };
  Kind kind = Kind::kDeletionTrace;
  int component = 0;
  std::vector<int> odd_cycle;
  std::optional<Edge> edge;
  std::optional<HallWitness> tight_set;
  std::vector<Deletion> trace;
  std::vector<Attack> attacks;  // game oracle: attack sequence
};
std::string to_string(Certificate::Kind k);

struct ComponentVerdict {
  VertexSet vertices;
  bool spartan = false;
  Method method = Method::kFixpoint;
  int mm = 0;
  int mvc = 0;
  int min_covers = 0;
  bool covers_truncated = false;
  std::optional<DefenseFamily> family;  // original vertex indices
  std::optional<Certificate> certificate;
};

struct SpartanVerdict {
  bool spartan = false;
  Method method = Method::kFixpoint;
  std::optional<DefenseFamily> family;  // single-component graphs only
  std::optional<Certificate> certificate;
  std::vector<ComponentVerdict> components;
  // Some component fell back to the game oracle.
  bool flagged = false;
  std::optional<bool> cross_check_agrees;
};

struct DeciderOptions {
  enum class Route { kAuto, kFixpoint, kGame };
  Route route = Route::kAuto;
  bool cross_check = false;
  int cover_cap = kDefaultCoverCap;
  FixpointOptions fixpoint;
  GameOptions game;
};

// Every component must be Spartan. König components are decided by
// bipartiteness and elementarity, the rest by the fixpoint over minimum
// covers, or by the game oracle when the covers were truncated. Requires at
// least two vertices and no isolated vertex. A forced fixpoint route on a
// truncated cover list throws ResourceError; a failed cross-check throws
// IntegrityError.
SpartanVerdict is_spartan(const Graph& g, DeciderOptions options = {});

struct KonigComponent {
  VertexSet vertices;
  int mm = 0;
  int mvc = 0;
  bool konig = false;
  std::optional<bool> elementary;  // bipartite components only
};

struct KonigReport {
  int mm = 0;
  int mvc = 0;
  bool konig = false;
  bool bipartite = false;
  std::optional<OddCycle> odd_cycle;
  bool essentially_elementary = false;
  std::vector<KonigComponent> components;
  // Bipartite and essentially elementary; present for König graphs.
  std::optional<bool> spartan;
};

KonigReport konig_report(const Graph& g);

}  // namespace spartan

#endif  // SPARTAN_DECIDER_H_
