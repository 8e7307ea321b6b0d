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

#ifndef SPARTAN_COVERS_H_
#define SPARTAN_COVERS_H_

#include <optional>
#include <vector>

#include "spartan/graph.h"

namespace spartan {

inline constexpr int kDefaultCoverCap = 10000;

struct MvcResult {
  int size = 0;
  VertexSet witness;
};

struct CoverSet {
  int size = 0;
  std::vector<VertexSet> covers;  // lexicographic order
  bool truncated = false;
  int cap = kDefaultCoverCap;
};

// Exact minimum vertex cover by branch and bound. Requires n <= 64.
MvcResult mvc(const Graph& g);

// mvc of the induced subgraph G[within].
int mvc_size(const Graph& g, Mask within);

// All minimum vertex covers, stopping once `cap` have been collected
// (truncated is set if more exist).
CoverSet enumerate_min_vcs(const Graph& g, int cap = kDefaultCoverCap);

// Some minimum vertex cover containing v, or nullopt when none does.
std::optional<VertexSet> min_vc_containing(const Graph& g, int v);

// Subset brute force used as a test oracle; n <= 20.
CoverSet enumerate_min_vcs_brute_force(const Graph& g);

}  // namespace spartan

#endif  // SPARTAN_COVERS_H_
