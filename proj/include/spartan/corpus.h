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

#ifndef SPARTAN_CORPUS_H_
#define SPARTAN_CORPUS_H_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "spartan/graph.h"

namespace spartan {

inline constexpr int kMaxExhaustiveN = 7;

struct NamedGraph {
  std::string name;
  Graph graph;
};

// K2, P3, P4, P5, C4, C5, C6, K1,3, the bowtie and the König graph with a
// triangle (a1 a2 b1 / a1 a2 b2).
std::vector<NamedGraph> fixtures();

// Graph on "0".."n-1" whose edges are the pairs (i < j, lexicographic)
// selected by `mask`. Requires n <= 11.
Graph graph_from_pair_mask(int n, std::uint64_t mask);

// Calls visit(g) for every connected labelled graph on n vertices, in mask
// order. Refuses n > kMaxExhaustiveN.
void for_each_connected(int n, const std::function<void(const Graph&)>& visit);
std::vector<Graph> exhaustive_connected(int n);

struct RandomCorpusSpec {
  int n = 7;
  double p = 0.4;
  int count = 300;
  std::uint64_t seed = 7;
};

// G(n, p) samples, resampled until connected. Deterministic per seed.
std::vector<Graph> random_connected(const RandomCorpusSpec& spec);

}  // namespace spartan

#endif  // SPARTAN_CORPUS_H_
