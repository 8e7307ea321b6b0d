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

#include "spartan/corpus.h"

#include <random>

#include "spartan/errors.h"

namespace spartan {

std::vector<NamedGraph> fixtures() {
  const std::pair<const char*, const char*> table[] = {
      {"K2", "a b"},
      {"P3", "a b\nb c"},
      {"P4", "a b\nb c\nc d"},
      {"P5", "a b\nb c\nc d\nd e"},
      {"C4", "a b\nb c\nc d\nd a"},
      {"C5", "1 2\n2 3\n3 4\n4 5\n5 1"},
      {"C6", "1 2\n2 3\n3 4\n4 5\n5 6\n6 1"},
      {"K13", "c x\nc y\nc z"},
      {"bowtie", "a b\na x\nb x\nc d\nc x\nd x"},
      {"diamond", "a1 a2\na1 b1\na2 b2\na1 b2\na2 b1"},
  };
  std::vector<NamedGraph> out;
  for (const auto& [name, text] : table) {
    out.push_back({name, parse_edge_list(text)});
  }
  return out;
}

Graph graph_from_pair_mask(int n, std::uint64_t mask) {
  if (n < 1 || n > 11) {
    throw PreconditionError("graph_from_pair_mask needs 1 <= n <= 11");
  }
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
  std::vector<Edge> edges;
  int k = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++k) {
      if (mask >> k & 1) edges.emplace_back(i, j);
    }
  }
  return Graph(names, edges);
}

void for_each_connected(int n,
                        const std::function<void(const Graph&)>& visit) {
  if (n < 1 || n > kMaxExhaustiveN) {
    throw PreconditionError("exhaustive corpus limited to 1 <= n <= " +
                            std::to_string(kMaxExhaustiveN));
  }
  const int pairs = n * (n - 1) / 2;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
    Graph g = graph_from_pair_mask(n, mask);
    if (is_connected(g)) visit(g);
  }
}

std::vector<Graph> exhaustive_connected(int n) {
  std::vector<Graph> out;
  for_each_connected(n, [&](const Graph& g) { out.push_back(g); });
  return out;
}

std::vector<Graph> random_connected(const RandomCorpusSpec& spec) {
  if (spec.n < 1 || spec.n > 11 || spec.p <= 0 || spec.p > 1 ||
      spec.count < 0) {
    throw PreconditionError("random corpus needs 1 <= n <= 11 and 0 < p <= 1");
  }
  std::mt19937_64 rng(spec.seed);
  const int pairs = spec.n * (spec.n - 1) / 2;
  std::vector<Graph> out;
  while (static_cast<int>(out.size()) < spec.count) {
    std::uint64_t mask = 0;
    for (int k = 0; k < pairs; ++k) {
      // 53 random bits as a uniform double in [0, 1).
      double x = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (x < spec.p) mask |= std::uint64_t{1} << k;
    }
    Graph g = graph_from_pair_mask(spec.n, mask);
    if (is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace spartan
