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

#ifndef SPARTAN_TESTS_TEST_UTIL_H_
#define SPARTAN_TESTS_TEST_UTIL_H_

#include <algorithm>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include "spartan/graph.h"

namespace spartan::testing {

inline Graph edges(const std::string& text) { return parse_edge_list(text); }

inline VertexSet labels(const Graph& g, std::initializer_list<const char*> ls) {
  std::vector<int> out;
  for (const char* l : ls) out.push_back(g.require_index(l));
  std::sort(out.begin(), out.end());
  return VertexSet(std::move(out));
}

inline Edge edge(const Graph& g, const char* a, const char* b) {
  return Edge(g.require_index(a), g.require_index(b));
}

inline const char* kDiamond = "a1 a2\na1 b1\na2 b2\na1 b2\na2 b1";
inline const char* kBowtie = "a b\na x\nb x\nc d\nc x\nd x";
inline const char* kC4 = "a b\nb c\nc d\nd a";
inline const char* kC5 = "1 2\n2 3\n3 4\n4 5\n5 1";
inline const char* kC6 = "1 2\n2 3\n3 4\n4 5\n5 6\n6 1";
inline const char* kP3 = "a b\nb c";
inline const char* kP4 = "a b\nb c\nc d";
inline const char* kP5 = "a b\nb c\nc d\nd e";
inline const char* kK2 = "a b";
inline const char* kStar = "c x\nc y\nc z";

// Every graph on vertices 0..n-1 (labels "0".."n-1") given by an edge mask
// over the pairs in lexicographic order.
inline Graph graph_from_pair_mask(int n, unsigned long long m) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
  std::vector<Edge> es;
  int k = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++k) {
      if (m >> k & 1) es.emplace_back(i, j);
    }
  }
  return Graph(names, es);
}

}  // namespace spartan::testing

namespace spartan {

inline void PrintTo(const VertexSet& s, std::ostream* os) {
  *os << "{";
  for (int i = 0; i < s.size(); ++i) *os << (i ? "," : "") << s[i];
  *os << "}";
}

inline void PrintTo(const Edge& e, std::ostream* os) {
  *os << "(" << e.u << "," << e.v << ")";
}

}  // namespace spartan

#endif  // SPARTAN_TESTS_TEST_UTIL_H_
