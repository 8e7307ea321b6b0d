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

#include "spartan/graph.h"

#include <gtest/gtest.h>

#include <random>

#include "spartan/errors.h"
#include "test_util.h"

namespace spartan {
namespace {

using testing::edges;
using testing::labels;

TEST(ParseEdgeList, PathOfThree) {
  Graph g = edges("a b\nb c");
  EXPECT_EQ(g.vertex_count(), 3);
  EXPECT_EQ(g.labels(), (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {1, 2}}));
}

TEST(ParseEdgeList, DiamondGraph) {
  Graph g = edges(testing::kDiamond);
  EXPECT_EQ(g.vertex_count(), 4);
  EXPECT_EQ(g.edge_count(), 5);
  EXPECT_TRUE(g.adjacent(g.require_index("a1"), g.require_index("a2")));
  EXPECT_FALSE(g.adjacent(g.require_index("b1"), g.require_index("b2")));
}

TEST(ParseEdgeList, Rejections) {
  EXPECT_THROW(edges("a a"), ValidationError);
  EXPECT_THROW(edges("a b\nb a"), ValidationError);
  try {
    edges("a b\n# note\nc");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
  }
}

TEST(ParseEdgeList, CommentsAndBlankLines) {
  Graph g = edges("# header\n\n x y \n#tail\n");
  EXPECT_EQ(g.vertex_count(), 2);
  EXPECT_EQ(g.edge_count(), 1);
}

TEST(ParseJson, StringAndIntegerLabels) {
  Graph g = parse_graph(R"({"vertices": ["p", 2, "q"], "edges": [["p", 2]]})");
  EXPECT_EQ(g.vertex_count(), 3);
  EXPECT_EQ(g.label(1), "2");
  EXPECT_EQ(g.isolated_vertices(), std::vector<int>{2});
  EXPECT_THROW(parse_graph(R"({"vertices": ["p"], "edges": [["p", "z"]]})"),
               ValidationError);
}

TEST(Components, Examples) {
  EXPECT_EQ(connected_components(edges("a b\nb c")).size(), 1u);
  auto two = connected_components(edges("a b\nc d"));
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(two[0], (VertexSet{0, 1}));
  EXPECT_EQ(two[1], (VertexSet{2, 3}));
  EXPECT_TRUE(connected_components(Graph()).empty());
}

TEST(CutVertices, Examples) {
  Graph p5 = edges(testing::kP5);
  EXPECT_EQ(cut_vertices(p5), labels(p5, {"b", "c", "d"}));
  EXPECT_TRUE(cut_vertices(edges(testing::kC4)).empty());
  Graph bowtie = edges(testing::kBowtie);
  EXPECT_EQ(cut_vertices(bowtie), labels(bowtie, {"x"}));
  EXPECT_THROW(cut_vertices(edges("a b\nc d")), PreconditionError);
}

TEST(Bipartition, Examples) {
  Graph c4 = edges(testing::kC4);
  auto r = bipartition(c4);
  ASSERT_TRUE(std::holds_alternative<Bipartition>(r));
  EXPECT_EQ(std::get<Bipartition>(r).side_a, labels(c4, {"a", "c"}));
  EXPECT_EQ(std::get<Bipartition>(r).side_b, labels(c4, {"b", "d"}));

  Graph k2 = edges(testing::kK2);
  auto k = std::get<Bipartition>(bipartition(k2));
  EXPECT_EQ(k.side_a, labels(k2, {"a"}));

  Graph fn = edges(testing::kDiamond);
  auto odd = bipartition(fn);
  ASSERT_TRUE(std::holds_alternative<OddCycle>(odd));
  std::vector<std::string> names;
  for (int v : std::get<OddCycle>(odd).cycle) names.push_back(fn.label(v));
  EXPECT_EQ(names, (std::vector<std::string>{"a1", "a2", "b1"}));
}

// Number of components after deleting v, by BFS.
int components_without(const Graph& g, int v) {
  std::vector<int> keep;
  for (int x = 0; x < g.vertex_count(); ++x) {
    if (x != v) keep.push_back(x);
  }
  return static_cast<int>(
      connected_components(induced_subgraph(g, VertexSet(keep))).size());
}

TEST(GraphProperties, RandomGraphs) {
  std::mt19937_64 rng(11);
  int canonical_cases = 0;
  for (int trial = 0; trial < 400; ++trial) {
    int n = 2 + static_cast<int>(rng() % 7);
    unsigned long long pairs = n * (n - 1) / 2;
    Graph g = testing::graph_from_pair_mask(n, rng() & ((1ULL << pairs) - 1));

    // Serialisation round trip on graphs without isolated vertices.
    if (g.isolated_vertices().empty()) {
      Graph back = parse_edge_list(to_edge_list(g));
      // Exact identity whenever first appearance matches index order.
      if (back.labels() == g.labels()) {
        EXPECT_EQ(to_edge_list(back), to_edge_list(g));
        ++canonical_cases;
      }
      EXPECT_EQ(back.edge_count(), g.edge_count());
      for (const Edge& e : g.edges()) {
        EXPECT_TRUE(back.adjacent(back.require_index(g.label(e.u)),
                                  back.require_index(g.label(e.v))));
      }
    }

    auto parts = bipartition_any(g);
    if (auto* b = std::get_if<Bipartition>(&parts)) {
      EXPECT_TRUE(is_independent(g, b->side_a));
      EXPECT_TRUE(is_independent(g, b->side_b));
      EXPECT_EQ(b->side_a.size() + b->side_b.size(), n);
    } else {
      const auto& cycle = std::get<OddCycle>(parts).cycle;
      ASSERT_EQ(cycle.size() % 2, 1u);
      for (size_t i = 0; i < cycle.size(); ++i) {
        EXPECT_TRUE(g.adjacent(cycle[i], cycle[(i + 1) % cycle.size()]));
      }
    }

    if (!is_connected(g)) continue;
    VertexSet cuts = cut_vertices(g);
    for (int v = 0; v < n; ++v) {
      EXPECT_EQ(cuts.contains(v), components_without(g, v) > 1)
          << to_edge_list(g) << " vertex " << v;
    }
  }
  EXPECT_GT(canonical_cases, 20);
}

TEST(VertexSetTest, Algebra) {
  VertexSet a{1, 3, 5};
  VertexSet b{3, 4};
  EXPECT_EQ(set_union(a, b), (VertexSet{1, 3, 4, 5}));
  EXPECT_EQ(set_intersection(a, b), (VertexSet{3}));
  EXPECT_EQ(set_difference(a, b), (VertexSet{1, 5}));
  EXPECT_EQ(VertexSet::from_mask(a.mask()), a);
  EXPECT_THROW(VertexSet({2, 2}), PreconditionError);
}

}  // namespace
}  // namespace spartan
