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

#include "spartan/covers.h"

#include <gtest/gtest.h>

#include <bit>
#include <random>

#include "test_util.h"

namespace spartan {
namespace {

using testing::edges;
using testing::labels;

// Independent oracle: scan every subset.
std::vector<VertexSet> subsets_min_covers(const Graph& g) {
  int n = g.vertex_count();
  int best = n + 1;
  std::vector<VertexSet> out;
  for (Mask m = 0; m < (Mask{1} << n); ++m) {
    bool covers = true;
    for (const Edge& e : g.edges()) {
      if (!(m >> e.u & 1) && !(m >> e.v & 1)) covers = false;
    }
    if (!covers) continue;
    int c = std::popcount(m);
    if (c < best) {
      best = c;
      out.clear();
    }
    if (c == best) out.push_back(VertexSet::from_mask(m));
  }
  std::sort(out.begin(), out.end());
  return out;
}

TEST(Mvc, Examples) {
  Graph fn = edges(testing::kDiamond);
  MvcResult r = mvc(fn);
  EXPECT_EQ(r.size, 2);
  EXPECT_EQ(r.witness, labels(fn, {"a1", "a2"}));
  EXPECT_EQ(mvc(edges(testing::kC5)).size, 3);
  EXPECT_EQ(mvc(edges(testing::kK2)).size, 1);
  EXPECT_EQ(mvc(Graph({"solo"}, {})).size, 0);
}

TEST(EnumerateMinVcs, Examples) {
  Graph c4 = edges(testing::kC4);
  CoverSet c = enumerate_min_vcs(c4);
  EXPECT_EQ(c.size, 2);
  EXPECT_FALSE(c.truncated);
  EXPECT_EQ(c.covers, (std::vector<VertexSet>{labels(c4, {"a", "c"}),
                                              labels(c4, {"b", "d"})}));
  Graph p5 = edges(testing::kP5);
  EXPECT_EQ(enumerate_min_vcs(p5).covers,
            std::vector<VertexSet>{labels(p5, {"b", "d"})});
  Graph fn = edges(testing::kDiamond);
  EXPECT_EQ(enumerate_min_vcs(fn).covers,
            std::vector<VertexSet>{labels(fn, {"a1", "a2"})});
  EXPECT_EQ(enumerate_min_vcs(edges(testing::kC5)).covers.size(), 5u);
}

TEST(EnumerateMinVcs, CapTruncates) {
  CoverSet c = enumerate_min_vcs(edges(testing::kC5), 3);
  EXPECT_TRUE(c.truncated);
  EXPECT_EQ(c.covers.size(), 3u);
  EXPECT_EQ(c.cap, 3);
}

TEST(MinVcContaining, Examples) {
  Graph p3 = edges(testing::kP3);
  EXPECT_FALSE(min_vc_containing(p3, p3.require_index("a")));
  Graph c4 = edges(testing::kC4);
  EXPECT_EQ(min_vc_containing(c4, c4.require_index("a")),
            labels(c4, {"a", "c"}));
  Graph fn = edges(testing::kDiamond);
  EXPECT_FALSE(min_vc_containing(fn, fn.require_index("b1")));
}

TEST(EnumerateMinVcs, ExhaustiveUpToSix) {
  int graphs = 0;
  for (int n = 1; n <= 6; ++n) {
    int pairs_count = n * (n - 1) / 2;
    for (unsigned long long m = 0; m < (1ULL << pairs_count); ++m) {
      Graph g = testing::graph_from_pair_mask(n, m);
      if (!is_connected(g)) continue;
      ++graphs;
      auto expected = subsets_min_covers(g);
      CoverSet got = enumerate_min_vcs(g);
      ASSERT_EQ(got.covers, expected) << to_edge_list(g);
      EXPECT_EQ(got.size, expected.front().size());
      EXPECT_EQ(mvc(g).size, got.size);
      for (const VertexSet& c : got.covers) {
        EXPECT_TRUE(is_vertex_cover(g, c));
      }
      for (int v = 0; v < n; ++v) {
        bool in_some = std::any_of(expected.begin(), expected.end(),
                                   [&](const VertexSet& c) {
                                     return c.contains(v);
                                   });
        auto with_v = min_vc_containing(g, v);
        ASSERT_EQ(with_v.has_value(), in_some);
        if (with_v) {
          EXPECT_TRUE(with_v->contains(v));
          EXPECT_TRUE(std::binary_search(expected.begin(), expected.end(),
                                         *with_v));
        }
      }
    }
  }
  EXPECT_EQ(graphs, 1 + 1 + 4 + 38 + 728 + 26704);
}

TEST(EnumerateMinVcs, RandomLargerGraphs) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 9 + static_cast<int>(rng() % 3);
    int pairs_count = n * (n - 1) / 2;
    unsigned long long mask = 0;
    for (int k = 0; k < pairs_count; ++k) {
      if (rng() % 4 == 0) mask |= 1ULL << k;
    }
    Graph g = testing::graph_from_pair_mask(n, mask);
    EXPECT_EQ(enumerate_min_vcs(g).covers, subsets_min_covers(g));
  }
}

}  // namespace
}  // namespace spartan
