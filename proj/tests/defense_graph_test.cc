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

#include "spartan/defense_graph.h"

#include <gtest/gtest.h>

#include <random>

#include "spartan/covers.h"
#include "spartan/errors.h"
#include "test_util.h"

namespace spartan {
namespace {

using testing::edges;
using testing::labels;

std::vector<int> path_of(const Graph& g, std::initializer_list<const char*> ls) {
  std::vector<int> out;
  for (const char* l : ls) out.push_back(g.require_index(l));
  return out;
}

TEST(AuxGraph, BowtieHasOneRealAndOneHelper) {
  Graph g = edges(testing::kBowtie);
  AuxiliaryGraph aux =
      build_aux(g, labels(g, {"x", "a", "c"}), labels(g, {"x", "b", "c"}));
  EXPECT_EQ(aux.left, labels(g, {"a"}));
  EXPECT_EQ(aux.right, labels(g, {"b"}));
  ASSERT_EQ(aux.colors.size(), 1u);
  EXPECT_EQ(aux.colors[0], labels(g, {"x", "c"}));
  int a = g.require_index("a"), b = g.require_index("b");
  EXPECT_EQ(aux.real_edges, (std::vector<AuxEdge>{{a, b, -1}}));
  EXPECT_EQ(aux.helper_edges, (std::vector<AuxEdge>{{a, b, 0}}));
  EXPECT_EQ(aux.dead_zone, labels(g, {"d"}));
}

TEST(AuxGraph, C4OppositeCoversAreAllReal) {
  Graph g = edges(testing::kC4);
  AuxiliaryGraph aux =
      build_aux(g, labels(g, {"a", "c"}), labels(g, {"b", "d"}));
  EXPECT_EQ(aux.real_edges.size(), 4u);
  EXPECT_TRUE(aux.helper_edges.empty());
  EXPECT_TRUE(aux.colors.empty());
  EXPECT_EQ(all_real_pm(aux).size(), 2u);
}

TEST(AuxGraph, C5ColoursAreSingletons) {
  Graph g = edges(testing::kC5);
  AuxiliaryGraph aux =
      build_aux(g, labels(g, {"1", "3", "5"}), labels(g, {"2", "3", "5"}));
  ASSERT_EQ(aux.colors.size(), 2u);
  EXPECT_EQ(aux.colors[0], labels(g, {"3"}));
  EXPECT_EQ(aux.colors[1], labels(g, {"5"}));
  int one = g.require_index("1"), two = g.require_index("2");
  EXPECT_EQ(aux.real_edges, (std::vector<AuxEdge>{{one, two, -1}}));
  EXPECT_TRUE(aux.helper_edges.empty());
  EXPECT_EQ(all_real_pm(aux), (std::vector<AuxEdge>{{one, two, -1}}));
}

TEST(AuxGraph, RejectsUnequalOrNonCovers) {
  Graph g = edges(testing::kP4);
  EXPECT_THROW(build_aux(g, labels(g, {"b", "c"}), labels(g, {"a", "c", "d"})),
               PreconditionError);
  EXPECT_THROW(build_aux(g, labels(g, {"b", "c"}), labels(g, {"a", "d"})),
               PreconditionError);
}

TEST(CheckDefense, C4SwapsBothGuards) {
  Graph g = edges(testing::kC4);
  VertexSet s = labels(g, {"a", "c"});
  auto r = check_defense(g, s, g.require_index("a"), g.require_index("b"),
                         enumerate_min_vcs(g).covers);
  ASSERT_TRUE(std::holds_alternative<Defense>(r));
  const Defense& d = std::get<Defense>(r);
  EXPECT_EQ(d.target, labels(g, {"b", "d"}));
  EXPECT_EQ(d.condition, 1);
  EXPECT_EQ(d.paths, (std::vector<std::vector<int>>{path_of(g, {"a", "b"}),
                                                    path_of(g, {"c", "d"})}));
}

TEST(CheckDefense, BowtieRoutesThroughCentre) {
  Graph g = edges(testing::kBowtie);
  VertexSet s = labels(g, {"x", "a", "c"});
  auto r = check_defense(g, s, g.require_index("x"), g.require_index("b"),
                         {labels(g, {"x", "b", "c"})});
  ASSERT_TRUE(std::holds_alternative<Defense>(r));
  const Defense& d = std::get<Defense>(r);
  EXPECT_EQ(d.condition, 2);
  EXPECT_EQ(d.paths,
            (std::vector<std::vector<int>>{path_of(g, {"a", "x", "b"})}));
  EXPECT_EQ(move_chains(d.moves),
            (std::vector<std::vector<int>>{path_of(g, {"a", "x", "b"})}));
}

TEST(CheckDefense, P5CannotAnswerMiddleAttack) {
  Graph g = edges(testing::kP5);
  VertexSet s = labels(g, {"b", "d"});
  CoverSet covers = enumerate_min_vcs(g);
  auto r = check_defense(g, s, g.require_index("b"), g.require_index("c"),
                         covers.covers);
  ASSERT_TRUE(std::holds_alternative<DefenseFailure>(r));
  EXPECT_FALSE(std::get<DefenseFailure>(r).reasons.empty());
}

TEST(CheckDefense, AliveMaskSkipsCandidates) {
  Graph g = edges(testing::kC4);
  std::vector<VertexSet> covers = enumerate_min_vcs(g).covers;
  std::vector<bool> alive(covers.size(), false);
  auto r = check_defense(g, labels(g, {"a", "c"}), g.require_index("a"),
                         g.require_index("b"), covers, &alive);
  EXPECT_TRUE(std::holds_alternative<DefenseFailure>(r));
}

TEST(CheckDefense, RejectsNonAttacks) {
  Graph g = edges(testing::kC4);
  VertexSet s = labels(g, {"a", "c"});
  EXPECT_THROW(check_defense(g, s, g.require_index("b"), g.require_index("a"),
                             {}),
               PreconditionError);
  EXPECT_THROW(check_defense(g, s, g.require_index("a"), g.require_index("c"),
                             {}),
               PreconditionError);
}

TEST(Rainbow, ForcedEdgeMustBeReal) {
  Graph g = edges(testing::kC5);
  AuxiliaryGraph aux =
      build_aux(g, labels(g, {"1", "3", "5"}), labels(g, {"2", "3", "5"}));
  RainbowRequest req;
  req.left = g.require_index("1");
  req.right = g.require_index("3");
  EXPECT_THROW(rainbow_pm_with_edge(aux, req), PreconditionError);
}

// Connected random graph on n vertices, as a pair mask.
Graph random_connected(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  while (true) {
    unsigned long long mask = 0;
    for (int k = 0; k < n * (n - 1) / 2; ++k) {
      if (coin(rng)) mask |= 1ull << k;
    }
    Graph g = testing::graph_from_pair_mask(n, mask);
    if (is_connected(g)) return g;
  }
}

struct Tally {
  int requests = 0;
  int met = 0;
  int defenses = 0;
};

void check_pair(const Graph& g, const VertexSet& s, const VertexSet& t,
                Tally& tally) {
  AuxiliaryGraph aux = build_aux(g, s, t);
  std::vector<RainbowRequest> requests;
  for (const AuxEdge& e : aux.real_edges) {
    RainbowRequest req;
    req.left = e.left;
    req.right = e.right;
    requests.push_back(req);
  }
  for (int r : aux.right) {
    for (int w : g.neighbors(r)) {
      int c = aux.color_of(w);
      if (c < 0) continue;
      RainbowRequest req;
      req.mode = RainbowRequest::Mode::kHelperAdjacent;
      req.right = r;
      req.color = c;
      req.via = w;
      requests.push_back(req);
    }
  }
  for (const RainbowRequest& req : requests) {
    ++tally.requests;
    ExhaustiveRainbow oracle = rainbow_pm_exhaustive(aux, req);
    auto fast = rainbow_pm_with_edge(aux, req);
    ASSERT_EQ(fast.has_value(), oracle.any_meeting_request);
    // Minimum covers: a matching meeting the request can always be made
    // rainbow.
    ASSERT_EQ(oracle.rainbow.has_value(), oracle.any_meeting_request);
    if (!fast) continue;
    ++tally.met;
    std::string why;
    ASSERT_TRUE(validate_rainbow(aux, req, *fast, &why)) << why;
    ASSERT_TRUE(validate_rainbow(aux, req, *oracle.rainbow, &why)) << why;
    PathSystem ps = matching_to_paths(g, aux, *fast);
    ASSERT_TRUE(validate_path_system(g, ps, &why)) << why;
  }

  // The matching route agrees with the flow-based crossing test.
  for (int u : s) {
    for (int v : g.neighbors(u)) {
      if (s.contains(v) || !t.contains(v)) continue;
      auto flow = crossing_response(g, GuardConfiguration::from_set(g.vertex_count(), s),
                                    GuardConfiguration::from_set(g.vertex_count(), t),
                                    u, v);
      auto d = check_defense(g, s, u, v, {t});
      ASSERT_EQ(flow.has_value(), std::holds_alternative<Defense>(d))
          << to_edge_list(g) << " u=" << u << " v=" << v;
      if (flow) ++tally.defenses;
    }
  }
}

TEST(RainbowProperty, ReducerMatchesExhaustiveOracle) {
  std::mt19937_64 rng(7);
  Tally tally;
  for (int iter = 0; iter < 250; ++iter) {
    int n = 4 + static_cast<int>(rng() % 6);
    Graph g = random_connected(rng, n, 0.25 + 0.1 * (iter % 4));
    std::vector<VertexSet> covers = enumerate_min_vcs(g).covers;
    for (const VertexSet& s : covers) {
      for (const VertexSet& t : covers) {
        if (s == t) continue;
        check_pair(g, s, t, tally);
        if (HasFatalFailure()) return;
      }
    }
  }
  EXPECT_GT(tally.requests, 1000);
  EXPECT_GT(tally.met, 100);
  EXPECT_GT(tally.defenses, 100);
}

TEST(RainbowProperty, ExhaustiveSmallGraphs) {
  Tally tally;
  for (int n = 2; n <= 6; ++n) {
    const int pairs = n * (n - 1) / 2;
    for (unsigned long long mask = 0; mask < (1ull << pairs); ++mask) {
      Graph g = testing::graph_from_pair_mask(n, mask);
      if (!is_connected(g)) continue;
      std::vector<VertexSet> covers = enumerate_min_vcs(g).covers;
      for (const VertexSet& s : covers) {
        for (const VertexSet& t : covers) {
          if (s == t) continue;
          check_pair(g, s, t, tally);
          if (HasFatalFailure()) return;
        }
      }
    }
  }
  EXPECT_GT(tally.requests, 10000);
}

}  // namespace
}  // namespace spartan
