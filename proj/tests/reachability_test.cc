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

#include "spartan/reachability.h"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "spartan/covers.h"
#include "spartan/errors.h"
#include "spartan/matching.h"
#include "test_util.h"

namespace spartan {
namespace {

using testing::edges;
using testing::labels;

std::vector<std::vector<int>> named_paths(
    const Graph& g, std::initializer_list<std::vector<const char*>> ps) {
  std::vector<std::vector<int>> out;
  for (const auto& p : ps) {
    std::vector<int> path;
    for (const char* l : p) path.push_back(g.require_index(l));
    out.push_back(path);
  }
  return out;
}

GuardConfiguration config(const Graph& g,
                          std::initializer_list<std::pair<const char*, int>> c) {
  std::vector<int> counts(g.vertex_count(), 0);
  for (auto [l, k] : c) counts[g.require_index(l)] = k;
  return GuardConfiguration(counts);
}

// Every configuration reachable from `c` when each guard stays or steps to a
// neighbour; optionally only those where some guard steps u -> v.
std::set<std::vector<int>> one_step(const Graph& g, const GuardConfiguration& c,
                                    int u = -1, int v = -1) {
  std::set<std::vector<int>> out;
  std::vector<int> counts(g.vertex_count(), 0);
  std::vector<std::pair<int, int>> guards;  // (vertex, index)
  for (int x = 0; x < g.vertex_count(); ++x) {
    for (int i = 0; i < c.count(x); ++i) guards.emplace_back(x, i);
  }
  auto rec = [&](auto&& self, size_t k, bool crossed) -> void {
    if (k == guards.size()) {
      if (u == -1 || crossed) out.insert(counts);
      return;
    }
    int x = guards[k].first;
    counts[x] += 1;
    self(self, k + 1, crossed);
    counts[x] -= 1;
    for (int y : g.neighbors(x)) {
      counts[y] += 1;
      self(self, k + 1, crossed || (x == u && y == v));
      counts[y] -= 1;
    }
  };
  rec(rec, 0, false);
  return out;
}

TEST(DisjointPaths, Examples) {
  Graph c5 = edges(testing::kC5);
  auto ps = disjoint_paths(c5, labels(c5, {"3", "5"}), labels(c5, {"2", "4"}),
                           labels(c5, {"1"}), 2);
  ASSERT_TRUE(ps);
  EXPECT_EQ(ps->paths, named_paths(c5, {{"3", "2"}, {"5", "4"}}));
  EXPECT_TRUE(validate_path_system(c5, *ps));

  Graph p4 = edges(testing::kP4);
  EXPECT_FALSE(disjoint_paths(p4, labels(p4, {"a", "b"}),
                              labels(p4, {"c", "d"}), {}, 2));
  auto empty = disjoint_paths(p4, labels(p4, {"a"}), labels(p4, {"d"}), {}, 0);
  ASSERT_TRUE(empty);
  EXPECT_TRUE(empty->paths.empty());
  EXPECT_FALSE(
      disjoint_paths(p4, labels(p4, {"a"}), labels(p4, {"d"}), {}, 2));
}

TEST(Compatible, Examples) {
  Graph c5 = edges(testing::kC5);
  Compatibility c =
      compatible(c5, labels(c5, {"1", "3", "5"}), labels(c5, {"1", "2", "4"}));
  EXPECT_TRUE(c.compatible);
  EXPECT_EQ(c.witness.paths, named_paths(c5, {{"3", "2"}, {"5", "4"}}));

  Graph p4 = edges(testing::kP4);
  EXPECT_FALSE(
      compatible(p4, labels(p4, {"a", "b"}), labels(p4, {"c", "d"})).compatible);
  Compatibility same =
      compatible(p4, labels(p4, {"b", "c"}), labels(p4, {"b", "c"}));
  EXPECT_TRUE(same.compatible);
  EXPECT_TRUE(same.witness.paths.empty());
  EXPECT_THROW(compatible(p4, labels(p4, {"a"}), labels(p4, {"b", "c"})),
               PreconditionError);
}

TEST(CompatibleConfigs, Examples) {
  Graph p3 = edges(testing::kP3);
  Compatibility c =
      compatible_configs(p3, config(p3, {{"a", 1}, {"b", 1}}),
                         config(p3, {{"b", 1}, {"c", 1}}));
  EXPECT_TRUE(c.compatible);
  EXPECT_EQ(c.witness.paths, named_paths(p3, {{"a", "b", "c"}}));

  Graph k2 = edges(testing::kK2);
  Compatibility same = compatible_configs(k2, config(k2, {{"a", 1}, {"b", 1}}),
                                          config(k2, {{"a", 1}, {"b", 1}}));
  EXPECT_TRUE(same.compatible);
  EXPECT_TRUE(same.witness.paths.empty());

  Graph star = edges(testing::kStar);
  Compatibility s = compatible_configs(star, config(star, {{"c", 1}, {"x", 1}}),
                                       config(star, {{"c", 1}, {"y", 1}}));
  EXPECT_TRUE(s.compatible);
  EXPECT_EQ(s.witness.paths, named_paths(star, {{"x", "c", "y"}}));
  EXPECT_TRUE(one_step(star, config(star, {{"c", 1}, {"x", 1}}))
                  .count(config(star, {{"c", 1}, {"y", 1}}).counts()));

  EXPECT_THROW(compatible_configs(k2, config(k2, {{"a", 2}}),
                                  config(k2, {{"b", 1}})),
               PreconditionError);
}

TEST(CompatibleConfigs, MatchesExhaustiveGuardMoves) {
  std::mt19937_64 rng(17);
  int positives = 0;
  for (int trial = 0; trial < 300; ++trial) {
    int n = 2 + static_cast<int>(rng() % 5);
    int pairs_count = n * (n - 1) / 2;
    Graph g = testing::graph_from_pair_mask(
        n, rng() & ((1ULL << pairs_count) - 1));
    int k = 1 + static_cast<int>(rng() % 4);
    std::vector<int> counts(n, 0);
    for (int i = 0; i < k; ++i) counts[rng() % n] += 1;
    GuardConfiguration from(counts);
    auto reachable = one_step(g, from);

    // Compare against every target configuration with the same total.
    std::vector<int> target(n, 0);
    auto rec = [&](auto&& self, int x, int left) -> void {
      if (x == n - 1) {
        target[x] = left;
        GuardConfiguration to(target);
        Compatibility c = compatible_configs(g, from, to);
        ASSERT_EQ(c.compatible, reachable.count(target) > 0)
            << to_edge_list(g) << describe(g, from) << "->" << describe(g, to);
        if (c.compatible) {
          ++positives;
          EXPECT_TRUE(validate_config_paths(g, from, to, c.witness.paths));
          auto end = replay_moves(g, from, path_moves(c.witness.paths));
          ASSERT_TRUE(end);
          EXPECT_EQ(*end, to);
        }
        return;
      }
      for (int c = 0; c <= left; ++c) {
        target[x] = c;
        self(self, x + 1, left - c);
      }
    };
    rec(rec, 0, k);
  }
  EXPECT_GT(positives, 300);
}

TEST(CrossingResponse, MatchesExhaustiveGuardMoves) {
  std::mt19937_64 rng(29);
  int positives = 0;
  for (int trial = 0; trial < 300; ++trial) {
    int n = 2 + static_cast<int>(rng() % 5);
    int pairs_count = n * (n - 1) / 2;
    Graph g = testing::graph_from_pair_mask(
        n, rng() & ((1ULL << pairs_count) - 1));
    if (g.edge_count() == 0) continue;
    int k = 1 + static_cast<int>(rng() % 4);
    std::vector<int> counts(n, 0);
    for (int i = 0; i < k; ++i) counts[rng() % n] += 1;
    GuardConfiguration from(counts);
    Edge e = g.edges()[rng() % g.edge_count()];
    auto [u, v] = rng() % 2 ? std::pair{e.u, e.v} : std::pair{e.v, e.u};
    auto reachable = one_step(g, from, u, v);
    std::vector<int> target(n, 0);
    auto rec = [&](auto&& self, int x, int left) -> void {
      if (x == n - 1) {
        target[x] = left;
        GuardConfiguration to(target);
        auto moves = crossing_response(g, from, to, u, v);
        ASSERT_EQ(moves.has_value(), reachable.count(target) > 0);
        if (moves) {
          ++positives;
          auto end = replay_moves(g, from, *moves);
          ASSERT_TRUE(end);
          EXPECT_EQ(*end, to);
          EXPECT_TRUE(std::count(moves->begin(), moves->end(), GuardMove{u, v}));
        }
        return;
      }
      for (int c = 0; c <= left; ++c) {
        target[x] = c;
        self(self, x + 1, left - c);
      }
    };
    rec(rec, 0, k);
  }
  EXPECT_GT(positives, 100);
}

TEST(CrossingResponse, BowtieChainThroughSharedVertex) {
  Graph g = edges(testing::kBowtie);
  int n = g.vertex_count();
  auto moves = crossing_response(
      g, GuardConfiguration::from_set(n, labels(g, {"x", "a", "c"})),
      GuardConfiguration::from_set(n, labels(g, {"x", "b", "c"})),
      g.require_index("x"), g.require_index("b"));
  ASSERT_TRUE(moves);
  EXPECT_EQ(move_chains(*moves), named_paths(g, {{"a", "x", "b"}}));
}

TEST(MoveChains, CyclesAndChains) {
  Graph c4 = edges(testing::kC4);
  int a = 0, b = 1, c = 2, d = 3;
  auto chains = move_chains({{a, b}, {b, c}, {c, d}, {d, a}});
  EXPECT_EQ(chains, (std::vector<std::vector<int>>{{a, b, c, d, a}}));
  chains = move_chains({{c, d}, {a, b}});
  EXPECT_EQ(chains, (std::vector<std::vector<int>>{{a, b}, {c, d}}));
  (void)c4;
}

TEST(ReplayMoves, RejectsIllegalMoves) {
  Graph p3 = edges(testing::kP3);
  GuardConfiguration s = config(p3, {{"b", 1}});
  std::string why;
  EXPECT_FALSE(replay_moves(p3, s, {{0, 2}}, &why));
  EXPECT_FALSE(replay_moves(p3, s, {{1, 0}, {1, 2}}, &why));
  EXPECT_FALSE(validate_defense(p3, s, config(p3, {{"a", 1}}), 1, 0, {}, &why));
  EXPECT_FALSE(
      validate_defense(p3, s, config(p3, {{"a", 1}}), 1, 0, {{1, 0}}, &why));
  EXPECT_EQ(why, "guards do not cover every edge after the move");
}

TEST(MinCoversCompatible, Examples) {
  auto c5 = min_covers_compatible_check(edges(testing::kC5));
  EXPECT_EQ(c5.covers, 5);
  EXPECT_EQ(c5.pairs, 10);
  EXPECT_TRUE(c5.counterexamples.empty());
  auto c4 = min_covers_compatible_check(edges(testing::kC4));
  EXPECT_EQ(c4.pairs, 1);
  EXPECT_TRUE(c4.counterexamples.empty());
  auto p5 = min_covers_compatible_check(edges(testing::kP5));
  EXPECT_EQ(p5.pairs, 0);
}

TEST(MinCoversCompatible, AllGraphsUpToSix) {
  int pairs = 0;
  for (int n = 2; n <= 6; ++n) {
    int pairs_count = n * (n - 1) / 2;
    for (unsigned long long m = 0; m < (1ULL << pairs_count); ++m) {
      Graph g = testing::graph_from_pair_mask(n, m);
      if (!is_connected(g)) continue;
      CoverSet all = enumerate_min_vcs(g);
      for (size_t i = 0; i < all.covers.size(); ++i) {
        for (size_t j = 0; j < all.covers.size(); ++j) {
          if (i == j) continue;
          const VertexSet& s = all.covers[i];
          const VertexSet& t = all.covers[j];
          Compatibility c = compatible(g, s, t);
          ASSERT_TRUE(c.compatible);
          EXPECT_TRUE(validate_path_system(g, c.witness));
          VertexSet left = set_difference(s, t);
          EXPECT_EQ(
              bipartite_max_matching(g, left, set_difference(t, s)).size(),
              left.size());
          ++pairs;
        }
      }
    }
  }
  EXPECT_GT(pairs, 10000);
}

TEST(CompatibleConfigs, ReducesToSetVersion) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 400; ++trial) {
    int n = 3 + static_cast<int>(rng() % 5);
    int pairs_count = n * (n - 1) / 2;
    Graph g = testing::graph_from_pair_mask(
        n, rng() & ((1ULL << pairs_count) - 1));
    Mask a = rng() & g.all_mask();
    Mask b = rng() & g.all_mask();
    VertexSet s = VertexSet::from_mask(a);
    VertexSet t = VertexSet::from_mask(b);
    if (s.size() != t.size()) continue;
    Compatibility sets = compatible(g, s, t);
    Compatibility configs =
        compatible_configs(g, GuardConfiguration::from_set(n, s),
                           GuardConfiguration::from_set(n, t));
    EXPECT_EQ(sets.compatible, configs.compatible);
    if (sets.compatible) {
      EXPECT_EQ(sets.witness.paths, configs.witness.paths);
      EXPECT_TRUE(validate_path_system(g, sets.witness));
    }
  }
}

}  // namespace
}  // namespace spartan
