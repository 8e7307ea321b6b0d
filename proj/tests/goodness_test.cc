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

#include "spartan/goodness.h"

#include <gtest/gtest.h>

#include <random>

#include "spartan/covers.h"
#include "spartan/errors.h"
#include "test_util.h"

namespace spartan {
namespace {

using testing::edges;
using testing::labels;

GuardConfiguration on(const Graph& g, const VertexSet& s) {
  return GuardConfiguration::from_set(g.vertex_count(), s);
}

TEST(WeaklyGood, Examples) {
  Graph p5 = edges(testing::kP5);
  GoodnessResult r = is_weakly_good(p5, on(p5, labels(p5, {"b", "d"})));
  EXPECT_FALSE(r.good);
  ASSERT_TRUE(r.certificate);
  EXPECT_TRUE(validate_certificate(p5, *r.certificate));
  // The cut vertex c is a bad set as well, isolating {a, b}.
  BadSetCertificate cut;
  cut.cover = on(p5, labels(p5, {"b", "d"}));
  cut.bad_set = labels(p5, {"c"});
  cut.component = labels(p5, {"a", "b"});
  EXPECT_TRUE(validate_certificate(p5, cut));

  Graph star = edges(testing::kStar);
  r = is_weakly_good(star, on(star, labels(star, {"c"})));
  EXPECT_FALSE(r.good);
  ASSERT_TRUE(r.certificate);
  EXPECT_EQ(r.certificate->bad_set, labels(star, {"x"}));
  EXPECT_EQ(r.certificate->component, labels(star, {"c", "y", "z"}));

  Graph c4 = edges(testing::kC4);
  EXPECT_TRUE(is_weakly_good(c4, on(c4, labels(c4, {"a", "c"}))).good);
  EXPECT_THROW(is_weakly_good(c4, on(c4, labels(c4, {"a"}))),
               PreconditionError);
}

TEST(StronglyGood, Examples) {
  Graph c4 = edges(testing::kC4);
  EXPECT_TRUE(is_strongly_good(c4, labels(c4, {"a", "c"})).good);
  Graph p5 = edges(testing::kP5);
  GoodnessResult r = is_strongly_good(p5, labels(p5, {"b", "d"}));
  EXPECT_FALSE(r.good);
  ASSERT_TRUE(r.certificate);
  EXPECT_EQ(r.certificate->kind, BadSetCertificate::Kind::kStronglyBad);
  EXPECT_TRUE(validate_certificate(p5, *r.certificate));
}

TEST(StronglyGood, ConfigurationsMayStack) {
  // Two guards on the centre of a star can both step out along the attack
  // and one still covers every edge.
  Graph star = edges(testing::kStar);
  std::vector<int> counts(4, 0);
  counts[star.require_index("c")] = 2;
  GuardConfiguration stacked(counts);
  EXPECT_TRUE(is_weakly_good(star, stacked).good);
  EXPECT_TRUE(is_strongly_good(star, stacked).good);
}

template <typename Fn>
void for_each_connected_graph(int max_n, Fn&& fn) {
  for (int n = 2; n <= max_n; ++n) {
    int pairs_count = n * (n - 1) / 2;
    for (unsigned long long m = 0; m < (1ULL << pairs_count); ++m) {
      Graph g = testing::graph_from_pair_mask(n, m);
      if (is_connected(g)) fn(g);
    }
  }
}

TEST(Goodness, ImplicationOrderAndCutVerticesUpToSix) {
  int covers_checked = 0;
  int weak_not_strong = 0;
  for_each_connected_graph(6, [&](const Graph& g) {
    GoodnessChecker checker(g);
    VertexSet cuts = cut_vertices(g);
    for (const VertexSet& s : enumerate_min_vcs(g).covers) {
      ++covers_checked;
      GoodnessResult weak = checker.weakly_good(on(g, s));
      GoodnessResult strong = checker.strongly_good(s);
      if (strong.good) {
        EXPECT_TRUE(weak.good) << to_edge_list(g);
      }
      if (weak.good && !strong.good) ++weak_not_strong;
      if (!set_difference(cuts, s).empty()) {
        EXPECT_FALSE(weak.good) << to_edge_list(g);
      }
      for (const auto* r : {&weak, &strong}) {
        if (r->certificate) {
          std::string why;
          EXPECT_TRUE(validate_certificate(g, *r->certificate, &why))
              << why << "\n" << to_edge_list(g);
        }
      }
    }
  });
  EXPECT_GT(covers_checked, 30000);
  // The smallest minimum covers separating the two notions have 7 vertices.
  EXPECT_EQ(weak_not_strong, 0);
}

TEST(Goodness, WeaklyGoodButNotStronglyGoodOnSeven) {
  Graph g = edges("0 3\n0 5\n0 6\n1 2\n1 5\n1 6\n2 3\n2 4\n3 4");
  VertexSet s = labels(g, {"0", "1", "2", "4"});
  ASSERT_EQ(mvc(g).size, 4);
  EXPECT_TRUE(is_weakly_good(g, on(g, s)).good);
  GoodnessResult r = is_strongly_good(g, s);
  EXPECT_FALSE(r.good);
  ASSERT_TRUE(r.certificate);
  EXPECT_EQ(r.certificate->bad_set, labels(g, {"3"}));
  EXPECT_EQ(r.certificate->exit_vertex, g.require_index("0"));
  EXPECT_TRUE(validate_certificate(g, *r.certificate));
}

TEST(NecessaryConditions, Examples) {
  Graph star = edges(testing::kStar);
  NecessaryConditionsReport r = necessary_conditions_report(star, 1);
  EXPECT_TRUE(r.spartan_mode);
  EXPECT_EQ(r.checks[0].status, ConditionStatus::kFail);
  EXPECT_EQ(r.checks[0].vertex, star.require_index("x"));
  EXPECT_EQ(r.checks[2].status, ConditionStatus::kFail);
  EXPECT_EQ(r.verdict, "evc > k");

  Graph fn = edges(testing::kDiamond);
  r = necessary_conditions_report(fn, 2);
  EXPECT_EQ(r.checks[0].status, ConditionStatus::kFail);
  EXPECT_EQ(r.checks[0].vertex, fn.require_index("b1"));

  Graph c5 = edges(testing::kC5);
  r = necessary_conditions_report(c5, 3);
  for (const ConditionCheck& c : r.checks) {
    EXPECT_EQ(c.status, ConditionStatus::kPass) << c.key;
  }
  EXPECT_FALSE(r.violated);

  EXPECT_THROW(necessary_conditions_report(c5, 2), PreconditionError);
  EXPECT_THROW(necessary_conditions_report(edges("a b\nc d"), 2),
               PreconditionError);
}

TEST(NecessaryConditions, ConfigurationModeAboveMvc) {
  // evc(P3) = 2: with two guards every vertex can be guarded well.
  Graph p3 = edges(testing::kP3);
  NecessaryConditionsReport r = necessary_conditions_report(p3, 2);
  EXPECT_FALSE(r.spartan_mode);
  EXPECT_EQ(r.checks[0].status, ConditionStatus::kNotApplicable);
  EXPECT_EQ(r.checks[4].status, ConditionStatus::kPass);
  EXPECT_EQ(r.checks[5].status, ConditionStatus::kPass);
  EXPECT_FALSE(r.violated);

  // One guard on K1,3 can never sit on a leaf.
  Graph star = edges(testing::kStar);
  r = necessary_conditions_report(star, 1);
  EXPECT_EQ(r.checks[4].status, ConditionStatus::kFail);
}

TEST(NecessaryConditions, TightIndependentSetFound) {
  // Pendant path a-b attached to a triangle: {a} is independent, not
  // maximal, and |N({a})| = 1.
  Graph g = edges("a b\nb c\nc d\nd b");
  NecessaryConditionsReport r =
      necessary_conditions_report(g, mvc(g).size);
  EXPECT_EQ(r.checks[3].status, ConditionStatus::kFail);
  ASSERT_TRUE(r.checks[3].independent_set);
  EXPECT_EQ(r.checks[3].independent_set->size(),
            r.checks[3].hall->neighborhood.size());
}

}  // namespace
}  // namespace spartan
