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

#include "spartan/report.h"

#include <gtest/gtest.h>

#include "spartan/corpus.h"
#include "test_util.h"

namespace spartan {
namespace {

using testing::edges;

Json reload(const Json& j) { return Json::parse(j.dump()); }

Json spartan_report(const Graph& g, DeciderOptions options = {}) {
  return reload(make_report("spartan", g, to_json(g, is_spartan(g, options))));
}

TEST(Report, FixtureVerdictsRevalidate) {
  for (const NamedGraph& f : fixtures()) {
    for (auto route : {DeciderOptions::Route::kAuto,
                       DeciderOptions::Route::kFixpoint,
                       DeciderOptions::Route::kGame}) {
      DeciderOptions options;
      options.route = route;
      std::string why;
      EXPECT_TRUE(validate_report(f.graph, spartan_report(f.graph, options),
                                  &why))
          << f.name << ": " << why;
    }
  }
}

TEST(Report, MultiComponentVerdict) {
  Graph g = edges("a b\nc d\nd e\ne c\nf g\ng h");
  Json r = spartan_report(g);
  EXPECT_EQ(r["result"]["method"], "perComponent");
  EXPECT_TRUE(r["result"]["family"].is_null());
  std::string why;
  EXPECT_TRUE(validate_report(g, r, &why)) << why;
  EXPECT_EQ(r["result"]["certificate"]["component"], 2);
}

TEST(Report, TamperedFamilyIsRejected) {
  Graph g = edges(testing::kC4);
  Json r = spartan_report(g);
  Json& moves = r["result"]["family"]["transitions"][0]["moves"];
  moves.erase(moves.size() - 1);
  std::string why;
  EXPECT_FALSE(validate_report(g, r, &why));
  EXPECT_FALSE(why.empty());
}

TEST(Report, TamperedCertificatesAreRejected) {
  Graph diamond = edges(testing::kDiamond);
  Json r = spartan_report(diamond);
  r["result"]["certificate"]["oddCycle"] = Json::array({"a1", "b1", "b2"});
  EXPECT_FALSE(validate_report(diamond, r));

  Graph star = edges(testing::kStar);
  Json s = spartan_report(star);
  ASSERT_EQ(s["result"]["certificate"]["kind"], "edgeInNoPerfectMatching");
  EXPECT_TRUE(validate_report(star, s));

  Graph c4 = edges(testing::kC4);
  Json e = spartan_report(c4);
  e["result"]["certificate"] = {{"kind", "edgeInNoPerfectMatching"},
                                {"component", 0},
                                {"edge", {"a", "b"}},
                                {"tightSet", nullptr}};
  EXPECT_FALSE(validate_report(c4, e));
}

TEST(Report, DeletionTraceIsReplayed) {
  Graph g = edges(testing::kP5);
  DeciderOptions forced;
  forced.route = DeciderOptions::Route::kFixpoint;
  Json r = spartan_report(g, forced);
  ASSERT_EQ(r["result"]["certificate"]["kind"], "deletionTrace");
  std::string why;
  EXPECT_TRUE(validate_report(g, r, &why)) << why;
  r["result"]["certificate"]["trace"][0]["attack"] = Json::array({"b", "c"});
  r["result"]["components"][0]["certificate"] = r["result"]["certificate"];
  EXPECT_TRUE(validate_report(g, r, &why)) << why;
  r["result"]["certificate"]["trace"][0]["attack"] = Json::array({"a", "b"});
  EXPECT_FALSE(validate_report(g, r));
}

TEST(Report, InputEchoMustMatch) {
  Graph g = edges(testing::kC4);
  Json r = spartan_report(g);
  EXPECT_FALSE(validate_report(edges(testing::kC5), r));
}

TEST(Report, CertifyBadSetsRevalidate) {
  Graph g = edges(testing::kStar);
  Json r = reload(make_report("certify", g,
                              to_json(g, necessary_conditions_report(g, 1))));
  bool any = false;
  for (const Json& c : r["result"]["checks"]) any |= c.contains("badSet");
  EXPECT_TRUE(any);
  std::string why;
  EXPECT_TRUE(validate_report(g, r, &why)) << why;
  for (Json& c : r["result"]["checks"]) {
    if (c.contains("badSet")) c["badSet"]["badSet"] = Json::array({"c"});
  }
  EXPECT_FALSE(validate_report(g, r));
}

TEST(Report, StrategyExport) {
  Graph k2 = edges(testing::kK2);
  Json s = to_json(k2, is_spartan(k2))["strategy"];
  EXPECT_EQ(s["initial"], Json::array({"a"}));
  EXPECT_EQ(s["states"], 2);
  ASSERT_EQ(s["transitions"].size(), 2u);
  EXPECT_EQ(s["transitions"][0]["moves"], Json::parse(R"([["a","b"]])"));

  Graph c4 = edges(testing::kC4);
  Json t = to_json(c4, is_spartan(c4))["strategy"];
  EXPECT_EQ(t["states"], 2);
  EXPECT_EQ(t["transitions"].size(), 8u);
}

TEST(ReportProperty, SmallGraphVerdictsRevalidate) {
  int checked = 0;
  for (int n = 2; n <= 5; ++n) {
    for_each_connected(n, [&](const Graph& g) {
      DeciderOptions forced;
      forced.route = DeciderOptions::Route::kFixpoint;
      std::string why;
      ASSERT_TRUE(validate_report(g, spartan_report(g), &why))
          << to_edge_list(g) << why;
      ASSERT_TRUE(validate_report(g, spartan_report(g, forced), &why))
          << to_edge_list(g) << why;
      ++checked;
    });
  }
  EXPECT_EQ(checked, 1 + 4 + 38 + 728);
}

}  // namespace
}  // namespace spartan
