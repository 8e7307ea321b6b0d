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

#include "spartan/selftest.h"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>

#include "spartan/corpus.h"
#include "spartan/covers.h"
#include "spartan/decider.h"
#include "spartan/defense_graph.h"
#include "spartan/errors.h"
#include "spartan/game.h"
#include "spartan/goodness.h"
#include "spartan/parallel.h"

namespace spartan {

namespace {

constexpr int kCriteria = 8;

const char* const kNames[kCriteria + 1] = {
    "",
    "decider verdict equals (evc == mvc)",
    "Konig graphs: Spartan iff bipartite and essentially elementary",
    "minimum covers pairwise joined by a real perfect matching",
    "necessary conditions hold on Spartan graphs",
    "strongly good implies weakly good; a cover missing a cut vertex is "
    "weakly bad",
    "rainbow reducer agrees with exhaustive matching search",
    "fixed values",
    "defenses replay as legal moves",
};

struct Tally {
  long long checked = 0;
  long long failures = 0;
  std::string detail;
  double seconds = 0;

  void fail(const std::string& what) {
    ++failures;
    if (detail.empty()) detail = what;
  }
  void merge(const Tally& o) {
    checked += o.checked;
    failures += o.failures;
    seconds += o.seconds;
    if (detail.empty()) detail = o.detail;
  }
};

using Clock = std::chrono::steady_clock;

double since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string name_of(const Graph& g) {
  std::string out;
  for (const Edge& e : g.edges()) {
    if (!out.empty()) out += ",";
    out += g.label(e.u) + "-" + g.label(e.v);
  }
  return "[" + out + "]";
}

// Runs one criterion body, turning escaped errors into failures.
template <typename Fn>
void run_section(Tally& t, const Graph& g, Fn&& body) {
  Clock::time_point start = Clock::now();
  try {
    body();
  } catch (const std::exception& e) {
    t.fail(name_of(g) + ": " + e.what());
  }
  t.seconds += since(start);
}

struct Outcome {
  Tally t[kCriteria + 1];
};

void rainbow_instances(const Graph& g, const std::vector<VertexSet>& covers,
                       Tally& t) {
  for (const VertexSet& s : covers) {
    for (const VertexSet& target : covers) {
      if (s == target || set_difference(s, target).size() > 10) continue;
      AuxiliaryGraph aux = build_aux(g, s, target);
      for (int u : s) {
        for (int v : g.neighbors(u)) {
          if (s.contains(v) || !target.contains(v)) continue;
          RainbowRequest req;
          req.right = v;
          if (!target.contains(u)) {
            req.left = u;
          } else {
            req.mode = RainbowRequest::Mode::kHelperAdjacent;
            req.color = aux.color_of(u);
            req.via = u;
          }
          ++t.checked;
          auto fast = rainbow_pm_with_edge(aux, req);
          ExhaustiveRainbow slow = rainbow_pm_exhaustive(aux, req);
          std::string why;
          if (fast.has_value() != slow.any_meeting_request) {
            t.fail(name_of(g) + ": reducer and enumeration disagree");
          } else if (fast && !validate_rainbow(aux, req, *fast, &why)) {
            t.fail(name_of(g) + ": " + why);
          }
        }
      }
    }
  }
}

Outcome examine(const Graph& g, bool small, std::uint64_t seed) {
  Outcome out;
  const int m = mvc(g).size;
  std::optional<SpartanVerdict> verdict;
  std::optional<GuardGame> game;
  bool oracle = false;

  run_section(out.t[1], g, [&] {
    ++out.t[1].checked;
    verdict = is_spartan(g);
    game.emplace(g, m);
    oracle = game->defender_wins();
    if (verdict->spartan != oracle) {
      out.t[1].fail(name_of(g) + ": decider says " +
                    (verdict->spartan ? "Spartan" : "not Spartan") +
                    ", game oracle disagrees");
    }
  });
  if (!verdict || !game) return out;

  std::optional<SpartanVerdict> forced;
  if (matching_number(g) == m) {
    run_section(out.t[2], g, [&] {
      ++out.t[2].checked;
      KonigReport k = konig_report(g);
      DeciderOptions fixpoint;
      fixpoint.route = DeciderOptions::Route::kFixpoint;
      forced = is_spartan(g, fixpoint);
      if (!k.spartan || forced->spartan != *k.spartan ||
          verdict->spartan != *k.spartan || oracle != *k.spartan) {
        out.t[2].fail(name_of(g) + ": fixpoint, Konig test and oracle differ");
      }
    });
  }

  if (small) {
    run_section(out.t[3], g, [&] {
      PairwiseCompatibilityReport r = min_covers_compatible_check(g);
      out.t[3].checked += r.pairs;
      for (size_t i = 0; i < r.counterexamples.size(); ++i) {
        out.t[3].fail(name_of(g) + ": two covers without a real matching");
      }
    });
  }

  if (oracle) {
    run_section(out.t[4], g, [&] {
      ++out.t[4].checked;
      NecessaryConditionsReport r = necessary_conditions_report(g, m);
      if (r.violated || r.partial) {
        std::string keys;
        for (const ConditionCheck& c : r.checks) {
          if (c.status == ConditionStatus::kFail ||
              c.status == ConditionStatus::kPartial) {
            keys += " " + c.key;
          }
        }
        out.t[4].fail(name_of(g) + ":" + keys);
      }
    });
  }

  CoverSet covers = enumerate_min_vcs(g);
  if (small) {
    run_section(out.t[5], g, [&] {
      GoodnessChecker checker(g);
      const VertexSet cuts = cut_vertices(g);
      for (const VertexSet& c : covers.covers) {
        ++out.t[5].checked;
        bool strong = checker.strongly_good(c).good;
        bool weak =
            checker.weakly_good(GuardConfiguration::from_set(g.vertex_count(), c))
                .good;
        if (strong && !weak) {
          out.t[5].fail(name_of(g) + ": strongly good but weakly bad cover");
        }
        if (weak && set_difference(cuts, c).size() > 0) {
          out.t[5].fail(name_of(g) + ": weakly good cover misses a cut vertex");
        }
      }
    });
  }

  run_section(out.t[6], g, [&] { rainbow_instances(g, covers.covers, out.t[6]); });

  run_section(out.t[8], g, [&] {
    for (const std::optional<SpartanVerdict>* v : {&verdict, &forced}) {
      if (!*v || !(**v).family) continue;
      out.t[8].checked += static_cast<long long>((**v).family->transitions.size());
      std::string why;
      if (!validate_family(g, *(**v).family, &why)) {
        out.t[8].fail(name_of(g) + ": " + why);
      }
    }
    if (!oracle) return;
    PlaySession session(*game);
    std::mt19937_64 rng(seed);
    for (int i = 0; i < 12; ++i) {
      const Edge& e = g.edges()[rng() % g.edges().size()];
      session.handle("attack " + g.label(e.u) + " " + g.label(e.v));
    }
    out.t[8].checked += static_cast<long long>(session.log().size());
    std::string why;
    if (session.finished() || !session.replay_log(&why)) {
      out.t[8].fail(name_of(g) + ": play session " + why);
    }
  });
  return out;
}

Tally fixed_values() {
  Tally t;
  std::map<std::string, Graph> named;
  for (NamedGraph& f : fixtures()) named.emplace(f.name, std::move(f.graph));
  auto expect = [&](const std::string& what, auto&& predicate) {
    Clock::time_point start = Clock::now();
    ++t.checked;
    bool ok = false;
    try {
      ok = predicate();
    } catch (const std::exception& e) {
      t.fail(what + ": " + e.what());
      return;
    }
    double s = since(start);
    t.seconds += s;
    if (!ok) t.fail(what);
    if (s >= 1.0) t.fail(what + " took " + std::to_string(s) + " s");
  };
  expect("evc(K2) = 1", [&] { return evc(named.at("K2")).value == 1; });
  expect("evc(P3) = 2", [&] { return evc(named.at("P3")).value == 2; });
  expect("evc(C4) = 2", [&] { return evc(named.at("C4")).value == 2; });
  expect("evc(C5) = 3", [&] { return evc(named.at("C5")).value == 3; });
  expect("diamond graph not Spartan, evc > 2", [&] {
    const Graph& g = named.at("diamond");
    return !is_spartan(g).spartan && evc(g).value > 2;
  });
  expect("P5 not Spartan", [&] { return !is_spartan(named.at("P5")).spartan; });
  return t;
}

}  // namespace

SelftestReport run_selftest(
    const SelftestOptions& options,
    const std::function<void(const CriterionResult&)>& on_result) {
  if (options.max_n < 2 || options.max_n > kMaxExhaustiveN ||
      options.samples < 0) {
    throw PreconditionError("selftest needs 2 <= max-n <= " +
                            std::to_string(kMaxExhaustiveN) +
                            " and samples >= 0");
  }
  SelftestReport report;
  report.options = options;

  struct Item {
    int n;
    std::uint64_t mask;
  };
  std::vector<Item> items;
  for (int n = 2; n <= options.max_n; ++n) {
    const int pairs = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
      items.push_back({n, mask});
    }
  }
  const size_t exhaustive = items.size();
  std::vector<Graph> sampled;
  for (int n : {7, 8}) {
    RandomCorpusSpec spec{n, options.p, options.samples,
                          options.seed + static_cast<std::uint64_t>(n)};
    for (Graph& g : random_connected(spec)) sampled.push_back(std::move(g));
  }
  const int total = static_cast<int>(exhaustive + sampled.size());

  std::vector<Outcome> outcomes(total);
  std::vector<char> used(total, 0);
  parallel_for(total, options.threads, [&](int i) {
    const std::uint64_t seed = options.seed * 1000003u + static_cast<std::uint64_t>(i);
    if (static_cast<size_t>(i) < exhaustive) {
      Graph g = graph_from_pair_mask(items[i].n, items[i].mask);
      if (!is_connected(g)) return;
      outcomes[i] = examine(g, items[i].n <= 6, seed);
    } else {
      outcomes[i] = examine(sampled[i - exhaustive], false, seed);
    }
    used[i] = 1;
  });

  Tally tallies[kCriteria + 1];
  for (int i = 0; i < total; ++i) {
    if (!used[i]) continue;
    ++report.graphs;
    for (int c = 1; c <= kCriteria; ++c) tallies[c].merge(outcomes[i].t[c]);
  }
  tallies[7] = fixed_values();

  report.pass = true;
  for (int c = 1; c <= kCriteria; ++c) {
    CriterionResult r;
    r.id = c;
    r.name = kNames[c];
    r.checked = tallies[c].checked;
    r.failures = tallies[c].failures;
    r.detail = tallies[c].detail;
    r.seconds = tallies[c].seconds;
    r.pass = r.failures == 0 && r.checked > 0;
    report.pass = report.pass && r.pass;
    if (on_result) on_result(r);
    report.criteria.push_back(std::move(r));
  }
  return report;
}

}  // namespace spartan
