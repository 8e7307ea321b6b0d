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

// Command-line front end: mvc, evc, spartan, konig, certify, aux, play and
// selftest. Exit codes: 0 success, 1 refusal (budget or truncation), 2 bad
// input, 3 failed internal check.

#include <chrono>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "spartan/covers.h"
#include "spartan/decider.h"
#include "spartan/defense_graph.h"
#include "spartan/errors.h"
#include "spartan/game.h"
#include "spartan/goodness.h"
#include "spartan/report.h"
#include "spartan/selftest.h"

namespace spartan {
namespace {

constexpr int kExitRefused = 1;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Timings {
 public:
  void start(const std::string& phase) {
    stop();
    phase_ = phase;
    begin_ = std::chrono::steady_clock::now();
  }
  void stop() {
    if (phase_.empty()) return;
    auto ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - begin_)
                  .count();
    json_[phase_] = ms;
    phase_.clear();
  }
  const Json& json() {
    stop();
    return json_;
  }

 private:
  std::string phase_;
  std::chrono::steady_clock::time_point begin_;
  Json json_ = Json::object();
};

VertexSet parse_labels(const Graph& g, const std::string& list,
                       const std::string& flag) {
  std::vector<int> out;
  std::stringstream in(list);
  for (std::string token; std::getline(in, token, ',');) {
    if (token.empty()) continue;
    std::optional<int> v = g.index_of(token);
    if (!v) {
      throw InputError("unknown vertex label '" + token + "' in " + flag);
    }
    out.push_back(*v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return VertexSet(std::move(out));
}

struct Settings {
  std::string file;
  bool timings = false;
  int cap = kDefaultCoverCap;
  std::string method = "auto";
  bool cross_check = false;
  std::int64_t schedule_seed = -1;
  int threads = 1;
  int k = 0;
  std::uint64_t seed = 1;
  int samples = 200000;
  std::string cover_s;
  std::string cover_t;
  SelftestOptions selftest;
  bool json = false;
};

void emit(const std::string& command, const Graph& g, Json result,
          Settings& s, Timings& timings) {
  Json report = make_report(command, g, std::move(result));
  if (s.timings) report["timings"] = timings.json();
  std::cout << report.dump(2) << "\n";
}

int run_graph_command(const std::string& command, Settings& s) {
  Timings timings;
  timings.start("parse");
  Graph g = load_graph_file(s.file);
  timings.start("analysis");

  if (command == "mvc") {
    CoverSet covers = enumerate_min_vcs(g, s.cap);
    emit(command, g, to_json(g, covers, mvc(g).size), s, timings);
  } else if (command == "evc") {
    EvcResult r = evc(g);
    Json result = to_json(g, r);
    Json strategy = Json::array();
    for (const ComponentEvc& c : r.components) {
      if (c.mvc == 0) continue;
      Graph sub = induced_subgraph(g, c.vertices);
      strategy.push_back(game_summary(GuardGame(sub, c.evc)));
    }
    result["strategy"] = strategy;
    emit(command, g, std::move(result), s, timings);
  } else if (command == "spartan") {
    DeciderOptions options;
    options.cover_cap = s.cap;
    options.cross_check = s.cross_check;
    options.fixpoint.threads = s.threads;
    options.game.threads = s.threads;
    if (s.schedule_seed >= 0) {
      options.fixpoint.random_schedule = static_cast<std::uint64_t>(s.schedule_seed);
    }
    if (s.method == "fixpoint") {
      options.route = DeciderOptions::Route::kFixpoint;
    } else if (s.method == "game") {
      options.route = DeciderOptions::Route::kGame;
    }
    emit(command, g, to_json(g, is_spartan(g, options)), s, timings);
  } else if (command == "konig") {
    emit(command, g, to_json(g, konig_report(g)), s, timings);
  } else if (command == "certify") {
    NecessaryConditionsOptions options;
    options.seed = s.seed;
    options.independent_set_samples = s.samples;
    emit(command, g, to_json(g, necessary_conditions_report(g, s.k, options)),
         s, timings);
  } else if (command == "aux") {
    VertexSet a = parse_labels(g, s.cover_s, "--cover-s");
    VertexSet b = parse_labels(g, s.cover_t, "--cover-t");
    emit(command, g, to_json(g, build_aux(g, a, b)), s, timings);
  } else if (command == "play") {
    GuardGame game(g, s.k);
    PlaySession session(game);
    if (!session.banner().empty()) std::cout << session.banner() << "\n";
    std::cout << "guards " << session.position() << "\n";
    std::string line;
    while (!session.finished()) {
      std::cout << "> " << std::flush;
      if (!std::getline(std::cin, line)) break;
      std::cout << session.handle(line) << "\n";
    }
    std::string why;
    if (!session.replay_log(&why)) {
      throw IntegrityError("session transcript failed replay: " + why);
    }
  }
  return 0;
}

int run_selftest_command(Settings& s) {
  SelftestReport report = run_selftest(
      s.selftest, [&](const CriterionResult& c) {
        if (s.json) return;
        std::cout << "criterion " << c.id << " " << (c.pass ? "PASS" : "FAIL")
                  << ": " << c.name << " (" << c.checked << " checked, "
                  << c.failures << " failures)";
        if (!c.detail.empty()) std::cout << " first: " << c.detail;
        std::cout << std::endl;
      });
  if (s.json) {
    std::cout << to_json(report).dump(2) << "\n";
  } else {
    std::cout << (report.pass ? "all criteria passed" : "some criteria failed")
              << " over " << report.graphs << " graphs\n";
  }
  return report.pass ? 0 : kExitRefused;
}

int main_impl(int argc, char** argv) {
  CLI::App app{"Spartan graphs and the eternal vertex cover game"};
  app.require_subcommand(1);
  Settings s;
  app.add_flag("--timings", s.timings, "Add per-phase milliseconds to reports");

  auto file_command = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("file", s.file, "Edge list or JSON graph")->required();
    return sub;
  };
  CLI::App* mvc_cmd = file_command("mvc", "Minimum vertex covers");
  mvc_cmd->add_option("--cap", s.cap, "Maximum covers to list")
      ->check(CLI::PositiveNumber);
  file_command("evc", "Eternal vertex cover number from the game solver");
  CLI::App* spartan_cmd = file_command("spartan", "Decide evc = mvc");
  spartan_cmd->add_option("--method", s.method, "auto, fixpoint or game")
      ->check(CLI::IsMember({"auto", "fixpoint", "game"}));
  spartan_cmd->add_flag("--cross-check", s.cross_check,
                        "Confirm the verdict with the game solver");
  spartan_cmd->add_option("--cap", s.cap, "Minimum-cover enumeration cap")
      ->check(CLI::PositiveNumber);
  spartan_cmd->add_option("--schedule-seed", s.schedule_seed,
                          "Delete covers one at a time in a seeded order")
      ->check(CLI::NonNegativeNumber);
  spartan_cmd->add_option("--threads", s.threads, "Worker threads (0: all)")
      ->check(CLI::NonNegativeNumber);
  file_command("konig", "Konig, bipartite and elementary flags");
  CLI::App* certify_cmd = file_command("certify", "Necessary conditions");
  certify_cmd->add_option("--k", s.k, "Guard count")->required();
  certify_cmd->add_option("--seed", s.seed, "Sampling seed");
  certify_cmd->add_option("--samples", s.samples,
                          "Independent-set samples for large graphs")
      ->check(CLI::NonNegativeNumber);
  CLI::App* aux_cmd = file_command("aux", "Auxiliary graph of two covers");
  aux_cmd->add_option("--cover-s", s.cover_s, "Comma-separated labels")
      ->required();
  aux_cmd->add_option("--cover-t", s.cover_t, "Comma-separated labels")
      ->required();
  CLI::App* play_cmd = file_command("play", "Attack the solver interactively");
  play_cmd->add_option("--guards", s.k, "Guard count")
      ->required()
      ->check(CLI::PositiveNumber);
  CLI::App* selftest_cmd = app.add_subcommand("selftest", "Acceptance suite");
  selftest_cmd->add_option("--max-n", s.selftest.max_n,
                           "Exhaustive corpus up to this many vertices")
      ->check(CLI::Range(2, 7));
  selftest_cmd->add_option("--samples", s.selftest.samples,
                           "Random graphs for each of n = 7, 8")
      ->check(CLI::NonNegativeNumber);
  selftest_cmd->add_option("--seed", s.selftest.seed, "Corpus seed");
  selftest_cmd->add_option("--threads", s.selftest.threads,
                           "Worker threads (0: all)")
      ->check(CLI::NonNegativeNumber);
  selftest_cmd->add_flag("--json", s.json, "Print the report as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n" << app.help();
    return kExitInput;
  }

  try {
    if (selftest_cmd->parsed()) return run_selftest_command(s);
    return run_graph_command(app.get_subcommands().front()->get_name(), s);
  } catch (const EvcBudgetError& e) {
    std::cerr << "refused: " << e.what() << " (evc in [" << e.low() << ", "
              << e.high() << "])\n";
    return kExitRefused;
  } catch (const ResourceError& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kExitRefused;
  } catch (const IntegrityError& e) {
    std::cerr << "internal check failed: " << e.what() << "\n";
    return kExitInternal;
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ValidationError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const PreconditionError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  }
}

}  // namespace
}  // namespace spartan

int main(int argc, char** argv) { return spartan::main_impl(argc, argv); }
