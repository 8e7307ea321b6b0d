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

#ifndef SPARTAN_GAME_H_
#define SPARTAN_GAME_H_

#include <optional>
#include <string>
#include <vector>

#include "spartan/errors.h"
#include "spartan/graph.h"
#include "spartan/reachability.h"

namespace spartan {

inline constexpr long long kDefaultStateBudget = 5'000'000;

// kDefaultStateBudget unless SPARTAN_STATE_BUDGET holds a positive integer.
long long state_budget();

// An attack on the edge from a guarded u to an unguarded v.
struct Attack {
  int u = 0;
  int v = 0;
  friend auto operator<=>(const Attack&, const Attack&) = default;
};

struct Response {
  int target = -1;  // state index
  std::vector<GuardMove> moves;
};

struct GameOptions {
  long long budget = 0;  // 0: state_budget()
  int threads = 1;
};

// Safety game of the eternal vertex cover problem with k guards. States are
// the k-multisets whose support is a vertex cover; everything else is lost
// for the defender. Attacks on edges with both ends guarded are answered by
// a swap that restores the state, so only attacks from a guarded to an
// unguarded endpoint are examined.
class GuardGame {
 public:
  // Requires a connected graph with at least one edge and k >= 1. Throws
  // ResourceError if the state count exceeds the budget.
  GuardGame(const Graph& g, int k, GameOptions options = {});

  const Graph& graph() const { return g_; }
  int guards() const { return k_; }
  bool defender_wins() const { return safe_count_ > 0; }
  int state_count() const { return static_cast<int>(states_.size()); }
  int safe_count() const { return safe_count_; }
  int rounds() const { return rounds_; }
  const GuardConfiguration& state(int i) const { return states_[i]; }
  // Index of a configuration, or -1 when its support is not a cover.
  int index_of(const GuardConfiguration& c) const;

  // 0 for states that survive; otherwise the round (from 1) in which the
  // state was found losing.
  int rank(int i) const { return rank_[i]; }
  bool safe(int i) const { return rank_[i] == 0; }

  // Attacks in canonical order (u ascending, then v).
  std::vector<Attack> attacks(int i) const;

  // Defender's reply: the first safe successor for a safe state, otherwise
  // the successor of largest rank. nullopt when no successor covers G.
  std::optional<Response> respond(int i, Attack a) const;
  // Attacks that defeat state i: each reply leads to a losing state.
  std::vector<Attack> winning_attacks(int i) const;

  // Least safe state, or the losing state of largest rank.
  int initial_state() const;

 private:
  void enumerate_states(long long budget);
  void solve(int threads);
  bool may_step(int from, int to) const;
  std::optional<std::vector<GuardMove>> crossing(int from, int to,
                                                 Attack a) const;

  const Graph& g_;
  int k_;
  std::vector<GuardConfiguration> states_;
  std::vector<Mask> support_;
  std::vector<Mask> reach_;  // closed neighbourhood of the support
  std::vector<int> rank_;
  int safe_count_ = 0;
  int rounds_ = 0;
};

struct StrategyEntry {
  int state = 0;
  Attack attack;
  Response response;
};

// Every (safe state, attack) pair with the defender's reply.
std::vector<StrategyEntry> defender_strategy(const GuardGame& game);

struct AttackStep {
  Attack attack;
  std::optional<Response> response;  // nullopt: the attacker has won
};

// Attack sequence from the defender's best start against the defender's
// most delaying replies. Requires !game.defender_wins().
std::vector<AttackStep> attacker_witness(const GuardGame& game);

struct ComponentEvc {
  VertexSet vertices;
  int mvc = 0;
  int evc = 0;
  int states = 0;  // states of the winning solve
};

struct EvcResult {
  int value = 0;
  int mvc = 0;
  std::vector<ComponentEvc> components;
};

// Thrown when a component exceeds the state budget; [low, high] brackets
// evc of the whole graph from what was solved.
class EvcBudgetError : public ResourceError {
 public:
  EvcBudgetError(const std::string& what, int low, int high)
      : ResourceError(what), low_(low), high_(high) {}
  int low() const { return low_; }
  int high() const { return high_; }

 private:
  int low_;
  int high_;
};

// evc as the sum over components of the least winning k, searched from
// mvc up to 2 mvc. Isolated vertices contribute 0.
EvcResult evc(const Graph& g, GameOptions options = {});

// Defender wins with mvc(g) guards on every component.
bool evc_equals_mvc(const Graph& g, GameOptions options = {});

// Line-oriented attacker session against the solved strategy.
class PlaySession {
 public:
  explicit PlaySession(const GuardGame& game);

  // Warning shown when the defender cannot win with this many guards;
  // empty otherwise.
  std::string banner() const;
  // Current guard positions, "{a,c}" style.
  std::string position() const;
  // Handles one command line; returns the reply text (without newline).
  std::string handle(const std::string& line);
  bool finished() const { return finished_; }
  const GuardConfiguration& configuration() const {
    return game_.state(current_);
  }
  // Each defense as (start, attack, moves, target); all re-validated.
  struct LoggedDefense {
    GuardConfiguration start;
    Attack attack;
    std::vector<GuardMove> moves;
    GuardConfiguration target;
  };
  const std::vector<LoggedDefense>& log() const { return log_; }
  bool replay_log(std::string* why = nullptr) const;

 private:
  const GuardGame& game_;
  int current_;
  bool finished_ = false;
  std::vector<LoggedDefense> log_;
};

}  // namespace spartan

#endif  // SPARTAN_GAME_H_
