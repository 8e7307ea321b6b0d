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

#include "spartan/game.h"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <sstream>

#include "spartan/covers.h"
#include "spartan/errors.h"
#include "spartan/parallel.h"

namespace spartan {

long long state_budget() {
  const char* env = std::getenv("SPARTAN_STATE_BUDGET");
  if (env == nullptr) return kDefaultStateBudget;
  char* end = nullptr;
  long long value = std::strtoll(env, &end, 10);
  if (end == env || *end != '\0' || value <= 0) return kDefaultStateBudget;
  return value;
}

namespace {

Mask closed_neighborhood(const Graph& g, Mask s) {
  Mask out = s;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (s & bit(v)) {
      for (int w : g.neighbors(v)) out |= bit(w);
    }
  }
  return out;
}

Mask mask_of(const GuardConfiguration& c) {
  Mask m = 0;
  for (int v = 0; v < c.vertex_count(); ++v) {
    if (c.count(v) > 0) m |= bit(v);
  }
  return m;
}

// Orders states by support (as a sorted vertex list), then by counts.
bool state_less(const GuardConfiguration& a, const GuardConfiguration& b) {
  VertexSet sa = a.support(), sb = b.support();
  if (sa != sb) {
    return std::lexicographical_compare(sa.begin(), sa.end(), sb.begin(),
                                        sb.end());
  }
  return a < b;
}

}  // namespace

GuardGame::GuardGame(const Graph& g, int k, GameOptions options)
    : g_(g), k_(k) {
  if (k < 1) throw PreconditionError("guard game needs at least one guard");
  if (g.edge_count() == 0 || !is_connected(g)) {
    throw PreconditionError("guard game needs a connected graph with edges");
  }
  if (g.vertex_count() > 64) {
    throw PreconditionError("guard game limited to 64 vertices");
  }
  enumerate_states(options.budget > 0 ? options.budget : state_budget());
  solve(options.threads);
}

void GuardGame::enumerate_states(long long budget) {
  const int n = g_.vertex_count();
  std::vector<int> support;
  std::vector<bool> in(n, false);
  std::vector<int> counts(n, 0);

  auto emit = [&](const std::vector<int>& c) {
    if (static_cast<long long>(states_.size()) >= budget) {
      throw ResourceError("guard game with " + std::to_string(k_) +
                          " guards exceeds the state budget of " +
                          std::to_string(budget));
    }
    states_.emplace_back(c);
  };
  // Spreads `extra` additional guards over support[from..].
  std::function<void(size_t, int)> stack = [&](size_t from, int extra) {
    if (extra == 0) {
      emit(counts);
      return;
    }
    for (size_t i = from; i < support.size(); ++i) {
      ++counts[support[i]];
      stack(i, extra - 1);
      --counts[support[i]];
    }
  };
  std::function<void(int)> choose = [&](int v) {
    if (static_cast<int>(support.size()) > k_) return;
    if (v == n) {
      for (int x : support) counts[x] = 1;
      stack(0, k_ - static_cast<int>(support.size()));
      for (int x : support) counts[x] = 0;
      return;
    }
    bool may_skip = true;
    for (int w : g_.neighbors(v)) {
      if (w < v && !in[w]) may_skip = false;
    }
    in[v] = true;
    support.push_back(v);
    choose(v + 1);
    support.pop_back();
    in[v] = false;
    if (may_skip) choose(v + 1);
  };
  choose(0);

  std::sort(states_.begin(), states_.end(), state_less);
  for (const GuardConfiguration& c : states_) {
    support_.push_back(mask_of(c));
    reach_.push_back(closed_neighborhood(g_, support_.back()));
  }
}

int GuardGame::index_of(const GuardConfiguration& c) const {
  auto it = std::lower_bound(states_.begin(), states_.end(), c, state_less);
  if (it == states_.end() || *it != c) return -1;
  return static_cast<int>(it - states_.begin());
}

std::vector<Attack> GuardGame::attacks(int i) const {
  std::vector<Attack> out;
  for (int u = 0; u < g_.vertex_count(); ++u) {
    if (states_[i].count(u) == 0) continue;
    for (int v : g_.neighbors(u)) {
      if (states_[i].count(v) == 0) out.push_back({u, v});
    }
  }
  return out;
}

bool GuardGame::may_step(int from, int to) const {
  return (support_[to] & ~reach_[from]) == 0 &&
         (support_[from] & ~reach_[to]) == 0;
}

std::optional<std::vector<GuardMove>> GuardGame::crossing(int from, int to,
                                                          Attack a) const {
  if (states_[to].count(a.v) == 0 || !may_step(from, to)) return std::nullopt;
  return crossing_response(g_, states_[from], states_[to], a.u, a.v);
}

void GuardGame::solve(int threads) {
  const int count = state_count();
  rank_.assign(count, 0);
  // Per state and attack: the last successor found safe. Successors that
  // fail the step test never become valid, so scanning resumes from there.
  std::vector<std::vector<int>> cursor(count);
  std::vector<std::vector<Attack>> attack_lists(count);
  for (int i = 0; i < count; ++i) {
    attack_lists[i] = attacks(i);
    cursor[i].assign(attack_lists[i].size(), 0);
  }
  std::vector<char> doomed(count);
  for (int round = 1;; ++round) {
    std::fill(doomed.begin(), doomed.end(), 0);
    parallel_for(count, threads, [&](int i) {
      if (rank_[i] != 0) return;
      for (size_t a = 0; a < attack_lists[i].size(); ++a) {
        int& j = cursor[i][a];
        while (j < count &&
               (rank_[j] != 0 || !crossing(i, j, attack_lists[i][a]))) {
          ++j;
        }
        if (j == count) {
          doomed[i] = 1;
          return;
        }
      }
    });
    int removed = 0;
    for (int i = 0; i < count; ++i) {
      if (doomed[i]) {
        rank_[i] = round;
        ++removed;
      }
    }
    if (removed == 0) {
      rounds_ = round - 1;
      break;
    }
  }
  safe_count_ = static_cast<int>(std::count(rank_.begin(), rank_.end(), 0));
}

std::optional<Response> GuardGame::respond(int i, Attack a) const {
  std::optional<Response> best;
  for (int j = 0; j < state_count(); ++j) {
    if (best && safe(best->target)) break;
    if (best && !safe(j) && rank_[j] <= rank_[best->target]) continue;
    auto moves = crossing(i, j, a);
    if (!moves) continue;
    best = Response{j, std::move(*moves)};
  }
  return best;
}

std::vector<Attack> GuardGame::winning_attacks(int i) const {
  std::vector<Attack> out;
  if (safe(i)) return out;
  for (Attack a : attacks(i)) {
    auto r = respond(i, a);
    if (!r || !safe(r->target)) out.push_back(a);
  }
  return out;
}

int GuardGame::initial_state() const {
  int best = -1;
  auto better = [&](int i) {
    if (best == -1) return true;
    if (safe(i) != safe(best)) return safe(i);
    if (!safe(i) && rank_[i] != rank_[best]) return rank_[i] > rank_[best];
    return states_[i].is_set() && !states_[best].is_set();
  };
  for (int i = 0; i < state_count(); ++i) {
    if (better(i)) best = i;
  }
  return best;
}

std::vector<StrategyEntry> defender_strategy(const GuardGame& game) {
  std::vector<StrategyEntry> out;
  for (int i = 0; i < game.state_count(); ++i) {
    if (!game.safe(i)) continue;
    for (Attack a : game.attacks(i)) {
      auto r = game.respond(i, a);
      if (!r || !game.safe(r->target)) {
        throw IntegrityError("safe state without a safe reply");
      }
      out.push_back({i, a, std::move(*r)});
    }
  }
  return out;
}

std::vector<AttackStep> attacker_witness(const GuardGame& game) {
  if (game.defender_wins()) {
    throw PreconditionError("attacker_witness: the defender wins");
  }
  std::vector<AttackStep> steps;
  int current = game.initial_state();
  while (true) {
    // The attack whose best reply has the lowest rank.
    std::optional<AttackStep> pick;
    for (Attack a : game.attacks(current)) {
      auto r = game.respond(current, a);
      if (!r) {
        pick = AttackStep{a, std::nullopt};
        break;
      }
      if (!pick || game.rank(r->target) < game.rank(pick->response->target)) {
        pick = AttackStep{a, std::move(r)};
      }
    }
    if (!pick) throw IntegrityError("losing state without attacks");
    if (pick->response && game.rank(pick->response->target) >=
                              game.rank(current)) {
      throw IntegrityError("attacker witness does not make progress");
    }
    steps.push_back(*pick);
    if (!pick->response) return steps;
    current = pick->response->target;
  }
}

EvcResult evc(const Graph& g, GameOptions options) {
  EvcResult result;
  std::vector<VertexSet> parts = connected_components(g);
  std::vector<int> mvcs;
  for (const VertexSet& part : parts) {
    mvcs.push_back(part.size() > 1 ? mvc(induced_subgraph(g, part)).size : 0);
  }
  for (size_t c = 0; c < parts.size(); ++c) {
    ComponentEvc comp;
    comp.vertices = parts[c];
    comp.mvc = mvcs[c];
    if (comp.mvc > 0) {
      Graph sub = induced_subgraph(g, parts[c]);
      bool won = false;
      for (int k = comp.mvc; k <= 2 * comp.mvc && !won; ++k) {
        try {
          GuardGame game(sub, k, options);
          if (game.defender_wins()) {
            won = true;
            comp.evc = k;
            comp.states = game.state_count();
          }
        } catch (const ResourceError& e) {
          int low = result.value + k, high = result.value + 2 * comp.mvc;
          for (size_t rest = c + 1; rest < parts.size(); ++rest) {
            low += mvcs[rest];
            high += 2 * mvcs[rest];
          }
          throw EvcBudgetError(e.what(), low, high);
        }
      }
      if (!won) {
        throw IntegrityError("defender loses with 2 mvc guards");
      }
    }
    result.value += comp.evc;
    result.mvc += comp.mvc;
    result.components.push_back(comp);
  }
  if (result.value < result.mvc || result.value > 2 * result.mvc) {
    throw IntegrityError("evc outside [mvc, 2 mvc]");
  }
  return result;
}

bool evc_equals_mvc(const Graph& g, GameOptions options) {
  for (const VertexSet& part : connected_components(g)) {
    if (part.size() < 2) continue;
    Graph sub = induced_subgraph(g, part);
    if (!GuardGame(sub, mvc(sub).size, options).defender_wins()) return false;
  }
  return true;
}

PlaySession::PlaySession(const GuardGame& game)
    : game_(game), current_(game.initial_state()) {}

std::string PlaySession::banner() const {
  if (game_.defender_wins()) return "";
  const int k = game_.guards();
  return "warning: " + std::to_string(k) + (k == 1 ? " guard" : " guards") +
         " cannot defend forever; playing to delay the loss";
}

std::string PlaySession::position() const {
  return describe(game_.graph(), configuration());
}

namespace {

std::string render_moves(const Graph& g, const std::vector<GuardMove>& moves) {
  std::string out;
  for (const GuardMove& m : moves) {
    if (!out.empty()) out += ", ";
    out += g.label(m.from) + "->" + g.label(m.to);
  }
  return out;
}

}  // namespace

std::string PlaySession::handle(const std::string& line) {
  const Graph& g = game_.graph();
  std::istringstream in(line);
  std::vector<std::string> words;
  for (std::string w; in >> w;) words.push_back(w);
  const std::string usage = "error: usage: attack U V | hint | quit";
  if (words.empty()) return usage;
  if (words[0] == "quit" && words.size() == 1) {
    finished_ = true;
    return "bye";
  }
  if (finished_) return "error: the session is over";
  if (words[0] == "hint" && words.size() == 1) {
    std::vector<Attack> wins = game_.winning_attacks(current_);
    if (wins.empty()) return "no attack wins from " + position();
    std::string out = "winning attacks:";
    for (size_t i = 0; i < wins.size(); ++i) {
      int a = std::min(wins[i].u, wins[i].v), b = std::max(wins[i].u, wins[i].v);
      out += (i ? ", " : " ") + g.label(a) + " " + g.label(b);
    }
    return out;
  }
  if (words[0] != "attack" || words.size() != 3) return usage;
  std::optional<int> x = g.index_of(words[1]), y = g.index_of(words[2]);
  if (!x) return "error: unknown vertex '" + words[1] + "'";
  if (!y) return "error: unknown vertex '" + words[2] + "'";
  if (!g.adjacent(*x, *y)) {
    return "error: " + words[1] + "-" + words[2] + " is not an edge";
  }

  const GuardConfiguration& start = configuration();
  if (start.count(*x) > 0 && start.count(*y) > 0) {
    std::vector<GuardMove> moves{{*x, *y}, {*y, *x}};
    std::sort(moves.begin(), moves.end());
    log_.push_back({start, {*x, *y}, moves, start});
    return "swap: " + render_moves(g, moves) + "; guards " + position();
  }
  Attack a = start.count(*x) > 0 ? Attack{*x, *y} : Attack{*y, *x};
  std::optional<Response> r = game_.respond(current_, a);
  if (!r) {
    finished_ = true;
    GuardConfiguration after = start;
    after.add(a.u, -1);
    after.add(a.v, 1);
    for (const Edge& e : g.edges()) {
      if (after.count(e.u) == 0 && after.count(e.v) == 0) {
        return "attacker wins: guard " + g.label(a.u) + "->" + g.label(a.v) +
               " leaves " + g.label(e.u) + "-" + g.label(e.v) + " uncovered";
      }
    }
    throw IntegrityError("no reply although the forced move keeps a cover");
  }
  std::string why;
  if (!validate_defense(g, start, game_.state(r->target), a.u, a.v, r->moves,
                        &why)) {
    throw IntegrityError("strategy reply failed replay: " + why);
  }
  log_.push_back({start, a, r->moves, game_.state(r->target)});
  current_ = r->target;
  return "defended: " + render_moves(g, r->moves) + "; guards " + position();
}

bool PlaySession::replay_log(std::string* why) const {
  for (size_t i = 0; i < log_.size(); ++i) {
    const LoggedDefense& d = log_[i];
    if (i > 0 && log_[i - 1].target != d.start) {
      if (why) *why = "defense " + std::to_string(i) + " starts elsewhere";
      return false;
    }
    if (!validate_defense(game_.graph(), d.start, d.target, d.attack.u,
                          d.attack.v, d.moves, why)) {
      return false;
    }
  }
  return true;
}

}  // namespace spartan
