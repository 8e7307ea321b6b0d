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

#include "spartan/decider.h"

#include <algorithm>
#include <map>
#include <random>

#include "spartan/defense_graph.h"
#include "spartan/errors.h"
#include "spartan/parallel.h"

namespace spartan {

std::string to_string(Method m) {
  switch (m) {
    case Method::kFixpoint:
      return "fixpoint";
    case Method::kKonig:
      return "konig";
    case Method::kGameOracle:
      return "gameOracle";
    case Method::kPerComponent:
      return "perComponent";
  }
  return "unknown";
}

std::string to_string(Certificate::Kind k) {
  switch (k) {
    case Certificate::Kind::kOddCycle:
      return "oddCycle";
    case Certificate::Kind::kEdgeInNoPerfectMatching:
      return "edgeInNoPerfectMatching";
    case Certificate::Kind::kDeletionTrace:
      return "deletionTrace";
    case Certificate::Kind::kGameOracle:
      return "gameOracle";
  }
  return "unknown";
}

namespace {

std::vector<Attack> attacks_on(const Graph& g, const VertexSet& s) {
  std::vector<Attack> out;
  for (int u : s) {
    for (int v : g.neighbors(u)) {
      if (!s.contains(v)) out.push_back({u, v});
    }
  }
  return out;
}

struct CoverCheck {
  std::optional<Attack> failed;
  std::vector<Transition> transitions;  // `to` indexes the candidates
};

CoverCheck check_cover(const Graph& g, const std::vector<VertexSet>& candidates,
                       const std::vector<bool>& alive, int i) {
  CoverCheck out;
  for (Attack a : attacks_on(g, candidates[i])) {
    auto r = check_defense(g, candidates[i], a.u, a.v, candidates, &alive);
    if (!std::holds_alternative<Defense>(r)) {
      out.failed = a;
      out.transitions.clear();
      return out;
    }
    Defense& d = std::get<Defense>(r);
    out.transitions.push_back(
        {i, a, d.target_index, d.condition, std::move(d.paths),
         std::move(d.moves)});
  }
  return out;
}

}  // namespace

FixpointResult spartan_fixpoint(const Graph& g,
                                const std::vector<VertexSet>& candidates,
                                FixpointOptions options) {
  FixpointResult result;
  result.candidates = candidates;
  const int count = static_cast<int>(candidates.size());
  result.alive.assign(count, true);
  std::vector<CoverCheck> checks(count);

  if (!options.random_schedule) {
    while (true) {
      ++result.rounds;
      const std::vector<bool> snapshot = result.alive;
      parallel_for(count, options.threads, [&](int i) {
        if (snapshot[i]) checks[i] = check_cover(g, candidates, snapshot, i);
      });
      bool deleted = false;
      for (int i = 0; i < count; ++i) {
        if (snapshot[i] && checks[i].failed) {
          result.alive[i] = false;
          result.trace.push_back({result.rounds, candidates[i],
                                  *checks[i].failed});
          deleted = true;
        }
      }
      if (!deleted) break;
    }
  } else {
    std::mt19937_64 rng(*options.random_schedule);
    for (bool deleted = true; deleted;) {
      deleted = false;
      ++result.rounds;
      std::vector<int> order;
      for (int i = 0; i < count; ++i) {
        if (result.alive[i]) order.push_back(i);
      }
      std::shuffle(order.begin(), order.end(), rng);
      for (int i : order) {
        CoverCheck c = check_cover(g, candidates, result.alive, i);
        if (c.failed) {
          result.alive[i] = false;
          result.trace.push_back({result.rounds, candidates[i], *c.failed});
          deleted = true;
        }
      }
    }
    for (int i = 0; i < count; ++i) {
      if (result.alive[i]) checks[i] = check_cover(g, candidates, result.alive, i);
    }
  }

  std::vector<int> renumber(count, -1);
  DefenseFamily family;
  for (int i = 0; i < count; ++i) {
    if (!result.alive[i]) continue;
    renumber[i] = static_cast<int>(family.covers.size());
    family.covers.push_back(candidates[i]);
  }
  if (family.covers.empty()) return result;
  for (int i = 0; i < count; ++i) {
    if (!result.alive[i]) continue;
    for (Transition& t : checks[i].transitions) {
      t.from = renumber[t.from];
      t.to = renumber[t.to];
      family.transitions.push_back(std::move(t));
    }
  }
  result.family = std::move(family);
  return result;
}

bool validate_family(const Graph& g, const DefenseFamily& f, std::string* why,
                     const VertexSet* component) {
  if (component) {
    std::vector<int> local(g.vertex_count(), -1);
    for (int i = 0; i < component->size(); ++i) local[(*component)[i]] = i;
    auto to_local = [&](int x) {
      if (local[x] < 0) throw PreconditionError("family leaves the component");
      return local[x];
    };
    DefenseFamily mapped = f;
    for (VertexSet& c : mapped.covers) {
      std::vector<int> xs;
      for (int x : c) xs.push_back(to_local(x));
      c = VertexSet(std::move(xs));
    }
    for (Transition& t : mapped.transitions) {
      t.attack = {to_local(t.attack.u), to_local(t.attack.v)};
      for (GuardMove& m : t.moves) m = {to_local(m.from), to_local(m.to)};
    }
    return validate_family(induced_subgraph(g, *component), mapped, why);
  }
  auto fail = [&](const std::string& reason) {
    if (why) *why = reason;
    return false;
  };
  if (f.covers.empty()) return fail("family is empty");
  const int size = mvc(g).size;
  std::map<std::pair<int, Attack>, const Transition*> index;
  for (const Transition& t : f.transitions) {
    if (t.from < 0 || t.to < 0 || t.from >= static_cast<int>(f.covers.size()) ||
        t.to >= static_cast<int>(f.covers.size())) {
      return fail("transition outside the family");
    }
    if (!index.emplace(std::pair{t.from, t.attack}, &t).second) {
      return fail("duplicate transition");
    }
  }
  const int n = g.vertex_count();
  for (size_t i = 0; i < f.covers.size(); ++i) {
    const VertexSet& s = f.covers[i];
    if (s.size() != size || !is_vertex_cover(g, s)) {
      return fail("family member is not a minimum cover");
    }
    for (Attack a : attacks_on(g, s)) {
      auto it = index.find({static_cast<int>(i), a});
      if (it == index.end()) {
        return fail("attack " + g.label(a.u) + "->" + g.label(a.v) +
                    " is not answered");
      }
      const Transition& t = *it->second;
      std::string reason;
      if (!validate_defense(g, GuardConfiguration::from_set(n, s),
                            GuardConfiguration::from_set(n, f.covers[t.to]),
                            a.u, a.v, t.moves, &reason)) {
        return fail(reason);
      }
    }
  }
  if (index.size() != f.transitions.size()) {
    return fail("transition count mismatch");
  }
  return true;
}

namespace {

VertexSet lift(const VertexSet& part, const VertexSet& local) {
  std::vector<int> out;
  for (int x : local) out.push_back(part[x]);
  return VertexSet(std::move(out));
}

DefenseFamily lift(const VertexSet& part, DefenseFamily f) {
  for (VertexSet& c : f.covers) c = lift(part, c);
  for (Transition& t : f.transitions) {
    t.attack = {part[t.attack.u], part[t.attack.v]};
    for (auto& path : t.paths) {
      for (int& x : path) x = part[x];
    }
    for (GuardMove& m : t.moves) m = {part[m.from], part[m.to]};
  }
  return f;
}

Certificate lift(const VertexSet& part, Certificate c) {
  for (int& x : c.odd_cycle) x = part[x];
  if (c.edge) c.edge = Edge(part[c.edge->u], part[c.edge->v]);
  if (c.tight_set) {
    c.tight_set->violator = lift(part, c.tight_set->violator);
    c.tight_set->neighborhood = lift(part, c.tight_set->neighborhood);
  }
  for (Deletion& d : c.trace) {
    d.cover = lift(part, d.cover);
    d.attack = {part[d.attack.u], part[d.attack.v]};
  }
  for (Attack& a : c.attacks) a = {part[a.u], part[a.v]};
  return c;
}

void decide_by_game(const Graph& sub, const DeciderOptions& options,
                    ComponentVerdict& out) {
  GuardGame game(sub, out.mvc, options.game);
  out.method = Method::kGameOracle;
  out.spartan = game.defender_wins();
  if (!out.spartan) {
    Certificate c;
    c.kind = Certificate::Kind::kGameOracle;
    for (const AttackStep& s : attacker_witness(game)) c.attacks.push_back(s.attack);
    out.certificate = std::move(c);
  }
}

// Family or deletion trace from the fixpoint over `covers`.
void decide_by_fixpoint(const Graph& sub, const CoverSet& covers,
                        const DeciderOptions& options, ComponentVerdict& out) {
  FixpointResult r = spartan_fixpoint(sub, covers.covers, options.fixpoint);
  out.spartan = r.family.has_value();
  if (out.spartan) {
    out.family = std::move(r.family);
  } else {
    Certificate c;
    c.kind = Certificate::Kind::kDeletionTrace;
    c.trace = std::move(r.trace);
    out.certificate = std::move(c);
  }
}

ComponentVerdict decide_component(const Graph& sub,
                                  const DeciderOptions& options) {
  ComponentVerdict out;
  out.mm = matching_number(sub);
  out.mvc = mvc(sub).size;
  if (options.route == DeciderOptions::Route::kGame) {
    decide_by_game(sub, options, out);
    return out;
  }

  if (options.route == DeciderOptions::Route::kAuto && out.mm == out.mvc) {
    out.method = Method::kKonig;
    auto parts = bipartition(sub);
    if (auto* odd = std::get_if<OddCycle>(&parts)) {
      Certificate c;
      c.kind = Certificate::Kind::kOddCycle;
      c.odd_cycle = odd->cycle;
      out.certificate = std::move(c);
      return out;
    }
    ElementaryResult el = is_elementary(sub);
    if (!el.elementary) {
      Certificate c;
      c.kind = Certificate::Kind::kEdgeInNoPerfectMatching;
      c.edge = el.edge_in_no_perfect_matching;
      c.tight_set = el.tight_set;
      out.certificate = std::move(c);
      return out;
    }
  }

  CoverSet covers = enumerate_min_vcs(sub, options.cover_cap);
  out.min_covers = static_cast<int>(covers.covers.size());
  out.covers_truncated = covers.truncated;
  if (covers.truncated) {
    if (options.route == DeciderOptions::Route::kFixpoint) {
      throw ResourceError("more than " + std::to_string(options.cover_cap) +
                          " minimum vertex covers");
    }
    if (out.method == Method::kKonig) {
      // Elementary components have exactly two minimum covers.
      throw IntegrityError("elementary component with truncated covers");
    }
    decide_by_game(sub, options, out);
    return out;
  }
  const Method chosen = out.method;
  decide_by_fixpoint(sub, covers, options, out);
  if (chosen == Method::kKonig) {
    out.method = Method::kKonig;
    if (!out.spartan) {
      throw IntegrityError(
          "bipartite elementary component has no defense family");
    }
  } else {
    out.method = Method::kFixpoint;
  }
  return out;
}

}  // namespace

SpartanVerdict is_spartan(const Graph& g, DeciderOptions options) {
  if (g.vertex_count() < 2) {
    throw PreconditionError("is_spartan needs at least two vertices");
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 0) {
      throw PreconditionError("is_spartan: vertex " + g.label(v) +
                              " is isolated");
    }
  }
  SpartanVerdict verdict;
  verdict.spartan = true;
  std::optional<bool> agrees;
  const std::vector<VertexSet> parts = connected_components(g);
  for (size_t c = 0; c < parts.size(); ++c) {
    Graph sub = induced_subgraph(g, parts[c]);
    ComponentVerdict cv = decide_component(sub, options);
    if (cv.method == Method::kGameOracle &&
        options.route != DeciderOptions::Route::kGame) {
      verdict.flagged = true;
    }
    if (options.cross_check) {
      if (evc_equals_mvc(sub, options.game) != cv.spartan) {
        throw IntegrityError("decider and game oracle disagree on component " +
                             std::to_string(c));
      }
      agrees = true;
    }
    cv.vertices = parts[c];
    if (cv.family) cv.family = lift(parts[c], std::move(*cv.family));
    if (cv.certificate) {
      cv.certificate = lift(parts[c], std::move(*cv.certificate));
      cv.certificate->component = static_cast<int>(c);
      if (verdict.spartan) verdict.certificate = cv.certificate;
    }
    verdict.spartan = verdict.spartan && cv.spartan;
    verdict.components.push_back(std::move(cv));
  }
  verdict.cross_check_agrees = agrees;
  if (verdict.components.size() == 1) {
    verdict.method = verdict.components[0].method;
    verdict.family = verdict.components[0].family;
  } else {
    verdict.method = Method::kPerComponent;
  }
  return verdict;
}

KonigReport konig_report(const Graph& g) {
  KonigReport r;
  r.mm = matching_number(g);
  r.mvc = mvc(g).size;
  r.konig = r.mm == r.mvc;
  auto parts = bipartition_any(g);
  r.bipartite = std::holds_alternative<Bipartition>(parts);
  if (!r.bipartite) r.odd_cycle = std::get<OddCycle>(parts);
  r.essentially_elementary = r.bipartite;
  for (const VertexSet& part : connected_components(g)) {
    if (part.size() < 2) continue;
    Graph sub = induced_subgraph(g, part);
    KonigComponent c;
    c.vertices = part;
    c.mm = matching_number(sub);
    c.mvc = mvc(sub).size;
    c.konig = c.mm == c.mvc;
    if (std::holds_alternative<Bipartition>(bipartition(sub))) {
      c.elementary = is_elementary(sub).elementary;
      if (!*c.elementary) r.essentially_elementary = false;
    }
    r.components.push_back(c);
  }
  if (r.konig) r.spartan = r.bipartite && r.essentially_elementary;
  return r;
}

}  // namespace spartan
