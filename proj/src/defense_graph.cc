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

#include <algorithm>
#include <functional>
#include <queue>

#include "spartan/errors.h"

namespace spartan {

bool AuxiliaryGraph::has_real(int l, int r) const {
  return std::binary_search(real_edges.begin(), real_edges.end(),
                            AuxEdge{l, r, -1});
}

bool AuxiliaryGraph::has_helper(int l, int r, int color) const {
  return std::binary_search(helper_edges.begin(), helper_edges.end(),
                            AuxEdge{l, r, color});
}

int AuxiliaryGraph::color_of(int x) const {
  for (size_t i = 0; i < colors.size(); ++i) {
    if (colors[i].contains(x)) return static_cast<int>(i);
  }
  return -1;
}

AuxiliaryGraph build_aux(const Graph& g, const VertexSet& s,
                         const VertexSet& t) {
  if (s.size() != t.size()) {
    throw PreconditionError("build_aux: covers differ in size");
  }
  if (!is_vertex_cover(g, s) || !is_vertex_cover(g, t)) {
    throw PreconditionError("build_aux: arguments must be vertex covers");
  }
  AuxiliaryGraph aux;
  aux.s = s;
  aux.t = t;
  aux.left = set_difference(s, t);
  aux.right = set_difference(t, s);
  VertexSet shared = set_intersection(s, t);
  aux.dead_zone =
      set_difference(VertexSet::range(g.vertex_count()), set_union(s, t));
  if (!is_independent(g, aux.left) || !is_independent(g, aux.right)) {
    throw IntegrityError("auxiliary graph sides are not independent");
  }

  for (const VertexSet& local :
       connected_components(induced_subgraph(g, shared))) {
    std::vector<int> members;
    for (int x : local) members.push_back(shared[x]);
    aux.colors.emplace_back(std::move(members));
  }
  for (int l : aux.left) {
    for (int w : g.neighbors(l)) {
      if (aux.right.contains(w)) aux.real_edges.push_back({l, w, -1});
    }
  }
  for (size_t i = 0; i < aux.colors.size(); ++i) {
    const VertexSet touching = neighborhood(g, aux.colors[i]);
    for (int l : set_intersection(aux.left, touching)) {
      for (int r : set_intersection(aux.right, touching)) {
        aux.helper_edges.push_back({l, r, static_cast<int>(i)});
      }
    }
  }
  std::sort(aux.real_edges.begin(), aux.real_edges.end());
  std::sort(aux.helper_edges.begin(), aux.helper_edges.end());
  return aux;
}

namespace {

// Kuhn's augmenting paths over local indices. mate_l[l] / mate_r[r] are
// updated in place; returns the number of newly matched left vertices.
int augment_all(const std::vector<std::vector<int>>& adj,
                std::vector<int>& mate_l, std::vector<int>& mate_r) {
  int added = 0;
  for (size_t l = 0; l < adj.size(); ++l) {
    if (mate_l[l] != -1) continue;
    std::vector<bool> seen(mate_r.size(), false);
    std::function<bool(int)> dfs = [&](int x) {
      for (int r : adj[x]) {
        if (seen[r]) continue;
        seen[r] = true;
        if (mate_r[r] == -1 || dfs(mate_r[r])) {
          mate_l[x] = r;
          mate_r[r] = x;
          return true;
        }
      }
      return false;
    };
    if (dfs(static_cast<int>(l))) ++added;
  }
  return added;
}

struct LocalAux {
  const AuxiliaryGraph& aux;
  int size;
  std::vector<std::vector<int>> real_adj;
  std::vector<std::vector<int>> any_adj;

  explicit LocalAux(const AuxiliaryGraph& a)
      : aux(a),
        size(a.left.size()),
        real_adj(a.left.size()),
        any_adj(a.left.size()) {
    for (int l = 0; l < size; ++l) {
      for (int r = 0; r < a.right.size(); ++r) {
        bool real = a.has_real(a.left[l], a.right[r]);
        bool helper = false;
        for (size_t c = 0; c < a.colors.size() && !helper; ++c) {
          helper = a.has_helper(a.left[l], a.right[r], static_cast<int>(c));
        }
        if (real) real_adj[l].push_back(r);
        if (real || helper) any_adj[l].push_back(r);
      }
    }
  }

  int left_index(int v) const {
    auto it = std::lower_bound(aux.left.begin(), aux.left.end(), v);
    return it != aux.left.end() && *it == v
               ? static_cast<int>(it - aux.left.begin())
               : -1;
  }
  int right_index(int v) const {
    auto it = std::lower_bound(aux.right.begin(), aux.right.end(), v);
    return it != aux.right.end() && *it == v
               ? static_cast<int>(it - aux.right.begin())
               : -1;
  }

  // Perfect matching over any_adj with (fl, fr) fixed, as mate_l.
  std::optional<std::vector<int>> perfect_with(int fl, int fr) const {
    std::vector<std::vector<int>> adj = any_adj;
    adj[fl] = {fr};
    for (int l = 0; l < size; ++l) {
      if (l == fl) continue;
      adj[l].erase(std::remove(adj[l].begin(), adj[l].end(), fr),
                   adj[l].end());
    }
    std::vector<int> mate_l(size, -1), mate_r(size, -1);
    mate_l[fl] = fr;
    mate_r[fr] = fl;
    if (augment_all(adj, mate_l, mate_r) != size - 1) return std::nullopt;
    return mate_l;
  }

  // Smallest colour of a helper between local l and r other than `avoid`.
  int helper_color(int l, int r) const {
    for (size_t c = 0; c < aux.colors.size(); ++c) {
      if (aux.has_helper(aux.left[l], aux.right[r], static_cast<int>(c))) {
        return static_cast<int>(c);
      }
    }
    return -2;
  }
};

std::vector<int> real_perfect_mate(const LocalAux& la) {
  std::vector<int> mate_l(la.size, -1), mate_r(la.size, -1);
  if (augment_all(la.real_adj, mate_l, mate_r) != la.size) {
    throw IntegrityError(
        "no perfect matching on real edges between the difference sides");
  }
  return mate_l;
}

bool request_satisfied(const AuxiliaryGraph& aux, const RainbowRequest& req,
                       const AuxEdge& e) {
  if (req.mode == RainbowRequest::Mode::kForcedReal) {
    return e.real() && e.left == req.left && e.right == req.right;
  }
  return e.right == req.right && e.color == req.color &&
         aux.has_helper(e.left, e.right, req.color);
}

void require_valid_request(const AuxiliaryGraph& aux,
                           const RainbowRequest& req) {
  if (req.mode == RainbowRequest::Mode::kForcedReal) {
    if (!aux.has_real(req.left, req.right)) {
      throw PreconditionError("forced pair is not a real auxiliary edge");
    }
    return;
  }
  if (!aux.right.contains(req.right) || req.color < 0 ||
      req.color >= static_cast<int>(aux.colors.size())) {
    throw PreconditionError("helper request names an unknown side or colour");
  }
}

}  // namespace

std::vector<AuxEdge> all_real_pm(const AuxiliaryGraph& aux) {
  LocalAux la(aux);
  std::vector<int> mate = real_perfect_mate(la);
  std::vector<AuxEdge> out;
  for (int l = 0; l < la.size; ++l) {
    out.push_back({aux.left[l], aux.right[mate[l]], -1});
  }
  return out;
}

std::optional<RainbowMatching> rainbow_pm_with_edge(const AuxiliaryGraph& aux,
                                                    const RainbowRequest& req) {
  require_valid_request(aux, req);
  if (aux.left.size() != aux.right.size()) return std::nullopt;
  LocalAux la(aux);
  const bool helper_mode = req.mode == RainbowRequest::Mode::kHelperAdjacent;
  const int fr = la.right_index(req.right);

  // Any perfect matching meeting the request.
  std::optional<std::vector<int>> mate;
  int fl = -1;
  if (!helper_mode) {
    fl = la.left_index(req.left);
    mate = la.perfect_with(fl, fr);
  } else {
    for (int l = 0; l < la.size && !mate; ++l) {
      if (aux.has_helper(aux.left[l], req.right, req.color)) {
        mate = la.perfect_with(l, fr);
        if (mate) fl = l;
      }
    }
  }
  if (!mate) return std::nullopt;

  // Superpose with the all-real matching and keep only the alternating
  // cycle through the forced pair: x[j] - y[j] in M, x[j] - y[j+1] in M_p.
  const std::vector<int> mp = real_perfect_mate(la);
  std::vector<int> mate_r(la.size);
  for (int l = 0; l < la.size; ++l) mate_r[(*mate)[l]] = l;
  std::vector<int> xs{fl}, ys{fr};
  while (true) {
    int next_y = mp[xs.back()];
    if (next_y == ys.front()) break;
    ys.push_back(next_y);
    xs.push_back(mate_r[next_y]);
  }

  RainbowMatching result;
  std::vector<int> tags;
  auto tag_cycle = [&] {
    tags.assign(xs.size(), -1);
    for (size_t j = 0; j < xs.size(); ++j) {
      if (j == 0 && helper_mode) {
        tags[j] = req.color;
      } else if (!aux.has_real(aux.left[xs[j]], aux.right[ys[j]])) {
        tags[j] = la.helper_color(xs[j], ys[j]);
        if (tags[j] < 0) throw IntegrityError("matched pair has no aux edge");
      }
    }
  };
  while (true) {
    tag_cycle();
    // Earliest repeated colour (p < q).
    int p = -1, q = -1;
    std::vector<int> first(aux.colors.size(), -1);
    for (size_t j = 0; j < tags.size() && q < 0; ++j) {
      if (tags[j] < 0) continue;
      if (first[tags[j]] >= 0) {
        p = first[tags[j]];
        q = static_cast<int>(j);
      } else {
        first[tags[j]] = static_cast<int>(j);
      }
    }
    if (q < 0) break;
    // Pairs p..q are replaced by the M_p edges x[j] - y[j+1] (p <= j < q)
    // and the helper x[q] - y[p] of the repeated colour.
    std::vector<int> nx, ny;
    for (int j = 0; j < p; ++j) {
      nx.push_back(xs[j]);
      ny.push_back(ys[j]);
    }
    nx.push_back(xs[q]);
    ny.push_back(ys[p]);
    for (size_t j = q + 1; j < xs.size(); ++j) {
      nx.push_back(xs[j]);
      ny.push_back(ys[j]);
    }
    xs = std::move(nx);
    ys = std::move(ny);
    ++result.exchanges;
  }

  std::vector<bool> on_cycle(la.size, false);
  for (size_t j = 0; j < xs.size(); ++j) {
    on_cycle[xs[j]] = true;
    result.edges.push_back({aux.left[xs[j]], aux.right[ys[j]], tags[j]});
  }
  for (int l = 0; l < la.size; ++l) {
    if (!on_cycle[l]) result.edges.push_back({aux.left[l], aux.right[mp[l]], -1});
  }
  result.forced = result.edges.front();
  std::sort(result.edges.begin(), result.edges.end());
  if (helper_mode) result.via = req.via;

  std::string why;
  if (!validate_rainbow(aux, req, result, &why)) {
    throw IntegrityError("rainbow reduction produced an invalid matching: " +
                         why);
  }
  return result;
}

ExhaustiveRainbow rainbow_pm_exhaustive(const AuxiliaryGraph& aux,
                                        const RainbowRequest& req) {
  require_valid_request(aux, req);
  ExhaustiveRainbow out;
  if (aux.left.size() != aux.right.size()) return out;
  if (aux.left.size() > 10) {
    throw PreconditionError("exhaustive rainbow search limited to 10 pairs");
  }
  LocalAux la(aux);
  const bool helper_mode = req.mode == RainbowRequest::Mode::kHelperAdjacent;
  const int ncolors = static_cast<int>(aux.colors.size());
  std::vector<int> mate(la.size, -1);
  std::vector<bool> used(la.size, false);

  // Colours for the pairs lacking a real edge, all distinct.
  auto assign_colors = [&](const std::vector<AuxEdge>& edges)
      -> std::optional<std::vector<AuxEdge>> {
    std::vector<AuxEdge> tagged = edges;
    std::vector<int> need;
    std::vector<bool> taken(ncolors, false);
    for (size_t i = 0; i < tagged.size(); ++i) {
      AuxEdge& e = tagged[i];
      if (helper_mode && e.right == req.right) {
        e.color = req.color;
        taken[req.color] = true;
      } else if (aux.has_real(e.left, e.right)) {
        e.color = -1;
      } else {
        need.push_back(static_cast<int>(i));
      }
    }
    std::vector<std::vector<int>> adj(need.size());
    for (size_t i = 0; i < need.size(); ++i) {
      for (int c = 0; c < ncolors; ++c) {
        const AuxEdge& e = tagged[need[i]];
        if (!taken[c] && aux.has_helper(e.left, e.right, c)) {
          adj[i].push_back(c);
        }
      }
    }
    std::vector<int> ml(need.size(), -1), mr(ncolors, -1);
    if (augment_all(adj, ml, mr) != static_cast<int>(need.size())) {
      return std::nullopt;
    }
    for (size_t i = 0; i < need.size(); ++i) tagged[need[i]].color = ml[i];
    return tagged;
  };

  std::function<void(int)> rec = [&](int l) {
    if (l == la.size) {
      ++out.matchings;
      std::vector<AuxEdge> edges;
      bool meets = false;
      for (int x = 0; x < la.size; ++x) {
        AuxEdge e{aux.left[x], aux.right[mate[x]], -1};
        if (!helper_mode && e.left == req.left && e.right == req.right) {
          meets = true;
        }
        if (helper_mode && e.right == req.right &&
            aux.has_helper(e.left, e.right, req.color)) {
          meets = true;
        }
        edges.push_back(e);
      }
      if (!meets) return;
      out.any_meeting_request = true;
      if (out.rainbow) return;
      if (auto tagged = assign_colors(edges)) {
        RainbowMatching m;
        m.edges = *tagged;
        for (const AuxEdge& e : m.edges) {
          if (request_satisfied(aux, req, e)) m.forced = e;
        }
        if (helper_mode) m.via = req.via;
        out.rainbow = m;
      }
      return;
    }
    for (int r : la.any_adj[l]) {
      if (used[r]) continue;
      used[r] = true;
      mate[l] = r;
      rec(l + 1);
      used[r] = false;
    }
  };
  rec(0);
  return out;
}

bool validate_rainbow(const AuxiliaryGraph& aux, const RainbowRequest& req,
                      const RainbowMatching& m, std::string* why) {
  auto fail = [&](const std::string& reason) {
    if (why) *why = reason;
    return false;
  };
  if (static_cast<int>(m.edges.size()) != aux.left.size() ||
      aux.left.size() != aux.right.size()) {
    return fail("matching is not perfect");
  }
  std::vector<int> lefts, rights;
  std::vector<int> color_use(aux.colors.size(), 0);
  bool meets = false;
  for (const AuxEdge& e : m.edges) {
    lefts.push_back(e.left);
    rights.push_back(e.right);
    if (e.real() ? !aux.has_real(e.left, e.right)
                 : !aux.has_helper(e.left, e.right, e.color)) {
      return fail("matched pair uses a missing edge");
    }
    if (!e.real() && ++color_use[e.color] > 1) {
      return fail("colour " + std::to_string(e.color) + " used twice");
    }
    if (request_satisfied(aux, req, e)) meets = true;
  }
  std::sort(lefts.begin(), lefts.end());
  std::sort(rights.begin(), rights.end());
  if (VertexSet(lefts) != aux.left || VertexSet(rights) != aux.right) {
    return fail("matching is not perfect");
  }
  if (!meets) return fail("request not met");
  return true;
}

namespace {

// Lexicographically least shortest path inside `region` from some vertex of
// `starts` to some vertex of `goals`.
std::vector<int> region_path(const Graph& g, const VertexSet& region,
                             const VertexSet& starts, const VertexSet& goals) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::queue<int> q;
  for (int x : goals) {
    dist[x] = 0;
    q.push(x);
  }
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    for (int y : g.neighbors(x)) {
      if (region.contains(y) && dist[y] == -1) {
        dist[y] = dist[x] + 1;
        q.push(y);
      }
    }
  }
  int cur = -1;
  for (int x : starts) {
    if (dist[x] >= 0 && (cur == -1 || dist[x] < dist[cur])) cur = x;
  }
  if (cur == -1) throw IntegrityError("helper edge cannot be expanded");
  std::vector<int> path{cur};
  while (dist[cur] > 0) {
    for (int y : g.neighbors(cur)) {
      if (region.contains(y) && dist[y] == dist[cur] - 1) {
        cur = y;
        break;
      }
    }
    path.push_back(cur);
  }
  return path;
}

}  // namespace

PathSystem matching_to_paths(const Graph& g, const AuxiliaryGraph& aux,
                             const RainbowMatching& m) {
  PathSystem ps;
  ps.sources = aux.left;
  ps.sinks = aux.right;
  ps.allowed_interior = set_intersection(aux.s, aux.t);
  for (const AuxEdge& e : m.edges) {
    std::vector<int> path{e.left};
    if (!e.real()) {
      const VertexSet& region = aux.colors[e.color];
      VertexSet starts = set_intersection(
          region, VertexSet(std::vector<int>(g.neighbors(e.left).begin(),
                                             g.neighbors(e.left).end())));
      VertexSet goals;
      if (m.via && e == m.forced) {
        goals = VertexSet{*m.via};
      } else {
        goals = set_intersection(
            region, VertexSet(std::vector<int>(g.neighbors(e.right).begin(),
                                               g.neighbors(e.right).end())));
      }
      for (int x : region_path(g, region, starts, goals)) path.push_back(x);
    }
    path.push_back(e.right);
    ps.paths.push_back(std::move(path));
  }
  std::sort(ps.paths.begin(), ps.paths.end());
  std::string why;
  if (!validate_path_system(g, ps, &why)) {
    throw IntegrityError("guard paths from the matching are invalid: " + why);
  }
  return ps;
}

std::variant<Defense, DefenseFailure> check_defense(
    const Graph& g, const VertexSet& s, int u, int v,
    const std::vector<VertexSet>& candidates, const std::vector<bool>* alive) {
  if (!s.contains(u) || s.contains(v) || !g.adjacent(u, v)) {
    throw PreconditionError(
        "check_defense: need an edge u-v with u guarded and v unguarded");
  }
  const int n = g.vertex_count();
  DefenseFailure failure;
  for (size_t i = 0; i < candidates.size(); ++i) {
    if (alive && !(*alive)[i]) continue;
    const VertexSet& t = candidates[i];
    if (!t.contains(v) || t.size() != s.size()) continue;
    AuxiliaryGraph aux = build_aux(g, s, t);
    RainbowRequest req;
    int condition = 1;
    if (!t.contains(u)) {
      req.mode = RainbowRequest::Mode::kForcedReal;
      req.left = u;
      req.right = v;
    } else {
      condition = 2;
      req.mode = RainbowRequest::Mode::kHelperAdjacent;
      req.right = v;
      req.color = aux.color_of(u);
      req.via = u;
    }
    auto m = rainbow_pm_with_edge(aux, req);
    if (!m) {
      failure.reasons.push_back(
          {t, condition == 1
                  ? "no perfect matching of the auxiliary graph uses " +
                        g.label(u) + "-" + g.label(v)
                  : "no perfect matching pairs " + g.label(v) +
                        " with a neighbour of the component of " +
                        g.label(u)});
      continue;
    }
    Defense d;
    d.target = t;
    d.target_index = static_cast<int>(i);
    d.condition = condition;
    d.paths = matching_to_paths(g, aux, *m).paths;
    d.moves = path_moves(d.paths);
    std::string why;
    if (!validate_defense(g, GuardConfiguration::from_set(n, s),
                          GuardConfiguration::from_set(n, t), u, v, d.moves,
                          &why)) {
      throw IntegrityError("defense failed replay: " + why);
    }
    return d;
  }
  if (failure.reasons.empty()) {
    failure.reasons.push_back(
        {VertexSet(), "no candidate cover contains " + g.label(v)});
  }
  return failure;
}

}  // namespace spartan
