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

#include <algorithm>
#include <bit>
#include <random>

#include "spartan/covers.h"
#include "spartan/errors.h"

namespace spartan {
namespace {

// Components of G[live] as masks, ordered by smallest member.
std::vector<Mask> components_of(const Graph& g, Mask live) {
  std::vector<Mask> out;
  Mask rest = live;
  while (rest) {
    Mask comp = bit(std::countr_zero(rest));
    Mask frontier = comp;
    while (frontier) {
      int x = std::countr_zero(frontier);
      frontier &= frontier - 1;
      Mask fresh = g.neighbor_mask(x) & live & ~comp;
      comp |= fresh;
      frontier |= fresh;
    }
    out.push_back(comp);
    rest &= ~comp;
  }
  return out;
}

bool covers_inside(const Graph& g, Mask support, Mask component) {
  for (Mask rest = component & ~support; rest; rest &= rest - 1) {
    int x = std::countr_zero(rest);
    if ((g.neighbor_mask(x) & component) & ~support) return false;
  }
  return true;
}

Mask support_mask(const std::vector<int>& counts) {
  Mask m = 0;
  for (size_t v = 0; v < counts.size(); ++v) {
    if (counts[v] > 0) m |= bit(static_cast<int>(v));
  }
  return m;
}

int guards_in(const GuardConfiguration& c, Mask component) {
  int total = 0;
  for (Mask rest = component; rest; rest &= rest - 1) {
    total += c.count(std::countr_zero(rest));
  }
  return total;
}

// Calls visit(T) for every non-empty subset of `pool`, smaller subsets first
// and lexicographic within a size. Stops when visit returns true.
template <typename Visit>
bool for_each_subset_by_size(const std::vector<int>& pool, Visit&& visit) {
  const int p = static_cast<int>(pool.size());
  for (int size = 1; size <= p; ++size) {
    std::vector<int> idx(size);
    for (int i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      Mask t = 0;
      for (int i : idx) t |= bit(pool[i]);
      if (visit(t)) return true;
      int i = size - 1;
      while (i >= 0 && idx[i] == p - size + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return false;
}

std::vector<int> unoccupied(const Graph& g, const GuardConfiguration& c) {
  std::vector<int> out;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (c.count(v) == 0) out.push_back(v);
  }
  if (static_cast<int>(out.size()) > kMaxUnoccupiedForBadSets) {
    throw ResourceError("bad-set search over " + std::to_string(out.size()) +
                        " unoccupied vertices exceeds the limit of " +
                        std::to_string(kMaxUnoccupiedForBadSets));
  }
  return out;
}

void require_cover(const Graph& g, const GuardConfiguration& c) {
  if (g.vertex_count() > kMaxAnalysisVertices) {
    throw PreconditionError("goodness checks are limited to 64 vertices");
  }
  if (c.vertex_count() != g.vertex_count()) {
    throw PreconditionError("configuration size does not match the graph");
  }
  if (!is_vertex_cover(g, c.support())) {
    throw PreconditionError("guard support is not a vertex cover");
  }
}

BadSetCertificate make_certificate(BadSetCertificate::Kind kind,
                                   const GuardConfiguration& c, Mask t,
                                   Mask component, std::optional<int> exit,
                                   bool stacked) {
  BadSetCertificate cert;
  cert.kind = kind;
  cert.cover = c;
  cert.bad_set = VertexSet::from_mask(t);
  cert.component = VertexSet::from_mask(component);
  cert.exit_vertex = exit;
  cert.stacked_responses = stacked;
  return cert;
}

}  // namespace

GoodnessChecker::GoodnessChecker(const Graph& g) : g_(g) {}

int GoodnessChecker::component_mvc(Mask component) {
  auto it = mvc_cache_.find(component);
  if (it != mvc_cache_.end()) return it->second;
  int value = mvc_size(g_, component);
  mvc_cache_.emplace(component, value);
  return value;
}

GoodnessResult GoodnessChecker::weakly_good(const GuardConfiguration& c) {
  require_cover(g_, c);
  GoodnessResult result;
  const Mask all = g_.all_mask();
  for_each_subset_by_size(unoccupied(g_, c), [&](Mask t) {
    for (Mask comp : components_of(g_, all & ~t)) {
      if (guards_in(c, comp) <= component_mvc(comp)) {
        result.good = false;
        result.certificate = make_certificate(
            BadSetCertificate::Kind::kWeaklyBad, c, t, comp, std::nullopt,
            false);
        return true;
      }
    }
    return false;
  });
  return result;
}

GoodnessResult GoodnessChecker::strongly_good(const VertexSet& cover) {
  return strongly_good_impl(
      GuardConfiguration::from_set(g_.vertex_count(), cover), false);
}

GoodnessResult GoodnessChecker::strongly_good(const GuardConfiguration& c) {
  return strongly_good_impl(c, true);
}

GoodnessResult GoodnessChecker::strongly_good_impl(const GuardConfiguration& c,
                                                   bool stacked) {
  require_cover(g_, c);
  GoodnessResult result;
  const Mask all = g_.all_mask();
  for_each_subset_by_size(unoccupied(g_, c), [&](Mask t) {
    Mask touched = 0;
    for (Mask rest = t; rest; rest &= rest - 1) {
      touched |= g_.neighbor_mask(std::countr_zero(rest));
    }
    for (Mask comp : components_of(g_, all & ~t)) {
      for (Mask exits = touched & comp; exits; exits &= exits - 1) {
        int v = std::countr_zero(exits);
        std::vector<int> remaining(g_.vertex_count(), 0);
        for (Mask rest = comp; rest; rest &= rest - 1) {
          int x = std::countr_zero(rest);
          remaining[x] = c.count(x);
        }
        remaining[v] -= 1;
        if (!has_replacement(comp, remaining, stacked)) {
          result.good = false;
          result.certificate = make_certificate(
              BadSetCertificate::Kind::kStronglyBad, c, t, comp, v, stacked);
          return true;
        }
      }
    }
    return false;
  });
  if (result.good && !weakly_good(c).good) {
    throw IntegrityError("strongly good configuration " + describe(g_, c) +
                         " is not weakly good");
  }
  return result;
}

bool GoodnessChecker::has_replacement(Mask component,
                                      const std::vector<int>& remaining,
                                      bool stacked) {
  int budget = 0;
  for (int c : remaining) budget += c;
  if (budget < component_mvc(component)) return false;
  if (covers_inside(g_, support_mask(remaining), component)) return true;

  std::vector<int> key = remaining;
  key.push_back(static_cast<int>(component & 0xffffffffu));
  key.push_back(static_cast<int>(component >> 32));
  auto cached = replacement_cache_.find({key, stacked});
  if (cached != replacement_cache_.end()) return cached->second;

  const GuardConfiguration from(remaining);
  std::vector<int> members;
  for (Mask rest = component; rest; rest &= rest - 1) {
    members.push_back(std::countr_zero(rest));
  }
  std::vector<int> target(g_.vertex_count(), 0);
  bool found = false;
  // Distribute `budget` guards over the component, at most one per vertex
  // unless stacking is allowed; test each covering placement.
  auto place = [&](auto&& self, size_t i, int left, Mask support) -> void {
    if (found) return;
    if (left == 0 || i == members.size()) {
      if (left == 0 && covers_inside(g_, support, component) &&
          compatible_configs(g_, from, GuardConfiguration(target)).compatible) {
        found = true;
      }
      return;
    }
    const int x = members[i];
    const int slots = static_cast<int>(members.size() - i);
    const int most = stacked ? left : std::min(left, 1);
    for (int k = most; k >= 0; --k) {
      if (!stacked && left - k > slots - 1) continue;
      target[x] = k;
      self(self, i + 1, left - k, k > 0 ? support | bit(x) : support);
    }
    target[x] = 0;
  };
  place(place, 0, budget, 0);
  replacement_cache_.emplace(std::make_pair(std::move(key), stacked), found);
  return found;
}

GoodnessResult is_weakly_good(const Graph& g, const GuardConfiguration& c) {
  return GoodnessChecker(g).weakly_good(c);
}

GoodnessResult is_strongly_good(const Graph& g, const VertexSet& cover) {
  return GoodnessChecker(g).strongly_good(cover);
}

GoodnessResult is_strongly_good(const Graph& g, const GuardConfiguration& c) {
  return GoodnessChecker(g).strongly_good(c);
}

namespace {

void fail(std::string* why, const std::string& reason) {
  if (why) *why = reason;
}

// Whether the guards of `from` (all inside `component`) can each stay or
// step to a neighbour inside the component so that every component edge is
// covered. Without stacking the result must put at most one guard per vertex.
bool one_step_cover_exists(const Graph& g, const GuardConfiguration& from,
                           Mask component, bool stacked) {
  std::vector<int> guards;
  for (int v = 0; v < from.vertex_count(); ++v) {
    for (int i = 0; i < from.count(v); ++i) guards.push_back(v);
  }
  std::vector<int> counts(g.vertex_count(), 0);
  auto rec = [&](auto&& self, size_t k) -> bool {
    if (k == guards.size()) {
      return covers_inside(g, support_mask(counts), component);
    }
    const int x = guards[k];
    std::vector<int> options{x};
    for (int y : g.neighbors(x)) {
      if (component & bit(y)) options.push_back(y);
    }
    for (int y : options) {
      if (!stacked && counts[y] > 0) continue;
      counts[y] += 1;
      bool ok = self(self, k + 1);
      counts[y] -= 1;
      if (ok) return true;
    }
    return false;
  };
  return rec(rec, 0);
}

}  // namespace

bool validate_certificate(const Graph& g, const BadSetCertificate& cert,
                          std::string* why) {
  const GuardConfiguration& c = cert.cover;
  if (c.vertex_count() != g.vertex_count() ||
      !is_vertex_cover(g, c.support())) {
    fail(why, "guard support is not a vertex cover");
    return false;
  }
  if (cert.bad_set.empty()) {
    fail(why, "bad set is empty");
    return false;
  }
  for (int t : cert.bad_set) {
    if (c.count(t) > 0) {
      fail(why, "bad set contains an occupied vertex");
      return false;
    }
  }
  VertexSet rest = set_difference(VertexSet::range(g.vertex_count()),
                                  cert.bad_set);
  Graph without = induced_subgraph(g, rest);
  bool is_component = false;
  for (const VertexSet& local : connected_components(without)) {
    std::vector<int> global;
    for (int x : local) global.push_back(rest[x]);
    if (VertexSet(global) == cert.component) is_component = true;
  }
  if (!is_component) {
    fail(why, "component is not a connected component of G - T");
    return false;
  }
  int guards = 0;
  for (int x : cert.component) guards += c.count(x);
  const int component_mvc = mvc(induced_subgraph(g, cert.component)).size;
  if (cert.kind == BadSetCertificate::Kind::kWeaklyBad) {
    if (guards != component_mvc) {
      fail(why, "component guard count differs from its mvc");
      return false;
    }
    return true;
  }
  if (!cert.exit_vertex || !cert.component.contains(*cert.exit_vertex) ||
      !neighborhood(g, cert.bad_set).contains(*cert.exit_vertex) ||
      c.count(*cert.exit_vertex) == 0) {
    fail(why, "exit vertex is not a guarded neighbour of the bad set");
    return false;
  }
  std::vector<int> remaining(g.vertex_count(), 0);
  for (int x : cert.component) remaining[x] = c.count(x);
  remaining[*cert.exit_vertex] -= 1;
  if (one_step_cover_exists(g, GuardConfiguration(remaining),
                            cert.component.mask(), cert.stacked_responses)) {
    fail(why, "the remaining guards can re-cover the component");
    return false;
  }
  return true;
}

const char* to_string(ConditionStatus s) {
  switch (s) {
    case ConditionStatus::kPass:
      return "pass";
    case ConditionStatus::kFail:
      return "fail";
    case ConditionStatus::kNotApplicable:
      return "notApplicable";
    case ConditionStatus::kPartial:
      return "partial";
  }
  return "unknown";
}

namespace {

// Non-empty independent sets that are not maximal and have |N(I)| = |I|.
// Returns the first in depth-first order.
std::optional<VertexSet> tight_nonmaximal_exhaustive(const Graph& g) {
  const Mask all = g.all_mask();
  std::optional<VertexSet> found;
  auto rec = [&](auto&& self, int from, Mask chosen, Mask nbhd) -> void {
    if (found) return;
    if (chosen && std::popcount(nbhd) == std::popcount(chosen) &&
        (chosen | nbhd) != all) {
      found = VertexSet::from_mask(chosen);
      return;
    }
    for (int v = from; v < g.vertex_count(); ++v) {
      if ((chosen | nbhd) & bit(v)) continue;
      self(self, v + 1, chosen | bit(v), nbhd | g.neighbor_mask(v));
      if (found) return;
    }
  };
  rec(rec, 0, 0, 0);
  return found;
}

// Random greedy independent sets, checking every prefix.
std::optional<VertexSet> tight_nonmaximal_sampled(const Graph& g, int samples,
                                                  unsigned long long seed) {
  std::mt19937_64 rng(seed);
  const Mask all = g.all_mask();
  std::vector<int> order(g.vertex_count());
  for (int i = 0; i < g.vertex_count(); ++i) order[i] = i;
  for (int s = 0; s < samples; ++s) {
    std::shuffle(order.begin(), order.end(), rng);
    Mask chosen = 0, nbhd = 0;
    for (int v : order) {
      if ((chosen | nbhd) & bit(v)) continue;
      chosen |= bit(v);
      nbhd |= g.neighbor_mask(v);
      if (std::popcount(nbhd) == std::popcount(chosen) &&
          (chosen | nbhd) != all) {
        return VertexSet::from_mask(chosen);
      }
    }
  }
  return std::nullopt;
}

// Calls visit(c) for every k-guard configuration whose support covers g.
template <typename Visit>
void for_each_covering_configuration(const Graph& g, int k, Visit&& visit) {
  const int n = g.vertex_count();
  std::vector<int> counts(n, 0);
  bool stop = false;
  auto rec = [&](auto&& self, int x, int left) -> void {
    if (stop) return;
    if (x == n) {
      if (left == 0) stop = visit(GuardConfiguration(counts));
      return;
    }
    for (int c = (x == n - 1 ? left : 0); c <= left; ++c) {
      if (c == 0) {
        bool ok = true;
        for (int y : g.neighbors(x)) {
          if (y < x && counts[y] == 0) ok = false;
        }
        if (!ok) continue;
      }
      counts[x] = c;
      self(self, x + 1, left - c);
      if (stop) return;
    }
    counts[x] = 0;
  };
  rec(rec, 0, k);
}

ConditionCheck make_check(const char* key, const char* description) {
  ConditionCheck c;
  c.key = key;
  c.description = description;
  return c;
}

}  // namespace

NecessaryConditionsReport necessary_conditions_report(
    const Graph& g, int k, const NecessaryConditionsOptions& options) {
  const int n = g.vertex_count();
  if (n <= 1 || !is_connected(g)) {
    throw PreconditionError(
        "necessary conditions need a connected graph with more than one "
        "vertex");
  }
  NecessaryConditionsReport report;
  report.k = k;
  report.mvc = mvc(g).size;
  if (k < report.mvc) {
    throw PreconditionError("k = " + std::to_string(k) + " is below mvc = " +
                            std::to_string(report.mvc));
  }
  report.spartan_mode = k == report.mvc;
  CoverSet covers = enumerate_min_vcs(g);

  ConditionCheck a = make_check("everyVertexInMinCover",
                                "every vertex lies in some minimum vertex cover");
  ConditionCheck b = make_check(
      "maxIndependentSetsSaturated",
      "every maximum independent set is matched into its complement");
  ConditionCheck c = make_check("mvcAtLeastHalf", "mvc(G) >= n/2");
  ConditionCheck d = make_check(
      "noTightNonMaximalIndependentSet",
      "no non-maximal independent set I has |N(I)| = |I|");
  ConditionCheck e = make_check(
      "everyVertexInWeaklyGoodCover",
      "every vertex is guarded in some weakly good k-guard configuration");
  ConditionCheck f = make_check(
      "everyVertexInStronglyGoodCover",
      "every vertex is guarded in some strongly good k-guard configuration");

  if (report.spartan_mode) {
    for (int v = 0; v < n; ++v) {
      if (!min_vc_containing(g, v)) {
        a.status = ConditionStatus::kFail;
        a.vertex = v;
        break;
      }
    }
    for (const VertexSet& s : covers.covers) {
      VertexSet independent = set_difference(VertexSet::range(n), s);
      auto r = hall_check(g, independent, s);
      if (auto* w = std::get_if<HallWitness>(&r)) {
        b.status = ConditionStatus::kFail;
        b.independent_set = independent;
        b.hall = *w;
        break;
      }
    }
    if (b.status == ConditionStatus::kPass && covers.truncated) {
      b.status = ConditionStatus::kPartial;
      b.note = "minimum cover enumeration truncated";
    }
    if (2 * report.mvc < n) {
      c.status = ConditionStatus::kFail;
      c.note = std::to_string(report.mvc) + " < " + std::to_string(n) + "/2";
    }
    std::optional<VertexSet> tight;
    if (n <= options.independent_set_exhaustive_max_n) {
      tight = tight_nonmaximal_exhaustive(g);
    } else {
      tight = tight_nonmaximal_sampled(g, options.independent_set_samples,
                                       options.seed);
      if (!tight) {
        d.status = ConditionStatus::kPartial;
        d.note = "sampled " + std::to_string(options.independent_set_samples) +
                 " greedy independent sets";
      }
    }
    if (tight) {
      d.status = ConditionStatus::kFail;
      d.independent_set = *tight;
      HallWitness w;
      w.violator = *tight;
      w.neighborhood = neighborhood(g, *tight);
      w.kind = HallWitness::Kind::kTight;
      d.hall = w;
    }

    GoodnessChecker checker(g);
    Mask weak = 0, strong = 0;
    std::vector<std::optional<BadSetCertificate>> first_weak(n), first_strong(n);
    bool resource_limited = false;
    for (const VertexSet& s : covers.covers) {
      try {
        GoodnessResult w =
            checker.weakly_good(GuardConfiguration::from_set(n, s));
        GoodnessResult st = checker.strongly_good(s);
        if (w.good) weak |= s.mask();
        if (st.good) strong |= s.mask();
        for (int v : s) {
          if (!w.good && !first_weak[v]) first_weak[v] = w.certificate;
          if (!st.good && !first_strong[v]) first_strong[v] = st.certificate;
        }
      } catch (const ResourceError&) {
        resource_limited = true;
      }
    }
    const bool complete = !covers.truncated && !resource_limited;
    auto settle = [&](ConditionCheck& check, Mask good,
                      std::vector<std::optional<BadSetCertificate>>& certs) {
      for (int v = 0; v < n; ++v) {
        if (good & bit(v)) continue;
        if (!complete) {
          check.status = ConditionStatus::kPartial;
          check.note = "cover enumeration or bad-set search incomplete";
          return;
        }
        check.status = ConditionStatus::kFail;
        check.vertex = v;
        check.bad_set = certs[v];
        if (!certs[v]) check.note = "no minimum vertex cover contains it";
        return;
      }
    };
    settle(e, weak, first_weak);
    settle(f, strong, first_strong);
  } else {
    for (ConditionCheck* check : {&a, &b, &c, &d}) {
      check->status = ConditionStatus::kNotApplicable;
      check->note = "only for k = mvc(G)";
    }
    if (n > options.configuration_max_n) {
      for (ConditionCheck* check : {&e, &f}) {
        check->status = ConditionStatus::kPartial;
        check->note = "configuration search skipped above n = " +
                      std::to_string(options.configuration_max_n);
      }
    } else {
      GoodnessChecker checker(g);
      const Mask all = g.all_mask();
      Mask weak = 0, strong = 0;
      std::vector<std::optional<BadSetCertificate>> first_weak(n),
          first_strong(n);
      bool resource_limited = false;
      for_each_covering_configuration(g, k, [&](const GuardConfiguration& cf) {
        Mask support = cf.support().mask();
        try {
          if (support & ~weak) {
            GoodnessResult w = checker.weakly_good(cf);
            if (w.good) {
              weak |= support;
            } else {
              for (int v : cf.support()) {
                if (!first_weak[v]) first_weak[v] = w.certificate;
              }
            }
          }
          if (support & ~strong) {
            GoodnessResult st = checker.strongly_good(cf);
            if (st.good) {
              strong |= support;
            } else {
              for (int v : cf.support()) {
                if (!first_strong[v]) first_strong[v] = st.certificate;
              }
            }
          }
        } catch (const ResourceError&) {
          resource_limited = true;
        }
        return weak == all && strong == all;
      });
      for (auto [check, good, certs] :
           {std::tuple{&e, weak, &first_weak},
            std::tuple{&f, strong, &first_strong}}) {
        for (int v = 0; v < n; ++v) {
          if (good & bit(v)) continue;
          if (resource_limited) {
            check->status = ConditionStatus::kPartial;
            check->note = "bad-set search exceeded its limit";
            break;
          }
          check->status = ConditionStatus::kFail;
          check->vertex = v;
          check->bad_set = (*certs)[v];
          break;
        }
      }
    }
  }

  report.checks = {a, b, c, d, e, f};
  for (const ConditionCheck& check : report.checks) {
    if (check.status == ConditionStatus::kFail) report.violated = true;
    if (check.status == ConditionStatus::kPartial) report.partial = true;
  }
  report.verdict = report.violated  ? "evc > k"
                   : report.partial ? "inconclusive"
                                    : "no violation found";
  return report;
}

}  // namespace spartan
