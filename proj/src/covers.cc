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

#include "spartan/covers.h"

#include <algorithm>
#include <bit>

#include "spartan/errors.h"

namespace spartan {
namespace {

void require_mask_size(const Graph& g) {
  if (g.vertex_count() > kMaxAnalysisVertices) {
    throw PreconditionError("vertex cover search is limited to 64 vertices");
  }
}

// Greedy maximal matching size inside `live`; a lower bound on mvc(G[live]).
int matching_lower_bound(const Graph& g, Mask live) {
  int size = 0;
  Mask free = live;
  while (free) {
    int v = std::countr_zero(free);
    free &= ~bit(v);
    Mask nb = g.neighbor_mask(v) & free;
    if (nb) {
      free &= ~bit(std::countr_zero(nb));
      ++size;
    }
  }
  return size;
}

// Branch and bound over G[live]. `chosen` is the partial cover.
class CoverSearch {
 public:
  CoverSearch(const Graph& g, int bound, bool collect, int cap)
      : g_(g), best_(bound), collect_(collect), cap_(cap) {}

  void run(Mask live) { visit(live, 0, 0); }

  int best() const { return best_; }
  Mask best_cover() const { return best_cover_; }
  const std::vector<Mask>& found() const { return found_; }
  bool truncated() const { return truncated_; }

 private:
  void visit(Mask live, Mask chosen, int size) {
    if (truncated_) return;
    // Drop vertices that no longer have live neighbours.
    int pick = -1;
    int pick_degree = 0;
    for (Mask rest = live; rest;) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      int d = std::popcount(g_.neighbor_mask(v) & live);
      if (d == 0) {
        live &= ~bit(v);
      } else if (d > pick_degree) {
        pick = v;
        pick_degree = d;
      }
    }
    if (pick == -1) {
      record(chosen, size);
      return;
    }
    int lb = matching_lower_bound(g_, live);
    if (collect_ ? size + lb > best_ : size + lb >= best_) return;

    visit(live & ~bit(pick), chosen | bit(pick), size + 1);
    Mask nb = g_.neighbor_mask(pick) & live;
    visit(live & ~(nb | bit(pick)), chosen | nb, size + std::popcount(nb));
  }

  void record(Mask chosen, int size) {
    if (collect_) {
      if (size != best_) return;
      if (static_cast<int>(found_.size()) == cap_) {
        truncated_ = true;
        return;
      }
      found_.push_back(chosen);
    } else if (size < best_) {
      best_ = size;
      best_cover_ = chosen;
    }
  }

  const Graph& g_;
  int best_;
  bool collect_;
  int cap_;
  Mask best_cover_ = 0;
  std::vector<Mask> found_;
  bool truncated_ = false;
};

std::pair<int, Mask> solve(const Graph& g, Mask live) {
  int trivial = std::popcount(live) + 1;
  CoverSearch search(g, trivial, false, 0);
  search.run(live);
  return {search.best(), search.best_cover()};
}

}  // namespace

MvcResult mvc(const Graph& g) {
  require_mask_size(g);
  auto [size, cover] = solve(g, g.all_mask());
  return {size, VertexSet::from_mask(cover)};
}

int mvc_size(const Graph& g, Mask within) {
  require_mask_size(g);
  return solve(g, within).first;
}

CoverSet enumerate_min_vcs(const Graph& g, int cap) {
  require_mask_size(g);
  if (cap < 1) throw PreconditionError("enumerate_min_vcs: cap must be >= 1");
  CoverSet out;
  out.cap = cap;
  out.size = solve(g, g.all_mask()).first;
  CoverSearch search(g, out.size, true, cap);
  search.run(g.all_mask());
  out.truncated = search.truncated();
  for (Mask m : search.found()) out.covers.push_back(VertexSet::from_mask(m));
  std::sort(out.covers.begin(), out.covers.end());
  out.covers.erase(std::unique(out.covers.begin(), out.covers.end()),
                   out.covers.end());
  return out;
}

std::optional<VertexSet> min_vc_containing(const Graph& g, int v) {
  require_mask_size(g);
  const Mask all = g.all_mask();
  auto [size, cover] = solve(g, all);
  auto [rest, rest_cover] = solve(g, all & ~bit(v));
  if (rest + 1 != size) return std::nullopt;
  return VertexSet::from_mask(rest_cover | bit(v));
}

CoverSet enumerate_min_vcs_brute_force(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 20) throw PreconditionError("brute-force covers limited to n <= 20");
  CoverSet out;
  out.size = n;
  std::vector<Mask> best;
  for (Mask m = 0; m < (Mask{1} << n); ++m) {
    int c = std::popcount(m);
    if (c > out.size || !is_vertex_cover(g, m)) continue;
    if (c < out.size) {
      out.size = c;
      best.clear();
    }
    best.push_back(m);
  }
  for (Mask m : best) out.covers.push_back(VertexSet::from_mask(m));
  std::sort(out.covers.begin(), out.covers.end());
  out.cap = static_cast<int>(out.covers.size());
  return out;
}

}  // namespace spartan
