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

#include "spartan/flow.h"

#include <algorithm>
#include <limits>

#include "spartan/errors.h"

namespace spartan {

int FlowNetwork::add_node() {
  adjacency_.emplace_back();
  return node_count() - 1;
}

int FlowNetwork::add_arc(int from, int to, int capacity) {
  int id = static_cast<int>(arcs_.size());
  arcs_.push_back({to, capacity, 0});
  arcs_.push_back({from, 0, 0});
  adjacency_[from].push_back(id);
  adjacency_[to].push_back(id + 1);
  return id;
}

int FlowNetwork::max_flow(int source, int sink, int limit) {
  const int n = node_count();
  int total = 0;
  std::vector<int> via(n);
  std::vector<int> queue;
  queue.reserve(n);
  while (total < limit) {
    std::fill(via.begin(), via.end(), -1);
    queue.clear();
    queue.push_back(source);
    via[source] = -2;
    for (size_t head = 0; head < queue.size() && via[sink] == -1; ++head) {
      int x = queue[head];
      for (int id : adjacency_[x]) {
        const Arc& a = arcs_[id];
        if (via[a.to] == -1 && a.capacity - a.flow > 0) {
          via[a.to] = id;
          queue.push_back(a.to);
        }
      }
    }
    if (via[sink] == -1) break;
    int push = limit - total;
    for (int x = sink; x != source; x = arcs_[via[x] ^ 1].to) {
      const Arc& a = arcs_[via[x]];
      push = std::min(push, a.capacity - a.flow);
    }
    for (int x = sink; x != source; x = arcs_[via[x] ^ 1].to) {
      arcs_[via[x]].flow += push;
      arcs_[via[x] ^ 1].flow -= push;
    }
    total += push;
  }
  return total;
}

std::vector<std::vector<int>> FlowNetwork::decompose(int source, int sink) {
  std::vector<std::vector<int>> paths;
  const int n = node_count();
  while (true) {
    // Walk positive-flow arcs from the source; a revisited node closes a
    // circulation, which is cancelled before walking again.
    std::vector<int> position(n, -1);
    std::vector<int> nodes{source};
    std::vector<int> used;
    position[source] = 0;
    int x = source;
    bool cancelled = false;
    while (x != sink) {
      int next_arc = -1;
      for (int id : adjacency_[x]) {
        if ((id & 1) == 0 && arcs_[id].flow > 0) {
          next_arc = id;
          break;
        }
      }
      if (next_arc == -1) {
        if (x == source) return paths;
        throw IntegrityError("flow decomposition reached a dead end");
      }
      int y = arcs_[next_arc].to;
      if (position[y] != -1) {
        for (size_t i = position[y]; i < used.size(); ++i) {
          arcs_[used[i]].flow -= 1;
          arcs_[used[i] ^ 1].flow += 1;
        }
        arcs_[next_arc].flow -= 1;
        arcs_[next_arc ^ 1].flow += 1;
        cancelled = true;
        break;
      }
      used.push_back(next_arc);
      position[y] = static_cast<int>(nodes.size());
      nodes.push_back(y);
      x = y;
    }
    if (cancelled) continue;
    for (int id : used) {
      arcs_[id].flow -= 1;
      arcs_[id ^ 1].flow += 1;
    }
    paths.push_back(std::move(nodes));
  }
}

}  // namespace spartan
