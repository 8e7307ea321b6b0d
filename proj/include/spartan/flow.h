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

#ifndef SPARTAN_FLOW_H_
#define SPARTAN_FLOW_H_

#include <vector>

namespace spartan {

// Integer-capacity flow network with shortest-augmenting-path max flow.
// Arcs are scanned in insertion order, so results are deterministic.
class FlowNetwork {
 public:
  explicit FlowNetwork(int nodes) : adjacency_(nodes) {}

  int node_count() const { return static_cast<int>(adjacency_.size()); }
  int add_node();
  // Returns the arc id; its residual twin is id ^ 1.
  int add_arc(int from, int to, int capacity);

  // Augments until `limit` units flow or no augmenting path remains.
  int max_flow(int source, int sink, int limit);

  int flow_on(int arc) const { return arcs_[arc].flow; }
  int arc_from(int arc) const { return arcs_[arc ^ 1].to; }
  int arc_to(int arc) const { return arcs_[arc].to; }

  // Splits the current flow into source-sink node sequences (one per unit),
  // cancelling any circulation. Consumes the flow.
  std::vector<std::vector<int>> decompose(int source, int sink);

 private:
  struct Arc {
    int to;
    int capacity;
    int flow;
  };
  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> adjacency_;
};

}  // namespace spartan

#endif  // SPARTAN_FLOW_H_
