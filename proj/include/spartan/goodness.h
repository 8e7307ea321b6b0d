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

#ifndef SPARTAN_GOODNESS_H_
#define SPARTAN_GOODNESS_H_

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "spartan/graph.h"
#include "spartan/matching.h"
#include "spartan/reachability.h"

namespace spartan {

// Bad-set searches enumerate every subset of the unoccupied vertices.
inline constexpr int kMaxUnoccupiedForBadSets = 20;

struct BadSetCertificate {
  enum class Kind { kWeaklyBad, kStronglyBad };
  Kind kind = Kind::kWeaklyBad;
  GuardConfiguration cover;
  VertexSet bad_set;
  VertexSet component;
  std::optional<int> exit_vertex;
  // Replacement guards inside the component may share a vertex.
  bool stacked_responses = false;
};

struct GoodnessResult {
  bool good = true;
  std::optional<BadSetCertificate> certificate;
};

// Caches mvc of induced subgraphs and replacement searches for one graph.
// Not thread-safe; use one checker per worker.
class GoodnessChecker {
 public:
  explicit GoodnessChecker(const Graph& g);

  GoodnessResult weakly_good(const GuardConfiguration& c);
  // Replacement covers are sets (one guard per vertex).
  GoodnessResult strongly_good(const VertexSet& cover);
  // Replacement configurations may stack guards.
  GoodnessResult strongly_good(const GuardConfiguration& c);

  int component_mvc(Mask component);

 private:
  GoodnessResult strongly_good_impl(const GuardConfiguration& c, bool stacked);
  bool has_replacement(Mask component, const std::vector<int>& remaining,
                       bool stacked);

  const Graph& g_;
  std::unordered_map<Mask, int> mvc_cache_;
  std::map<std::pair<std::vector<int>, bool>, bool> replacement_cache_;
};

GoodnessResult is_weakly_good(const Graph& g, const GuardConfiguration& c);
GoodnessResult is_strongly_good(const Graph& g, const VertexSet& cover);
GoodnessResult is_strongly_good(const Graph& g, const GuardConfiguration& c);

// Recomputes a certificate from scratch: components of G - T, guard counts,
// component mvc and, for strongly bad sets, the absence of any one-step
// rearrangement of the remaining guards that covers the component.
bool validate_certificate(const Graph& g, const BadSetCertificate& cert,
                          std::string* why = nullptr);

enum class ConditionStatus { kPass, kFail, kNotApplicable, kPartial };

struct ConditionCheck {
  std::string key;
  std::string description;
  ConditionStatus status = ConditionStatus::kPass;
  std::optional<int> vertex;
  std::optional<VertexSet> independent_set;
  std::optional<HallWitness> hall;
  std::optional<BadSetCertificate> bad_set;
  std::string note;
};

struct NecessaryConditionsReport {
  int k = 0;
  int mvc = 0;
  bool spartan_mode = false;
  std::vector<ConditionCheck> checks;
  bool violated = false;
  bool partial = false;
  // "evc > k" when some condition fails.
  std::string verdict;
};

// Exhaustive caps for the report.
struct NecessaryConditionsOptions {
  int independent_set_exhaustive_max_n = 20;
  int independent_set_samples = 200000;
  int configuration_max_n = 10;
  unsigned long long seed = 1;
};

// Requires a connected graph with n > 1 and k >= mvc.
NecessaryConditionsReport necessary_conditions_report(
    const Graph& g, int k, const NecessaryConditionsOptions& options = {});

const char* to_string(ConditionStatus s);

}  // namespace spartan

#endif  // SPARTAN_GOODNESS_H_
