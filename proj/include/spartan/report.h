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

#ifndef SPARTAN_REPORT_H_
#define SPARTAN_REPORT_H_

#include <string>

#include "json.hpp"
#include "spartan/covers.h"
#include "spartan/decider.h"
#include "spartan/defense_graph.h"
#include "spartan/game.h"
#include "spartan/goodness.h"
#include "spartan/graph.h"
#include "spartan/selftest.h"

namespace spartan {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1.0";

// {"vertices": [...], "edges": [[a, b], ...]} with labels.
Json graph_json(const Graph& g);

// Envelope shared by every command: schemaVersion, command, input, result.
Json make_report(const std::string& command, const Graph& g, Json result);

Json to_json(const Graph& g, const CoverSet& covers, int mvc_size);
Json to_json(const Graph& g, const EvcResult& r);
Json to_json(const Graph& g, const SpartanVerdict& v);
Json to_json(const Graph& g, const DefenseFamily& f);
Json to_json(const Graph& g, const Certificate& c);
Json to_json(const Graph& g, const KonigReport& r);
Json to_json(const Graph& g, const NecessaryConditionsReport& r);
Json to_json(const Graph& g, const AuxiliaryGraph& aux);
Json to_json(const SelftestReport& r);

// Defender strategy: the lexicographically least cover as the start and,
// per (cover, attack), the successor and its guard moves. Attacks on edges
// with both ends guarded are answered by swapping and are not listed.
Json strategy_export(const Graph& g, const DefenseFamily& f);

// Summary of a solved game: guard count, state counts and start position.
Json game_summary(const GuardGame& game);

// Re-checks the certificates and families in a report against g: the input
// echo, every defense family, odd cycles, edges outside all perfect
// matchings, deletion traces and bad-set certificates.
bool validate_report(const Graph& g, const Json& report,
                     std::string* why = nullptr);

}  // namespace spartan

#endif  // SPARTAN_REPORT_H_
