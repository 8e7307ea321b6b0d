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

#include "spartan/report.h"

#include <algorithm>

#include "spartan/errors.h"

namespace spartan {

namespace {

Json labels_of(const Graph& g, const VertexSet& s) {
  Json out = Json::array();
  for (int v : s) out.push_back(g.label(v));
  return out;
}

Json labels_of(const Graph& g, const std::vector<int>& path) {
  Json out = Json::array();
  for (int v : path) out.push_back(g.label(v));
  return out;
}

Json pair_of(const Graph& g, int a, int b) {
  return Json::array({g.label(a), g.label(b)});
}

Json config_json(const Graph& g, const GuardConfiguration& c) {
  Json out = Json::object();
  for (int v = 0; v < c.vertex_count(); ++v) {
    if (c.count(v) > 0) out[g.label(v)] = c.count(v);
  }
  return out;
}

Json moves_json(const Graph& g, const std::vector<GuardMove>& moves) {
  Json out = Json::array();
  for (const GuardMove& m : moves) out.push_back(pair_of(g, m.from, m.to));
  return out;
}

Json hall_json(const Graph& g, const HallWitness& h) {
  return {{"kind", h.kind == HallWitness::Kind::kTight ? "tight" : "deficient"},
          {"violator", labels_of(g, h.violator)},
          {"neighborhood", labels_of(g, h.neighborhood)}};
}

Json bad_set_json(const Graph& g, const BadSetCertificate& c) {
  Json out = {
      {"kind", c.kind == BadSetCertificate::Kind::kWeaklyBad ? "weaklyBad"
                                                             : "stronglyBad"},
      {"cover", config_json(g, c.cover)},
      {"badSet", labels_of(g, c.bad_set)},
      {"component", labels_of(g, c.component)},
      {"exitVertex", nullptr},
      {"stackedResponses", c.stacked_responses}};
  if (c.exit_vertex) out["exitVertex"] = g.label(*c.exit_vertex);
  return out;
}

template <typename T>
Json optional_json(const Graph& g, const std::optional<T>& value) {
  return value ? to_json(g, *value) : Json(nullptr);
}

}  // namespace

Json graph_json(const Graph& g) {
  Json vertices = Json::array();
  for (int v = 0; v < g.vertex_count(); ++v) vertices.push_back(g.label(v));
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back(pair_of(g, e.u, e.v));
  return {{"vertices", vertices}, {"edges", edges}};
}

Json make_report(const std::string& command, const Graph& g, Json result) {
  return {{"schemaVersion", kSchemaVersion},
          {"command", command},
          {"input", graph_json(g)},
          {"result", std::move(result)}};
}

Json to_json(const Graph& g, const CoverSet& covers, int mvc_size) {
  Json list = Json::array();
  for (const VertexSet& c : covers.covers) list.push_back(labels_of(g, c));
  return {{"mvc", mvc_size},
          {"count", covers.covers.size()},
          {"truncated", covers.truncated},
          {"cap", covers.cap},
          {"covers", list}};
}

Json to_json(const Graph& g, const EvcResult& r) {
  Json parts = Json::array();
  for (const ComponentEvc& c : r.components) {
    parts.push_back({{"vertices", labels_of(g, c.vertices)},
                     {"mvc", c.mvc},
                     {"evc", c.evc},
                     {"states", c.states}});
  }
  return {{"evc", r.value},
          {"mvc", r.mvc},
          {"spartan", r.value == r.mvc},
          {"components", parts}};
}

Json to_json(const Graph& g, const DefenseFamily& f) {
  Json covers = Json::array();
  for (const VertexSet& c : f.covers) covers.push_back(labels_of(g, c));
  Json transitions = Json::array();
  for (const Transition& t : f.transitions) {
    Json paths = Json::array();
    for (const auto& p : t.paths) paths.push_back(labels_of(g, p));
    transitions.push_back({{"from", t.from},
                           {"attack", pair_of(g, t.attack.u, t.attack.v)},
                           {"to", t.to},
                           {"condition", t.condition},
                           {"paths", paths},
                           {"moves", moves_json(g, t.moves)}});
  }
  return {{"covers", covers}, {"transitions", transitions}};
}

Json to_json(const Graph& g, const Certificate& c) {
  Json out = {{"kind", to_string(c.kind)}, {"component", c.component}};
  switch (c.kind) {
    case Certificate::Kind::kOddCycle:
      out["oddCycle"] = labels_of(g, c.odd_cycle);
      break;
    case Certificate::Kind::kEdgeInNoPerfectMatching:
      out["edge"] = c.edge ? pair_of(g, c.edge->u, c.edge->v) : Json(nullptr);
      out["tightSet"] =
          c.tight_set ? hall_json(g, *c.tight_set) : Json(nullptr);
      break;
    case Certificate::Kind::kDeletionTrace: {
      Json trace = Json::array();
      for (const Deletion& d : c.trace) {
        trace.push_back({{"round", d.round},
                         {"cover", labels_of(g, d.cover)},
                         {"attack", pair_of(g, d.attack.u, d.attack.v)}});
      }
      out["trace"] = trace;
      break;
    }
    case Certificate::Kind::kGameOracle: {
      Json attacks = Json::array();
      for (const Attack& a : c.attacks) attacks.push_back(pair_of(g, a.u, a.v));
      out["attacks"] = attacks;
      break;
    }
  }
  return out;
}

Json strategy_export(const Graph& g, const DefenseFamily& f) {
  if (f.covers.empty()) throw PreconditionError("empty defense family");
  size_t initial = 0;
  for (size_t i = 1; i < f.covers.size(); ++i) {
    if (std::lexicographical_compare(f.covers[i].begin(), f.covers[i].end(),
                                     f.covers[initial].begin(),
                                     f.covers[initial].end())) {
      initial = i;
    }
  }
  Json entries = Json::array();
  for (const Transition& t : f.transitions) {
    entries.push_back({{"cover", labels_of(g, f.covers[t.from])},
                       {"attack", pair_of(g, t.attack.u, t.attack.v)},
                       {"next", labels_of(g, f.covers[t.to])},
                       {"moves", moves_json(g, t.moves)}});
  }
  return {{"initial", labels_of(g, f.covers[initial])},
          {"states", f.covers.size()},
          {"swapsImplicit", true},
          {"transitions", entries}};
}

Json to_json(const Graph& g, const SpartanVerdict& v) {
  Json parts = Json::array();
  for (const ComponentVerdict& c : v.components) {
    parts.push_back({{"vertices", labels_of(g, c.vertices)},
                     {"spartan", c.spartan},
                     {"method", to_string(c.method)},
                     {"mm", c.mm},
                     {"mvc", c.mvc},
                     {"minCovers", c.min_covers},
                     {"coversTruncated", c.covers_truncated},
                     {"family", optional_json(g, c.family)},
                     {"certificate", optional_json(g, c.certificate)}});
  }
  return {{"spartan", v.spartan},
          {"method", to_string(v.method)},
          {"flagged", v.flagged},
          {"crossCheck", v.cross_check_agrees ? Json(*v.cross_check_agrees)
                                              : Json(nullptr)},
          {"family", optional_json(g, v.family)},
          {"certificate", optional_json(g, v.certificate)},
          {"strategy",
           v.family ? strategy_export(g, *v.family) : Json(nullptr)},
          {"components", parts}};
}

Json to_json(const Graph& g, const KonigReport& r) {
  Json parts = Json::array();
  for (const KonigComponent& c : r.components) {
    parts.push_back({{"vertices", labels_of(g, c.vertices)},
                     {"mm", c.mm},
                     {"mvc", c.mvc},
                     {"konig", c.konig},
                     {"elementary",
                      c.elementary ? Json(*c.elementary) : Json(nullptr)}});
  }
  return {{"konig", r.konig},
          {"mm", r.mm},
          {"mvc", r.mvc},
          {"bipartite", r.bipartite},
          {"oddCycle",
           r.odd_cycle ? labels_of(g, r.odd_cycle->cycle) : Json(nullptr)},
          {"essentiallyElementary", r.essentially_elementary},
          {"spartan", r.spartan ? Json(*r.spartan) : Json(nullptr)},
          {"components", parts}};
}

Json to_json(const Graph& g, const NecessaryConditionsReport& r) {
  Json checks = Json::array();
  Json violated = Json::array(), partial = Json::array();
  for (const ConditionCheck& c : r.checks) {
    Json item = {{"key", c.key},
                 {"description", c.description},
                 {"status", to_string(c.status)}};
    if (c.vertex) item["vertex"] = g.label(*c.vertex);
    if (c.independent_set) {
      item["independentSet"] = labels_of(g, *c.independent_set);
    }
    if (c.hall) item["hall"] = hall_json(g, *c.hall);
    if (c.bad_set) item["badSet"] = bad_set_json(g, *c.bad_set);
    if (!c.note.empty()) item["note"] = c.note;
    if (c.status == ConditionStatus::kFail) violated.push_back(c.key);
    if (c.status == ConditionStatus::kPartial) partial.push_back(c.key);
    checks.push_back(std::move(item));
  }
  return {{"k", r.k},
          {"mvc", r.mvc},
          {"spartanMode", r.spartan_mode},
          {"verdict", r.verdict},
          {"violated", violated},
          {"partial", partial},
          {"checks", checks}};
}

Json to_json(const Graph& g, const AuxiliaryGraph& aux) {
  Json colors = Json::array();
  for (const VertexSet& c : aux.colors) colors.push_back(labels_of(g, c));
  Json real = Json::array();
  for (const AuxEdge& e : aux.real_edges) real.push_back(pair_of(g, e.left, e.right));
  Json helper = Json::array();
  for (const AuxEdge& e : aux.helper_edges) {
    helper.push_back({{"edge", pair_of(g, e.left, e.right)},
                      {"color", e.color},
                      {"colorVertices", labels_of(g, aux.colors[e.color])}});
  }
  return {{"s", labels_of(g, aux.s)},
          {"t", labels_of(g, aux.t)},
          {"left", labels_of(g, aux.left)},
          {"right", labels_of(g, aux.right)},
          {"colors", colors},
          {"realEdges", real},
          {"helperEdges", helper},
          {"deadZone", labels_of(g, aux.dead_zone)}};
}

Json to_json(const SelftestReport& r) {
  Json criteria = Json::array();
  for (const CriterionResult& c : r.criteria) {
    criteria.push_back({{"id", c.id},
                        {"name", c.name},
                        {"pass", c.pass},
                        {"checked", c.checked},
                        {"failures", c.failures},
                        {"detail", c.detail},
                        {"seconds", c.seconds}});
  }
  return {{"options",
           {{"maxN", r.options.max_n},
            {"samples", r.options.samples},
            {"p", r.options.p},
            {"seed", r.options.seed}}},
          {"graphs", r.graphs},
          {"pass", r.pass},
          {"criteria", criteria}};
}

Json game_summary(const GuardGame& game) {
  return {{"guards", game.guards()},
          {"states", game.state_count()},
          {"safeStates", game.safe_count()},
          {"rounds", game.rounds()},
          {"start", config_json(game.graph(),
                                game.state(game.initial_state()))}};
}

namespace {

struct ReportError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int vertex_of(const Graph& g, const Json& label) {
  if (!label.is_string()) throw ReportError("vertex label is not a string");
  std::optional<int> v = g.index_of(label.get<std::string>());
  if (!v) throw ReportError("unknown vertex " + label.get<std::string>());
  return *v;
}

VertexSet set_of(const Graph& g, const Json& list) {
  std::vector<int> out;
  for (const Json& l : list) out.push_back(vertex_of(g, l));
  std::sort(out.begin(), out.end());
  return VertexSet(std::move(out));
}

std::vector<int> path_of(const Graph& g, const Json& list) {
  std::vector<int> out;
  for (const Json& l : list) out.push_back(vertex_of(g, l));
  return out;
}

DefenseFamily family_of(const Graph& g, const Json& j) {
  DefenseFamily f;
  for (const Json& c : j.at("covers")) f.covers.push_back(set_of(g, c));
  for (const Json& t : j.at("transitions")) {
    Transition tr;
    tr.from = t.at("from").get<int>();
    tr.to = t.at("to").get<int>();
    tr.condition = t.at("condition").get<int>();
    tr.attack = {vertex_of(g, t.at("attack").at(0)),
                 vertex_of(g, t.at("attack").at(1))};
    for (const Json& p : t.at("paths")) tr.paths.push_back(path_of(g, p));
    for (const Json& m : t.at("moves")) {
      tr.moves.push_back({vertex_of(g, m.at(0)), vertex_of(g, m.at(1))});
    }
    f.transitions.push_back(std::move(tr));
  }
  return f;
}

GuardConfiguration config_of(const Graph& g, const Json& j) {
  std::vector<int> counts(g.vertex_count(), 0);
  for (const auto& [label, count] : j.items()) {
    counts[vertex_of(g, Json(label))] = count.get<int>();
  }
  return GuardConfiguration(counts);
}

void check_certificate(const Graph& g, const Json& c, const VertexSet& part) {
  const std::string kind = c.at("kind").get<std::string>();
  Graph sub = induced_subgraph(g, part);
  auto local = [&](int v) {
    auto it = std::lower_bound(part.begin(), part.end(), v);
    if (it == part.end() || *it != v) {
      throw ReportError("certificate leaves its component");
    }
    return static_cast<int>(it - part.begin());
  };
  if (kind == "oddCycle") {
    std::vector<int> cycle = path_of(g, c.at("oddCycle"));
    std::vector<int> sorted = cycle;
    std::sort(sorted.begin(), sorted.end());
    if (cycle.size() < 3 || cycle.size() % 2 == 0 ||
        std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw ReportError("odd cycle has the wrong length or repeats");
    }
    for (size_t i = 0; i < cycle.size(); ++i) {
      if (!g.adjacent(cycle[i], cycle[(i + 1) % cycle.size()])) {
        throw ReportError("odd cycle uses a non-edge");
      }
    }
  } else if (kind == "edgeInNoPerfectMatching") {
    int a = local(vertex_of(g, c.at("edge").at(0)));
    int b = local(vertex_of(g, c.at("edge").at(1)));
    auto sides = bipartition(sub);
    if (!std::holds_alternative<Bipartition>(sides) || !sub.adjacent(a, b)) {
      throw ReportError("edge certificate on a non-bipartite component");
    }
    const Bipartition& bp = std::get<Bipartition>(sides);
    if (perfect_matching_through_edge(sub, bp.side_a, bp.side_b, Edge(a, b))) {
      throw ReportError("certified edge lies in a perfect matching");
    }
  } else if (kind == "deletionTrace") {
    CoverSet covers = enumerate_min_vcs(sub);
    if (covers.truncated) throw ReportError("too many covers to re-check");
    std::vector<bool> alive(covers.covers.size(), true);
    std::vector<int> deleted_in(covers.covers.size(), 0);
    const Json& trace = c.at("trace");
    for (const Json& d : trace) {
      std::vector<int> members;
      for (int v : set_of(g, d.at("cover"))) members.push_back(local(v));
      VertexSet cover(std::move(members));
      auto it = std::find(covers.covers.begin(), covers.covers.end(), cover);
      if (it == covers.covers.end()) throw ReportError("trace cover unknown");
      int idx = static_cast<int>(it - covers.covers.begin());
      if (deleted_in[idx]) throw ReportError("cover deleted twice");
      deleted_in[idx] = d.at("round").get<int>();
    }
    for (size_t i = 0; i < alive.size(); ++i) {
      if (!deleted_in[i]) throw ReportError("trace leaves a cover alive");
    }
    for (const Json& d : trace) {
      const int round = d.at("round").get<int>();
      for (size_t i = 0; i < alive.size(); ++i) {
        alive[i] = deleted_in[i] >= round;
      }
      std::vector<int> members;
      for (int v : set_of(g, d.at("cover"))) members.push_back(local(v));
      VertexSet cover(std::move(members));
      int u = local(vertex_of(g, d.at("attack").at(0)));
      int v = local(vertex_of(g, d.at("attack").at(1)));
      if (!cover.contains(u) || cover.contains(v) || !sub.adjacent(u, v)) {
        throw ReportError("trace attack is not an attack on its cover");
      }
      auto r = check_defense(sub, cover, u, v, covers.covers, &alive);
      if (std::holds_alternative<Defense>(r)) {
        throw ReportError("trace attack has a defense");
      }
    }
  } else if (kind == "gameOracle") {
    for (const Json& a : c.at("attacks")) {
      if (!g.adjacent(vertex_of(g, a.at(0)), vertex_of(g, a.at(1)))) {
        throw ReportError("attack on a non-edge");
      }
    }
  } else {
    throw ReportError("unknown certificate kind " + kind);
  }
}

void check_spartan(const Graph& g, const Json& result) {
  const Json& parts = result.at("components");
  for (const Json& part : parts) {
    VertexSet vertices = set_of(g, part.at("vertices"));
    std::string why;
    if (!part.at("family").is_null() &&
        !validate_family(g, family_of(g, part.at("family")), &why,
                         &vertices)) {
      throw ReportError("component family: " + why);
    }
    if (!part.at("certificate").is_null()) {
      check_certificate(g, part.at("certificate"), vertices);
    }
  }
  std::string why;
  if (!result.at("family").is_null() &&
      !validate_family(g, family_of(g, result.at("family")), &why)) {
    throw ReportError("family: " + why);
  }
  if (!result.at("certificate").is_null()) {
    const Json& c = result.at("certificate");
    int index = c.at("component").get<int>();
    check_certificate(g, c, set_of(g, parts.at(index).at("vertices")));
  }
}

void check_certify(const Graph& g, const Json& result) {
  for (const Json& check : result.at("checks")) {
    if (!check.contains("badSet")) continue;
    const Json& b = check.at("badSet");
    BadSetCertificate cert;
    cert.kind = b.at("kind") == "weaklyBad"
                    ? BadSetCertificate::Kind::kWeaklyBad
                    : BadSetCertificate::Kind::kStronglyBad;
    cert.cover = config_of(g, b.at("cover"));
    cert.bad_set = set_of(g, b.at("badSet"));
    cert.component = set_of(g, b.at("component"));
    if (!b.at("exitVertex").is_null()) {
      cert.exit_vertex = vertex_of(g, b.at("exitVertex"));
    }
    cert.stacked_responses = b.at("stackedResponses").get<bool>();
    std::string why;
    if (!validate_certificate(g, cert, &why)) {
      throw ReportError("bad-set certificate: " + why);
    }
  }
}

}  // namespace

bool validate_report(const Graph& g, const Json& report, std::string* why) {
  try {
    if (report.at("input") != graph_json(g)) {
      throw ReportError("input echo does not match the graph");
    }
    const std::string command = report.at("command").get<std::string>();
    if (command == "spartan") check_spartan(g, report.at("result"));
    if (command == "certify") check_certify(g, report.at("result"));
  } catch (const ReportError& e) {
    if (why) *why = e.what();
    return false;
  } catch (const Json::exception& e) {
    if (why) *why = std::string("malformed report: ") + e.what();
    return false;
  }
  return true;
}

}  // namespace spartan
