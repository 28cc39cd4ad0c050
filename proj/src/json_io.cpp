#include "capclose/json_io.hpp"

#include <fstream>
#include <sstream>

#include "capclose/error.hpp"

namespace capclose::json {

namespace {

// Runs a reader and reports nlohmann type/shape errors as ValidationError.
template <typename Fn>
auto guarded(const char* what, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed ") + what + ": " + e.what());
  }
}

std::vector<std::string> string_list(const Json& arr) {
  if (!arr.is_array()) throw ValidationError("expected an array of labels");
  std::vector<std::string> out;
  for (const auto& v : arr) out.push_back(v.get<std::string>());
  return out;
}

const Json& field(const Json& obj, const char* name) {
  if (!obj.is_object() || !obj.contains(name)) {
    throw ValidationError(std::string("missing field '") + name + "'");
  }
  return obj.at(name);
}

}  // namespace

CapabilityHypergraph read_hypergraph(const Json& doc) {
  return guarded("hypergraph", [&] {
    std::vector<std::string> vertices = string_list(field(doc, "vertices"));
    std::vector<LabelledEdge> edges;
    if (doc.contains("edges")) {
      for (const auto& e : doc.at("edges")) {
        LabelledEdge le;
        le.tail = string_list(field(e, "tail"));
        le.head = string_list(field(e, "head"));
        if (e.contains("label")) le.label = e.at("label").get<std::string>();
        edges.push_back(std::move(le));
      }
    }
    return CapabilityHypergraph::build(std::move(vertices), edges);
  });
}

Json write_set(const CapabilityHypergraph& h, const CapabilitySet& set) {
  Json arr = Json::array();
  for (const auto& l : h.labels_of(set)) arr.push_back(l);
  return arr;
}

Json write_edge_list(const CapabilityHypergraph& h,
                     const std::vector<EdgeId>& edges) {
  Json arr = Json::array();
  for (EdgeId e : edges) arr.push_back(h.edge(e).label);
  return arr;
}

Json write_hypergraph(const CapabilityHypergraph& h) {
  Json doc;
  doc["vertices"] = h.labels();
  Json edges = Json::array();
  for (const auto& e : h.edges()) {
    Json je;
    Json tail = Json::array();
    Json head = Json::array();
    for (CapabilityId v : e.tail) tail.push_back(h.label(v));
    for (CapabilityId v : e.head) head.push_back(h.label(v));
    je["tail"] = std::move(tail);
    je["head"] = std::move(head);
    je["label"] = e.label;
    edges.push_back(std::move(je));
  }
  doc["edges"] = std::move(edges);
  return doc;
}

Json write_antichain(const CapabilityHypergraph& h, const AntichainB& b) {
  Json doc;
  doc["forbidden"] = write_set(h, b.forbidden);
  doc["exhaustive"] = b.exhaustive;
  Json sets = Json::array();
  for (const auto& s : b.sets) sets.push_back(write_set(h, s));
  doc["minimal_unsafe"] = std::move(sets);
  return doc;
}

LabelledAntichain read_antichain(const Json& doc) {
  return guarded("antichain", [&] {
    LabelledAntichain out;
    out.forbidden = string_list(field(doc, "forbidden"));
    out.exhaustive = field(doc, "exhaustive").get<bool>();
    for (const auto& s : field(doc, "minimal_unsafe")) {
      out.minimal_unsafe.push_back(string_list(s));
    }
    return out;
  });
}

std::vector<std::vector<std::string>> read_agents(const Json& doc) {
  return guarded("agents", [&] {
    const Json& arr = doc.is_object() ? field(doc, "agents") : doc;
    if (!arr.is_array()) throw ValidationError("agents must be an array");
    std::vector<std::vector<std::string>> out;
    for (const auto& a : arr) out.push_back(string_list(a));
    return out;
  });
}

std::vector<Trajectory> read_trajectories(std::istream& in) {
  std::vector<Trajectory> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(guarded("trajectory", [&] {
      Json doc;
      try {
        doc = Json::parse(line);
      } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError("line " + std::to_string(line_no) + ": " + e.what());
      }
      Trajectory t;
      t.id = field(doc, "id").get<std::string>();
      for (const auto& ev : field(doc, "events")) {
        t.events.push_back({field(ev, "cap").get<std::string>(),
                            field(ev, "t_ms").get<std::int64_t>()});
      }
      t.terminal = field(doc, "terminal").get<std::string>();
      t.validate();
      return t;
    }));
  }
  return out;
}

Json write_trajectory(const Trajectory& t) {
  Json doc;
  doc["id"] = t.id;
  Json events = Json::array();
  for (const auto& ev : t.events) {
    Json je;
    je["cap"] = ev.cap;
    je["t_ms"] = ev.t_ms;
    events.push_back(std::move(je));
  }
  doc["events"] = std::move(events);
  doc["terminal"] = t.terminal;
  return doc;
}

Json write_mining_report(const MiningReport& r) {
  Json doc;
  Json cands = Json::array();
  for (const auto& c : r.candidates) {
    Json jc;
    jc["tail"] = c.tail;
    jc["head"] = c.head;
    jc["witness_count"] = c.witness_count;
    cands.push_back(std::move(jc));
  }
  doc["candidates"] = std::move(cands);
  doc["conjunctive_instance_count"] = r.conjunctive_instance_count;
  doc["total_count"] = r.total_count;
  doc["prevalence"] = r.prevalence;
  doc["wilson_low"] = r.interval.low;
  doc["wilson_high"] = r.interval.high;
  return doc;
}

std::vector<PlannerInstance> read_planner_instances(const CapabilityHypergraph& h,
                                                    const Json& doc) {
  return guarded("planner instances", [&] {
    std::vector<PlannerInstance> out;
    for (const auto& inst : field(doc, "instances")) {
      PlannerInstance p;
      p.initial = inst.contains("initial")
                      ? h.make_set(string_list(inst.at("initial")))
                      : h.empty_set();
      for (const auto& d : field(inst, "schedule")) {
        p.schedule.push_back({h.id_of(field(d, "cap").get<std::string>()),
                              field(d, "t_ms").get<std::int64_t>()});
      }
      out.push_back(std::move(p));
    }
    return out;
  });
}

namespace {

Json write_tally(const PlannerTally& t) {
  Json doc;
  doc["violations"] = t.violations;
  doc["violating_instances"] = t.violating_instances;
  doc["rate"] = t.rate;
  return doc;
}

}  // namespace

Json write_violation_report(const ViolationReport& r) {
  Json doc;
  doc["instance_count"] = r.instance_count;
  doc["conjunctive_instance_count"] = r.conjunctive_instance_count;
  doc["workflow"] = write_tally(r.workflow);
  doc["hypergraph"] = write_tally(r.hypergraph);
  return doc;
}

MonotoneCircuit read_circuit(const Json& doc) {
  return guarded("circuit", [&] {
    MonotoneCircuit c;
    for (const auto& g : field(doc, "gates")) {
      Gate gate;
      const std::string kind = field(g, "kind").get<std::string>();
      if (kind == "input") {
        gate.kind = GateKind::Input;
      } else if (kind == "and") {
        gate.kind = GateKind::And;
      } else if (kind == "or") {
        gate.kind = GateKind::Or;
      } else {
        throw ValidationError("unknown gate kind '" + kind + "'");
      }
      if (g.contains("inputs")) {
        gate.inputs = g.at("inputs").get<std::vector<std::size_t>>();
      }
      c.gates.push_back(std::move(gate));
    }
    c.output = field(doc, "output").get<std::size_t>();
    c.validate();
    return c;
  });
}

std::vector<bool> read_assignment(const Json& doc) {
  return guarded("assignment", [&] {
    std::vector<bool> out;
    for (const auto& bit : field(doc, "assignment")) {
      const int v = bit.is_boolean() ? (bit.get<bool>() ? 1 : 0) : bit.get<int>();
      if (v != 0 && v != 1) throw ValidationError("assignment bits must be 0 or 1");
      out.push_back(v == 1);
    }
    return out;
  });
}

TransversalInstance read_transversal(const Json& doc) {
  return guarded("transversal instance", [&] {
    TransversalInstance t;
    t.universe = string_list(field(doc, "universe"));
    for (const auto& e : field(doc, "hyperedges")) t.hyperedges.push_back(string_list(e));
    t.candidate = string_list(field(doc, "candidate"));
    return t;
  });
}

Json write_certificate(const CapabilityHypergraph& h,
                       const DerivationCertificate& c) {
  Json doc;
  doc["target"] = h.label(c.target);
  doc["initial"] = write_set(h, c.initial);
  doc["fired"] = write_edge_list(h, c.fired);
  return doc;
}

Json write_audit_surface(const CapabilityHypergraph& h, const AuditSurface& s) {
  Json doc;
  Json emergent = Json::array();
  for (const auto& cert : s.certificates) emergent.push_back(write_certificate(h, cert));
  doc["safe_emergent"] = std::move(emergent);
  Json frontier = Json::array();
  for (const auto& f : s.frontier) {
    Json jf;
    jf["vertex"] = h.label(f.vertex);
    jf["witness"] = h.edge(f.witness).label;
    frontier.push_back(std::move(jf));
  }
  doc["frontier"] = std::move(frontier);
  Json gains = Json::array();
  for (const auto& g : s.top_gains) {
    Json jg;
    jg["vertex"] = h.label(g.vertex);
    jg["gain"] = g.gain;
    gains.push_back(std::move(jg));
  }
  doc["top_gains"] = std::move(gains);
  return doc;
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("invalid JSON: ") + e.what());
  }
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

}  // namespace capclose::json
