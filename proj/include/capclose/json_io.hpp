#pragma once

#include <istream>
#include <string>
#include <vector>

#include <json.hpp>

#include "capclose/hypergraph.hpp"
#include "capclose/miner.hpp"
#include "capclose/reductions.hpp"
#include "capclose/safety.hpp"

namespace capclose::json {

using Json = nlohmann::ordered_json;

// {"vertices": [...], "edges": [{"tail": [...], "head": [...], "label": ...}]}
// "label" is optional on input; edges naming an undeclared vertex are
// rejected.
CapabilityHypergraph read_hypergraph(const Json& doc);
Json write_hypergraph(const CapabilityHypergraph& h);

Json write_set(const CapabilityHypergraph& h, const CapabilitySet& set);
Json write_edge_list(const CapabilityHypergraph& h, const std::vector<EdgeId>& edges);

// {"forbidden": [...], "exhaustive": bool, "minimal_unsafe": [[...], ...]}
Json write_antichain(const CapabilityHypergraph& h, const AntichainB& b);

// The gate works on labels alone: both the antichain and the agents are
// interned into a shared local vocabulary.
struct LabelledAntichain {
  std::vector<std::string> forbidden;
  bool exhaustive = false;
  std::vector<std::vector<std::string>> minimal_unsafe;
};
LabelledAntichain read_antichain(const Json& doc);

// {"agents": [[...], ...]} or a bare array of label arrays.
std::vector<std::vector<std::string>> read_agents(const Json& doc);

// One {"id", "events": [{"cap", "t_ms"}], "terminal"} object per line;
// blank lines are skipped.
std::vector<Trajectory> read_trajectories(std::istream& in);
Json write_trajectory(const Trajectory& t);

Json write_mining_report(const MiningReport& r);

// {"instances": [{"initial": [...], "schedule": [{"cap", "t_ms"}]}]}
std::vector<PlannerInstance> read_planner_instances(const CapabilityHypergraph& h,
                                                    const Json& doc);
Json write_violation_report(const ViolationReport& r);

// {"gates": [{"kind": "input"|"and"|"or", "inputs": [i, j]}], "output": k,
//  "assignment": [0, 1, ...]}
MonotoneCircuit read_circuit(const Json& doc);
std::vector<bool> read_assignment(const Json& doc);

// {"universe": [...], "hyperedges": [[...]], "candidate": [...]}
TransversalInstance read_transversal(const Json& doc);

Json write_certificate(const CapabilityHypergraph& h,
                       const DerivationCertificate& c);
Json write_audit_surface(const CapabilityHypergraph& h, const AuditSurface& s);

Json parse(const std::string& text);
Json read_file(const std::string& path);

}  // namespace capclose::json
