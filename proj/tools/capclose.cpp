// capclose: batch front end for the capability closure engine.
//
// Every command reads JSON files, writes deterministic JSON to stdout and
// exits 0 on success or a safe verdict, 2 on an unsafe verdict and 1 on
// input or runtime errors.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "capclose/closure.hpp"
#include "capclose/discovery.hpp"
#include "capclose/dynamics.hpp"
#include "capclose/error.hpp"
#include "capclose/json_io.hpp"
#include "capclose/miner.hpp"
#include "capclose/reductions.hpp"
#include "capclose/safety.hpp"

namespace {

using capclose::CapabilityHypergraph;
using capclose::CapabilitySet;
using capclose::json::Json;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitUnsafe = 2;

std::vector<std::string> split_labels(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    const auto last = item.find_last_not_of(" \t");
    out.push_back(item.substr(first, last - first + 1));
  }
  return out;
}

CapabilitySet labels_to_set(const CapabilityHypergraph& h, const std::string& text) {
  return h.make_set(split_labels(text));
}

void emit(const Json& doc) { std::cout << doc.dump(2) << "\n"; }

// Hypergraph file plus the label options most commands share.
struct Inputs {
  std::string hypergraph_file;
  std::string initial;
  std::string forbidden;

  CapabilityHypergraph load() const {
    return capclose::json::read_hypergraph(capclose::json::read_file(hypergraph_file));
  }
};

int cmd_validate(const Inputs& in) {
  const CapabilityHypergraph h = in.load();
  Json doc;
  doc["valid"] = true;
  doc["vertex_count"] = h.vertex_count();
  doc["edge_count"] = h.edge_count();
  doc["hypergraph"] = capclose::json::write_hypergraph(h);
  emit(doc);
  return kExitOk;
}

int cmd_closure(const Inputs& in) {
  const CapabilityHypergraph h = in.load();
  const CapabilitySet a = labels_to_set(h, in.initial);
  const capclose::ClosureResult r = capclose::closure(h, a);
  Json doc;
  doc["initial"] = capclose::json::write_set(h, a);
  doc["reached"] = capclose::json::write_set(h, r.reached);
  doc["trace"] = capclose::json::write_edge_list(h, r.firing_trace);
  emit(doc);
  return kExitOk;
}

int cmd_plan(const Inputs& in, const std::string& goal) {
  const CapabilityHypergraph h = in.load();
  const auto outcome =
      capclose::extract_plan(h, labels_to_set(h, in.initial), labels_to_set(h, goal));
  Json doc;
  if (const auto* plan = std::get_if<capclose::Plan>(&outcome)) {
    doc["status"] = "plan";
    doc["steps"] = capclose::json::write_edge_list(h, plan->steps);
    doc["achieved"] = capclose::json::write_set(h, plan->achieved);
  } else {
    doc["status"] = "unreachable";
    doc["missing"] =
        capclose::json::write_set(h, std::get<capclose::Unreachable>(outcome).missing);
  }
  emit(doc);
  return kExitOk;
}

int report_unsafe_start(const CapabilityHypergraph& h, const CapabilitySet& a,
                        const CapabilitySet& f) {
  Json doc;
  doc["verdict"] = "unsafe_start";
  doc["reached_forbidden"] = capclose::json::write_set(h, capclose::reach(h, a) & f);
  emit(doc);
  return kExitUnsafe;
}

int cmd_audit(const Inputs& in, std::size_t top_k) {
  const CapabilityHypergraph h = in.load();
  const CapabilitySet a = labels_to_set(h, in.initial);
  const CapabilitySet f = labels_to_set(h, in.forbidden);
  if (!capclose::is_contained(h, a, f)) return report_unsafe_start(h, a, f);
  Json doc;
  doc["verdict"] = "contained";
  doc["surface"] =
      capclose::json::write_audit_surface(h, capclose::audit_surface(h, a, f, top_k));
  emit(doc);
  return kExitOk;
}

int cmd_antichain(const Inputs& in, std::optional<std::size_t> max_card,
                  const std::string& out_file, bool allow_large) {
  const CapabilityHypergraph h = in.load();
  const CapabilitySet f = labels_to_set(h, in.forbidden);
  std::size_t cap = max_card.value_or(h.vertex_count());
  if (const char* env = std::getenv("CAPCLOSE_MAX_CARD")) {
    try {
      cap = static_cast<std::size_t>(std::stoul(env));
    } catch (const std::exception&) {
      throw capclose::ValidationError("CAPCLOSE_MAX_CARD is not a number");
    }
  }
  const capclose::AntichainB b = capclose::minimal_unsafe_antichain(h, f, cap, allow_large);
  const Json doc = capclose::json::write_antichain(h, b);
  if (out_file.empty()) {
    emit(doc);
  } else {
    std::ofstream out(out_file);
    if (!out) throw capclose::ValidationError("cannot write '" + out_file + "'");
    out << doc.dump(2) << "\n";
  }
  return kExitOk;
}

int cmd_gate(const std::string& antichain_file, const std::string& agents_file) {
  const auto chain =
      capclose::json::read_antichain(capclose::json::read_file(antichain_file));
  const auto agents = capclose::json::read_agents(capclose::json::read_file(agents_file));

  // Local vocabulary: antichain labels first, then any agent-only labels.
  std::vector<std::string> vocab;
  auto intern = [&](const std::string& l) {
    for (const auto& v : vocab) {
      if (v == l) return;
    }
    vocab.push_back(l);
  };
  for (const auto& l : chain.forbidden) intern(l);
  for (const auto& s : chain.minimal_unsafe) {
    for (const auto& l : s) intern(l);
  }
  for (const auto& a : agents) {
    for (const auto& l : a) intern(l);
  }
  const CapabilityHypergraph universe = CapabilityHypergraph::build(vocab, {});

  capclose::AntichainB b{universe.make_set(chain.forbidden), {}, chain.exhaustive};
  for (const auto& s : chain.minimal_unsafe) b.sets.push_back(universe.make_set(s));
  std::vector<CapabilitySet> agent_sets;
  for (const auto& a : agents) agent_sets.push_back(universe.make_set(a));

  const capclose::CoalitionVerdict v = capclose::coalition_gate(b, agent_sets);
  Json doc;
  doc["verdict"] = v.safe ? "safe" : "unsafe";
  if (v.witness) doc["witness"] = capclose::json::write_set(universe, *v.witness);
  emit(doc);
  return v.safe ? kExitOk : kExitUnsafe;
}

int cmd_classify(const Inputs& in, const std::string& goal, std::size_t budget) {
  const CapabilityHypergraph h = in.load();
  const CapabilitySet a = labels_to_set(h, in.initial);
  const CapabilitySet f = labels_to_set(h, in.forbidden);
  if (!capclose::is_contained(h, a, f)) return report_unsafe_start(h, a, f);
  const auto c = capclose::classify_goal(h, a, f, h.id_of(goal), budget);
  Json doc;
  doc["goal"] = goal;
  doc["classification"] = capclose::to_string(c.kind);
  Json path = Json::array();
  for (auto v : c.path) path.push_back(h.label(v));
  doc["path"] = std::move(path);
  doc["states_explored"] = c.states_explored;
  emit(doc);
  // Budget exhaustion fails closed.
  const bool ok = c.kind == capclose::GoalKind::AlreadyReachable ||
                  c.kind == capclose::GoalKind::SafelyAcquirable;
  return ok ? kExitOk : kExitUnsafe;
}

std::optional<CapabilitySet> optional_forbidden(const CapabilityHypergraph& h,
                                                const std::string& text, bool given) {
  if (!given) return std::nullopt;
  return labels_to_set(h, text);
}

int cmd_gain(const Inputs& in, const std::string& vertex, bool has_forbidden) {
  const CapabilityHypergraph h = in.load();
  const auto g = capclose::marginal_gain(
      h, labels_to_set(h, in.initial), h.id_of(vertex),
      optional_forbidden(h, in.forbidden, has_forbidden));
  Json doc;
  doc["vertex"] = vertex;
  doc["gain"] = g.gain;
  emit(doc);
  return kExitOk;
}

int cmd_distance(const Inputs& in, const std::string& goal, std::size_t budget) {
  const CapabilityHypergraph h = in.load();
  const auto d =
      capclose::acquisition_distance(h, labels_to_set(h, in.initial), h.id_of(goal), budget);
  Json doc;
  doc["goal"] = goal;
  if (const auto* exact = std::get_if<capclose::DistanceExact>(&d)) {
    doc["status"] = "exact";
    doc["distance"] = exact->distance;
    doc["witness"] = capclose::json::write_set(h, exact->witness);
  } else if (const auto* over = std::get_if<capclose::DistanceExceeded>(&d)) {
    doc["status"] = "lower_bound_exceeded";
    doc["budget"] = over->budget;
  } else {
    doc["status"] = "unreachable";
  }
  emit(doc);
  return kExitOk;
}

int cmd_greedy(const Inputs& in, std::size_t k, bool has_forbidden) {
  const CapabilityHypergraph h = in.load();
  const auto picks =
      capclose::greedy_acquire(h, labels_to_set(h, in.initial), k,
                               optional_forbidden(h, in.forbidden, has_forbidden));
  Json arr = Json::array();
  for (const auto& p : picks) {
    Json jp;
    jp["vertex"] = h.label(p.vertex);
    jp["gain"] = p.gain;
    arr.push_back(std::move(jp));
  }
  Json doc;
  doc["picks"] = std::move(arr);
  emit(doc);
  return kExitOk;
}

int cmd_insert_check(const Inputs& in, const std::string& tail, const std::string& head) {
  const CapabilityHypergraph h = in.load();
  const capclose::DynamicState state(h, labels_to_set(h, in.initial));
  const CapabilitySet f = labels_to_set(h, in.forbidden);
  capclose::LabelledEdge le{split_labels(tail), split_labels(head), {}};
  const auto v = capclose::safe_to_insert(state, f, h.resolve(le));
  Json doc;
  doc["verdict"] = v.safe ? "safe" : "unsafe";
  doc["reached_forbidden"] = capclose::json::write_set(h, v.reached_forbidden);
  emit(doc);
  return v.safe ? kExitOk : kExitUnsafe;
}

int cmd_delete(const Inputs& in, const std::string& edge_label) {
  const CapabilityHypergraph h = in.load();
  const auto id = h.find_edge_label(edge_label);
  if (!id) throw capclose::ValidationError("unknown edge '" + edge_label + "'");
  const capclose::DynamicState before(h, labels_to_set(h, in.initial));
  const capclose::DynamicState after = capclose::delete_edge(before, *id);
  Json doc;
  doc["deleted"] = edge_label;
  doc["closure_before"] = capclose::json::write_set(h, before.closure());
  doc["closure_after"] = capclose::json::write_set(h, after.closure());
  doc["lost"] = capclose::json::write_set(h, before.closure() - after.closure());
  doc["hypergraph"] = capclose::json::write_hypergraph(after.hypergraph());
  emit(doc);
  return kExitOk;
}

int cmd_mine(const std::string& trajectories_file, const std::string& candidates_file) {
  const CapabilityHypergraph candidates =
      capclose::json::read_hypergraph(capclose::json::read_file(candidates_file));
  std::ifstream in(trajectories_file);
  if (!in) throw capclose::ValidationError("cannot open '" + trajectories_file + "'");
  const auto trajectories = capclose::json::read_trajectories(in);
  emit(capclose::json::write_mining_report(
      capclose::mine_witnesses(candidates, trajectories)));
  return kExitOk;
}

int cmd_eval_planners(const Inputs& in, const std::string& instances_file) {
  const CapabilityHypergraph h = in.load();
  const auto instances =
      capclose::json::read_planner_instances(h, capclose::json::read_file(instances_file));
  emit(capclose::json::write_violation_report(capclose::evaluate_planners(h, instances)));
  return kExitOk;
}

int cmd_reduce_cvp(const std::string& circuit_file) {
  const Json doc = capclose::json::read_file(circuit_file);
  const auto circuit = capclose::json::read_circuit(doc);
  const auto inst = capclose::cvp_to_instance(circuit, capclose::json::read_assignment(doc));
  const CapabilitySet emg = capclose::emergent(inst.hypergraph, inst.initial);
  Json out;
  out["hypergraph"] = capclose::json::write_hypergraph(inst.hypergraph);
  out["initial"] = capclose::json::write_set(inst.hypergraph, inst.initial);
  out["probe"] = inst.hypergraph.label(inst.probe);
  out["emergent"] = capclose::json::write_set(inst.hypergraph, emg);
  out["circuit_value"] = emg.contains(inst.probe) ? 1 : 0;
  emit(out);
  return kExitOk;
}

int cmd_reduce_transversal(const std::string& instance_file) {
  const auto t = capclose::json::read_transversal(capclose::json::read_file(instance_file));
  const auto r = capclose::transversal_to_instance(t);
  Json out;
  out["hypergraph"] = capclose::json::write_hypergraph(r.hypergraph);
  out["forbidden"] = capclose::json::write_set(r.hypergraph, r.forbidden);
  out["candidate"] = capclose::json::write_set(r.hypergraph, r.candidate);
  out["minimal_unsafe"] = capclose::is_minimal_unsafe(r.hypergraph, r.forbidden, r.candidate);
  emit(out);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Capability hypergraph closure, planning and safety audit"};
  app.require_subcommand(1);

  Inputs in;
  std::string goal, vertex, tail, head, edge_label, out_file;
  std::string antichain_file, agents_file, trajectories_file, candidates_file;
  std::string instances_file, circuit_file, transversal_file;
  std::size_t top_k = 5, k = 1;
  std::size_t distance_budget = capclose::kDefaultDistanceBudget;
  std::size_t state_budget = capclose::kDefaultStateBudget;
  std::optional<std::size_t> max_card;
  bool allow_large = false;

  auto add_graph = [&](CLI::App* sub) {
    sub->add_option("hypergraph", in.hypergraph_file, "Hypergraph JSON file")->required();
  };
  auto add_initial = [&](CLI::App* sub) {
    sub->add_option("--initial", in.initial, "Comma-separated initial capabilities");
  };
  auto add_forbidden = [&](CLI::App* sub) {
    return sub->add_option("--forbidden", in.forbidden, "Comma-separated forbidden set");
  };

  auto* validate = app.add_subcommand("validate", "Validate and normalise a hypergraph");
  add_graph(validate);

  auto* closure = app.add_subcommand("closure", "Closure and firing trace");
  add_graph(closure);
  add_initial(closure);

  auto* plan = app.add_subcommand("plan", "Plan from the initial set to a goal set");
  add_graph(plan);
  add_initial(plan);
  plan->add_option("--goal", goal, "Comma-separated goal capabilities")->required();

  auto* audit = app.add_subcommand("audit", "Safe audit surface");
  add_graph(audit);
  add_initial(audit);
  add_forbidden(audit);
  audit->add_option("--top-k", top_k, "Number of top marginal gains");

  auto* antichain = app.add_subcommand("antichain", "Minimal unsafe antichain");
  add_graph(antichain);
  add_forbidden(antichain);
  antichain->add_option("--max-card", max_card, "Cardinality cap (default |V|)");
  antichain->add_option("--out", out_file, "Write the antichain to this file");
  antichain->add_flag("--allow-large", allow_large, "Lift the vertex-count cap");

  auto* gate = app.add_subcommand("gate", "Coalition gate against a stored antichain");
  gate->add_option("--antichain", antichain_file, "Antichain JSON file")->required();
  gate->add_option("--agents", agents_file, "Agents JSON file")->required();

  auto* classify = app.add_subcommand("classify", "Classify a goal capability");
  add_graph(classify);
  add_initial(classify);
  add_forbidden(classify);
  classify->add_option("--goal", goal, "Goal capability")->required();
  classify->add_option("--budget", state_budget, "Explored-state budget");

  auto* gain = app.add_subcommand("gain", "Marginal closure gain of one capability");
  add_graph(gain);
  add_initial(gain);
  auto* gain_forbidden = add_forbidden(gain);
  gain->add_option("--vertex", vertex, "Candidate capability")->required();

  auto* distance = app.add_subcommand("distance", "Acquisition distance to a goal");
  add_graph(distance);
  add_initial(distance);
  distance->add_option("--goal", goal, "Goal capability")->required();
  distance->add_option("--budget", distance_budget, "Largest acquisition set tried");

  auto* greedy = app.add_subcommand("greedy", "Greedy acquisition sequence");
  add_graph(greedy);
  add_initial(greedy);
  auto* greedy_forbidden = add_forbidden(greedy);
  greedy->add_option("-k,--k", k, "Number of acquisitions");

  auto* insert_check = app.add_subcommand("insert-check", "Check a proposed edge insertion");
  add_graph(insert_check);
  add_initial(insert_check);
  add_forbidden(insert_check);
  insert_check->add_option("--tail", tail, "Comma-separated tail");
  insert_check->add_option("--head", head, "Comma-separated head")->required();

  auto* del = app.add_subcommand("delete", "Delete an edge and report the closure change");
  add_graph(del);
  add_initial(del);
  del->add_option("--edge", edge_label, "Edge label")->required();

  auto* mine = app.add_subcommand("mine", "Mine conjunctive witnesses from trajectories");
  mine->add_option("trajectories", trajectories_file, "Trajectory JSON Lines file")->required();
  mine->add_option("candidates", candidates_file, "Candidate hypergraph JSON file")->required();

  auto* eval = app.add_subcommand("eval-planners", "AND-violation evaluation");
  add_graph(eval);
  eval->add_option("instances", instances_file, "Planner instances JSON file")->required();

  auto* cvp = app.add_subcommand("reduce-cvp", "Monotone circuit value reduction");
  cvp->add_option("circuit", circuit_file, "Circuit JSON file")->required();

  auto* transversal =
      app.add_subcommand("reduce-transversal", "Minimal transversal reduction");
  transversal->add_option("instance", transversal_file, "Transversal JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (*validate) return cmd_validate(in);
    if (*closure) return cmd_closure(in);
    if (*plan) return cmd_plan(in, goal);
    if (*audit) return cmd_audit(in, top_k);
    if (*antichain) return cmd_antichain(in, max_card, out_file, allow_large);
    if (*gate) return cmd_gate(antichain_file, agents_file);
    if (*classify) return cmd_classify(in, goal, state_budget);
    if (*gain) return cmd_gain(in, vertex, gain_forbidden->count() > 0);
    if (*distance) return cmd_distance(in, goal, distance_budget);
    if (*greedy) return cmd_greedy(in, k, greedy_forbidden->count() > 0);
    if (*insert_check) return cmd_insert_check(in, tail, head);
    if (*del) return cmd_delete(in, edge_label);
    if (*mine) return cmd_mine(trajectories_file, candidates_file);
    if (*eval) return cmd_eval_planners(in, instances_file);
    if (*cvp) return cmd_reduce_cvp(circuit_file);
    if (*transversal) return cmd_reduce_transversal(transversal_file);
  } catch (const std::exception& e) {
    std::cerr << "capclose: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
