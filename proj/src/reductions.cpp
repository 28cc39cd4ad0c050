#include "capclose/reductions.hpp"

#include <set>

#include "capclose/error.hpp"

namespace capclose {

std::size_t MonotoneCircuit::input_count() const {
  std::size_t count = 0;
  for (const Gate& g : gates) count += g.kind == GateKind::Input ? 1 : 0;
  return count;
}

void MonotoneCircuit::validate() const {
  if (gates.empty()) throw ValidationError("circuit has no gates");
  if (output >= gates.size()) throw ValidationError("output gate out of range");
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const Gate& g = gates[i];
    if (g.kind == GateKind::Input) {
      if (!g.inputs.empty()) {
        throw ValidationError("input gate " + std::to_string(i) + " has inputs");
      }
      continue;
    }
    if (g.inputs.size() != 2) {
      throw ValidationError("gate " + std::to_string(i) +
                            " must have exactly two inputs");
    }
    for (std::size_t in : g.inputs) {
      if (in >= i) {
        throw ValidationError("gate " + std::to_string(i) +
                              " reads a gate that does not precede it");
      }
    }
  }
}

CvpInstance cvp_to_instance(const MonotoneCircuit& circuit,
                            const std::vector<bool>& assignment) {
  circuit.validate();
  if (assignment.size() != circuit.input_count()) {
    throw ValidationError("assignment length " +
                          std::to_string(assignment.size()) + " != " +
                          std::to_string(circuit.input_count()) + " inputs");
  }
  const std::size_t gates = circuit.gates.size();
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < gates; ++i) labels.push_back("g" + std::to_string(i));
  const auto top = static_cast<CapabilityId>(labels.size());
  labels.push_back("v_top");
  const Gate& out_gate = circuit.gates[circuit.output];
  const bool synthetic = out_gate.kind != GateKind::And ||
                         out_gate.inputs[0] == out_gate.inputs[1];
  CapabilityId out = static_cast<CapabilityId>(circuit.output);
  std::vector<Hyperedge> edges;
  for (std::size_t i = 0; i < gates; ++i) {
    const Gate& g = circuit.gates[i];
    const auto v = static_cast<CapabilityId>(i);
    const auto a = static_cast<CapabilityId>(g.inputs.empty() ? 0 : g.inputs[0]);
    const auto b = static_cast<CapabilityId>(g.inputs.empty() ? 0 : g.inputs[1]);
    switch (g.kind) {
      case GateKind::Input:
        break;
      case GateKind::And:
        // AND(x, x) degenerates to a singleton tail after normalisation.
        edges.push_back({{a, b}, {v}, {}});
        break;
      case GateKind::Or:
        edges.push_back({{a}, {v}, {}});
        edges.push_back({{b}, {v}, {}});
        break;
    }
  }
  if (synthetic) {
    const auto g_out = static_cast<CapabilityId>(labels.size());
    labels.push_back("g_out");
    edges.push_back({{out, top}, {g_out}, {}});
    out = g_out;
  }
  const auto probe = static_cast<CapabilityId>(labels.size());
  labels.push_back("v_emg");
  edges.push_back({{out}, {probe}, {}});

  CvpInstance inst;
  inst.hypergraph = CapabilityHypergraph::from_edges(labels, std::move(edges));
  inst.initial = inst.hypergraph.empty_set();
  inst.initial.insert(top);
  std::size_t next_input = 0;
  for (std::size_t i = 0; i < gates; ++i) {
    if (circuit.gates[i].kind != GateKind::Input) continue;
    if (assignment[next_input++]) inst.initial.insert(static_cast<CapabilityId>(i));
  }
  inst.probe = probe;
  return inst;
}

TransversalReduction transversal_to_instance(const TransversalInstance& t) {
  std::set<std::string> universe(t.universe.begin(), t.universe.end());
  if (universe.size() != t.universe.size()) {
    throw ValidationError("duplicate element in transversal universe");
  }
  for (const auto& e : t.hyperedges) {
    if (e.empty()) throw ValidationError("empty hyperedge in transversal instance");
    for (const auto& u : e) {
      if (!universe.count(u)) throw ValidationError("unknown element '" + u + "'");
    }
  }
  for (const auto& u : t.candidate) {
    if (!universe.count(u)) throw ValidationError("candidate element '" + u + "' not in universe");
  }

  std::vector<std::string> labels = t.universe;
  std::vector<LabelledEdge> edges;
  LabelledEdge conjunction;
  for (std::size_t i = 0; i < t.hyperedges.size(); ++i) {
    const std::string f_e = "f_E" + std::to_string(i);
    labels.push_back(f_e);
    conjunction.tail.push_back(f_e);
    for (const auto& u : t.hyperedges[i]) edges.push_back({{u}, {f_e}, {}});
  }
  labels.push_back("f*");
  conjunction.head = {"f*"};
  edges.push_back(std::move(conjunction));

  TransversalReduction out;
  out.hypergraph = CapabilityHypergraph::build(std::move(labels), edges);
  out.forbidden = out.hypergraph.make_set({"f*"});
  out.candidate = out.hypergraph.make_set(t.candidate);
  return out;
}

}  // namespace capclose
