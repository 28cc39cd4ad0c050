#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "capclose/capability_set.hpp"
#include "capclose/hypergraph.hpp"

namespace capclose {

enum class GateKind { Input, And, Or };

struct Gate {
  GateKind kind = GateKind::Input;
  std::vector<std::size_t> inputs;  // empty for Input, exactly two otherwise
};

/// Monotone boolean circuit in topological order. Input gates take their
/// values from the assignment in order of appearance.
struct MonotoneCircuit {
  std::vector<Gate> gates;
  std::size_t output = 0;

  std::size_t input_count() const;
  // Throws ValidationError on forward references, wrong fan-in or a bad
  // output index.
  void validate() const;
};

struct CvpInstance {
  CapabilityHypergraph hypergraph;
  CapabilitySet initial;
  // v_emg: emergent from `initial` exactly when the circuit outputs 1.
  CapabilityId probe = 0;
};

/// Monotone circuit value to emergent detection. Gate i becomes vertex "g<i>";
/// AND gates become conjunctive edges, OR gates two singleton edges. A fresh
/// "v_top" always joins the initial set. When the output gate is not an AND
/// of two distinct gates a synthetic AND "g_out" of the output and v_top is placed in front of
/// the probe so the probe can never be reached through singleton edges.
CvpInstance cvp_to_instance(const MonotoneCircuit& circuit,
                            const std::vector<bool>& assignment);

struct TransversalInstance {
  std::vector<std::string> universe;
  std::vector<std::vector<std::string>> hyperedges;
  std::vector<std::string> candidate;
};

struct TransversalReduction {
  CapabilityHypergraph hypergraph;
  CapabilitySet forbidden;  // {f*}
  CapabilitySet candidate;  // B' = T
};

/// Minimal transversal to minimal-unsafe membership: every member u of
/// hyperedge E_i unlocks "f_E<i>", and all f_E jointly unlock "f*".
TransversalReduction transversal_to_instance(const TransversalInstance& t);

}  // namespace capclose
