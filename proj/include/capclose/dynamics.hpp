#pragma once

#include <memory>

#include "capclose/capability_set.hpp"
#include "capclose/hypergraph.hpp"

namespace capclose {

/// A hypergraph, a base set A and its cached closure cl_H(A).
///
/// Values are immutable; updates return a new state and share the old
/// hypergraph until it changes.
class DynamicState {
 public:
  DynamicState(CapabilityHypergraph h, CapabilitySet base);

  const CapabilityHypergraph& hypergraph() const { return *graph_; }
  const CapabilitySet& base() const { return base_; }
  const CapabilitySet& closure() const { return closure_; }
  // Whether the update that produced this state ran a full closure pass.
  bool recomputed() const { return recomputed_; }

 private:
  DynamicState(std::shared_ptr<const CapabilityHypergraph> h,
               CapabilitySet base, CapabilitySet closure, bool recomputed);

  friend DynamicState insert_edge(const DynamicState&, Hyperedge);
  friend DynamicState delete_edge(const DynamicState&, EdgeId);

  std::shared_ptr<const CapabilityHypergraph> graph_;
  CapabilitySet base_;
  CapabilitySet closure_;
  bool recomputed_ = true;
};

/// Inserts an edge. If its tail is inside the cached closure, the new
/// closure is cl_H(A ∪ head) over the old hypergraph; otherwise the cache is
/// kept as is. Inserting an existing (tail, head) pair is a no-op.
DynamicState insert_edge(const DynamicState& state, Hyperedge edge);

// Removes an edge and recomputes; the closure can only shrink.
DynamicState delete_edge(const DynamicState& state, EdgeId id);

struct InsertVerdict {
  bool safe = true;
  CapabilitySet reached_forbidden;  // forbidden vertices the insert exposes
};

// Whether the state stays F-contained after inserting `edge`; the state is
// not modified.
InsertVerdict safe_to_insert(const DynamicState& state,
                             const CapabilitySet& forbidden,
                             const Hyperedge& edge);

}  // namespace capclose
