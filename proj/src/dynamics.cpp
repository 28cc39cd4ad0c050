#include "capclose/dynamics.hpp"

#include "capclose/closure.hpp"
#include "capclose/error.hpp"

namespace capclose {

namespace {

// cl_H(A ∪ T') with T' = head when the tail is already derivable, else ∅.
CapabilitySet closure_after_insert(const DynamicState& state,
                                   const Hyperedge& edge) {
  const CapabilitySet& cached = state.closure();
  for (CapabilityId t : edge.tail) {
    if (!cached.contains(t)) return cached;
  }
  CapabilitySet seed = cached;
  for (CapabilityId v : edge.head) seed.insert(v);
  return reach(state.hypergraph(), seed);
}

}  // namespace

DynamicState::DynamicState(CapabilityHypergraph h, CapabilitySet base)
    : graph_(std::make_shared<const CapabilityHypergraph>(std::move(h))),
      base_(std::move(base)),
      closure_(reach(*graph_, base_)) {}

DynamicState::DynamicState(std::shared_ptr<const CapabilityHypergraph> h,
                           CapabilitySet base, CapabilitySet closure,
                           bool recomputed)
    : graph_(std::move(h)),
      base_(std::move(base)),
      closure_(std::move(closure)),
      recomputed_(recomputed) {}

DynamicState insert_edge(const DynamicState& state, Hyperedge edge) {
  const CapabilityHypergraph& h = state.hypergraph();
  edge = h.normalise(std::move(edge));
  if (h.find_edge(edge.tail, edge.head)) {
    return DynamicState(state.graph_, state.base_, state.closure_, false);
  }
  bool fires = true;
  for (CapabilityId t : edge.tail) fires = fires && state.closure().contains(t);
  CapabilitySet next = closure_after_insert(state, edge);
  auto graph = std::make_shared<const CapabilityHypergraph>(h.with_edge(std::move(edge)));
  return DynamicState(std::move(graph), state.base_, std::move(next), fires);
}

DynamicState delete_edge(const DynamicState& state, EdgeId id) {
  const CapabilityHypergraph& h = state.hypergraph();
  if (id >= h.edge_count()) {
    throw ValidationError("unknown edge id " + std::to_string(id));
  }
  auto graph = std::make_shared<const CapabilityHypergraph>(h.without_edge(id));
  CapabilitySet next = reach(*graph, state.base_);
  return DynamicState(std::move(graph), state.base_, std::move(next), true);
}

InsertVerdict safe_to_insert(const DynamicState& state,
                             const CapabilitySet& forbidden,
                             const Hyperedge& edge) {
  const Hyperedge normalised = state.hypergraph().normalise(edge);
  CapabilitySet hit = closure_after_insert(state, normalised) & forbidden;
  const bool safe = hit.empty();
  return {safe, std::move(hit)};
}

}  // namespace capclose
