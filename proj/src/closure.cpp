#include "capclose/closure.hpp"

#include <algorithm>

#include "capclose/error.hpp"

namespace capclose {

namespace {

void require_universe(const CapabilityHypergraph& h, const CapabilitySet& s) {
  if (s.universe() != h.vertex_count()) {
    throw ValidationError("capability set universe " +
                          std::to_string(s.universe()) +
                          " does not match hypergraph with " +
                          std::to_string(h.vertex_count()) + " vertices");
  }
}

enum class EdgeFilter { All, SingletonOnly };

// pending/counter worklist. `Tracing` controls whether trace, deriver
// and level are recorded.
template <bool Tracing>
void run_worklist(const CapabilityHypergraph& h, const CapabilitySet& initial,
                  EdgeFilter filter, ClosureResult& out) {
  require_universe(h, initial);
  const std::size_t n = h.vertex_count();
  const std::size_t m = h.edge_count();

  out.reached = initial;
  if constexpr (Tracing) {
    out.deriver.assign(n, std::nullopt);
    out.level.assign(n, std::nullopt);
    initial.for_each([&](CapabilityId v) { out.level[v] = 0; });
  }

  std::vector<std::size_t> counter(m);
  for (std::size_t e = 0; e < m; ++e) counter[e] = h.tail_size(static_cast<EdgeId>(e));

  std::vector<CapabilityId> queue;
  queue.reserve(n);
  initial.for_each([&](CapabilityId v) { queue.push_back(v); });

  auto fire = [&](EdgeId e, std::uint32_t round) {
    if constexpr (Tracing) out.firing_trace.push_back(e);
    for (CapabilityId v : h.edge(e).head) {
      if (out.reached.insert(v)) {
        queue.push_back(v);
        if constexpr (Tracing) {
          out.deriver[v] = e;
          out.level[v] = round;
        }
      }
    }
  };

  if (filter == EdgeFilter::All) {
    for (EdgeId e : h.axioms()) fire(e, 1);
  }

  for (std::size_t head = 0; head < queue.size(); ++head) {
    const CapabilityId v = queue[head];
    ++out.stats.pops;
    std::uint32_t round = 1;
    if constexpr (Tracing) round = *out.level[v] + 1;
    for (EdgeId e : h.edges_with_tail(v)) {
      if (filter == EdgeFilter::SingletonOnly && h.tail_size(e) != 1) continue;
      ++out.stats.decrements;
      if (--counter[e] == 0) fire(e, round);
    }
  }
}

}  // namespace

ClosureResult closure(const CapabilityHypergraph& h,
                      const CapabilitySet& initial) {
  ClosureResult result;
  run_worklist<true>(h, initial, EdgeFilter::All, result);
  return result;
}

CapabilitySet reach(const CapabilityHypergraph& h,
                    const CapabilitySet& initial) {
  ClosureResult result;
  run_worklist<false>(h, initial, EdgeFilter::All, result);
  return std::move(result.reached);
}

CapabilitySet reach_singleton(const CapabilityHypergraph& h,
                              const CapabilitySet& initial) {
  ClosureResult result;
  run_worklist<false>(h, initial, EdgeFilter::SingletonOnly, result);
  return std::move(result.reached);
}

NaiveClosure closure_naive(const CapabilityHypergraph& h,
                           const CapabilitySet& initial) {
  require_universe(h, initial);
  NaiveClosure out;
  out.rounds.push_back(initial);
  const std::size_t m = h.edge_count();
  std::vector<CapabilitySet> tails;
  std::vector<CapabilitySet> heads;
  for (std::size_t e = 0; e < m; ++e) {
    tails.push_back(h.tail_set(static_cast<EdgeId>(e)));
    heads.push_back(h.head_set(static_cast<EdgeId>(e)));
  }
  while (true) {
    const CapabilitySet& current = out.rounds.back();
    CapabilitySet next = current;
    for (std::size_t e = 0; e < m; ++e) {
      if (tails[e].is_subset_of(current)) next |= heads[e];
    }
    if (next == current) break;
    out.rounds.push_back(std::move(next));
  }
  return out;
}

namespace {

// Edges on the deriver chains of `targets`, in firing order.
std::vector<EdgeId> prune_to_targets(const CapabilityHypergraph& h,
                                     const ClosureResult& cl,
                                     const CapabilitySet& targets) {
  std::vector<bool> needed_edge(h.edge_count(), false);
  std::vector<bool> visited(h.vertex_count(), false);
  std::vector<CapabilityId> stack;
  targets.for_each([&](CapabilityId v) { stack.push_back(v); });
  while (!stack.empty()) {
    const CapabilityId v = stack.back();
    stack.pop_back();
    if (visited[v]) continue;
    visited[v] = true;
    const auto& d = cl.deriver[v];
    if (!d || needed_edge[*d]) continue;
    needed_edge[*d] = true;
    for (CapabilityId t : h.edge(*d).tail) stack.push_back(t);
  }
  std::vector<EdgeId> steps;
  for (EdgeId e : cl.firing_trace) {
    if (needed_edge[e]) steps.push_back(e);
  }
  return steps;
}

}  // namespace

PlanOutcome extract_plan(const CapabilityHypergraph& h,
                         const CapabilitySet& initial,
                         const CapabilitySet& goal) {
  require_universe(h, goal);
  ClosureResult cl = closure(h, initial);
  if (!goal.is_subset_of(cl.reached)) {
    return Unreachable{goal - cl.reached};
  }
  return Plan{initial, prune_to_targets(h, cl, goal), goal};
}

bool verify_plan(const CapabilityHypergraph& h, const Plan& plan) {
  if (plan.initial.universe() != h.vertex_count() ||
      plan.achieved.universe() != h.vertex_count()) {
    return false;
  }
  CapabilitySet have = plan.initial;
  for (EdgeId e : plan.steps) {
    if (e >= h.edge_count()) return false;
    const Hyperedge& edge = h.edge(e);
    for (CapabilityId t : edge.tail) {
      if (!have.contains(t)) return false;
    }
    for (CapabilityId v : edge.head) have.insert(v);
  }
  return plan.achieved.is_subset_of(have);
}

std::optional<DerivationCertificate> certificate_for(
    const CapabilityHypergraph& h, const CapabilitySet& initial,
    CapabilityId target) {
  ClosureResult cl = closure(h, initial);
  if (!cl.reached.contains(target)) return std::nullopt;
  CapabilitySet goal = h.empty_set();
  goal.insert(target);
  return DerivationCertificate{initial, prune_to_targets(h, cl, goal), target};
}

bool verify_certificate(const CapabilityHypergraph& h,
                        const DerivationCertificate& cert) {
  const std::size_t n = h.vertex_count();
  if (cert.initial.universe() != n || cert.target >= n) return false;
  if (cert.fired.size() > h.edge_count()) return false;
  CapabilitySet have = cert.initial;
  for (EdgeId e : cert.fired) {
    if (e >= h.edge_count()) return false;
    const Hyperedge& edge = h.edge(e);
    for (CapabilityId t : edge.tail) {
      if (!have.contains(t)) return false;
    }
    for (CapabilityId v : edge.head) have.insert(v);
  }
  return have.contains(cert.target);
}

}  // namespace capclose
