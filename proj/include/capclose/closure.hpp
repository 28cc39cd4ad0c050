#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "capclose/capability_set.hpp"
#include "capclose/hypergraph.hpp"

namespace capclose {

struct ClosureStats {
  std::size_t pops = 0;        // worklist pops; never exceeds n
  std::size_t decrements = 0;  // counter decrements; never exceeds sum |tail|
};

/// cl(A) together with how it was derived.
struct ClosureResult {
  CapabilitySet reached;
  // Every edge whose tail became satisfied, in firing order.
  std::vector<EdgeId> firing_trace;
  // First edge whose firing added the vertex; empty for initial and
  // unreached vertices.
  std::vector<std::optional<EdgeId>> deriver;
  // Fixed-point round in which the vertex first appears (0 for the initial
  // set). Matches the round index of the naive iteration C0, C1, ...
  std::vector<std::optional<std::uint32_t>> level;
  ClosureStats stats;
};

// Counter-based FIFO worklist closure, O(n + sum |tail|).
ClosureResult closure(const CapabilityHypergraph& h,
                      const CapabilitySet& initial);

// Same fixed point without trace bookkeeping.
CapabilitySet reach(const CapabilityHypergraph& h, const CapabilitySet& initial);

// Closure under the singleton-tail edges only (cl_sg).
CapabilitySet reach_singleton(const CapabilityHypergraph& h,
                              const CapabilitySet& initial);

/// The reference iteration C_{i+1} = C_i ∪ ⋃{T : S ⊆ C_i}.
///
/// `rounds` holds C_0 = initial followed by every strictly larger round, so
/// rounds.back() is the closure. Quadratic; intended as an oracle.
struct NaiveClosure {
  std::vector<CapabilitySet> rounds;
  const CapabilitySet& result() const { return rounds.back(); }
};

NaiveClosure closure_naive(const CapabilityHypergraph& h,
                           const CapabilitySet& initial);

struct Plan {
  CapabilitySet initial;
  std::vector<EdgeId> steps;
  CapabilitySet achieved;
};

struct Unreachable {
  CapabilitySet missing;
};

using PlanOutcome = std::variant<Plan, Unreachable>;

/// A plan from `initial` achieving `goal`, or the goal members outside the
/// closure. Steps are the firing trace pruned to the deriver chains of the
/// goal, in original firing order.
PlanOutcome extract_plan(const CapabilityHypergraph& h,
                         const CapabilitySet& initial,
                         const CapabilitySet& goal);

// Replays the plan: every step applicable when taken and the goal covered.
bool verify_plan(const CapabilityHypergraph& h, const Plan& plan);

struct DerivationCertificate {
  CapabilitySet initial;
  std::vector<EdgeId> fired;
  CapabilityId target = 0;
};

std::optional<DerivationCertificate> certificate_for(
    const CapabilityHypergraph& h, const CapabilitySet& initial,
    CapabilityId target);

// Never throws; malformed certificates are rejected.
bool verify_certificate(const CapabilityHypergraph& h,
                        const DerivationCertificate& cert);

}  // namespace capclose
