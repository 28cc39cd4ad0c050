#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "capclose/capability_set.hpp"
#include "capclose/hypergraph.hpp"

namespace capclose {

// An edge exactly one tail element away from firing.
struct BoundaryEntry {
  EdgeId edge = 0;
  CapabilityId missing = 0;

  friend bool operator==(const BoundaryEntry&, const BoundaryEntry&) = default;
};

// A near-miss frontier vertex with the boundary edge it unlocks.
struct FrontierEntry {
  CapabilityId vertex = 0;
  EdgeId witness = 0;

  friend bool operator==(const FrontierEntry&, const FrontierEntry&) = default;
};

struct GainEntry {
  CapabilityId vertex = 0;
  std::size_t gain = 0;

  friend bool operator==(const GainEntry&, const GainEntry&) = default;
};

/// Capabilities derivable from `initial` that the singleton-tail edges alone
/// cannot derive: cl(A) \ (A ∪ cl_sg(A)).
CapabilitySet emergent(const CapabilityHypergraph& h,
                       const CapabilitySet& initial);

// Edges with |tail \ cl(A)| = 1, ascending by edge id.
std::vector<BoundaryEntry> boundary(const CapabilityHypergraph& h,
                                    const CapabilitySet& initial);

/// Missing elements of boundary edges whose one-step acquisition keeps the
/// closure clear of `forbidden`. One entry per vertex, ascending, witnessed
/// by its lowest boundary edge.
std::vector<FrontierEntry> near_miss_frontier(const CapabilityHypergraph& h,
                                              const CapabilitySet& initial,
                                              const CapabilitySet& forbidden);

/// |cl(A ∪ {v})| − |cl(A)|, or with `forbidden` the count of newly reached
/// vertices outside it. Zero when v is already in cl(A).
GainEntry marginal_gain(
    const CapabilityHypergraph& h, const CapabilitySet& initial,
    CapabilityId v, const std::optional<CapabilitySet>& forbidden = std::nullopt);

struct DistanceExact {
  std::size_t distance = 0;
  CapabilitySet witness;  // a minimum acquisition set, lexicographically first
};

struct DistanceExceeded {
  std::size_t budget = 0;
};

// No acquisition set outside cl(A) ∪ {goal} derives the goal.
struct DistanceUnreachable {};

using DistanceOutcome =
    std::variant<DistanceExact, DistanceExceeded, DistanceUnreachable>;

inline constexpr std::size_t kDefaultDistanceBudget = 4;

// Exact acquisition distance by cardinality-ascending enumeration over
// V \ (cl(A) ∪ {goal}), up to `budget` acquisitions. The goal itself is never
// acquired directly.
DistanceOutcome acquisition_distance(const CapabilityHypergraph& h,
                                     const CapabilitySet& initial,
                                     CapabilityId goal,
                                     std::size_t budget = kDefaultDistanceBudget);

/// Greedy marginal-gain acquisition of up to `k` capabilities.
///
/// With `forbidden`, candidates in F or whose addition would reach F are
/// skipped, so every prefix of the result stays F-contained. Ties go to the
/// lowest vertex id; stops early once no candidate remains.
std::vector<GainEntry> greedy_acquire(
    const CapabilityHypergraph& h, const CapabilitySet& initial, std::size_t k,
    const std::optional<CapabilitySet>& forbidden = std::nullopt);

// Best `k` single acquisitions from V \ cl(A) by (F-filtered) gain, gain
// descending then vertex ascending. Same candidate filter as greedy_acquire.
std::vector<GainEntry> top_gains(
    const CapabilityHypergraph& h, const CapabilitySet& initial, std::size_t k,
    const std::optional<CapabilitySet>& forbidden = std::nullopt);

}  // namespace capclose
