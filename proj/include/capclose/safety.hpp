#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "capclose/capability_set.hpp"
#include "capclose/closure.hpp"
#include "capclose/discovery.hpp"
#include "capclose/hypergraph.hpp"

namespace capclose {

// cl(A) ∩ F = ∅.
bool is_contained(const CapabilityHypergraph& h, const CapabilitySet& initial,
                  const CapabilitySet& forbidden);

// B is unsafe and every B \ {b} is safe.
bool is_minimal_unsafe(const CapabilityHypergraph& h,
                       const CapabilitySet& forbidden, const CapabilitySet& b);

/// The ⊆-minimal unsafe sets for a forbidden set.
///
/// `exhaustive` is true only when the enumeration provably found every
/// minimal unsafe set, i.e. some level had no safe set left or every level up
/// to |V| was scanned.
struct AntichainB {
  CapabilitySet forbidden;
  std::vector<CapabilitySet> sets;
  bool exhaustive = false;
};

inline constexpr std::size_t kAntichainVertexCap = 24;

/// Level-wise enumeration by ascending cardinality up to `max_card`,
/// skipping supersets of members already found. Refuses hypergraphs with
/// more than kAntichainVertexCap vertices unless `allow_large` is set.
AntichainB minimal_unsafe_antichain(const CapabilityHypergraph& h,
                                    const CapabilitySet& forbidden,
                                    std::size_t max_card,
                                    bool allow_large = false);

struct CoalitionVerdict {
  bool safe = true;
  std::optional<CapabilitySet> witness;  // first covered antichain member
};

// Online gate: the coalition is unsafe iff its union covers an antichain
// member. Throws NonExhaustiveAntichain for truncated antichains.
CoalitionVerdict coalition_gate(const AntichainB& antichain,
                                std::span<const CapabilitySet> agents);

/// All ⊆-maximal agent index sets whose joint capabilities stay F-contained,
/// each sorted ascending, listed in lexicographic order.
std::vector<std::vector<std::size_t>> maximal_safe_coalitions(
    const CapabilityHypergraph& h, const CapabilitySet& forbidden,
    std::span<const CapabilitySet> agents);

struct AuditSurface {
  // Emg(A) \ F; certificates[i] derives the i-th member in ascending order.
  CapabilitySet safe_emergent;
  std::vector<DerivationCertificate> certificates;
  std::vector<FrontierEntry> frontier;
  std::vector<GainEntry> top_gains;
};

// Throws UnsafeStart when `initial` is not F-contained.
AuditSurface audit_surface(const CapabilityHypergraph& h,
                           const CapabilitySet& initial,
                           const CapabilitySet& forbidden, std::size_t k);

enum class GoalKind {
  AlreadyReachable,
  SafelyAcquirable,
  StructurallyUnsafe,
  BudgetExceeded,
};

struct GoalClassification {
  GoalKind kind = GoalKind::AlreadyReachable;
  // Acquisitions in order; set only for SafelyAcquirable.
  std::vector<CapabilityId> path;
  std::size_t states_explored = 0;
};

inline constexpr std::size_t kDefaultStateBudget = 100000;

/// Breadth-first search over closed capability sets. The successors of a
/// state X are X ∪ {w} for every w in the near-miss frontier of X, so every
/// step of a returned path is a certified safe first move.
GoalClassification classify_goal(const CapabilityHypergraph& h,
                                 const CapabilitySet& initial,
                                 const CapabilitySet& forbidden,
                                 CapabilityId goal,
                                 std::size_t state_budget = kDefaultStateBudget);

const char* to_string(GoalKind kind);

}  // namespace capclose
