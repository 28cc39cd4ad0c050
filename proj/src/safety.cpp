#include "capclose/safety.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "capclose/error.hpp"

namespace capclose {

bool is_contained(const CapabilityHypergraph& h, const CapabilitySet& initial,
                  const CapabilitySet& forbidden) {
  return !reach(h, initial).intersects(forbidden);
}

bool is_minimal_unsafe(const CapabilityHypergraph& h,
                       const CapabilitySet& forbidden, const CapabilitySet& b) {
  if (is_contained(h, b, forbidden)) return false;
  bool minimal = true;
  b.for_each([&](CapabilityId v) {
    if (!minimal) return;
    CapabilitySet smaller = b;
    smaller.erase(v);
    if (!is_contained(h, smaller, forbidden)) minimal = false;
  });
  return minimal;
}

namespace {

// Calls fn(set) for every `size`-subset of {0..n-1} in lexicographic order.
template <typename Fn>
void for_each_subset_of_size(std::size_t n, std::size_t size, Fn&& fn) {
  if (size > n) return;
  std::vector<CapabilityId> pick(size);
  for (std::size_t i = 0; i < size; ++i) pick[i] = static_cast<CapabilityId>(i);
  while (true) {
    fn(CapabilitySet::from_ids(n, pick));
    std::size_t i = size;
    while (i > 0 && pick[i - 1] == n - size + (i - 1)) --i;
    if (i == 0) return;
    ++pick[i - 1];
    for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace

AntichainB minimal_unsafe_antichain(const CapabilityHypergraph& h,
                                    const CapabilitySet& forbidden,
                                    std::size_t max_card, bool allow_large) {
  const std::size_t n = h.vertex_count();
  if (forbidden.universe() != n) {
    throw ValidationError("forbidden set universe does not match hypergraph");
  }
  if (n > kAntichainVertexCap && !allow_large) {
    throw CapacityExceeded("antichain enumeration refused for " +
                           std::to_string(n) + " vertices (cap " +
                           std::to_string(kAntichainVertexCap) + ")");
  }

  AntichainB out{forbidden, {}, false};
  if (forbidden.empty()) {
    out.exhaustive = true;
    return out;
  }
  // When V \ F is safe, the unsafe sets are exactly those meeting F.
  if (is_contained(h, CapabilitySet::full(n) - forbidden, forbidden)) {
    forbidden.for_each([&](CapabilityId f) {
      out.sets.push_back(CapabilitySet(n, {f}));
    });
    out.exhaustive = true;
    return out;
  }

  const std::size_t top = std::min(max_card, n);
  for (std::size_t card = 0; card <= top; ++card) {
    bool any_safe = false;
    std::vector<CapabilitySet> found;
    for_each_subset_of_size(n, card, [&](const CapabilitySet& candidate) {
      for (const auto& member : out.sets) {
        if (member.is_subset_of(candidate)) return;
      }
      if (is_contained(h, candidate, forbidden)) {
        any_safe = true;
      } else {
        found.push_back(candidate);
      }
    });
    for (auto& s : found) out.sets.push_back(std::move(s));
    // No safe set at this level: every larger set contains a found member.
    if (!any_safe || card == n) {
      out.exhaustive = true;
      break;
    }
  }
  return out;
}

CoalitionVerdict coalition_gate(const AntichainB& antichain,
                                std::span<const CapabilitySet> agents) {
  if (!antichain.exhaustive) {
    throw NonExhaustiveAntichain(
        "coalition gate requires an exhaustive minimal-unsafe antichain");
  }
  CapabilitySet joint(antichain.forbidden.universe());
  for (const auto& a : agents) joint |= a;
  for (const auto& member : antichain.sets) {
    if (member.is_subset_of(joint)) return {false, member};
  }
  return {true, std::nullopt};
}

std::vector<std::vector<std::size_t>> maximal_safe_coalitions(
    const CapabilityHypergraph& h, const CapabilitySet& forbidden,
    std::span<const CapabilitySet> agents) {
  constexpr std::size_t kAgentCap = 20;
  const std::size_t k = agents.size();
  if (k > kAgentCap) {
    throw CapacityExceeded("maximal coalition enumeration supports at most " +
                           std::to_string(kAgentCap) + " agents");
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (!is_contained(h, agents[i], forbidden)) {
      throw UnsafeStart("agent " + std::to_string(i) +
                        " is not F-contained on its own");
    }
  }
  const std::size_t masks = std::size_t{1} << k;
  std::vector<bool> safe(masks, false);
  for (std::size_t mask = 0; mask < masks; ++mask) {
    CapabilitySet joint = h.empty_set();
    for (std::size_t i = 0; i < k; ++i) {
      if (mask & (std::size_t{1} << i)) joint |= agents[i];
    }
    safe[mask] = is_contained(h, joint, forbidden);
  }
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t mask = 0; mask < masks; ++mask) {
    if (!safe[mask]) continue;
    bool maximal = true;
    for (std::size_t i = 0; i < k && maximal; ++i) {
      const std::size_t bit = std::size_t{1} << i;
      if (!(mask & bit) && safe[mask | bit]) maximal = false;
    }
    if (!maximal) continue;
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < k; ++i) {
      if (mask & (std::size_t{1} << i)) members.push_back(i);
    }
    out.push_back(std::move(members));
  }
  std::sort(out.begin(), out.end());
  return out;
}

AuditSurface audit_surface(const CapabilityHypergraph& h,
                           const CapabilitySet& initial,
                           const CapabilitySet& forbidden, std::size_t k) {
  if (!is_contained(h, initial, forbidden)) {
    throw UnsafeStart("initial capability set is not F-contained");
  }
  AuditSurface out;
  out.safe_emergent = emergent(h, initial) - forbidden;
  out.safe_emergent.for_each([&](CapabilityId v) {
    out.certificates.push_back(*certificate_for(h, initial, v));
  });
  out.frontier = near_miss_frontier(h, initial, forbidden);
  out.top_gains = top_gains(h, initial, k, forbidden);
  return out;
}

GoalClassification classify_goal(const CapabilityHypergraph& h,
                                 const CapabilitySet& initial,
                                 const CapabilitySet& forbidden,
                                 CapabilityId goal, std::size_t state_budget) {
  if (goal >= h.vertex_count()) {
    throw ValidationError("goal id out of range");
  }
  if (forbidden.contains(goal)) {
    throw ForbiddenGoal("goal '" + h.label(goal) + "' is itself forbidden");
  }
  if (!is_contained(h, initial, forbidden)) {
    throw UnsafeStart("initial capability set is not F-contained");
  }
  const CapabilitySet start = reach(h, initial);
  if (start.contains(goal)) return {GoalKind::AlreadyReachable, {}, 0};

  struct Node {
    CapabilitySet state;
    std::size_t parent;
    CapabilityId acquired;
  };
  std::vector<Node> nodes{{start, 0, 0}};
  std::unordered_set<CapabilitySet, CapabilitySetHash> seen{start};
  std::deque<std::size_t> queue{0};

  auto path_to = [&](std::size_t idx, CapabilityId last) {
    std::vector<CapabilityId> path{last};
    for (; idx != 0; idx = nodes[idx].parent) path.push_back(nodes[idx].acquired);
    std::reverse(path.begin(), path.end());
    return path;
  };

  std::size_t explored = 0;
  while (!queue.empty()) {
    if (explored >= state_budget) {
      return {GoalKind::BudgetExceeded, {}, explored};
    }
    const std::size_t idx = queue.front();
    queue.pop_front();
    ++explored;
    const CapabilitySet state = nodes[idx].state;
    for (const FrontierEntry& step : near_miss_frontier(h, state, forbidden)) {
      CapabilitySet next = state;
      next.insert(step.vertex);
      next = reach(h, next);
      if (next.contains(goal)) {
        return {GoalKind::SafelyAcquirable, path_to(idx, step.vertex), explored};
      }
      if (seen.insert(next).second) {
        nodes.push_back({std::move(next), idx, step.vertex});
        queue.push_back(nodes.size() - 1);
      }
    }
  }
  return {GoalKind::StructurallyUnsafe, {}, explored};
}

const char* to_string(GoalKind kind) {
  switch (kind) {
    case GoalKind::AlreadyReachable: return "already_reachable";
    case GoalKind::SafelyAcquirable: return "safely_acquirable";
    case GoalKind::StructurallyUnsafe: return "structurally_unsafe";
    case GoalKind::BudgetExceeded: return "budget_exceeded";
  }
  return "unknown";
}

}  // namespace capclose
