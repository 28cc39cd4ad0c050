#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "capclose/capability_set.hpp"
#include "capclose/hypergraph.hpp"

namespace capclose {

struct TrajectoryEvent {
  std::string cap;
  std::int64_t t_ms = 0;
};

/// An observed run: capabilities exercised in time order, then the derived
/// terminal capability.
struct Trajectory {
  std::string id;
  std::vector<TrajectoryEvent> events;
  std::string terminal;

  // Non-empty events with non-decreasing timestamps.
  void validate() const;
};

struct WilsonInterval {
  double low = 0.0;
  double high = 1.0;
};

inline constexpr double kWilsonZ95 = 1.96;

// Score interval for a binomial proportion, no continuity correction.
WilsonInterval wilson(std::size_t successes, std::size_t trials,
                      double z = kWilsonZ95);

struct CandidateCount {
  std::vector<std::string> tail;
  std::string head;
  std::size_t witness_count = 0;
};

struct MiningReport {
  std::vector<CandidateCount> candidates;
  std::size_t conjunctive_instance_count = 0;
  std::size_t total_count = 0;
  double prevalence = 0.0;
  WilsonInterval interval;
};

/// Conjunctive-witness mining. Candidates are the edges of `candidates`
/// (singleton heads only). A trajectory with terminal v and event set σ
/// (v excluded) witnesses (S, {v}) when S ⊆ σ and v is not reachable from σ
/// through the candidates' singleton-tail edges. It is a conjunctive
/// instance when it witnesses some candidate with |S| ≥ 2.
MiningReport mine_witnesses(const CapabilityHypergraph& candidates,
                            const std::vector<Trajectory>& trajectories);

struct ScheduledDelivery {
  CapabilityId cap = 0;
  std::int64_t t_ms = 0;
};

struct PlannerInstance {
  CapabilitySet initial;
  std::vector<ScheduledDelivery> schedule;
};

struct InstanceOutcome {
  // Firing time per edge, empty when the edge never fired.
  std::vector<std::optional<std::int64_t>> workflow_fired_at;
  std::vector<std::optional<std::int64_t>> hypergraph_fired_at;
  std::size_t workflow_violations = 0;
  std::size_t hypergraph_violations = 0;
  // Some conjunctive edge had at least one tail element available.
  bool conjunctive = false;
};

struct PlannerTally {
  std::size_t violations = 0;           // conjunctive edges fired early
  std::size_t violating_instances = 0;  // conjunctive instances with >= 1
  double rate = 0.0;                    // violating / conjunctive instances
};

struct ViolationReport {
  std::size_t instance_count = 0;
  std::size_t conjunctive_instance_count = 0;
  PlannerTally workflow;
  PlannerTally hypergraph;
  std::vector<InstanceOutcome> outcomes;
};

/// Replays each schedule under two planners. The workflow baseline fires an
/// edge once any tail element is available; the hypergraph planner waits for
/// the whole tail. Firing a conjunctive edge with part of the tail missing
/// is an AND-violation. The hypergraph planner must record none; a nonzero
/// count throws std::logic_error.
ViolationReport evaluate_planners(const CapabilityHypergraph& h,
                                  const std::vector<PlannerInstance>& instances);

}  // namespace capclose
