#include "capclose/miner.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "capclose/closure.hpp"
#include "capclose/error.hpp"

namespace capclose {

void Trajectory::validate() const {
  if (events.empty()) {
    throw ValidationError("trajectory '" + id + "' has no events");
  }
  for (std::size_t i = 1; i < events.size(); ++i) {
    if (events[i].t_ms < events[i - 1].t_ms) {
      throw ValidationError("trajectory '" + id +
                            "' has decreasing timestamps");
    }
  }
  if (terminal.empty()) {
    throw ValidationError("trajectory '" + id + "' has no terminal capability");
  }
}

WilsonInterval wilson(std::size_t successes, std::size_t trials, double z) {
  if (successes > trials) {
    throw ValidationError("wilson: successes exceed trials");
  }
  if (trials == 0) return {0.0, 1.0};
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (p + z2 / (2.0 * n)) / denom;
  const double half =
      z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
  WilsonInterval ci{std::max(0.0, center - half), std::min(1.0, center + half)};
  if (successes == 0) ci.low = 0.0;
  if (successes == trials) ci.high = 1.0;
  return ci;
}

MiningReport mine_witnesses(const CapabilityHypergraph& candidates,
                            const std::vector<Trajectory>& trajectories) {
  for (const Hyperedge& e : candidates.edges()) {
    if (e.head.size() != 1) {
      throw ValidationError("candidate '" + e.label +
                            "' must have a single head capability");
    }
  }
  const CapabilityHypergraph singles = singleton_restriction(candidates);

  MiningReport report;
  for (const Hyperedge& e : candidates.edges()) {
    report.candidates.push_back(
        {candidates.labels_of(CapabilitySet::from_ids(candidates.vertex_count(), e.tail)),
         candidates.label(e.head.front()), 0});
  }

  for (const Trajectory& t : trajectories) {
    t.validate();
    const CapabilityId terminal = candidates.id_of(t.terminal);
    CapabilitySet sigma = candidates.empty_set();
    for (const auto& ev : t.events) sigma.insert(candidates.id_of(ev.cap));
    sigma.erase(terminal);

    const bool singleton_route = reach(singles, sigma).contains(terminal);
    bool conjunctive = false;
    for (std::size_t i = 0; i < candidates.edge_count(); ++i) {
      const Hyperedge& e = candidates.edge(static_cast<EdgeId>(i));
      if (e.head.front() != terminal || singleton_route) continue;
      const bool covered = std::all_of(e.tail.begin(), e.tail.end(),
                                       [&](CapabilityId v) { return sigma.contains(v); });
      if (!covered) continue;
      ++report.candidates[i].witness_count;
      if (e.tail.size() >= 2) conjunctive = true;
    }
    if (conjunctive) ++report.conjunctive_instance_count;
  }
  report.total_count = trajectories.size();
  report.prevalence = report.total_count == 0
                          ? 0.0
                          : static_cast<double>(report.conjunctive_instance_count) /
                                static_cast<double>(report.total_count);
  report.interval = wilson(report.conjunctive_instance_count, report.total_count);
  return report;
}

namespace {

enum class FiringRule { AnyTail, FullTail };

// Fires every not-yet-fired edge the rule allows until nothing changes.
void propagate(const CapabilityHypergraph& h, FiringRule rule, std::int64_t now,
               CapabilitySet& have,
               std::vector<std::optional<std::int64_t>>& fired_at,
               std::size_t& violations) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < h.edge_count(); ++i) {
      if (fired_at[i]) continue;
      const Hyperedge& e = h.edge(static_cast<EdgeId>(i));
      std::size_t present = 0;
      for (CapabilityId t : e.tail) present += have.contains(t) ? 1 : 0;
      const bool complete = present == e.tail.size();
      const bool fires = rule == FiringRule::FullTail ? complete
                                                       : (complete || present > 0);
      if (!fires) continue;
      fired_at[i] = now;
      if (e.tail.size() >= 2 && !complete) ++violations;
      for (CapabilityId v : e.head) have.insert(v);
      changed = true;
    }
  }
}

InstanceOutcome replay(const CapabilityHypergraph& h, const PlannerInstance& inst) {
  if (inst.initial.universe() != h.vertex_count()) {
    throw ValidationError("planner instance universe does not match hypergraph");
  }
  std::vector<ScheduledDelivery> schedule = inst.schedule;
  for (const auto& d : schedule) {
    if (d.cap >= h.vertex_count()) {
      throw ValidationError("schedule references unknown capability id " +
                            std::to_string(d.cap));
    }
  }
  std::stable_sort(schedule.begin(), schedule.end(),
                   [](const auto& a, const auto& b) { return a.t_ms < b.t_ms; });

  InstanceOutcome out;
  out.workflow_fired_at.assign(h.edge_count(), std::nullopt);
  out.hypergraph_fired_at.assign(h.edge_count(), std::nullopt);
  CapabilitySet workflow = inst.initial;
  CapabilitySet hyper = inst.initial;

  std::size_t next = 0;
  std::int64_t now = schedule.empty() ? 0 : schedule.front().t_ms;
  while (true) {
    while (next < schedule.size() && schedule[next].t_ms == now) {
      workflow.insert(schedule[next].cap);
      hyper.insert(schedule[next].cap);
      ++next;
    }
    propagate(h, FiringRule::AnyTail, now, workflow, out.workflow_fired_at,
              out.workflow_violations);
    propagate(h, FiringRule::FullTail, now, hyper, out.hypergraph_fired_at,
              out.hypergraph_violations);
    if (next == schedule.size()) break;
    now = schedule[next].t_ms;
  }

  for (const Hyperedge& e : h.edges()) {
    if (e.tail.size() < 2) continue;
    for (CapabilityId t : e.tail) {
      if (hyper.contains(t) || workflow.contains(t)) out.conjunctive = true;
    }
  }
  return out;
}

}  // namespace

ViolationReport evaluate_planners(const CapabilityHypergraph& h,
                                  const std::vector<PlannerInstance>& instances) {
  ViolationReport report;
  report.instance_count = instances.size();
  for (const PlannerInstance& inst : instances) {
    InstanceOutcome o = replay(h, inst);
    if (o.hypergraph_violations != 0) {
      throw std::logic_error(
          "hypergraph planner fired a conjunctive edge from a partial tail");
    }
    if (o.conjunctive) {
      ++report.conjunctive_instance_count;
      report.workflow.violations += o.workflow_violations;
      report.workflow.violating_instances += o.workflow_violations > 0 ? 1 : 0;
    }
    report.outcomes.push_back(std::move(o));
  }
  if (report.conjunctive_instance_count > 0) {
    const double denom = static_cast<double>(report.conjunctive_instance_count);
    report.workflow.rate =
        static_cast<double>(report.workflow.violating_instances) / denom;
    report.hypergraph.rate =
        static_cast<double>(report.hypergraph.violating_instances) / denom;
  }
  return report;
}

}  // namespace capclose
