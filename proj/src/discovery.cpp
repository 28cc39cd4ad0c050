#include "capclose/discovery.hpp"

#include <algorithm>

#include "capclose/closure.hpp"
#include "capclose/error.hpp"

namespace capclose {

CapabilitySet emergent(const CapabilityHypergraph& h,
                       const CapabilitySet& initial) {
  CapabilitySet out = reach(h, initial);
  out -= initial;
  out -= reach_singleton(h, initial);
  return out;
}

namespace {

std::vector<BoundaryEntry> boundary_of_closed(const CapabilityHypergraph& h,
                                              const CapabilitySet& closed) {
  std::vector<BoundaryEntry> out;
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    const auto e = static_cast<EdgeId>(i);
    std::size_t missing_count = 0;
    CapabilityId missing = 0;
    for (CapabilityId t : h.edge(e).tail) {
      if (!closed.contains(t)) {
        missing = t;
        if (++missing_count > 1) break;
      }
    }
    if (missing_count == 1) out.push_back({e, missing});
  }
  return out;
}

void require_vertex(const CapabilityHypergraph& h, CapabilityId v) {
  if (v >= h.vertex_count()) {
    throw ValidationError("capability id " + std::to_string(v) +
                          " out of range");
  }
}

// Single acquisitions from V \ closed, minus unsafe ones when F is given.
template <typename Fn>
void scan_candidates(const CapabilityHypergraph& h, const CapabilitySet& closed,
                     const std::optional<CapabilitySet>& forbidden, Fn&& fn) {
  const std::size_t before = closed.size();
  for (std::size_t i = 0; i < h.vertex_count(); ++i) {
    const auto v = static_cast<CapabilityId>(i);
    if (closed.contains(v)) continue;
    if (forbidden && forbidden->contains(v)) continue;
    CapabilitySet seed = closed;
    seed.insert(v);
    CapabilitySet after = reach(h, seed);
    std::size_t gain = after.size() - before;
    if (forbidden) {
      if (after.intersects(*forbidden)) continue;
    }
    fn(GainEntry{v, gain});
  }
}

}  // namespace

std::vector<BoundaryEntry> boundary(const CapabilityHypergraph& h,
                                    const CapabilitySet& initial) {
  return boundary_of_closed(h, reach(h, initial));
}

std::vector<FrontierEntry> near_miss_frontier(const CapabilityHypergraph& h,
                                              const CapabilitySet& initial,
                                              const CapabilitySet& forbidden) {
  const CapabilitySet closed = reach(h, initial);
  std::vector<std::optional<EdgeId>> witness(h.vertex_count());
  for (const BoundaryEntry& b : boundary_of_closed(h, closed)) {
    if (!witness[b.missing]) witness[b.missing] = b.edge;
  }
  std::vector<FrontierEntry> out;
  for (std::size_t i = 0; i < witness.size(); ++i) {
    const auto v = static_cast<CapabilityId>(i);
    if (!witness[v] || forbidden.contains(v)) continue;
    CapabilitySet seed = closed;
    seed.insert(v);
    if (reach(h, seed).intersects(forbidden)) continue;
    out.push_back({v, *witness[v]});
  }
  return out;
}

GainEntry marginal_gain(const CapabilityHypergraph& h,
                        const CapabilitySet& initial, CapabilityId v,
                        const std::optional<CapabilitySet>& forbidden) {
  require_vertex(h, v);
  const CapabilitySet before = reach(h, initial);
  if (before.contains(v)) return {v, 0};
  CapabilitySet seed = before;
  seed.insert(v);
  CapabilitySet gained = reach(h, seed) - before;
  if (forbidden) gained -= *forbidden;
  return {v, gained.size()};
}

DistanceOutcome acquisition_distance(const CapabilityHypergraph& h,
                                     const CapabilitySet& initial,
                                     CapabilityId goal, std::size_t budget) {
  require_vertex(h, goal);
  const CapabilitySet closed = reach(h, initial);
  if (closed.contains(goal)) return DistanceExact{0, h.empty_set()};

  CapabilitySet outside = CapabilitySet::full(h.vertex_count()) - closed;
  outside.erase(goal);
  if (!reach(h, closed | outside).contains(goal)) return DistanceUnreachable{};
  const std::vector<CapabilityId> pool = outside.members();
  std::vector<std::size_t> pick;
  for (std::size_t size = 1; size <= std::min(budget, pool.size()); ++size) {
    // Lexicographic combinations of `size` indices into `pool`.
    pick.resize(size);
    for (std::size_t i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      CapabilitySet seed = closed;
      for (std::size_t i : pick) seed.insert(pool[i]);
      if (reach(h, seed).contains(goal)) {
        CapabilitySet witness = h.empty_set();
        for (std::size_t i : pick) witness.insert(pool[i]);
        return DistanceExact{size, std::move(witness)};
      }
      std::size_t i = size;
      while (i > 0 && pick[i - 1] == pool.size() - size + (i - 1)) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return DistanceExceeded{budget};
}

std::vector<GainEntry> greedy_acquire(
    const CapabilityHypergraph& h, const CapabilitySet& initial, std::size_t k,
    const std::optional<CapabilitySet>& forbidden) {
  std::vector<GainEntry> chosen;
  CapabilitySet closed = reach(h, initial);
  for (std::size_t step = 0; step < k; ++step) {
    std::optional<GainEntry> best;
    scan_candidates(h, closed, forbidden, [&](const GainEntry& g) {
      if (!best || g.gain > best->gain) best = g;
    });
    if (!best || best->gain == 0) break;
    chosen.push_back(*best);
    closed.insert(best->vertex);
    closed = reach(h, closed);
  }
  return chosen;
}

std::vector<GainEntry> top_gains(const CapabilityHypergraph& h,
                                 const CapabilitySet& initial, std::size_t k,
                                 const std::optional<CapabilitySet>& forbidden) {
  std::vector<GainEntry> all;
  scan_candidates(h, reach(h, initial), forbidden,
                  [&](const GainEntry& g) { all.push_back(g); });
  std::stable_sort(all.begin(), all.end(),
                   [](const GainEntry& a, const GainEntry& b) {
                     return a.gain > b.gain;
                   });
  if (all.size() > k) all.resize(k);
  return all;
}

}  // namespace capclose
