#pragma once

// Synthetic corpora with a known number of planted conjunctive instances.

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "capclose/hypergraph.hpp"
#include "capclose/miner.hpp"

namespace capclose::testing {

inline constexpr std::size_t kPlantedFamilies = 6;

// Family i: ({p_i, q_i}, {r_i}) plus the singleton route ({s_i}, {r_i}).
inline CapabilityHypergraph planted_candidates() {
  std::vector<std::string> labels;
  std::vector<LabelledEdge> edges;
  for (std::size_t i = 0; i < kPlantedFamilies; ++i) {
    const std::string k = std::to_string(i);
    for (const char* p : {"p", "q", "r", "s"}) labels.push_back(p + k);
    edges.push_back({{"p" + k, "q" + k}, {"r" + k}, "pq_r" + k});
    edges.push_back({{"s" + k}, {"r" + k}, "s_r" + k});
  }
  return CapabilityHypergraph::build(std::move(labels), edges);
}

struct PlantedCorpus {
  std::vector<Trajectory> trajectories;
  std::size_t planted = 0;
};

// Exactly round(rate * size) trajectories are conjunctive witnesses. The rest
// are decoys: a partial tail, or the full tail together with the singleton
// route.
inline PlantedCorpus planted_corpus(std::mt19937_64& rng, std::size_t size, double rate) {
  PlantedCorpus out;
  out.planted = static_cast<std::size_t>(std::llround(rate * static_cast<double>(size)));
  std::vector<bool> conj(size, false);
  std::fill(conj.begin(), conj.begin() + static_cast<std::ptrdiff_t>(out.planted), true);
  std::shuffle(conj.begin(), conj.end(), rng);
  std::uniform_int_distribution<std::size_t> family(0, kPlantedFamilies - 1);
  std::uniform_int_distribution<std::int64_t> gap(1, 500);
  std::bernoulli_distribution coin(0.5);
  for (std::size_t i = 0; i < size; ++i) {
    const std::string k = std::to_string(family(rng));
    std::vector<std::string> caps;
    if (conj[i]) {
      caps = {"p" + k, "q" + k};
    } else if (coin(rng)) {
      caps = {coin(rng) ? "p" + k : "q" + k};
    } else {
      caps = {"s" + k, "p" + k, "q" + k};
    }
    std::shuffle(caps.begin(), caps.end(), rng);
    Trajectory t;
    t.id = "t" + std::to_string(i);
    std::int64_t now = 0;
    for (const auto& c : caps) {
      t.events.push_back({c, now});
      now += gap(rng);
    }
    t.events.push_back({"r" + k, now});
    t.terminal = "r" + k;
    out.trajectories.push_back(std::move(t));
  }
  return out;
}

// Family i: ({x_i, y_i}, {z_i}) and ({w_i}, {v_i}).
inline CapabilityHypergraph planner_graph() {
  std::vector<std::string> labels;
  std::vector<LabelledEdge> edges;
  for (std::size_t i = 0; i < kPlantedFamilies; ++i) {
    const std::string k = std::to_string(i);
    for (const char* p : {"x", "y", "z", "w", "v"}) labels.push_back(p + k);
    edges.push_back({{"x" + k, "y" + k}, {"z" + k}, "xy_z" + k});
    edges.push_back({{"w" + k}, {"v" + k}, "w_v" + k});
  }
  return CapabilityHypergraph::build(std::move(labels), edges);
}

// A `rate` share of instances deliver both halves of a conjunctive tail at
// distinct times; the rest touch only singleton edges.
inline std::vector<PlannerInstance> planner_corpus(std::mt19937_64& rng,
                                                   const CapabilityHypergraph& h,
                                                   std::size_t size, double rate) {
  const auto planted = static_cast<std::size_t>(std::llround(rate * static_cast<double>(size)));
  std::vector<bool> conj(size, false);
  std::fill(conj.begin(), conj.begin() + static_cast<std::ptrdiff_t>(planted), true);
  std::shuffle(conj.begin(), conj.end(), rng);
  std::uniform_int_distribution<std::size_t> family(0, kPlantedFamilies - 1);
  std::uniform_int_distribution<std::int64_t> offset(1, 1000);
  std::vector<PlannerInstance> out;
  for (std::size_t i = 0; i < size; ++i) {
    const std::string k = std::to_string(family(rng));
    PlannerInstance inst{h.empty_set(), {}};
    if (conj[i]) {
      const std::int64_t first = offset(rng);
      inst.schedule.push_back({h.id_of("x" + k), first});
      inst.schedule.push_back({h.id_of("y" + k), first + offset(rng)});
    } else {
      inst.schedule.push_back({h.id_of("w" + k), offset(rng)});
    }
    out.push_back(std::move(inst));
  }
  return out;
}

}  // namespace capclose::testing
