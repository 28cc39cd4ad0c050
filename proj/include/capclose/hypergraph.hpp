#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "capclose/capability_set.hpp"

namespace capclose {

/// Composition rule: all of `tail` jointly enable all of `head`.
///
/// Inside a CapabilityHypergraph both lists are sorted ascending and free of
/// duplicates, `head` is non-empty and disjoint from `tail`. An empty tail is
/// an axiom and fires unconditionally.
struct Hyperedge {
  std::vector<CapabilityId> tail;
  std::vector<CapabilityId> head;
  std::string label;

  friend bool operator==(const Hyperedge&, const Hyperedge&) = default;
};

// Edge given by capability labels, as read from JSON or the command line.
struct LabelledEdge {
  std::vector<std::string> tail;
  std::vector<std::string> head;
  std::string label;  // empty: a default "e<index>" label is assigned
};

/// Immutable capability hypergraph H = (V, F) with a tail-incidence index.
///
/// Vertices are interned to dense ids in first-seen label order. Edges keep
/// their input order; exact (tail, head) duplicates collapse onto the first
/// occurrence.
class CapabilityHypergraph {
 public:
  CapabilityHypergraph() = default;

  static CapabilityHypergraph build(std::vector<std::string> labels,
                                    std::span<const LabelledEdge> edges);
  static CapabilityHypergraph from_edges(std::vector<std::string> labels,
                                         std::vector<Hyperedge> edges);

  std::size_t vertex_count() const { return labels_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const Hyperedge& edge(EdgeId id) const;
  std::span<const Hyperedge> edges() const { return edges_; }

  // Edges whose tail contains `v`, ascending by edge id.
  std::span<const EdgeId> edges_with_tail(CapabilityId v) const {
    return tail_index_[v];
  }
  std::size_t tail_size(EdgeId id) const { return tail_sizes_[id]; }
  // Axiom edges (empty tail), ascending.
  std::span<const EdgeId> axioms() const { return axioms_; }
  // Sum of |tail| + |head| over all edges.
  std::size_t total_incidence() const;

  const std::string& label(CapabilityId v) const { return labels_.at(v); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<CapabilityId> find(std::string_view label) const;
  // Throws ValidationError for unknown labels.
  CapabilityId id_of(std::string_view label) const;
  std::optional<EdgeId> find_edge_label(std::string_view label) const;

  CapabilitySet empty_set() const { return CapabilitySet(vertex_count()); }
  CapabilitySet make_set(std::span<const std::string> labels) const;
  CapabilitySet make_set(std::initializer_list<std::string_view> labels) const;
  std::vector<std::string> labels_of(const CapabilitySet& set) const;
  CapabilitySet tail_set(EdgeId id) const;
  CapabilitySet head_set(EdgeId id) const;

  std::optional<EdgeId> find_edge(std::span<const CapabilityId> tail,
                                  std::span<const CapabilityId> head) const;

  // Copies with one edge appended (after normalisation) or removed. Removing
  // shifts the ids of later edges down by one.
  CapabilityHypergraph with_edge(Hyperedge edge) const;
  CapabilityHypergraph without_edge(EdgeId id) const;

  // Validates and normalises an edge against this universe.
  Hyperedge normalise(Hyperedge edge) const;
  Hyperedge resolve(const LabelledEdge& edge) const;

  friend bool operator==(const CapabilityHypergraph& a,
                         const CapabilityHypergraph& b) {
    return a.labels_ == b.labels_ && a.edges_ == b.edges_;
  }

 private:
  void rebuild_index();

  std::vector<std::string> labels_;
  std::unordered_map<std::string, CapabilityId> ids_;
  std::vector<Hyperedge> edges_;
  std::vector<std::vector<EdgeId>> tail_index_;
  std::vector<std::size_t> tail_sizes_;
  std::vector<EdgeId> axioms_;
};

/// Pairwise capability graph G = (V, E) without self-loops.
struct PairwiseGraph {
  std::vector<std::string> labels;
  std::vector<std::pair<CapabilityId, CapabilityId>> arcs;
};

// One singleton-tail, singleton-head hyperedge per arc.
CapabilityHypergraph embed_graph(const PairwiseGraph& graph);

// Keeps exactly the edges with |tail| = 1; axioms are dropped.
CapabilityHypergraph singleton_restriction(const CapabilityHypergraph& h);

}  // namespace capclose
