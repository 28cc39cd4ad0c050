#include "capclose/hypergraph.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "capclose/error.hpp"

namespace capclose {

namespace {

void sort_unique(std::vector<CapabilityId>& ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
}

std::string describe(const Hyperedge& e) {
  return e.label.empty() ? std::string("<unlabelled edge>") : "edge '" + e.label + "'";
}

}  // namespace

CapabilityHypergraph CapabilityHypergraph::build(
    std::vector<std::string> labels, std::span<const LabelledEdge> edges) {
  CapabilityHypergraph shell;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i].empty()) throw ValidationError("empty capability label");
    if (!shell.ids_.emplace(labels[i], static_cast<CapabilityId>(i)).second) {
      throw ValidationError("duplicate capability label '" + labels[i] + "'");
    }
  }
  shell.labels_ = labels;
  std::vector<Hyperedge> resolved;
  resolved.reserve(edges.size());
  for (const LabelledEdge& e : edges) resolved.push_back(shell.resolve(e));
  return from_edges(std::move(labels), std::move(resolved));
}

CapabilityHypergraph CapabilityHypergraph::from_edges(
    std::vector<std::string> labels, std::vector<Hyperedge> edges) {
  CapabilityHypergraph h;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i].empty()) throw ValidationError("empty capability label");
    if (!h.ids_.emplace(labels[i], static_cast<CapabilityId>(i)).second) {
      throw ValidationError("duplicate capability label '" + labels[i] + "'");
    }
  }
  h.labels_ = std::move(labels);

  std::set<std::pair<std::vector<CapabilityId>, std::vector<CapabilityId>>> seen;
  std::set<std::string> edge_labels;
  for (Hyperedge& raw : edges) {
    Hyperedge e = h.normalise(std::move(raw));
    if (!seen.emplace(e.tail, e.head).second) continue;
    if (e.label.empty()) {
      e.label = "e" + std::to_string(h.edges_.size());
      for (int k = 1; edge_labels.count(e.label) != 0; ++k) {
        e.label = "e" + std::to_string(h.edges_.size()) + "_" + std::to_string(k);
      }
    }
    if (!edge_labels.insert(e.label).second) {
      throw ValidationError("duplicate edge label '" + e.label + "'");
    }
    h.edges_.push_back(std::move(e));
  }
  h.rebuild_index();
  return h;
}

Hyperedge CapabilityHypergraph::normalise(Hyperedge e) const {
  sort_unique(e.tail);
  sort_unique(e.head);
  const std::size_t n = vertex_count();
  for (CapabilityId v : e.tail) {
    if (v >= n) throw ValidationError(describe(e) + ": tail id out of range");
  }
  for (CapabilityId v : e.head) {
    if (v >= n) throw ValidationError(describe(e) + ": head id out of range");
  }
  if (e.head.empty()) throw ValidationError(describe(e) + ": empty head");
  std::vector<CapabilityId> common;
  std::set_intersection(e.tail.begin(), e.tail.end(), e.head.begin(),
                        e.head.end(), std::back_inserter(common));
  if (!common.empty()) {
    throw ValidationError(describe(e) + ": tail and head share capability '" +
                          labels_[common.front()] + "'");
  }
  return e;
}

Hyperedge CapabilityHypergraph::resolve(const LabelledEdge& edge) const {
  Hyperedge e;
  e.label = edge.label;
  for (const auto& l : edge.tail) e.tail.push_back(id_of(l));
  for (const auto& l : edge.head) e.head.push_back(id_of(l));
  return e;
}

void CapabilityHypergraph::rebuild_index() {
  tail_index_.assign(vertex_count(), {});
  tail_sizes_.assign(edges_.size(), 0);
  axioms_.clear();
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto id = static_cast<EdgeId>(i);
    tail_sizes_[i] = edges_[i].tail.size();
    if (edges_[i].tail.empty()) axioms_.push_back(id);
    for (CapabilityId v : edges_[i].tail) tail_index_[v].push_back(id);
  }
}

const Hyperedge& CapabilityHypergraph::edge(EdgeId id) const {
  if (id >= edges_.size()) {
    throw ValidationError("edge id " + std::to_string(id) + " out of range");
  }
  return edges_[id];
}

std::size_t CapabilityHypergraph::total_incidence() const {
  std::size_t total = 0;
  for (const auto& e : edges_) total += e.tail.size() + e.head.size();
  return total;
}

std::optional<CapabilityId> CapabilityHypergraph::find(
    std::string_view label) const {
  auto it = ids_.find(std::string(label));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

CapabilityId CapabilityHypergraph::id_of(std::string_view label) const {
  if (auto id = find(label)) return *id;
  throw ValidationError("unknown capability label '" + std::string(label) + "'");
}

std::optional<EdgeId> CapabilityHypergraph::find_edge_label(
    std::string_view label) const {
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].label == label) return static_cast<EdgeId>(i);
  }
  return std::nullopt;
}

CapabilitySet CapabilityHypergraph::make_set(
    std::span<const std::string> labels) const {
  CapabilitySet set = empty_set();
  for (const auto& l : labels) set.insert(id_of(l));
  return set;
}

CapabilitySet CapabilityHypergraph::make_set(
    std::initializer_list<std::string_view> labels) const {
  CapabilitySet set = empty_set();
  for (auto l : labels) set.insert(id_of(l));
  return set;
}

std::vector<std::string> CapabilityHypergraph::labels_of(
    const CapabilitySet& set) const {
  std::vector<std::string> out;
  set.for_each([&](CapabilityId v) { out.push_back(labels_.at(v)); });
  return out;
}

CapabilitySet CapabilityHypergraph::tail_set(EdgeId id) const {
  return CapabilitySet::from_ids(vertex_count(), edge(id).tail);
}

CapabilitySet CapabilityHypergraph::head_set(EdgeId id) const {
  return CapabilitySet::from_ids(vertex_count(), edge(id).head);
}

std::optional<EdgeId> CapabilityHypergraph::find_edge(
    std::span<const CapabilityId> tail,
    std::span<const CapabilityId> head) const {
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (std::equal(tail.begin(), tail.end(), edges_[i].tail.begin(),
                   edges_[i].tail.end()) &&
        std::equal(head.begin(), head.end(), edges_[i].head.begin(),
                   edges_[i].head.end())) {
      return static_cast<EdgeId>(i);
    }
  }
  return std::nullopt;
}

CapabilityHypergraph CapabilityHypergraph::with_edge(Hyperedge edge) const {
  std::vector<Hyperedge> edges = edges_;
  edges.push_back(std::move(edge));
  return from_edges(labels_, std::move(edges));
}

CapabilityHypergraph CapabilityHypergraph::without_edge(EdgeId id) const {
  edge(id);
  std::vector<Hyperedge> edges = edges_;
  edges.erase(edges.begin() + id);
  return from_edges(labels_, std::move(edges));
}

CapabilityHypergraph embed_graph(const PairwiseGraph& graph) {
  const std::size_t n = graph.labels.size();
  std::vector<Hyperedge> edges;
  edges.reserve(graph.arcs.size());
  for (const auto& [u, v] : graph.arcs) {
    if (u >= n || v >= n) throw ValidationError("arc endpoint out of range");
    if (u == v) throw ValidationError("self-loop on '" + graph.labels[u] + "'");
    edges.push_back(Hyperedge{{u}, {v}, {}});
  }
  return CapabilityHypergraph::from_edges(graph.labels, std::move(edges));
}

CapabilityHypergraph singleton_restriction(const CapabilityHypergraph& h) {
  std::vector<Hyperedge> kept;
  for (const auto& e : h.edges()) {
    if (e.tail.size() == 1) kept.push_back(e);
  }
  return CapabilityHypergraph::from_edges(h.labels(), std::move(kept));
}

}  // namespace capclose
