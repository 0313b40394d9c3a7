#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "wog/errors.hpp"
#include "wog/vertex_set.hpp"

namespace wog {

using Weight = std::uint32_t;

struct DirectedEdge {
  Vertex tail = 0;
  Vertex head = 0;
  constexpr auto operator<=>(const DirectedEdge&) const = default;
};

/// Unordered pair stored with u < v.
struct UndirectedEdge {
  Vertex u = 0;
  Vertex v = 0;

  constexpr UndirectedEdge() = default;
  constexpr UndirectedEdge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  constexpr bool contains(Vertex x) const { return x == u || x == v; }
  constexpr Vertex other(Vertex x) const { return x == u ? v : u; }
  constexpr auto operator<=>(const UndirectedEdge&) const = default;
};

/// How source and sink weights are treated at construction.
///
/// The edge ideal never sees a source weight, so every policy except
/// `preserve` rewrites sources to 1. Unmixedness and Cohen-Macaulayness do
/// not see sink weights either, which `analysis` exploits; `ideal` keeps them
/// because they are exponents of generators.
enum class WeightPolicy {
  analysis,  ///< sources and sinks -> 1, logged
  ideal,     ///< sources -> 1, logged
  strict,    ///< reject a source or sink with weight > 1
  preserve,  ///< take weights verbatim (induced subgraphs, capped copies)
};

struct VertexSpec {
  std::string id;
  std::int64_t weight = 1;
};

/// Raw, label-based description of a weighted oriented graph.
struct GraphSpec {
  std::string name;
  std::vector<VertexSpec> vertices;
  std::vector<std::pair<std::string, std::string>> edges;  ///< (tail, head)
};

/// Undirected simple graph on local indices 0..n-1.
///
/// `ids()` maps each local index back to the vertex index of the graph it was
/// derived from, so components and induced subgraphs can still be reported
/// in terms of the original labels.
class SimpleGraph {
 public:
  SimpleGraph() = default;

  explicit SimpleGraph(std::size_t n, std::span<const UndirectedEdge> edges = {},
                       std::vector<Vertex> ids = {})
      : adjacency_(n), ids_(std::move(ids)) {
    if (n > kMaxVertices) throw GraphError("graph order exceeds " + std::to_string(kMaxVertices));
    if (ids_.empty()) {
      ids_.resize(n);
      for (std::size_t i = 0; i < n; ++i) ids_[i] = static_cast<Vertex>(i);
    } else if (ids_.size() != n) {
      throw GraphError("id map size does not match graph order");
    }
    edges_.reserve(edges.size());
    for (const UndirectedEdge& e : edges) {
      if (e.v >= n) throw GraphError("edge endpoint out of range");
      if (e.u == e.v) throw GraphError("loop at vertex " + std::to_string(e.u));
      if (adjacency_[e.u].contains(e.v)) {
        throw GraphError("parallel edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
      }
      adjacency_[e.u].insert(e.v);
      adjacency_[e.v].insert(e.u);
      edges_.push_back(e);
    }
    std::sort(edges_.begin(), edges_.end());
  }

  std::size_t order() const { return adjacency_.size(); }
  std::size_t size() const { return edges_.size(); }
  VertexSet all() const { return VertexSet::range(order()); }
  std::span<const UndirectedEdge> edges() const { return edges_; }
  VertexSet neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  bool adjacent(Vertex a, Vertex b) const { return a < order() && adjacency_[a].contains(b); }
  std::span<const Vertex> ids() const { return ids_; }
  Vertex id(Vertex v) const { return ids_.at(v); }

  VertexSet isolated() const {
    VertexSet out;
    for (Vertex v = 0; v < order(); ++v) {
      if (adjacency_[v].empty()) out.insert(v);
    }
    return out;
  }

  /// Subgraph induced on `keep`, reindexed in increasing order of old index.
  SimpleGraph induced(VertexSet keep) const {
    check_subset(keep);
    std::vector<Vertex> local(order(), 0);
    std::vector<Vertex> ids;
    for (Vertex v : keep) {
      local[v] = static_cast<Vertex>(ids.size());
      ids.push_back(ids_[v]);
    }
    std::vector<UndirectedEdge> kept;
    for (const UndirectedEdge& e : edges_) {
      if (keep.contains(e.u) && keep.contains(e.v)) kept.emplace_back(local[e.u], local[e.v]);
    }
    const std::size_t n = ids.size();
    return SimpleGraph(n, kept, std::move(ids));
  }

  SimpleGraph remove_vertices(VertexSet removed) const {
    check_subset(removed);
    return induced(all() - removed);
  }

  void check_subset(VertexSet s) const {
    if (!s.subset_of(all())) throw GraphError("vertex set names a vertex outside the graph");
  }

  /// Structural equality; the id map is provenance and is not compared.
  bool operator==(const SimpleGraph& o) const {
    return order() == o.order() && edges_ == o.edges_;
  }

 private:
  std::vector<VertexSet> adjacency_;
  std::vector<UndirectedEdge> edges_;
  std::vector<Vertex> ids_;
};

/// D = (V, E, w): a directed simple graph with positive integer vertex weights.
/// Immutable after construction.
class WeightedOrientedGraph {
 public:
  WeightedOrientedGraph() = default;

  WeightedOrientedGraph(std::vector<std::string> labels, std::vector<Weight> weights,
                        std::vector<DirectedEdge> edges,
                        WeightPolicy policy = WeightPolicy::analysis, std::string name = {})
      : name_(std::move(name)),
        labels_(std::move(labels)),
        weights_(std::move(weights)),
        edges_(std::move(edges)) {
    const std::size_t n = labels_.size();
    if (n > kMaxVertices) throw GraphError("graph order exceeds " + std::to_string(kMaxVertices));
    if (weights_.size() != n) throw GraphError("weight list size does not match vertex list");
    for (std::size_t i = 0; i < n; ++i) {
      if (weights_[i] < 1) throw GraphError("weight of " + labels_[i] + " must be >= 1");
      if (!index_.emplace(labels_[i], static_cast<Vertex>(i)).second) {
        throw GraphError("duplicate vertex label '" + labels_[i] + "'");
      }
    }
    out_.assign(n, VertexSet{});
    in_.assign(n, VertexSet{});
    for (const DirectedEdge& e : edges_) {
      if (e.tail >= n || e.head >= n) throw GraphError("edge endpoint out of range");
      if (e.tail == e.head) throw GraphError("loop at vertex " + labels_[e.tail]);
      if (out_[e.tail].contains(e.head)) {
        throw GraphError("duplicate edge (" + labels_[e.tail] + "," + labels_[e.head] + ")");
      }
      if (out_[e.head].contains(e.tail)) {
        throw GraphError("both orientations of {" + labels_[e.tail] + "," + labels_[e.head] +
                         "} present");
      }
      out_[e.tail].insert(e.head);
      in_[e.head].insert(e.tail);
    }
    std::sort(edges_.begin(), edges_.end());
    apply_policy(policy);
  }

  const std::string& name() const { return name_; }
  std::size_t order() const { return labels_.size(); }
  std::size_t size() const { return edges_.size(); }
  VertexSet all() const { return VertexSet::range(order()); }

  std::span<const std::string> labels() const { return labels_; }
  const std::string& label(Vertex v) const { return labels_.at(v); }
  std::optional<Vertex> find(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  Vertex index_of(std::string_view label) const {
    auto v = find(label);
    if (!v) throw GraphError("unknown vertex '" + std::string(label) + "'");
    return *v;
  }

  std::span<const Weight> weights() const { return weights_; }
  Weight weight(Vertex v) const { return weights_.at(v); }
  /// Edges in (tail, head) lexicographic order.
  std::span<const DirectedEdge> edges() const { return edges_; }

  VertexSet out_neighbors(Vertex v) const { return out_.at(v); }
  VertexSet in_neighbors(Vertex v) const { return in_.at(v); }
  VertexSet neighbors(Vertex v) const { return out_.at(v) | in_.at(v); }
  bool has_edge(Vertex tail, Vertex head) const { return tail < order() && out_[tail].contains(head); }

  bool is_source(Vertex v) const { return in_.at(v).empty() && !out_[v].empty(); }
  bool is_sink(Vertex v) const { return out_.at(v).empty() && !in_[v].empty(); }

  /// V+ : vertices of weight > 1.
  VertexSet heavy() const {
    VertexSet out;
    for (Vertex v = 0; v < order(); ++v) {
      if (weights_[v] > 1) out.insert(v);
    }
    return out;
  }

  /// N+(A), the union of out-neighbourhoods.
  VertexSet out_neighbors(VertexSet a) const {
    VertexSet out;
    for (Vertex v : a) out |= out_[v];
    return out;
  }

  /// Weight rewrites performed at construction, one line each.
  std::span<const std::string> construction_log() const { return log_; }

  bool operator==(const WeightedOrientedGraph& o) const {
    return name_ == o.name_ && labels_ == o.labels_ && weights_ == o.weights_ && edges_ == o.edges_;
  }

 private:
  void apply_policy(WeightPolicy policy) {
    if (policy == WeightPolicy::preserve) return;
    for (Vertex v = 0; v < order(); ++v) {
      if (weights_[v] == 1) continue;
      const bool source = is_source(v);
      const bool sink = is_sink(v);
      if (!source && !sink) continue;
      const char* role = source ? "source" : "sink";
      if (policy == WeightPolicy::strict) {
        throw GraphError(std::string(role) + " " + labels_[v] + " has weight " +
                         std::to_string(weights_[v]) + " (strict mode requires 1)");
      }
      if (sink && policy == WeightPolicy::ideal) continue;
      log_.push_back("normalized weight of " + std::string(role) + " " + labels_[v] + " from " +
                     std::to_string(weights_[v]) + " to 1");
      weights_[v] = 1;
    }
  }

  std::string name_;
  std::vector<std::string> labels_;
  std::vector<Weight> weights_;
  std::vector<DirectedEdge> edges_;
  std::vector<VertexSet> out_;
  std::vector<VertexSet> in_;
  std::unordered_map<std::string, Vertex> index_;
  std::vector<std::string> log_;
};

/// Validates a label-based description and produces a graph.
inline WeightedOrientedGraph build_graph(const GraphSpec& spec,
                                         WeightPolicy policy = WeightPolicy::analysis) {
  std::vector<std::string> labels;
  std::vector<Weight> weights;
  std::unordered_map<std::string, Vertex> index;
  labels.reserve(spec.vertices.size());
  for (const VertexSpec& vs : spec.vertices) {
    if (vs.weight < 1) throw GraphError("weight of " + vs.id + " must be >= 1");
    if (vs.weight > static_cast<std::int64_t>(UINT32_MAX)) {
      throw GraphError("weight of " + vs.id + " is too large");
    }
    if (!index.emplace(vs.id, static_cast<Vertex>(labels.size())).second) {
      throw GraphError("duplicate vertex label '" + vs.id + "'");
    }
    labels.push_back(vs.id);
    weights.push_back(static_cast<Weight>(vs.weight));
  }
  std::vector<DirectedEdge> edges;
  edges.reserve(spec.edges.size());
  for (const auto& [tail, head] : spec.edges) {
    auto t = index.find(tail);
    auto h = index.find(head);
    if (t == index.end()) throw GraphError("edge names undeclared vertex '" + tail + "'");
    if (h == index.end()) throw GraphError("edge names undeclared vertex '" + head + "'");
    edges.push_back({t->second, h->second});
  }
  return WeightedOrientedGraph(std::move(labels), std::move(weights), std::move(edges), policy,
                               spec.name);
}

/// Inverse of build_graph, edges in (tail, head) order.
inline GraphSpec to_spec(const WeightedOrientedGraph& d) {
  GraphSpec spec;
  spec.name = d.name();
  for (Vertex v = 0; v < d.order(); ++v) spec.vertices.push_back({d.label(v), d.weight(v)});
  for (const DirectedEdge& e : d.edges()) spec.edges.emplace_back(d.label(e.tail), d.label(e.head));
  return spec;
}

/// Forgets orientation. |E(G)| = |E(D)| because both orientations are never present.
inline SimpleGraph underlying_graph(const WeightedOrientedGraph& d) {
  std::vector<UndirectedEdge> edges;
  edges.reserve(d.size());
  for (const DirectedEdge& e : d.edges()) edges.emplace_back(e.tail, e.head);
  return SimpleGraph(d.order(), edges);
}

struct Neighborhood {
  VertexSet out;
  VertexSet in;
  VertexSet all;
};

inline Neighborhood neighbors(const WeightedOrientedGraph& d, Vertex x) {
  if (x >= d.order()) throw GraphError("unknown vertex index " + std::to_string(x));
  return {d.out_neighbors(x), d.in_neighbors(x), d.neighbors(x)};
}

inline Neighborhood neighbors(const WeightedOrientedGraph& d, std::string_view label) {
  return neighbors(d, d.index_of(label));
}

/// D \ A: the induced weighted oriented subgraph on V(D) \ A, weights unchanged.
inline WeightedOrientedGraph delete_vertices(const WeightedOrientedGraph& d, VertexSet removed) {
  if (!removed.subset_of(d.all())) throw GraphError("vertex set names a vertex outside the graph");
  std::vector<Vertex> local(d.order(), 0);
  std::vector<std::string> labels;
  std::vector<Weight> weights;
  for (Vertex v : d.all() - removed) {
    local[v] = static_cast<Vertex>(labels.size());
    labels.push_back(d.label(v));
    weights.push_back(d.weight(v));
  }
  std::vector<DirectedEdge> edges;
  for (const DirectedEdge& e : d.edges()) {
    if (!removed.contains(e.tail) && !removed.contains(e.head)) {
      edges.push_back({local[e.tail], local[e.head]});
    }
  }
  return WeightedOrientedGraph(std::move(labels), std::move(weights), std::move(edges),
                               WeightPolicy::preserve, d.name());
}

inline WeightedOrientedGraph induced_subgraph(const WeightedOrientedGraph& d, VertexSet keep) {
  return delete_vertices(d, d.all() - keep);
}

/// Record of the monomial x_tail * x_head^exponent.
struct MonomialGenerator {
  Vertex tail = 0;
  Vertex head = 0;
  Weight exponent = 1;
  auto operator<=>(const MonomialGenerator&) const = default;
};

inline std::vector<MonomialGenerator> edge_ideal_generators(const WeightedOrientedGraph& d) {
  std::vector<MonomialGenerator> gens;
  gens.reserve(d.size());
  for (const DirectedEdge& e : d.edges()) gens.push_back({e.tail, e.head, d.weight(e.head)});
  return gens;
}

/// `x2*x5^2`; the exponent is omitted when it is 1.
inline std::string format_generator(const WeightedOrientedGraph& d, const MonomialGenerator& g) {
  std::string out = d.label(g.tail) + "*" + d.label(g.head);
  if (g.exponent > 1) out += "^" + std::to_string(g.exponent);
  return out;
}

/// Replaces every weight >= 2 by 2; V+ is unchanged as a set.
inline WeightedOrientedGraph cap_weights(const WeightedOrientedGraph& d) {
  std::vector<Weight> weights(d.weights().begin(), d.weights().end());
  for (Weight& w : weights) w = std::min<Weight>(w, 2);
  std::vector<DirectedEdge> edges(d.edges().begin(), d.edges().end());
  return WeightedOrientedGraph(std::vector<std::string>(d.labels().begin(), d.labels().end()),
                               std::move(weights), std::move(edges), WeightPolicy::preserve,
                               d.name());
}

/// Vertex sets of the connected components, ordered by smallest member.
inline std::vector<VertexSet> component_sets(const SimpleGraph& g) {
  std::vector<VertexSet> out;
  VertexSet unseen = g.all();
  while (!unseen.empty()) {
    VertexSet comp = VertexSet::single(unseen.front());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (Vertex v : frontier) next |= g.neighbors(v);
      frontier = next - comp;
      comp |= frontier;
    }
    out.push_back(comp);
    unseen -= comp;
  }
  return out;
}

inline std::vector<SimpleGraph> connected_components(const SimpleGraph& g) {
  std::vector<SimpleGraph> out;
  for (VertexSet comp : component_sets(g)) out.push_back(g.induced(comp));
  return out;
}

}  // namespace wog
