#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <unordered_map>
#include <vector>

#include "wog/covers.hpp"
#include "wog/errors.hpp"
#include "wog/graph.hpp"
#include "wog/vertex_set.hpp"

namespace wog {

inline constexpr Vertex kNoMate = std::numeric_limits<Vertex>::max();

/// A set of pairwise disjoint edges of a particular graph.
class Matching {
 public:
  Matching() = default;

  /// Validates that `edges` are edges of `g` and pairwise disjoint.
  Matching(const SimpleGraph& g, std::vector<UndirectedEdge> edges)
      : edges_(std::move(edges)), mate_(g.order(), kNoMate) {
    std::sort(edges_.begin(), edges_.end());
    for (const UndirectedEdge& e : edges_) {
      if (!g.adjacent(e.u, e.v)) {
        throw GraphError("{" + std::to_string(e.u) + "," + std::to_string(e.v) +
                         "} is not an edge of the graph");
      }
      if (mate_[e.u] != kNoMate || mate_[e.v] != kNoMate) {
        throw GraphError("matching edges are not pairwise disjoint");
      }
      mate_[e.u] = e.v;
      mate_[e.v] = e.u;
      covered_.insert(e.u);
      covered_.insert(e.v);
    }
    perfect_ = covered_ == g.all();
  }

  std::span<const UndirectedEdge> edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }
  bool perfect() const { return perfect_; }
  VertexSet covered() const { return covered_; }
  std::optional<bool> property_p() const { return property_p_; }
  void set_property_p(bool holds) { property_p_ = holds; }

  /// Partner of `v`, or kNoMate.
  Vertex mate(Vertex v) const { return v < mate_.size() ? mate_[v] : kNoMate; }
  bool contains(Vertex a, Vertex b) const { return mate(a) == b && b != kNoMate; }

  bool operator==(const Matching& o) const { return edges_ == o.edges_; }

 private:
  std::vector<UndirectedEdge> edges_;
  std::vector<Vertex> mate_;
  VertexSet covered_;
  bool perfect_ = false;
  std::optional<bool> property_p_;
};

namespace detail {

class MatchingSearch {
 public:
  explicit MatchingSearch(const SimpleGraph& g) : g_(g) {}

  std::size_t best(VertexSet rem) {
    rem = strip(rem);
    if (rem.size() < 2) return 0;
    if (auto it = memo_.find(rem.bits()); it != memo_.end()) return it->second;
    const Vertex v = rem.front();
    const VertexSet rest = rem - VertexSet::single(v);
    const std::size_t ceiling = rem.size() / 2;
    std::size_t result = 0;
    for (Vertex u : g_.neighbors(v) & rest) {
      result = std::max(result, 1 + best(rest - VertexSet::single(u)));
      if (result == ceiling) break;
    }
    if (result < ceiling && result < (rest.size() / 2)) result = std::max(result, best(rest));
    memo_.emplace(rem.bits(), result);
    return result;
  }

  std::vector<UndirectedEdge> reconstruct(VertexSet rem) {
    std::vector<UndirectedEdge> out;
    for (;;) {
      rem = strip(rem);
      const std::size_t target = best(rem);
      if (target == 0) return out;
      const Vertex v = rem.front();
      const VertexSet rest = rem - VertexSet::single(v);
      bool matched = false;
      for (Vertex u : g_.neighbors(v) & rest) {
        if (1 + best(rest - VertexSet::single(u)) == target) {
          out.emplace_back(v, u);
          rem = rest - VertexSet::single(u);
          matched = true;
          break;
        }
      }
      if (!matched) rem = rest;
    }
  }

 private:
  // Vertices with no neighbour left can never be matched.
  VertexSet strip(VertexSet rem) const {
    VertexSet out = rem;
    for (Vertex v : rem) {
      if (!g_.neighbors(v).intersects(rem)) out.erase(v);
    }
    return out;
  }

  const SimpleGraph& g_;
  std::unordered_map<std::uint64_t, std::size_t> memo_;
};

template <class Fn>
bool perfect_matchings(const SimpleGraph& g, VertexSet rem, std::vector<UndirectedEdge>& chosen,
                       Fn& fn) {
  if (rem.empty()) return fn(Matching(g, chosen));
  const Vertex v = rem.front();
  const VertexSet rest = rem - VertexSet::single(v);
  for (Vertex u : g.neighbors(v) & rest) {
    chosen.emplace_back(v, u);
    const bool go_on = perfect_matchings(g, rest - VertexSet::single(u), chosen, fn);
    chosen.pop_back();
    if (!go_on) return false;
  }
  return true;
}

}  // namespace detail

/// A maximum-cardinality matching, exact on general graphs (memoized branch
/// and bound over the lowest unmatched vertex).
inline Matching maximum_matching(const SimpleGraph& g) {
  detail::MatchingSearch search(g);
  return Matching(g, search.reconstruct(g.all()));
}

/// ν(G).
inline std::size_t matching_number(const SimpleGraph& g) {
  detail::MatchingSearch search(g);
  return search.best(g.all());
}

/// Visits perfect matchings in lexicographic order of partner choices;
/// `fn(const Matching&)` returns false to stop.
template <class Fn>
bool for_each_perfect_matching(const SimpleGraph& g, std::size_t bound, Fn&& fn) {
  require_bound("perfect matching enumeration", g.order(), bound);
  if (g.order() % 2 != 0) return true;
  std::vector<UndirectedEdge> chosen;
  return detail::perfect_matchings(g, g.all(), chosen, fn);
}

inline std::vector<Matching> enumerate_perfect_matchings(const SimpleGraph& g,
                                                         std::size_t bound = kDefaultBound) {
  std::vector<Matching> out;
  for_each_perfect_matching(g, bound, [&](const Matching& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

/// {a,b}, {a2,b2} in E(G) with {b,b2} in P but {a,a2} not an edge (a == a2 included).
struct PropertyPViolation {
  Vertex a = 0;
  Vertex b = 0;
  Vertex a2 = 0;
  Vertex b2 = 0;
  bool operator==(const PropertyPViolation&) const = default;
};

struct PropertyPCheck {
  bool holds = true;
  std::optional<PropertyPViolation> violation;
};

inline void require_perfect(const SimpleGraph& g, const Matching& p) {
  if (p.covered() != g.all() || !p.perfect()) throw GraphError("matching is not perfect");
  for (const UndirectedEdge& e : p.edges()) {
    if (!g.adjacent(e.u, e.v)) throw GraphError("matching edge is not an edge of the graph");
  }
}

/// Property (P): for every P-edge {b,b2} (both orientations), every
/// a in N(b) and a2 in N(b2) are adjacent.
inline PropertyPCheck has_property_p(const SimpleGraph& g, const Matching& p) {
  require_perfect(g, p);
  for (const UndirectedEdge& e : p.edges()) {
    for (auto [b, b2] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
      for (Vertex a : g.neighbors(b)) {
        for (Vertex a2 : g.neighbors(b2)) {
          if (a == a2 || !g.adjacent(a, a2)) return {false, PropertyPViolation{a, b, a2, b2}};
        }
      }
    }
  }
  return {true, std::nullopt};
}

inline bool is_konig(const SimpleGraph& g, std::size_t bound = kDefaultBound) {
  return tau(g, bound) == matching_number(g);
}

inline bool is_well_covered(const SimpleGraph& g, std::size_t bound = kDefaultBound) {
  require_bound("well-covered recognition", g.order(), bound);
  std::optional<std::size_t> size;
  return for_each_maximal_stable_set(g, [&](VertexSet s) {
    if (!size) size = s.size();
    return *size == s.size();
  });
}

/// Well-covered, no isolated vertices, and |V| = 2τ.
inline bool is_very_well_covered(const SimpleGraph& g, std::size_t bound = kDefaultBound) {
  require_bound("very well-covered recognition", g.order(), bound);
  if (!g.isolated().empty() || g.order() % 2 != 0) return false;
  if (2 * tau(g, bound) != g.order()) return false;
  return is_well_covered(g, bound);
}

/// Length of a shortest cycle; nullopt stands for infinity (forests).
inline std::optional<std::size_t> girth(const SimpleGraph& g) {
  std::optional<std::size_t> best;
  const std::size_t n = g.order();
  std::vector<std::size_t> dist(n);
  std::vector<Vertex> parent(n);
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), std::numeric_limits<std::size_t>::max());
    dist[s] = 0;
    parent[s] = kNoMate;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      if (best && 2 * dist[u] >= *best) break;
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] == std::numeric_limits<std::size_t>::max()) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (w != parent[u]) {
          const std::size_t len = dist[u] + dist[w] + 1;
          if (!best || len < *best) best = len;
        }
      }
    }
  }
  return best;
}

namespace detail {

inline bool closes_cycle(const SimpleGraph& g, Vertex start, Vertex last, VertexSet used,
                         std::size_t remaining) {
  if (remaining == 0) return g.adjacent(last, start);
  // only vertices above `start` may appear, so each cycle is rooted at its minimum
  const VertexSet next = g.neighbors(last) - used - VertexSet::range(start + 1);
  for (Vertex v : next) {
    VertexSet with = used;
    with.insert(v);
    if (closes_cycle(g, start, v, with, remaining - 1)) return true;
  }
  return false;
}

}  // namespace detail

/// Whether G contains a (not necessarily induced) cycle of exactly k vertices.
inline bool has_cycle_of_length(const SimpleGraph& g, std::size_t k) {
  if (k < 3) throw GraphError("cycle length must be at least 3");
  if (k > g.order()) return false;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (detail::closes_cycle(g, s, s, VertexSet::single(s), k - 1)) return true;
  }
  return false;
}

/// A 4-cycle a-b-c-d-a with {a,b}, {c,d} in P.
struct FourCycle {
  Vertex a = 0;
  Vertex b = 0;
  Vertex c = 0;
  Vertex d = 0;
  bool operator==(const FourCycle&) const = default;
};

inline std::vector<FourCycle> four_cycles_with_two_matching_edges(const SimpleGraph& g,
                                                                  const Matching& p) {
  require_perfect(g, p);
  std::vector<FourCycle> out;
  const auto edges = p.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const Vertex a = edges[i].u;
      const Vertex b = edges[i].v;
      for (auto [c, d] : {std::pair{edges[j].u, edges[j].v}, std::pair{edges[j].v, edges[j].u}}) {
        if (g.adjacent(b, c) && g.adjacent(d, a)) out.push_back({a, b, c, d});
      }
    }
  }
  return out;
}

}  // namespace wog
