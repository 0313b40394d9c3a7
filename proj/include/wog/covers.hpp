#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "wog/errors.hpp"
#include "wog/graph.hpp"
#include "wog/vertex_set.hpp"

namespace wog {

namespace detail {

inline Vertex densest_candidate(const SimpleGraph& g, VertexSet cand) {
  Vertex best = cand.front();
  std::size_t best_deg = 0;
  bool first = true;
  for (Vertex v : cand) {
    const std::size_t deg = (g.neighbors(v) & cand).size();
    if (first || deg > best_deg) {
      best = v;
      best_deg = deg;
      first = false;
    }
  }
  return best;
}

// Branch on the candidate of highest degree: take it (its candidate
// neighbours drop out) or exclude it. With `maximal_only`, an excluded vertex
// must eventually gain a neighbour in the chosen set, so a branch dies as soon
// as some excluded vertex has no neighbour left in chosen | cand.
template <class Fn>
bool stable_sets(const SimpleGraph& g, VertexSet chosen, VertexSet cand, VertexSet excluded,
                 bool maximal_only, Fn& fn) {
  if (maximal_only) {
    const VertexSet reachable = chosen | cand;
    for (Vertex x : excluded) {
      if (!g.neighbors(x).intersects(reachable)) return true;
    }
  }
  if (cand.empty()) return fn(chosen);
  const Vertex v = densest_candidate(g, cand);
  VertexSet with = chosen;
  with.insert(v);
  if (!stable_sets(g, with, cand - VertexSet::single(v) - g.neighbors(v), excluded, maximal_only,
                   fn)) {
    return false;
  }
  return stable_sets(g, chosen, cand - VertexSet::single(v), excluded | VertexSet::single(v),
                     maximal_only, fn);
}

inline std::size_t max_stable_size(const SimpleGraph& g, VertexSet cand, std::size_t current,
                                   std::size_t& best) {
  if (current + cand.size() <= best) return best;
  if (cand.empty()) {
    best = current;
    return best;
  }
  // A vertex of degree <= 1 in the remaining graph lies in some maximum stable set.
  for (Vertex v : cand) {
    if ((g.neighbors(v) & cand).size() <= 1) {
      return max_stable_size(g, cand - VertexSet::single(v) - g.neighbors(v), current + 1, best);
    }
  }
  const Vertex v = densest_candidate(g, cand);
  max_stable_size(g, cand - VertexSet::single(v) - g.neighbors(v), current + 1, best);
  max_stable_size(g, cand - VertexSet::single(v), current, best);
  return best;
}

}  // namespace detail

/// Visits every stable set of `g` (the empty set included). `fn(VertexSet)`
/// returns false to stop early; the return value reports whether the walk ran
/// to completion.
template <class Fn>
bool for_each_stable_set(const SimpleGraph& g, Fn&& fn) {
  return detail::stable_sets(g, VertexSet{}, g.all(), VertexSet{}, false, fn);
}

/// Visits every maximal stable set of `g`.
template <class Fn>
bool for_each_maximal_stable_set(const SimpleGraph& g, Fn&& fn) {
  return detail::stable_sets(g, VertexSet{}, g.all(), VertexSet{}, true, fn);
}

inline bool is_vertex_cover(const SimpleGraph& g, VertexSet c) {
  g.check_subset(c);
  for (Vertex v : g.all() - c) {
    if (!g.neighbors(v).subset_of(c)) return false;
  }
  return true;
}

inline bool is_vertex_cover(const WeightedOrientedGraph& d, VertexSet c) {
  if (!c.subset_of(d.all())) throw GraphError("vertex set names a vertex outside the graph");
  for (Vertex v : d.all() - c) {
    if (!d.neighbors(v).subset_of(c)) return false;
  }
  return true;
}

/// All minimal vertex covers, sorted by (cardinality, bitset value).
inline std::vector<VertexSet> enumerate_minimal_covers(const SimpleGraph& g,
                                                       std::size_t bound = kDefaultBound) {
  require_bound("minimal cover enumeration", g.order(), bound);
  std::vector<VertexSet> covers;
  for_each_maximal_stable_set(g, [&](VertexSet s) {
    covers.push_back(g.all() - s);
    return true;
  });
  std::sort(covers.begin(), covers.end(), BySizeThenBits{});
  return covers;
}

/// Stability number, exact.
inline std::size_t alpha(const SimpleGraph& g) {
  std::size_t best = 0;
  return detail::max_stable_size(g, g.all(), 0, best);
}

/// Cover number: |V| minus the stability number.
inline std::size_t tau(const SimpleGraph& g, std::size_t bound = kDefaultBound) {
  require_bound("cover number", g.order(), bound);
  return g.order() - alpha(g);
}

/// A vertex cover with its L1/L2/L3 split and, once evaluated, the strong flag.
struct CoverAnalysis {
  VertexSet cover;
  VertexSet l1;
  VertexSet l2;
  VertexSet l3;
  std::optional<bool> strong;
  /// (y, x) per x in L3, y the smallest eligible in-neighbour; filled only when strong.
  std::vector<DirectedEdge> witnesses;
  /// First x in L3 without an eligible in-neighbour; set only when not strong.
  std::optional<Vertex> unwitnessed;
};

/// L1 = cover vertices with an out-neighbour outside C, L2 = the rest with an
/// in-neighbour outside C, L3 = vertices whose whole neighbourhood is in C.
inline CoverAnalysis l_partition(const WeightedOrientedGraph& d, VertexSet c) {
  if (!is_vertex_cover(d, c)) throw GraphError("vertex set is not a vertex cover");
  const VertexSet outside = d.all() - c;
  CoverAnalysis a;
  a.cover = c;
  for (Vertex x : c) {
    if (d.out_neighbors(x).intersects(outside)) {
      a.l1.insert(x);
    } else if (d.in_neighbors(x).intersects(outside)) {
      a.l2.insert(x);
    } else {
      a.l3.insert(x);
    }
  }
  return a;
}

namespace detail {

inline void evaluate_strong(const WeightedOrientedGraph& d, VertexSet heavy, CoverAnalysis& a) {
  const VertexSet eligible = (a.l2 | a.l3) & heavy;
  a.witnesses.clear();
  a.unwitnessed.reset();
  for (Vertex x : a.l3) {
    const VertexSet from = d.in_neighbors(x) & eligible;
    if (from.empty()) {
      a.strong = false;
      a.unwitnessed = x;
      a.witnesses.clear();
      return;
    }
    a.witnesses.push_back({from.front(), x});
  }
  a.strong = true;
}

}  // namespace detail

/// l_partition plus the strong-cover test: every x in L3 must receive an edge
/// from a vertex of weight > 1 lying in L2 or L3.
inline CoverAnalysis analyze_cover(const WeightedOrientedGraph& d, VertexSet c) {
  CoverAnalysis a = l_partition(d, c);
  detail::evaluate_strong(d, d.heavy(), a);
  return a;
}

inline bool is_strong_cover(const WeightedOrientedGraph& d, VertexSet c) {
  return *analyze_cover(d, c).strong;
}

/// Visits the analysis of every strong vertex cover, in no particular order.
/// Covers are walked as complements of stable sets.
template <class Fn>
void for_each_strong_cover(const WeightedOrientedGraph& d, std::size_t bound, Fn&& fn) {
  require_bound("strong cover enumeration", d.order(), bound);
  const SimpleGraph g = underlying_graph(d);
  const VertexSet all = d.all();
  const VertexSet heavy = d.heavy();
  for_each_stable_set(g, [&](VertexSet stable) {
    const VertexSet c = all - stable;
    VertexSet l3;
    for (Vertex x : c) {
      if (!g.neighbors(x).intersects(stable)) l3.insert(x);
    }
    // Cheap rejection: an L3 vertex with no heavy in-neighbour inside C.
    for (Vertex x : l3) {
      if ((d.in_neighbors(x) & heavy & c).empty()) return true;
    }
    CoverAnalysis a;
    a.cover = c;
    for (Vertex x : c) {
      if (d.out_neighbors(x).intersects(stable)) {
        a.l1.insert(x);
      } else if (d.in_neighbors(x).intersects(stable)) {
        a.l2.insert(x);
      } else {
        a.l3.insert(x);
      }
    }
    detail::evaluate_strong(d, heavy, a);
    if (*a.strong) fn(a);
    return true;
  });
}

/// Every strong vertex cover, sorted by (cardinality, bitset value).
inline std::vector<CoverAnalysis> enumerate_strong_covers(const WeightedOrientedGraph& d,
                                                          std::size_t bound = kDefaultBound) {
  std::vector<CoverAnalysis> out;
  for_each_strong_cover(d, bound, [&](const CoverAnalysis& a) { out.push_back(a); });
  std::sort(out.begin(), out.end(), [](const CoverAnalysis& x, const CoverAnalysis& y) {
    return BySizeThenBits{}(x.cover, y.cover);
  });
  return out;
}

}  // namespace wog
