#pragma once

// Shared helpers for the test binaries: fixture loading, small graph
// builders, and a brute-force oracle that shares no search code with the
// library.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>

#include "wog/wog.hpp"

namespace testing {

using namespace wog;

inline std::filesystem::path fixture(const std::string& name) {
  return std::filesystem::path(WOG_FIXTURE_DIR) / (name + ".json");
}

inline WeightedOrientedGraph load_fixture(const std::string& name,
                                          WeightPolicy policy = WeightPolicy::analysis) {
  return load_graph(fixture(name), policy);
}

/// Vertices x1..xn; `arcs` use 1-based numbers; `heavy` maps vertex to weight.
inline WeightedOrientedGraph digraph(std::size_t n, std::vector<std::pair<int, int>> arcs,
                                     std::vector<std::pair<int, std::int64_t>> heavy = {},
                                     WeightPolicy policy = WeightPolicy::analysis) {
  GraphSpec spec;
  spec.name = "test";
  for (std::size_t i = 1; i <= n; ++i) spec.vertices.push_back({"x" + std::to_string(i), 1});
  for (auto [v, w] : heavy) spec.vertices.at(static_cast<std::size_t>(v - 1)).weight = w;
  for (auto [t, h] : arcs) {
    spec.edges.emplace_back("x" + std::to_string(t), "x" + std::to_string(h));
  }
  return build_graph(spec, policy);
}

/// Undirected graph on 0..n-1 from 0-based pairs.
inline SimpleGraph simple(std::size_t n, std::vector<std::pair<int, int>> pairs) {
  std::vector<UndirectedEdge> es;
  for (auto [u, v] : pairs) es.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  return SimpleGraph(n, es);
}

inline SimpleGraph cycle(std::size_t n) {
  std::vector<std::pair<int, int>> p;
  for (std::size_t i = 0; i < n; ++i) p.emplace_back(int(i), int((i + 1) % n));
  return simple(n, p);
}

inline SimpleGraph path(std::size_t n) {
  std::vector<std::pair<int, int>> p;
  for (std::size_t i = 0; i + 1 < n; ++i) p.emplace_back(int(i), int(i + 1));
  return simple(n, p);
}

/// 1-based label set {x..} as a VertexSet over 0-based indices.
inline VertexSet xs(std::initializer_list<int> labels) {
  VertexSet s;
  for (int l : labels) s.insert(static_cast<Vertex>(l - 1));
  return s;
}

/// Orients every edge of `g` from lower to higher index; weights 1.
inline WeightedOrientedGraph orient_up(const SimpleGraph& g) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < g.order(); ++i) labels.push_back("x" + std::to_string(i + 1));
  std::vector<DirectedEdge> arcs;
  for (const UndirectedEdge& e : g.edges()) arcs.push_back({e.u, e.v});
  return WeightedOrientedGraph(labels, std::vector<Weight>(g.order(), 1), arcs);
}

// ---------------------------------------------------------------------------
// Brute-force oracle
// ---------------------------------------------------------------------------

namespace brute {

inline bool covers(const SimpleGraph& g, std::uint64_t c) {
  for (const UndirectedEdge& e : g.edges()) {
    if (((c >> e.u) & 1U) == 0 && ((c >> e.v) & 1U) == 0) return false;
  }
  return true;
}

/// Minimal covers by raw subset scan, in (size, bits) order.
inline std::vector<VertexSet> minimal_covers(const SimpleGraph& g) {
  std::vector<VertexSet> out;
  const std::uint64_t lim = std::uint64_t{1} << g.order();
  for (std::uint64_t c = 0; c < lim; ++c) {
    if (!covers(g, c)) continue;
    bool minimal = true;
    for (std::size_t v = 0; v < g.order() && minimal; ++v) {
      if (((c >> v) & 1U) != 0 && covers(g, c & ~(std::uint64_t{1} << v))) minimal = false;
    }
    if (minimal) out.push_back(VertexSet(c));
  }
  std::sort(out.begin(), out.end(), BySizeThenBits{});
  return out;
}

inline std::size_t tau(const SimpleGraph& g) {
  std::size_t best = g.order();
  const std::uint64_t lim = std::uint64_t{1} << g.order();
  for (std::uint64_t c = 0; c < lim; ++c) {
    if (covers(g, c)) best = std::min<std::size_t>(best, VertexSet(c).size());
  }
  return best;
}

/// Sizes of maximal stable sets.
inline std::vector<std::size_t> maximal_stable_sizes(const SimpleGraph& g) {
  std::vector<std::size_t> out;
  for (VertexSet c : minimal_covers(g)) out.push_back(g.order() - c.size());
  return out;
}

inline bool well_covered(const SimpleGraph& g) {
  const auto s = maximal_stable_sizes(g);
  return std::adjacent_find(s.begin(), s.end(), std::not_equal_to<>()) == s.end();
}

inline bool very_well_covered(const SimpleGraph& g) {
  return g.isolated().empty() && g.order() % 2 == 0 && brute::well_covered(g) &&
         2 * brute::tau(g) == g.order();
}

/// Matching number via Edmonds' algorithm from Boost.
inline std::size_t matching_number(const SimpleGraph& g) {
  using BG = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  BG bg(g.order());
  for (const UndirectedEdge& e : g.edges()) boost::add_edge(e.u, e.v, bg);
  std::vector<boost::graph_traits<BG>::vertex_descriptor> mate(g.order());
  boost::edmonds_maximum_cardinality_matching(bg, &mate[0]);
  return boost::matching_size(bg, &mate[0]);
}

/// All perfect matchings as sorted edge lists, by recursion on the lowest
/// unmatched vertex.
inline void perfect_matchings_rec(const SimpleGraph& g, std::vector<bool>& used,
                                  std::vector<UndirectedEdge>& cur,
                                  std::vector<std::vector<UndirectedEdge>>& out) {
  std::size_t v = 0;
  while (v < g.order() && used[v]) ++v;
  if (v == g.order()) {
    auto m = cur;
    std::sort(m.begin(), m.end());
    out.push_back(m);
    return;
  }
  used[v] = true;
  for (std::size_t u = v + 1; u < g.order(); ++u) {
    if (used[u] || !g.adjacent(Vertex(v), Vertex(u))) continue;
    used[u] = true;
    cur.emplace_back(Vertex(v), Vertex(u));
    perfect_matchings_rec(g, used, cur, out);
    cur.pop_back();
    used[u] = false;
  }
  used[v] = false;
}

inline std::vector<std::vector<UndirectedEdge>> perfect_matchings(const SimpleGraph& g) {
  std::vector<std::vector<UndirectedEdge>> out;
  std::vector<bool> used(g.order(), false);
  std::vector<UndirectedEdge> cur;
  perfect_matchings_rec(g, used, cur, out);
  return out;
}

/// Property (P) straight from the definition, over all vertex quadruples.
inline bool property_p(const SimpleGraph& g, const std::vector<UndirectedEdge>& m) {
  std::vector<Vertex> mate(g.order());
  for (const auto& e : m) {
    mate[e.u] = e.v;
    mate[e.v] = e.u;
  }
  for (Vertex b = 0; b < g.order(); ++b) {
    const Vertex b2 = mate[b];
    for (Vertex a = 0; a < g.order(); ++a) {
      for (Vertex a2 = 0; a2 < g.order(); ++a2) {
        if (g.adjacent(a, b) && g.adjacent(a2, b2) && !g.adjacent(a, a2)) return false;
      }
    }
  }
  return true;
}

/// Simple cycle of length k, by DFS over vertex sequences.
inline bool cycle_of_length(const SimpleGraph& g, std::size_t k) {
  std::vector<Vertex> seq;
  std::function<bool(Vertex)> dfs = [&](Vertex v) -> bool {
    if (seq.size() == k) return g.adjacent(v, seq.front());
    for (Vertex u : g.neighbors(v)) {
      if (u <= seq.front() || std::find(seq.begin(), seq.end(), u) != seq.end()) continue;
      seq.push_back(u);
      if (dfs(u)) return true;
      seq.pop_back();
    }
    return false;
  };
  for (Vertex s = 0; s < g.order(); ++s) {
    seq = {s};
    if (dfs(s)) return true;
  }
  return false;
}

inline std::optional<std::size_t> girth(const SimpleGraph& g) {
  for (std::size_t k = 3; k <= g.order(); ++k) {
    if (cycle_of_length(g, k)) return k;
  }
  return std::nullopt;
}

struct Partition {
  VertexSet l1, l2, l3;
};

/// L1/L2/L3 clause by clause.
inline Partition partition(const WeightedOrientedGraph& d, VertexSet c) {
  Partition p;
  const VertexSet outside = d.all() - c;
  for (Vertex x : c) {
    bool out_outside = false, in_outside = false;
    for (const DirectedEdge& e : d.edges()) {
      if (e.tail == x && outside.contains(e.head)) out_outside = true;
      if (e.head == x && outside.contains(e.tail)) in_outside = true;
    }
    if (out_outside) {
      p.l1.insert(x);
    } else if (in_outside) {
      p.l2.insert(x);
    } else {
      p.l3.insert(x);
    }
  }
  return p;
}

inline bool strong(const WeightedOrientedGraph& d, VertexSet c) {
  const Partition p = partition(d, c);
  for (Vertex x : p.l3) {
    bool witness = false;
    for (const DirectedEdge& e : d.edges()) {
      if (e.head == x && (p.l2 | p.l3).contains(e.tail) && d.weight(e.tail) > 1) witness = true;
    }
    if (!witness) return false;
  }
  return true;
}

/// Strong covers by subset scan, in (size, bits) order.
inline std::vector<VertexSet> strong_covers(const WeightedOrientedGraph& d) {
  const SimpleGraph g = underlying_graph(d);
  std::vector<VertexSet> out;
  const std::uint64_t lim = std::uint64_t{1} << d.order();
  for (std::uint64_t c = 0; c < lim; ++c) {
    if (covers(g, c) && strong(d, VertexSet(c))) out.push_back(VertexSet(c));
  }
  std::sort(out.begin(), out.end(), BySizeThenBits{});
  return out;
}

inline bool unmixed(const WeightedOrientedGraph& d) {
  const auto s = strong_covers(d);
  return std::all_of(s.begin(), s.end(), [&](VertexSet c) { return c.size() == s.front().size(); });
}

}  // namespace brute

/// Seeded random graph on n vertices with edge probability p.
inline SimpleGraph random_simple(Rng& rng, std::size_t n, double p) {
  std::vector<UndirectedEdge> es;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (rng.chance(p)) es.emplace_back(u, v);
    }
  }
  return SimpleGraph(n, es);
}

/// Random orientation and weights (1 or `heavy_weight`) over `g`.
inline WeightedOrientedGraph random_orientation(Rng& rng, const SimpleGraph& g, double heavy_prob,
                                                Weight heavy_weight = 2) {
  std::vector<std::string> labels;
  std::vector<Weight> weights;
  for (std::size_t i = 0; i < g.order(); ++i) {
    labels.push_back("x" + std::to_string(i + 1));
    weights.push_back(rng.chance(heavy_prob) ? heavy_weight : 1);
  }
  std::vector<DirectedEdge> arcs;
  for (const UndirectedEdge& e : g.edges()) {
    arcs.push_back(rng.chance(0.5) ? DirectedEdge{e.u, e.v} : DirectedEdge{e.v, e.u});
  }
  return WeightedOrientedGraph(labels, weights, arcs);
}

}  // namespace testing
