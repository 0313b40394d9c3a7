#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "wog/covers.hpp"
#include "wog/criteria.hpp"
#include "wog/errors.hpp"
#include "wog/graph.hpp"
#include "wog/matching.hpp"
#include "wog/vertex_set.hpp"

namespace wog {

// ---------------------------------------------------------------------------
// Ground truth by exhaustive enumeration
// ---------------------------------------------------------------------------

struct StrongCoverSummary {
  bool unmixed = true;
  std::map<std::size_t, std::size_t> histogram;  ///< cardinality -> number of strong covers
};

/// I(D) is unmixed exactly when all strong vertex covers have one cardinality.
inline StrongCoverSummary unmixed_by_strong_covers(const WeightedOrientedGraph& d,
                                                   std::size_t bound = kDefaultBound) {
  StrongCoverSummary s;
  for_each_strong_cover(d, bound, [&](const CoverAnalysis& a) { ++s.histogram[a.cover.size()]; });
  s.unmixed = s.histogram.size() <= 1;
  return s;
}

/// C is a cover and every member has a neighbour outside C.
inline bool is_minimal_cover(const SimpleGraph& g, VertexSet c) {
  if (!is_vertex_cover(g, c)) return false;
  for (Vertex v : c) {
    if (g.neighbors(v).subset_of(c)) return false;
  }
  return true;
}

/// Smallest (in cover order) strong cover that is not minimal, if any.
inline std::optional<VertexSet> non_minimal_strong_cover(const WeightedOrientedGraph& d,
                                                         std::size_t bound = kDefaultBound) {
  const SimpleGraph g = underlying_graph(d);
  std::optional<VertexSet> found;
  for_each_strong_cover(d, bound, [&](const CoverAnalysis& a) {
    if (!is_minimal_cover(g, a.cover) && (!found || BySizeThenBits{}(a.cover, *found))) {
      found = a.cover;
    }
  });
  return found;
}

inline bool strong_covers_are_minimal(const WeightedOrientedGraph& d,
                                      std::size_t bound = kDefaultBound) {
  return !non_minimal_strong_cover(d, bound).has_value();
}

/// Combinatorial Cohen-Macaulayness of I(G) for Konig or 3-/5-cycle-free G:
/// every component is an isolated vertex or has a perfect matching with
/// property (P) and no 4-cycle carrying two of its edges.
inline Verdict cm_graph_combinatorial(const SimpleGraph& g, std::size_t bound = kDefaultBound) {
  require_bound("combinatorial CM check", g.order(), bound);
  const bool c35 = has_cycle_of_length(g, 3) || has_cycle_of_length(g, 5);
  if (c35 && !is_konig(g, bound)) return Verdict::not_applicable;
  for (VertexSet comp : component_sets(g)) {
    if (comp.size() == 1) continue;
    const SimpleGraph h = g.induced(comp);
    bool ok = false;
    for_each_perfect_matching(h, bound, [&](const Matching& m) {
      ok = has_property_p(h, m).holds && four_cycles_with_two_matching_edges(h, m).empty();
      return !ok;
    });
    if (!ok) return Verdict::fails;
  }
  return Verdict::holds;
}

// ---------------------------------------------------------------------------
// Seeded instance generation
// ---------------------------------------------------------------------------

enum class Family { whisker, bipartite, girth_constrained, unrestricted };

inline const char* to_string(Family f) {
  switch (f) {
    case Family::whisker: return "whisker";
    case Family::bipartite: return "bipartite";
    case Family::girth_constrained: return "girth_constrained";
    case Family::unrestricted: return "unrestricted";
  }
  return "?";
}

inline std::optional<Family> parse_family(std::string_view name) {
  for (Family f : {Family::whisker, Family::bipartite, Family::girth_constrained,
                   Family::unrestricted}) {
    if (name == to_string(f)) return f;
  }
  return std::nullopt;
}

class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RandomConfig {
  Family family = Family::unrestricted;
  std::size_t n = 8;
  double edge_density = 0.5;
  double weight_prob = 0.4;
  std::size_t min_girth = 8;  ///< girth_constrained only
  std::size_t max_retries = 32;
};

/// mt19937_64 plus distribution code of our own, so a seed means the same
/// graph on every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, n).
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % n;
  }

  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  bool chance(double p) { return unit() < p; }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Base graph on vertices 0..m-1 plus a pendant vertex m+i on every vertex i.
inline std::vector<UndirectedEdge> attach_whiskers(std::size_t m,
                                                   std::vector<UndirectedEdge> base) {
  for (std::size_t i = 0; i < m; ++i) {
    base.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(m + i));
  }
  return base;
}

namespace detail {

inline std::vector<UndirectedEdge> random_edges(Rng& rng, std::size_t n, double density) {
  std::vector<UndirectedEdge> out;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (rng.chance(density)) out.emplace_back(u, v);
    }
  }
  return out;
}

inline std::size_t distance(const std::vector<VertexSet>& adj, Vertex from, Vertex to) {
  VertexSet seen = VertexSet::single(from);
  VertexSet frontier = seen;
  for (std::size_t d = 0; !frontier.empty(); ++d) {
    if (frontier.contains(to)) return d;
    VertexSet next;
    for (Vertex v : frontier) next |= adj[v];
    frontier = next - seen;
    seen |= frontier;
  }
  return std::numeric_limits<std::size_t>::max();
}

// Adds random edges only where the new cycle would have length >= min_girth.
inline std::vector<UndirectedEdge> girth_edges(Rng& rng, std::size_t n, double density,
                                               std::size_t min_girth) {
  std::vector<UndirectedEdge> pairs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  rng.shuffle(pairs);
  std::vector<VertexSet> adj(n);
  std::vector<UndirectedEdge> out;
  for (const UndirectedEdge& e : pairs) {
    if (!rng.chance(density)) continue;
    const std::size_t d = distance(adj, e.u, e.v);
    if (d != std::numeric_limits<std::size_t>::max() && d + 1 < min_girth) continue;
    adj[e.u].insert(e.v);
    adj[e.v].insert(e.u);
    out.push_back(e);
  }
  return out;
}

inline WeightedOrientedGraph orient(Rng& rng, std::size_t n,
                                    const std::vector<UndirectedEdge>& edges, double weight_prob,
                                    std::string name) {
  std::vector<std::string> labels;
  std::vector<Weight> weights;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back("x" + std::to_string(i + 1));
    weights.push_back(rng.chance(weight_prob) ? 2 : 1);
  }
  std::vector<DirectedEdge> arcs;
  for (const UndirectedEdge& e : edges) {
    arcs.push_back(rng.chance(0.5) ? DirectedEdge{e.u, e.v} : DirectedEdge{e.v, e.u});
  }
  return WeightedOrientedGraph(std::move(labels), std::move(weights), std::move(arcs),
                               WeightPolicy::analysis, std::move(name));
}

}  // namespace detail

/// A reproducible random weighted oriented graph; a pure function of (config, seed).
///
/// whisker: a random base on n/2 vertices with a pendant edge on each, so
/// 2*(n/2) vertices in total. bipartite: halves of sizes ceil(n/2) and
/// floor(n/2), with a planted matching between them half of the time.
/// girth_constrained: every cycle has length >= min_girth; half of the time
/// the girth-constrained graph is a base on n/2 vertices with whiskers.
/// Orientations are uniform; each vertex gets weight 2 with weight_prob,
/// then sources and sinks are normalized to 1.
inline WeightedOrientedGraph random_instance(const RandomConfig& cfg, std::uint64_t seed) {
  if (cfg.n > kMaxVertices) throw GenerationError("n exceeds the maximum graph order");
  const std::string name = std::string(to_string(cfg.family)) + "-" + std::to_string(seed);
  for (std::size_t attempt = 0; attempt <= cfg.max_retries; ++attempt) {
    Rng rng(splitmix64(seed + attempt * 0xA24BAED4963EE407ULL));
    std::size_t n = cfg.n;
    std::vector<UndirectedEdge> edges;
    switch (cfg.family) {
      case Family::whisker: {
        if (cfg.n < 2) throw GenerationError("whisker family needs n >= 2");
        const std::size_t m = cfg.n / 2;
        edges = attach_whiskers(m, detail::random_edges(rng, m, cfg.edge_density));
        n = 2 * m;
        break;
      }
      case Family::bipartite: {
        const std::size_t left = (n + 1) / 2;
        const bool planted = rng.chance(0.5);
        for (Vertex a = 0; a < left; ++a) {
          for (Vertex b = static_cast<Vertex>(left); b < n; ++b) {
            const bool plant = planted && b - left == a;
            if (plant || rng.chance(cfg.edge_density)) edges.emplace_back(a, b);
          }
        }
        break;
      }
      case Family::girth_constrained: {
        const bool whiskered = n >= 4 && rng.chance(0.5);
        const std::size_t m = whiskered ? n / 2 : n;
        edges = detail::girth_edges(rng, m, cfg.edge_density, cfg.min_girth);
        if (whiskered) {
          edges = attach_whiskers(m, std::move(edges));
          n = 2 * m;
        }
        break;
      }
      case Family::unrestricted:
        edges = detail::random_edges(rng, n, cfg.edge_density);
        break;
    }
    WeightedOrientedGraph d = detail::orient(rng, n, edges, cfg.weight_prob, name);
    if (cfg.family == Family::girth_constrained) {
      const auto gi = girth(underlying_graph(d));
      if (gi && *gi < cfg.min_girth) continue;
    }
    return d;
  }
  throw GenerationError("no instance with girth >= " + std::to_string(cfg.min_girth) + " after " +
                        std::to_string(cfg.max_retries + 1) + " attempts");
}

// ---------------------------------------------------------------------------
// Cross-checking criteria against the oracle
// ---------------------------------------------------------------------------

struct Agreement {
  std::string pair;
  bool applicable = false;
  bool agree = true;
};

struct Anomaly {
  std::string invariant;
  std::string detail;
};

struct CrossCheckReport {
  std::string digest;
  std::size_t order = 0;
  std::size_t edges = 0;
  StrongCoverSummary oracle;
  Decision unmixed;
  Decision cm;
  std::vector<Agreement> agreements;
  std::vector<Anomaly> anomalies;
  std::vector<std::string> observations;
  /// Names of invariants whose hypotheses held and were therefore exercised.
  std::vector<std::string> exercised;

  bool ok() const { return anomalies.empty(); }
  bool agrees() const {
    return std::all_of(agreements.begin(), agreements.end(),
                       [](const Agreement& a) { return !a.applicable || a.agree; });
  }
  bool exercised_invariant(std::string_view name) const {
    return std::find(exercised.begin(), exercised.end(), name) != exercised.end();
  }
};

struct CrossCheckOptions {
  std::size_t bound = kDefaultBound;
  /// Seed for the inflated-weight copy used by the weight-cap invariant.
  std::uint64_t inflate_seed = 0;
  /// Perfect matchings examined when looking for matching-dependent conditions.
  std::size_t matching_sample = 64;
};

/// FNV-1a over a canonical rendering of labels, weights and edges.
inline std::string graph_digest(const WeightedOrientedGraph& d) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&](std::string_view s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 0x100000001b3ULL;
    }
    h ^= 0xff;
    h *= 0x100000001b3ULL;
  };
  for (Vertex v = 0; v < d.order(); ++v) {
    mix(d.label(v));
    mix(std::to_string(d.weight(v)));
  }
  for (const DirectedEdge& e : d.edges()) {
    mix(std::to_string(e.tail));
    mix(std::to_string(e.head));
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) out[static_cast<std::size_t>(i)] = kHex[h & 0xF];
  return out;
}

/// Copy of `d` with every weight > 1 replaced by a seeded value in [3, 9].
inline WeightedOrientedGraph inflate_weights(const WeightedOrientedGraph& d, std::uint64_t seed) {
  Rng rng(splitmix64(seed));
  std::vector<Weight> weights(d.weights().begin(), d.weights().end());
  for (Weight& w : weights) {
    if (w > 1) w = static_cast<Weight>(3 + rng.below(7));
  }
  return WeightedOrientedGraph(std::vector<std::string>(d.labels().begin(), d.labels().end()),
                               std::move(weights),
                               std::vector<DirectedEdge>(d.edges().begin(), d.edges().end()),
                               WeightPolicy::preserve, d.name());
}

namespace detail {

inline std::string set_text(const WeightedOrientedGraph& d, VertexSet s) {
  std::string out = "{";
  for (Vertex v : s) out += (out.size() > 1 ? "," : "") + d.label(v);
  return out + "}";
}

inline std::string bool_text(bool b) { return b ? "true" : "false"; }

// Lemma-level consequences that every certifying matching P of a very
// well-covered graph must satisfy.
inline void check_certificate(const WeightedOrientedGraph& d, const SimpleGraph& g,
                              const std::vector<UndirectedEdge>& cert, bool unmixed_certificate,
                              const char* origin, CrossCheckReport& r) {
  if (cert.empty()) return;
  std::vector<Vertex> mate(g.order(), kNoMate);
  for (const UndirectedEdge& e : cert) {
    mate[e.u] = e.v;
    mate[e.v] = e.u;
  }
  auto fail = [&](const std::string& inv, const std::string& detail) {
    r.anomalies.push_back({inv, std::string(origin) + ": " + detail});
  };
  r.exercised.push_back("no-common-neighbour");
  r.exercised.push_back("partners-of-common-neighbours");
  r.exercised.push_back("partner-neighbourhood-inclusion");
  for (const UndirectedEdge& e : cert) {
    // no vertex is adjacent to both ends of a P-edge
    if (g.neighbors(e.u).intersects(g.neighbors(e.v))) {
      fail("no-common-neighbour", "P-edge {" + d.label(e.u) + "," + d.label(e.v) +
                                      "} has a common neighbour");
    }
  }
  for (Vertex a = 0; a < g.order(); ++a) {
    const std::vector<Vertex> nb = g.neighbors(a).to_vector();
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        const Vertex p1 = mate[nb[i]];
        const Vertex p2 = mate[nb[j]];
        if (p1 != kNoMate && p2 != kNoMate && g.adjacent(p1, p2)) {
          fail("partners-of-common-neighbours",
               "partners of " + d.label(nb[i]) + " and " + d.label(nb[j]) + " (both adjacent to " +
                   d.label(a) + ") are adjacent");
        }
      }
      const Vertex partner = mate[nb[i]];
      if (partner != kNoMate && !g.neighbors(partner).subset_of(g.neighbors(a))) {
        fail("partner-neighbourhood-inclusion",
             "N(" + d.label(partner) + ") is not inside N(" + d.label(a) + ")");
      }
    }
  }
  if (!unmixed_certificate) return;
  // partner of an out-neighbour of V+ receives no edge from V+
  r.exercised.push_back("heavy-in-neighbour-exclusion");
  const VertexSet heavy = d.heavy();
  const VertexSet heavy_out = d.out_neighbors(heavy);
  for (const UndirectedEdge& e : cert) {
    for (auto [c, c2] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
      if (heavy_out.contains(c2) && d.in_neighbors(c).intersects(heavy)) {
        fail("heavy-in-neighbour-exclusion",
             d.label(c) + " has a heavy in-neighbour although its partner " + d.label(c2) +
                 " lies in N+(V+)");
      }
    }
  }
}

}  // namespace detail

/// Runs oracle and criteria on `d` and evaluates every cross-module
/// invariant. Disagreements are reported, never thrown.
inline CrossCheckReport cross_check(const WeightedOrientedGraph& d,
                                    const CrossCheckOptions& opt = {}) {
  require_bound("cross check", d.order(), opt.bound);
  CrossCheckReport r;
  r.digest = graph_digest(d);
  r.order = d.order();
  r.edges = d.size();

  const SimpleGraph g = underlying_graph(d);
  const DecisionOptions dopt{opt.bound, false};
  r.oracle = unmixed_by_strong_covers(d, opt.bound);
  r.unmixed = decide_unmixed(d, dopt);
  r.cm = decide_cm(d, dopt);
  const Hypotheses& hyp = r.unmixed.hypotheses;
  auto fail = [&](const std::string& inv, const std::string& detail) {
    r.anomalies.push_back({inv, detail});
  };
  auto as_bool = [](Verdict v) { return v == Verdict::holds; };

  // criteria vs strong-cover oracle
  {
    Agreement a{"unmixed:criteria-vs-oracle", r.unmixed.verdict != Verdict::not_applicable, true};
    if (a.applicable) {
      r.exercised.push_back("unmixed-equivalence");
      a.agree = as_bool(r.unmixed.verdict) == r.oracle.unmixed;
      if (!a.agree) {
        fail("unmixed-equivalence", "criteria say " + std::string(to_string(r.unmixed.verdict)) +
                                        " (" + r.unmixed.theorem + "), strong covers say " +
                                        detail::bool_text(r.oracle.unmixed));
      }
    }
    r.agreements.push_back(a);
  }

  // CM implies unmixed
  if (r.cm.verdict == Verdict::holds) {
    r.exercised.push_back("cm-implies-unmixed");
    if (r.unmixed.verdict != Verdict::holds || !r.oracle.unmixed) {
      fail("cm-implies-unmixed", "cm=true but unmixed=" +
                                     std::string(to_string(r.unmixed.verdict)) +
                                     ", oracle=" + detail::bool_text(r.oracle.unmixed));
    }
  }

  // unmixed <=> CM for Konig graphs without 4-cycles or girth > 7
  {
    Agreement a{"unmixed-vs-cm", (hyp.konig && hyp.no4cycles) || hyp.girth_gt7, true};
    if (a.applicable) {
      r.exercised.push_back("unmixed-cm-equivalence");
      a.agree = r.unmixed.verdict == r.cm.verdict;
      if (!a.agree) {
        fail("unmixed-cm-equivalence", "unmixed=" + std::string(to_string(r.unmixed.verdict)) +
                                           " cm=" + to_string(r.cm.verdict));
      }
    }
    r.agreements.push_back(a);
  }

  // CM(D) <=> unmixed(D) and CM(I(G)), for Konig or 3-/5-cycle-free G
  const Verdict graph_cm = cm_graph_combinatorial(g, opt.bound);
  {
    Agreement a{"cm:criteria-vs-unmixed-and-graph-cm",
                (hyp.konig || hyp.no35) && graph_cm != Verdict::not_applicable, true};
    if (a.applicable) {
      r.exercised.push_back("cm-decomposition");
      const bool expected = r.oracle.unmixed && graph_cm == Verdict::holds;
      a.agree = as_bool(r.cm.verdict) == expected && r.cm.verdict != Verdict::not_applicable;
      if (!a.agree) {
        fail("cm-decomposition", "cm=" + std::string(to_string(r.cm.verdict)) +
                                     " but oracle unmixed=" + detail::bool_text(r.oracle.unmixed) +
                                     " and graph cm=" + to_string(graph_cm));
      }
    }
    r.agreements.push_back(a);
  }

  // weight capping and inflation leave every verdict unchanged
  {
    r.exercised.push_back("weight-cap-invariance");
    for (const auto& [tag, variant] :
         {std::pair{"capped", cap_weights(d)}, std::pair{"inflated", inflate_weights(d, opt.inflate_seed)}}) {
      const Verdict cm2 = decide_cm(variant, dopt).verdict;
      const Verdict un2 = decide_unmixed(variant, dopt).verdict;
      const bool or2 = unmixed_by_strong_covers(variant, opt.bound).unmixed;
      if (cm2 != r.cm.verdict || un2 != r.unmixed.verdict || or2 != r.oracle.unmixed) {
        fail("weight-cap-invariance",
             std::string(tag) + " weights changed a verdict: cm " + to_string(r.cm.verdict) +
                 "->" + to_string(cm2) + ", unmixed " + to_string(r.unmixed.verdict) + "->" +
                 to_string(un2) + ", oracle " + detail::bool_text(r.oracle.unmixed) + "->" +
                 detail::bool_text(or2));
      }
    }
  }

  // necessary conditions for CM
  if (r.cm.verdict == Verdict::holds) {
    r.exercised.push_back("strong-covers-minimal");
    if (auto c = non_minimal_strong_cover(d, opt.bound)) {
      fail("strong-covers-minimal", "strong cover " + detail::set_text(d, *c) + " is not minimal");
    }
    if (hyp.konig && hyp.isolated_free && g.order() > 0) {
      r.exercised.push_back("degree-one-vertex");
      bool leaf = false;
      for (Vertex v = 0; v < g.order(); ++v) leaf = leaf || g.degree(v) == 1;
      if (!leaf) fail("degree-one-vertex", "cm=true, Konig, no isolated vertices, no leaf");
    }
  }
  if (graph_cm == Verdict::holds && hyp.konig && g.size() > 0) {
    r.exercised.push_back("graph-cm-degree-one");
    bool leaf = false;
    for (Vertex v = 0; v < g.order(); ++v) leaf = leaf || g.degree(v) == 1;
    if (!leaf) fail("graph-cm-degree-one", "I(G) CM and Konig with edges, but no leaf");
  }

  // lemma-level consequences on certifying matchings
  if (r.unmixed.verdict == Verdict::holds) {
    detail::check_certificate(d, g, r.unmixed.certificate, true, "unmixed certificate", r);
  }
  if (r.cm.verdict == Verdict::holds) {
    detail::check_certificate(d, g, r.cm.certificate, false, "cm certificate", r);
  }

  // internal consistency of the oracle
  const bool well_covered = is_well_covered(g, opt.bound);
  {
    r.exercised.push_back("strong-cover-characterization");
    bool l3_empty = true;
    for_each_strong_cover(d, opt.bound, [&](const CoverAnalysis& a) {
      l3_empty = l3_empty && a.l3.empty();
    });
    if (r.oracle.unmixed != (well_covered && l3_empty)) {
      fail("strong-cover-characterization",
           "oracle unmixed=" + detail::bool_text(r.oracle.unmixed) + " but well-covered=" +
               detail::bool_text(well_covered) + " and all L3 empty=" + detail::bool_text(l3_empty));
    }
  }
  if (d.heavy().empty()) {
    r.exercised.push_back("unit-weights-well-covered");
    if (r.oracle.unmixed != well_covered) {
      fail("unit-weights-well-covered", "all weights 1, oracle=" +
                                            detail::bool_text(r.oracle.unmixed) +
                                            " well-covered=" + detail::bool_text(well_covered));
    }
  }
  {
    r.exercised.push_back("minimal-covers-are-strong");
    for (VertexSet c : enumerate_minimal_covers(g, opt.bound)) {
      if (!is_strong_cover(d, c)) {
        fail("minimal-covers-are-strong", "minimal cover " + detail::set_text(d, c) + " is not strong");
        break;
      }
    }
  }

  // graph-level structure
  {
    r.exercised.push_back("favaron");
    bool any_pm = false, some_p = false, all_p = true;
    for_each_perfect_matching(g, opt.bound, [&](const Matching& m) {
      any_pm = true;
      const bool p = has_property_p(g, m).holds;
      some_p = some_p || p;
      all_p = all_p && p;
      return true;
    });
    const bool b = some_p;
    const bool c = any_pm && all_p;
    if (hyp.very_well_covered != b || b != c) {
      fail("favaron", "very well-covered=" + detail::bool_text(hyp.very_well_covered) +
                          ", some PM with (P)=" + detail::bool_text(b) +
                          ", all PMs with (P)=" + detail::bool_text(c));
    }
    if (hyp.very_well_covered && !hyp.konig) {
      fail("very-well-covered-is-konig", "very well-covered graph is not Konig");
    }
    if (hyp.isolated_free && (hyp.no357 || hyp.konig)) {
      r.exercised.push_back("well-covered-iff-very-well-covered");
      if (well_covered != hyp.very_well_covered) {
        fail("well-covered-iff-very-well-covered",
             "well-covered=" + detail::bool_text(well_covered) +
                 " very well-covered=" + detail::bool_text(hyp.very_well_covered));
      }
    }
    if (matching_number(g) > tau(g, opt.bound)) fail("nu-le-tau", "matching number exceeds tau");
    if ((hyp.girth && *hyp.girth == 3) != has_cycle_of_length(g, 3)) {
      fail("girth-three-iff-triangle", "girth and triangle test disagree");
    }

    // does the choice of perfect matching matter for the 4-cycle or (2) test?
    if (some_p) {
      std::optional<bool> four, cond2;
      bool four_varies = false, cond2_varies = false;
      std::size_t seen = 0;
      for_each_perfect_matching(g, opt.bound, [&](const Matching& m) {
        const bool f = four_cycles_with_two_matching_edges(g, m).empty();
        const bool c2 = check_condition2(d, m).holds;
        if (four && *four != f) four_varies = true;
        if (cond2 && *cond2 != c2) cond2_varies = true;
        four = f;
        cond2 = c2;
        return ++seen < opt.matching_sample;
      });
      if (four_varies) {
        r.observations.push_back(
            "4-cycle condition differs between perfect matchings of the same graph");
      }
      if (cond2_varies) {
        r.observations.push_back("condition (2) differs between perfect matchings");
        if (r.oracle.unmixed) {
          fail("condition2-matching-independence",
               "D is unmixed yet condition (2) fails on some perfect matching with (P)");
        }
      }
    }
  }
  return r;
}

/// Greedily deletes vertices while `still_bad` keeps holding; returns the
/// smallest instance reached.
inline WeightedOrientedGraph shrink_counterexample(
    WeightedOrientedGraph d, const std::function<bool(const WeightedOrientedGraph&)>& still_bad) {
  bool progress = true;
  while (progress && d.order() > 0) {
    progress = false;
    for (Vertex v = 0; v < d.order(); ++v) {
      WeightedOrientedGraph smaller = delete_vertices(d, VertexSet::single(v));
      if (still_bad(smaller)) {
        d = std::move(smaller);
        progress = true;
        break;
      }
    }
  }
  return d;
}

// ---------------------------------------------------------------------------
// Fuzz campaigns
// ---------------------------------------------------------------------------

struct FuzzConfig {
  Family family = Family::whisker;
  std::size_t count = 100;
  std::uint64_t seed = 1;
  std::size_t max_n = 10;
  std::size_t min_n = 2;
  std::size_t min_girth = 8;
  std::size_t bound = kFuzzBound;
  unsigned workers = 0;  ///< 0 = hardware concurrency
};

struct FuzzRecord {
  std::uint64_t seed = 0;
  Family family = Family::whisker;
  std::size_t n = 0;
  std::size_t edges = 0;
  bool oracle_unmixed = false;
  Verdict unmixed = Verdict::not_applicable;
  Verdict cm = Verdict::not_applicable;
  bool agreement = true;
  std::vector<Anomaly> anomalies;
  std::vector<std::string> observations;
  std::vector<std::string> exercised;
  std::optional<WeightedOrientedGraph> counterexample;  ///< shrunk, when anomalies exist

  /// `seed=.. family=.. n=.. edges=.. oracle=.. unmixed=.. cm=.. agreement=..`
  std::string line() const {
    return "seed=" + std::to_string(seed) + " family=" + to_string(family) +
           " n=" + std::to_string(n) + " edges=" + std::to_string(edges) +
           " oracle=" + (oracle_unmixed ? "true" : "false") + " unmixed=" + to_string(unmixed) +
           " cm=" + to_string(cm) + " agreement=" + (agreement ? "yes" : "no") +
           " anomalies=" + std::to_string(anomalies.size());
  }
};

struct CampaignSummary {
  std::vector<FuzzRecord> records;

  std::size_t failures() const {
    return static_cast<std::size_t>(std::count_if(
        records.begin(), records.end(), [](const FuzzRecord& r) { return !r.anomalies.empty(); }));
  }
  bool ok() const { return failures() == 0; }
};

/// Instance seed and configuration for the i-th instance of a campaign.
inline std::pair<std::uint64_t, RandomConfig> campaign_instance(const FuzzConfig& cfg,
                                                                std::size_t index) {
  const std::uint64_t seed = splitmix64(cfg.seed * 0x9E3779B97F4A7C15ULL + index);
  Rng rng(seed ^ 0x5DEECE66DULL);
  RandomConfig rc;
  rc.family = cfg.family;
  rc.min_girth = cfg.min_girth;
  const std::size_t lo = std::max<std::size_t>(cfg.min_n, cfg.family == Family::whisker ? 2 : 1);
  const std::size_t hi = std::max(lo, cfg.max_n);
  rc.n = lo + rng.below(hi - lo + 1);
  rc.edge_density = 0.2 + 0.6 * rng.unit();
  rc.weight_prob = 0.2 + 0.5 * rng.unit();
  return {seed, rc};
}

inline FuzzRecord fuzz_one(const FuzzConfig& cfg, std::size_t index) {
  const auto [seed, rc] = campaign_instance(cfg, index);
  const WeightedOrientedGraph d = random_instance(rc, seed);
  const CrossCheckOptions copt{cfg.bound, seed, 64};
  const CrossCheckReport rep = cross_check(d, copt);
  FuzzRecord rec;
  rec.seed = seed;
  rec.family = cfg.family;
  rec.n = d.order();
  rec.edges = d.size();
  rec.oracle_unmixed = rep.oracle.unmixed;
  rec.unmixed = rep.unmixed.verdict;
  rec.cm = rep.cm.verdict;
  rec.agreement = rep.agrees();
  rec.anomalies = rep.anomalies;
  rec.observations = rep.observations;
  rec.exercised = rep.exercised;
  if (!rep.ok()) {
    const std::string first = rep.anomalies.front().invariant;
    rec.counterexample = shrink_counterexample(d, [&](const WeightedOrientedGraph& s) {
      const CrossCheckReport sr = cross_check(s, copt);
      return std::any_of(sr.anomalies.begin(), sr.anomalies.end(),
                         [&](const Anomaly& a) { return a.invariant == first; });
    });
  }
  return rec;
}

/// Runs cross_check over `count` seeded instances; records come back in index order.
inline CampaignSummary run_campaign(const FuzzConfig& cfg) {
  CampaignSummary out;
  out.records.resize(cfg.count);
  unsigned workers = cfg.workers != 0 ? cfg.workers : std::max(1U, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(cfg.count, 1)));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < cfg.count; i = next++) {
      try {
        out.records[i] = fuzz_one(cfg, i);
      } catch (const std::exception& e) {
        FuzzRecord& rec = out.records[i];
        rec.seed = campaign_instance(cfg, i).first;
        rec.family = cfg.family;
        rec.agreement = false;
        rec.anomalies.push_back({"instance-error", e.what()});
      }
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();
  }
  return out;
}

}  // namespace wog
