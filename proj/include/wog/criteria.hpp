#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "wog/covers.hpp"
#include "wog/errors.hpp"
#include "wog/graph.hpp"
#include "wog/matching.hpp"
#include "wog/vertex_set.hpp"

namespace wog {

enum class Verdict { holds, fails, not_applicable };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "true";
    case Verdict::fails: return "false";
    case Verdict::not_applicable: return "not_applicable";
  }
  return "?";
}

/// Gate checks on the underlying graph.
struct Hypotheses {
  bool konig = false;
  bool no357 = false;  ///< no 3-, 5- or 7-cycles
  bool no35 = false;
  bool no4cycles = false;
  bool girth_gt7 = false;
  bool very_well_covered = false;
  bool isolated_free = false;
  std::optional<std::size_t> girth;  ///< nullopt = infinity
  bool operator==(const Hypotheses&) const = default;
};

inline Hypotheses applicability(const SimpleGraph& g, std::size_t bound = kDefaultBound) {
  Hypotheses h;
  h.girth = girth(g);
  const bool c3 = h.girth && *h.girth == 3;
  const bool c4 = has_cycle_of_length(g, 4);
  const bool c5 = has_cycle_of_length(g, 5);
  const bool c7 = has_cycle_of_length(g, 7);
  h.no35 = !c3 && !c5;
  h.no357 = h.no35 && !c7;
  h.no4cycles = !c4;
  h.girth_gt7 = !h.girth || *h.girth > 7;
  h.konig = is_konig(g, bound);
  h.isolated_free = g.isolated().empty();
  h.very_well_covered = is_very_well_covered(g, bound);
  return h;
}

inline Hypotheses applicability(const WeightedOrientedGraph& d, std::size_t bound = kDefaultBound) {
  return applicability(underlying_graph(d), bound);
}

/// a in V+, b2 in N+(a), {b,b2} in P, but `offending` in N(b) \ N+(a).
struct Condition2Violation {
  Vertex a = 0;
  Vertex b_prime = 0;
  Vertex b = 0;
  Vertex offending = 0;
  bool operator==(const Condition2Violation&) const = default;
};

struct Condition2Check {
  bool holds = true;
  std::optional<Condition2Violation> violation;
};

/// For every heavy a, every b' in N+(a) and its P-partner b: N(b) ⊆ N+(a).
inline Condition2Check check_condition2(const WeightedOrientedGraph& d, const Matching& p) {
  require_perfect(underlying_graph(d), p);
  for (Vertex a : d.heavy()) {
    const VertexSet out = d.out_neighbors(a);
    for (Vertex b_prime : out) {
      const Vertex b = p.mate(b_prime);
      const VertexSet extra = d.neighbors(b) - out;
      if (!extra.empty()) return {false, Condition2Violation{a, b_prime, b, extra.front()}};
    }
  }
  return {true, std::nullopt};
}

struct NoPerfectMatching {
  std::size_t matching_number = 0;
  std::size_t order = 0;
  bool operator==(const NoPerfectMatching&) const = default;
};

using Witness = std::variant<NoPerfectMatching, PropertyPViolation, FourCycle, Condition2Violation>;

/// Why one perfect matching failed to certify Cohen-Macaulayness.
struct MatchingFailure {
  std::vector<UndirectedEdge> matching;
  Witness reason;
};

/// A verdict with the result that produced it and a checkable trace.
/// Vertex indices always refer to the graph passed to the decider.
struct Decision {
  Verdict verdict = Verdict::not_applicable;
  std::string theorem = "none";
  Hypotheses hypotheses;
  VertexSet scope;
  std::vector<UndirectedEdge> certificate;
  std::optional<Witness> witness;
  std::vector<MatchingFailure> failures;
  std::size_t matchings_examined = 0;
  std::vector<std::string> notes;
  std::vector<Decision> components;
};

struct DecisionOptions {
  std::size_t bound = kDefaultBound;
  /// Only the first perfect matching is tried by the CM decider.
  bool first_matching_only = false;
};

inline constexpr std::size_t kMaxRecordedFailures = 16;

namespace detail {

inline Vertex lift(Vertex v, const std::vector<Vertex>& map) { return map.at(v); }

inline UndirectedEdge lift(UndirectedEdge e, const std::vector<Vertex>& map) {
  return {map.at(e.u), map.at(e.v)};
}

inline Witness lift(const Witness& w, const std::vector<Vertex>& map) {
  return std::visit(
      [&](const auto& x) -> Witness {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, NoPerfectMatching>) {
          return x;
        } else if constexpr (std::is_same_v<T, PropertyPViolation>) {
          return PropertyPViolation{map.at(x.a), map.at(x.b), map.at(x.a2), map.at(x.b2)};
        } else if constexpr (std::is_same_v<T, FourCycle>) {
          return FourCycle{map.at(x.a), map.at(x.b), map.at(x.c), map.at(x.d)};
        } else {
          return Condition2Violation{map.at(x.a), map.at(x.b_prime), map.at(x.b),
                                     map.at(x.offending)};
        }
      },
      w);
}

inline std::vector<UndirectedEdge> lift(std::span<const UndirectedEdge> edges,
                                        const std::vector<Vertex>& map) {
  std::vector<UndirectedEdge> out;
  for (const UndirectedEdge& e : edges) out.push_back(lift(e, map));
  std::sort(out.begin(), out.end());
  return out;
}

inline void lift_in_place(Decision& d, const std::vector<Vertex>& map) {
  VertexSet scope;
  for (Vertex v : d.scope) scope.insert(map.at(v));
  d.scope = scope;
  d.certificate = lift(d.certificate, map);
  if (d.witness) d.witness = lift(*d.witness, map);
  for (MatchingFailure& f : d.failures) {
    f.matching = lift(f.matching, map);
    f.reason = lift(f.reason, map);
  }
}

inline Decision unmixed_connected(const WeightedOrientedGraph& h, const DecisionOptions& opt) {
  const SimpleGraph g = underlying_graph(h);
  Decision out;
  out.scope = h.all();
  out.hypotheses = applicability(g, opt.bound);
  const Hypotheses& hyp = out.hypotheses;
  if (!hyp.konig && !hyp.no357 && !hyp.very_well_covered) {
    out.notes.push_back(
        "underlying graph is not Konig, not very well-covered, and has a 3-, 5- or 7-cycle; "
        "no structural criterion applies");
    return out;
  }
  out.theorem = hyp.konig ? "konig-unmixed" : "cycle-free-unmixed";
  const Matching m = maximum_matching(g);
  out.matchings_examined = 1;
  if (!m.perfect()) {
    out.verdict = Verdict::fails;
    out.witness = NoPerfectMatching{m.size(), g.order()};
    out.notes.push_back("condition (1) fails: no perfect matching");
    return out;
  }
  const PropertyPCheck pp = has_property_p(g, m);
  if (!pp.holds) {
    out.verdict = Verdict::fails;
    out.witness = *pp.violation;
    out.failures.push_back({std::vector<UndirectedEdge>(m.edges().begin(), m.edges().end()),
                            *pp.violation});
    out.notes.push_back(
        "condition (1) fails: a perfect matching lacks property (P); by Favaron's theorem "
        "property (P) holds for every perfect matching or for none");
    return out;
  }
  out.notes.push_back(
      "perfect matching with property (P) found, so G is very well-covered and every perfect "
      "matching has (P) (Favaron); an unmixed D satisfies condition (2) on any such matching, "
      "so condition (2) is tested on this one only");
  const Condition2Check c2 = check_condition2(h, m);
  if (!c2.holds) {
    out.verdict = Verdict::fails;
    out.witness = *c2.violation;
    out.failures.push_back({std::vector<UndirectedEdge>(m.edges().begin(), m.edges().end()),
                            *c2.violation});
    out.notes.push_back("condition (2) fails");
    return out;
  }
  out.verdict = Verdict::holds;
  out.certificate.assign(m.edges().begin(), m.edges().end());
  return out;
}

inline Decision cm_connected(const WeightedOrientedGraph& raw, const DecisionOptions& opt) {
  const WeightedOrientedGraph h = cap_weights(raw);
  const SimpleGraph g = underlying_graph(h);
  Decision out;
  out.scope = h.all();
  out.hypotheses = applicability(g, opt.bound);
  const Hypotheses& hyp = out.hypotheses;
  if (!hyp.konig && !hyp.no35) {
    out.notes.push_back(
        "underlying graph is not Konig and has a 3- or 5-cycle; no structural criterion applies");
    return out;
  }
  out.theorem = hyp.konig ? "konig-cm" : "cycle-free-cm";
  std::optional<Witness> first_reason;
  for_each_perfect_matching(g, opt.bound, [&](const Matching& m) {
    ++out.matchings_examined;
    std::optional<Witness> reason;
    if (PropertyPCheck pp = has_property_p(g, m); !pp.holds) {
      reason = *pp.violation;
    } else if (auto cycles = four_cycles_with_two_matching_edges(g, m); !cycles.empty()) {
      reason = cycles.front();
    } else if (Condition2Check c2 = check_condition2(h, m); !c2.holds) {
      reason = *c2.violation;
    }
    if (!reason) {
      out.certificate.assign(m.edges().begin(), m.edges().end());
      return false;
    }
    if (!first_reason) first_reason = reason;
    if (out.failures.size() < kMaxRecordedFailures) {
      out.failures.push_back({std::vector<UndirectedEdge>(m.edges().begin(), m.edges().end()),
                              *reason});
    }
    return !opt.first_matching_only;
  });
  if (!out.certificate.empty()) {
    out.verdict = Verdict::holds;
    out.notes.push_back(
        "perfect matching satisfies property (P), has no 4-cycle with two of its edges, and "
        "satisfies condition (2)");
    return out;
  }
  out.verdict = Verdict::fails;
  if (out.matchings_examined == 0) {
    out.witness = NoPerfectMatching{matching_number(g), g.order()};
    out.notes.push_back("condition (1) fails: no perfect matching");
  } else {
    out.witness = *first_reason;
    out.notes.push_back("no perfect matching satisfies conditions (1) and (2); " +
                        std::to_string(out.matchings_examined) + " examined");
    if (opt.first_matching_only) {
      out.notes.push_back("first-matching-only: later perfect matchings were not tried");
    }
  }
  return out;
}

// Splits off isolated vertices, decides every non-trivial component and
// conjoins: any failure fails, otherwise any refusal refuses.
template <class Decide>
Decision per_component(const WeightedOrientedGraph& d, const DecisionOptions& opt,
                       Decide&& decide) {
  const SimpleGraph g = underlying_graph(d);
  Decision out;
  out.scope = d.all();
  out.hypotheses = applicability(g, opt.bound);
  const VertexSet isolated = g.isolated();
  std::vector<VertexSet> comps;
  for (VertexSet c : component_sets(g)) {
    if (c.size() > 1) comps.push_back(c);
  }
  std::vector<std::string> isolated_notes;
  if (!isolated.empty()) {
    std::string labels;
    for (Vertex v : isolated) labels += (labels.empty() ? "" : ",") + d.label(v);
    isolated_notes.push_back("isolated vertices {" + labels + "} are unmixed and Cohen-Macaulay; "
                             "removed before deciding");
  }
  if (comps.empty()) {
    out.verdict = Verdict::holds;
    out.theorem = "isolated-vertices";
    out.notes = isolated_notes;
    return out;
  }
  std::vector<Decision> decided;
  for (VertexSet c : comps) {
    Decision sub = decide(induced_subgraph(d, c), opt);
    lift_in_place(sub, c.to_vector());
    decided.push_back(std::move(sub));
  }
  if (decided.size() == 1 && isolated.empty()) return std::move(decided.front());

  out.notes = isolated_notes;
  out.notes.push_back("decided per connected component (" + std::to_string(decided.size()) +
                      " non-trivial)");
  const Decision* failing = nullptr;
  bool refused = false;
  for (const Decision& sub : decided) {
    out.matchings_examined += sub.matchings_examined;
    if (sub.verdict == Verdict::fails && failing == nullptr) failing = &sub;
    if (sub.verdict == Verdict::not_applicable) refused = true;
  }
  if (failing != nullptr) {
    out.verdict = Verdict::fails;
    out.theorem = failing->theorem;
    out.witness = failing->witness;
  } else if (refused) {
    out.verdict = Verdict::not_applicable;
  } else {
    out.verdict = Verdict::holds;
    out.theorem = decided.front().theorem;
    for (const Decision& sub : decided) {
      if (sub.theorem != out.theorem) out.theorem = "per-component";
      out.certificate.insert(out.certificate.end(), sub.certificate.begin(), sub.certificate.end());
    }
    std::sort(out.certificate.begin(), out.certificate.end());
  }
  out.components = std::move(decided);
  return out;
}

}  // namespace detail

/// Structural unmixedness decider, gated on G being Konig, free of 3-, 5-
/// and 7-cycles, or very well-covered.
inline Decision decide_unmixed(const WeightedOrientedGraph& d, const DecisionOptions& opt = {}) {
  require_bound("unmixed decision", d.order(), opt.bound);
  return detail::per_component(d, opt, detail::unmixed_connected);
}

/// Structural Cohen-Macaulay decider, gated on G being Konig or free of 3-
/// and 5-cycles. Weights are capped at 2 first.
inline Decision decide_cm(const WeightedOrientedGraph& d, const DecisionOptions& opt = {}) {
  require_bound("Cohen-Macaulay decision", d.order(), opt.bound);
  return detail::per_component(d, opt, detail::cm_connected);
}

}  // namespace wog
