#pragma once

#include <string>
#include <variant>

#include <nlohmann/json.hpp>

#include "wog/covers.hpp"
#include "wog/criteria.hpp"
#include "wog/graph.hpp"
#include "wog/matching.hpp"
#include "wog/oracle.hpp"

namespace wog {

// JSON renderings used by the command-line reports. Vertices are always
// written as labels of the graph the object belongs to.

using nlohmann::json;

inline json labels_json(const WeightedOrientedGraph& d, VertexSet s) {
  json out = json::array();
  for (Vertex v : s) out.push_back(d.label(v));
  return out;
}

inline json edges_json(const WeightedOrientedGraph& d, std::span<const UndirectedEdge> edges) {
  json out = json::array();
  for (const UndirectedEdge& e : edges) out.push_back({d.label(e.u), d.label(e.v)});
  return out;
}

inline json girth_json(const std::optional<std::size_t>& g) {
  return g ? json(*g) : json("infinity");
}

inline json hypotheses_json(const Hypotheses& h) {
  return {{"konig", h.konig},
          {"no357", h.no357},
          {"no35", h.no35},
          {"no4cycles", h.no4cycles},
          {"girth_gt7", h.girth_gt7},
          {"very_well_covered", h.very_well_covered},
          {"isolated_free", h.isolated_free},
          {"girth", girth_json(h.girth)}};
}

inline json witness_json(const WeightedOrientedGraph& d, const Witness& w) {
  return std::visit(
      [&](const auto& x) -> json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, NoPerfectMatching>) {
          return {{"kind", "no_perfect_matching"},
                  {"matching_number", x.matching_number},
                  {"order", x.order}};
        } else if constexpr (std::is_same_v<T, PropertyPViolation>) {
          return {{"kind", "property_p"},
                  {"a", d.label(x.a)},
                  {"b", d.label(x.b)},
                  {"a_prime", d.label(x.a2)},
                  {"b_prime", d.label(x.b2)}};
        } else if constexpr (std::is_same_v<T, FourCycle>) {
          return {{"kind", "four_cycle"},
                  {"cycle", {d.label(x.a), d.label(x.b), d.label(x.c), d.label(x.d)}}};
        } else {
          return {{"kind", "condition2"},
                  {"a", d.label(x.a)},
                  {"b_prime", d.label(x.b_prime)},
                  {"b", d.label(x.b)},
                  {"offending", d.label(x.offending)}};
        }
      },
      w);
}

inline json decision_json(const WeightedOrientedGraph& d, const Decision& dec) {
  json failures = json::array();
  for (const MatchingFailure& f : dec.failures) {
    failures.push_back({{"matching", edges_json(d, f.matching)}, {"reason", witness_json(d, f.reason)}});
  }
  json components = json::array();
  for (const Decision& c : dec.components) components.push_back(decision_json(d, c));
  json out = {{"verdict", to_string(dec.verdict)},
              {"theorem", dec.theorem},
              {"hypotheses", hypotheses_json(dec.hypotheses)},
              {"witness", dec.witness ? witness_json(d, *dec.witness) : json(nullptr)},
              {"trace",
               {{"scope", labels_json(d, dec.scope)},
                {"certificate", edges_json(d, dec.certificate)},
                {"matchings_examined", dec.matchings_examined},
                {"failures", failures},
                {"notes", dec.notes}}}};
  if (!components.empty()) out["components"] = components;
  return out;
}

inline json cover_json(const WeightedOrientedGraph& d, const CoverAnalysis& a) {
  json witnesses = json::array();
  for (const DirectedEdge& e : a.witnesses) witnesses.push_back({d.label(e.tail), d.label(e.head)});
  json out = {{"cover", labels_json(d, a.cover)},
              {"size", a.cover.size()},
              {"l1", labels_json(d, a.l1)},
              {"l2", labels_json(d, a.l2)},
              {"l3", labels_json(d, a.l3)},
              {"strong", a.strong ? json(*a.strong) : json(nullptr)},
              {"witnesses", witnesses}};
  if (a.unwitnessed) out["unwitnessed"] = d.label(*a.unwitnessed);
  return out;
}

inline json histogram_json(const std::map<std::size_t, std::size_t>& h) {
  json out = json::object();
  for (const auto& [size, count] : h) out[std::to_string(size)] = count;
  return out;
}

inline json digest_json(const WeightedOrientedGraph& d) {
  json weights = json::object();
  for (Vertex v = 0; v < d.order(); ++v) weights[d.label(v)] = d.weight(v);
  return {{"name", d.name()},
          {"vertices", d.order()},
          {"edges", d.size()},
          {"weights", weights},
          {"digest", graph_digest(d)}};
}

inline json cross_check_json(const WeightedOrientedGraph& d, const CrossCheckReport& r) {
  json agreements = json::array();
  for (const Agreement& a : r.agreements) {
    agreements.push_back({{"pair", a.pair}, {"applicable", a.applicable}, {"agree", a.agree}});
  }
  json anomalies = json::array();
  for (const Anomaly& a : r.anomalies) {
    anomalies.push_back({{"invariant", a.invariant}, {"detail", a.detail}});
  }
  return {{"instance", digest_json(d)},
          {"oracle_unmixed", r.oracle.unmixed},
          {"strong_cover_histogram", histogram_json(r.oracle.histogram)},
          {"criteria_unmixed", decision_json(d, r.unmixed)},
          {"criteria_cm", decision_json(d, r.cm)},
          {"agreement", agreements},
          {"anomalies", anomalies},
          {"observations", r.observations}};
}

// ---------------------------------------------------------------------------
// Plain-text renderings
// ---------------------------------------------------------------------------

inline std::string set_text(const WeightedOrientedGraph& d, VertexSet s) {
  std::string out = "{";
  for (Vertex v : s) out += (out.size() > 1 ? "," : "") + d.label(v);
  return out + "}";
}

inline std::string edges_text(const WeightedOrientedGraph& d, std::span<const UndirectedEdge> es) {
  std::string out = "{";
  for (const UndirectedEdge& e : es) {
    out += (out.size() > 1 ? " " : "") + ("{" + d.label(e.u) + "," + d.label(e.v) + "}");
  }
  return out + "}";
}

inline std::string witness_text(const WeightedOrientedGraph& d, const Witness& w) {
  return std::visit(
      [&](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, NoPerfectMatching>) {
          return "no perfect matching (matching number " + std::to_string(x.matching_number) +
                 ", " + std::to_string(x.order) + " vertices)";
        } else if constexpr (std::is_same_v<T, PropertyPViolation>) {
          return "property (P) violated: {" + d.label(x.a) + "," + d.label(x.b) + "}, {" +
                 d.label(x.a2) + "," + d.label(x.b2) + "} are edges, {" + d.label(x.b) + "," +
                 d.label(x.b2) + "} in P, but {" + d.label(x.a) + "," + d.label(x.a2) +
                 "} is not an edge";
        } else if constexpr (std::is_same_v<T, FourCycle>) {
          return "4-cycle " + d.label(x.a) + "-" + d.label(x.b) + "-" + d.label(x.c) + "-" +
                 d.label(x.d) + " carries two matching edges";
        } else {
          return "condition (2) violated: a=" + d.label(x.a) + " (weight > 1), b'=" +
                 d.label(x.b_prime) + " in N+(a), partner b=" + d.label(x.b) + ", but " +
                 d.label(x.offending) + " in N(b) is not in N+(a)";
        }
      },
      w);
}

inline std::string decision_text(const WeightedOrientedGraph& d, const Decision& dec,
                                 const std::string& indent = "  ") {
  std::string out = indent + "verdict: " + to_string(dec.verdict) + "\n";
  out += indent + "by: " + dec.theorem + "\n";
  if (dec.witness) out += indent + "witness: " + witness_text(d, *dec.witness) + "\n";
  if (!dec.certificate.empty()) {
    out += indent + "certificate: " + edges_text(d, dec.certificate) + "\n";
  }
  for (const std::string& n : dec.notes) out += indent + "note: " + n + "\n";
  return out;
}

}  // namespace wog
