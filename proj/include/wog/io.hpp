#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "wog/errors.hpp"
#include "wog/graph.hpp"

namespace wog {

/// Unreadable or schema-violating graph document.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Graph documents look like
//
//   {"name": "fig1_left",
//    "vertices": [{"id": "x1", "weight": 1}, ...],
//    "edges": [["x1", "x4"], ...]}
//
// with edges directed [tail, head]. `name` is optional and a missing
// `weight` means 1.

inline GraphSpec spec_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw FormatError("graph document must be a JSON object");
  for (const auto& [key, _] : doc.items()) {
    if (key != "name" && key != "vertices" && key != "edges") {
      throw FormatError("unknown field '" + key + "'");
    }
  }
  GraphSpec spec;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw FormatError("'name' must be a string");
    spec.name = doc["name"].get<std::string>();
  }
  if (!doc.contains("vertices") || !doc["vertices"].is_array()) {
    throw FormatError("'vertices' must be an array");
  }
  for (const auto& v : doc["vertices"]) {
    if (!v.is_object() || !v.contains("id") || !v["id"].is_string()) {
      throw FormatError("each vertex needs a string 'id'");
    }
    VertexSpec vs{v["id"].get<std::string>(), 1};
    if (v.contains("weight")) {
      if (!v["weight"].is_number_integer()) {
        throw FormatError("weight of '" + vs.id + "' must be an integer");
      }
      vs.weight = v["weight"].get<std::int64_t>();
    }
    spec.vertices.push_back(std::move(vs));
  }
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) throw FormatError("'edges' must be an array");
    for (const auto& e : doc["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
        throw FormatError("each edge must be a [tail, head] pair of vertex ids");
      }
      spec.edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
  }
  return spec;
}

/// Parse errors carry nlohmann's "line L, column C" position text.
inline GraphSpec parse_graph_spec(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(e.what());
  }
  return spec_from_json(doc);
}

inline WeightedOrientedGraph parse_graph(const std::string& text,
                                         WeightPolicy policy = WeightPolicy::analysis) {
  return build_graph(parse_graph_spec(text), policy);
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline WeightedOrientedGraph load_graph(const std::filesystem::path& path,
                                        WeightPolicy policy = WeightPolicy::analysis) {
  return parse_graph(read_file(path), policy);
}

inline nlohmann::json graph_to_json(const WeightedOrientedGraph& d) {
  nlohmann::json doc;
  doc["name"] = d.name();
  doc["vertices"] = nlohmann::json::array();
  for (Vertex v = 0; v < d.order(); ++v) {
    doc["vertices"].push_back({{"id", d.label(v)}, {"weight", d.weight(v)}});
  }
  doc["edges"] = nlohmann::json::array();
  for (const DirectedEdge& e : d.edges()) {
    doc["edges"].push_back({d.label(e.tail), d.label(e.head)});
  }
  return doc;
}

inline std::string serialize_graph(const WeightedOrientedGraph& d) {
  return graph_to_json(d).dump(2) + "\n";
}

inline void save_graph(const WeightedOrientedGraph& d, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write " + path.string());
  out << serialize_graph(d);
}

}  // namespace wog
