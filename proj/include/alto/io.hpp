#pragma once

// File formats: the PogDocument JSON schema (stable key order n/edges/arcs/
// name, 0-based indices, arcs as [tail, head]) and DOT export with plain
// edges drawn without arrowheads.

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "alto/pog.hpp"

namespace alto {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PogDocument {
  int n = 0;
  std::vector<VertexPair> edges;
  std::vector<VertexPair> arcs;
  std::optional<std::string> name;
};

inline PogDocument to_document(const Pog& h, std::optional<std::string> name = std::nullopt) {
  return {h.vertex_count(), h.edges(), h.arcs(), std::move(name)};
}

// Validates through the Pog constructor; throws ParseError on bad indices or
// conflicting pair roles.
inline Pog to_pog(const PogDocument& doc) {
  try {
    return Pog(doc.n, doc.edges, doc.arcs);
  } catch (const std::exception& e) {
    throw ParseError(std::string("invalid graph document: ") + e.what());
  }
}

inline std::string serialize(const PogDocument& doc) {
  nlohmann::ordered_json j;
  j["n"] = doc.n;
  j["edges"] = nlohmann::ordered_json::array();
  for (const auto& [u, v] : doc.edges) j["edges"].push_back({u, v});
  j["arcs"] = nlohmann::ordered_json::array();
  for (const auto& [t, h] : doc.arcs) j["arcs"].push_back({t, h});
  if (doc.name) j["name"] = *doc.name;
  return j.dump(2) + "\n";
}

inline PogDocument parse_pog_document(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what());
  }
  if (!j.is_object()) throw ParseError("document root must be a JSON object");
  PogDocument doc;
  if (!j.contains("n") || !j["n"].is_number_integer())
    throw ParseError("field \"n\" must be an integer vertex count");
  doc.n = j["n"].get<int>();
  auto read_pairs = [&](const char* key, std::vector<VertexPair>& out) {
    if (!j.contains(key)) return;
    if (!j[key].is_array()) throw ParseError(std::string("field \"") + key + "\" must be an array");
    int at = 0;
    for (const auto& item : j[key]) {
      if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
          !item[1].is_number_integer())
        throw ParseError(std::string(key) + "[" + std::to_string(at) +
                         "]: expected a pair of integers");
      out.emplace_back(item[0].get<int>(), item[1].get<int>());
      ++at;
    }
  };
  read_pairs("edges", doc.edges);
  read_pairs("arcs", doc.arcs);
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw ParseError("field \"name\" must be a string");
    doc.name = j["name"].get<std::string>();
  }
  to_pog(doc); // surface constructor errors as parse errors
  return doc;
}

// DOT text with edges undirected (no arrowheads) and arcs directed.
inline std::string export_dot(const Pog& h, const std::string& name = "pog") {
  std::ostringstream os;
  std::string safe;
  for (char c : name)
    if (c != '"' && c != '\\' && c != '\n') safe += c;
  os << "digraph \"" << safe << "\" {\n";
  os << "  node [shape=circle];\n";
  for (VertexId v = 0; v < h.vertex_count(); ++v) os << "  " << v << ";\n";
  for (const auto& [u, v] : h.edges()) os << "  " << u << " -> " << v << " [dir=none];\n";
  for (const auto& [t, hd] : h.arcs()) os << "  " << t << " -> " << hd << ";\n";
  os << "}\n";
  return os.str();
}

} // namespace alto
