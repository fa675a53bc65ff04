#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "rigidity/assur.hpp"
#include "rigidity/certificate.hpp"
#include "rigidity/counting.hpp"
#include "rigidity/graph.hpp"
#include "rigidity/numeric.hpp"

namespace rigidity::io {

using Json = nlohmann::json;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Graph file:
//   {"vertices": [{"id": "a", "kind": "inner"|"pinned", "pos": [x, y]}, ...],
//    "edges": [["a", "b"], ...]}
// Ids may be strings or integers. Pin-pin edges are dropped with a warning.
struct GraphDocument {
  PinnedGraph graph;
  /// Present only when every vertex has a position.
  std::optional<Configuration<double>> positions;
  std::vector<std::string> warnings;
};

GraphDocument parse_graph(const Json& doc);
GraphDocument parse_graph_text(const std::string& text);
Json graph_to_json(const PinnedGraph& g, const Configuration<double>* positions = nullptr);

// Linkage file:
//   {"links": [{"id": "L1", "driver": true}, "L2", ...], "ground": "L0",
//    "joints": [{"id": "O1", "incident": ["L0", "L3"]}, ...]}
LinkageSchema parse_linkage(const Json& doc);
LinkageSchema parse_linkage_text(const std::string& text);

/// Positions keyed by vertex id: {"a": [x, y], ...}; every vertex of g must appear.
Configuration<double> parse_configuration(const Json& doc, const PinnedGraph& g);

Json scheme_to_json(const AssurScheme& scheme);
AssurScheme scheme_from_json(const Json& doc);
/// Digraph with one node per component and one edge per cover pair.
std::string scheme_to_dot(const AssurScheme& scheme);

Json certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const Json& doc);

Json code_json(const CanonicalCode& code);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace rigidity::io
