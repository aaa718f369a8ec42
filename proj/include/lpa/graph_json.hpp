#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"
#include "lpa/graph.hpp"

namespace lpa {

/// Malformed graph document: bad JSON, schema violation, or a reference to
/// an undeclared vertex.
class GraphFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// {"vertices": ["v1", ...], "edges": [{"id": "e1", "source": "v1", "range": "v2"}, ...]}
// Unknown keys are rejected at both levels.
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& doc);

Graph parse_graph(const std::string& text);
Graph load_graph(const std::string& path);
void save_graph(const Graph& g, const std::string& path);

}  // namespace lpa
