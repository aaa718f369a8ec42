#include "lpa/graph_json.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>

namespace lpa {

using nlohmann::json;

json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges())
    edges.push_back({{"id", e.id}, {"source", g.vertex_name(e.source)}, {"range", g.vertex_name(e.range)}});
  return json{{"vertices", g.vertices()}, {"edges", std::move(edges)}};
}

namespace {

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> allowed,
                         const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) throw GraphFormatError(where + ": unknown field '" + key + "'");
  }
}

const std::string& require_string(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw GraphFormatError(where + ": missing field '" + key + "'");
  if (!it->is_string()) throw GraphFormatError(where + ": field '" + key + "' must be a string");
  return it->get_ref<const std::string&>();
}

}  // namespace

Graph graph_from_json(const json& doc) {
  if (!doc.is_object()) throw GraphFormatError("graph document must be a JSON object");
  reject_unknown_keys(doc, {"vertices", "edges"}, "graph");
  if (!doc.contains("vertices") || !doc["vertices"].is_array())
    throw GraphFormatError("graph: 'vertices' must be an array");
  if (!doc.contains("edges") || !doc["edges"].is_array())
    throw GraphFormatError("graph: 'edges' must be an array");

  std::vector<std::string> vertices;
  std::unordered_map<std::string, std::size_t> index;
  for (const auto& v : doc["vertices"]) {
    if (!v.is_string()) throw GraphFormatError("graph: vertex identifiers must be strings");
    const auto& name = v.get_ref<const std::string&>();
    if (!index.emplace(name, vertices.size()).second)
      throw GraphFormatError("graph: duplicate vertex identifier '" + name + "'");
    vertices.push_back(name);
  }

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (const auto& e : doc["edges"]) {
    const std::string where = "edge #" + std::to_string(k++);
    if (!e.is_object()) throw GraphFormatError(where + ": must be an object");
    reject_unknown_keys(e, {"id", "source", "range"}, where);
    const auto& id = require_string(e, "id", where);
    auto endpoint = [&](const char* key) {
      const auto& name = require_string(e, key, where);
      auto it = index.find(name);
      if (it == index.end())
        throw GraphFormatError(where + ": " + key + " refers to unknown vertex '" + name + "'");
      return it->second;
    };
    edges.push_back({id, endpoint("source"), endpoint("range")});
  }

  try {
    return Graph(std::move(vertices), std::move(edges));
  } catch (const DomainError& err) {
    throw GraphFormatError(std::string("graph: ") + err.what());
  }
}

Graph parse_graph(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& err) {
    throw GraphFormatError(std::string("invalid JSON: ") + err.what());
  }
  return graph_from_json(doc);
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphFormatError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

void save_graph(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw GraphFormatError("cannot write '" + path + "'");
  out << graph_to_json(g).dump(2) << '\n';
}

}  // namespace lpa
