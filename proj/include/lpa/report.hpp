#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "lpa/classifier.hpp"
#include "lpa/graph.hpp"
#include "lpa/graph_monoid.hpp"
#include "lpa/ktheory.hpp"

namespace lpa {

inline constexpr int kJsonSchemaVersion = 1;

/// JSON number when it fits in 64 bits, decimal string otherwise.
nlohmann::json json_integer(const Integer& x);
nlohmann::json json_matrix(const IntMatrix& m);

struct InvariantReport {
  std::vector<std::string> vertex_names;
  std::size_t edge_count = 0;
  IntMatrix adjacency;
  IntMatrix b;
  PointedK0 k0;
  Integer det;
  DetSign sign = DetSign::Zero;
  PisReport pis;
  std::optional<CanonicalAlgebra> canonical;
};

InvariantReport invariant_report(const Graph& g);
nlohmann::json to_json(const InvariantReport& r);
void write_text(std::ostream& os, const InvariantReport& r);

nlohmann::json to_json(const PisReport& r);
nlohmann::json to_json(const KPVerdict& v);
void write_text(std::ostream& os, const KPVerdict& v);

struct TableRow {
  long n = 0;
  AbelianGroup group;
  Integer det;
  DetSign sign = DetSign::Zero;
  CayleyClassId class_id = CayleyClassId::TrivialK0;
  std::optional<CanonicalAlgebra> canonical;
};

TableRow cayley_table_row(long n);
std::vector<TableRow> cayley_table(long max_n);
void write_markdown(std::ostream& os, const std::vector<TableRow>& rows);
nlohmann::json to_json(const std::vector<TableRow>& rows);

/// "z", "v1", "2v1 + v3".
std::string vector_label(const MonoidVector& v);

nlohmann::json monoid_json(const Graph& g, const CongruenceClasses& c);
void write_monoid_text(std::ostream& os, const Graph& g, const CongruenceClasses& c);

}  // namespace lpa
