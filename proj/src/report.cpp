#include "lpa/report.hpp"

#include <limits>

namespace lpa {

using nlohmann::json;

json json_integer(const Integer& x) {
  if (x.fits_slong_p()) return json(static_cast<std::int64_t>(x.get_si()));
  return json(x.get_str());
}

json json_matrix(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(json_integer(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

json json_integers(const std::vector<Integer>& xs) {
  json a = json::array();
  for (const auto& x : xs) a.push_back(json_integer(x));
  return a;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string join(const std::vector<Integer>& xs) {
  std::string s = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + xs[i].get_str();
  return s + "]";
}

}  // namespace

InvariantReport invariant_report(const Graph& g) {
  InvariantReport r;
  r.vertex_names = g.vertices();
  r.edge_count = g.edge_count();
  r.adjacency = adjacency_matrix(g);
  r.b = b_matrix(g);
  r.k0 = cokernel_pointed(r.b);
  r.det = det_exact(r.b);
  r.sign = sign_of(r.det);
  r.pis = pis_report(g);
  r.canonical = canonical_form(g);
  return r;
}

json to_json(const PisReport& r) {
  json witnesses = json::array();
  for (const auto& w : r.witnesses)
    witnesses.push_back({{"condition", w.condition}, {"vertices", w.vertices}, {"detail", w.detail}});
  return {{"sink_free", r.sink_free},
          {"condition_L", r.condition_L},
          {"cofinal", r.cofinal},
          {"has_cycle", r.has_cycle},
          {"purely_infinite_simple", r.purely_infinite_simple},
          {"witnesses", std::move(witnesses)}};
}

json to_json(const InvariantReport& r) {
  json images = json::object();
  for (std::size_t i = 0; i < r.vertex_names.size(); ++i)
    images[r.vertex_names[i]] = json_integers(r.k0.vertex_images[i].coords);
  return {{"schema", kJsonSchemaVersion},
          {"graph", {{"vertices", r.vertex_names.size()}, {"edges", r.edge_count}}},
          {"adjacency", json_matrix(r.adjacency)},
          {"b_matrix", json_matrix(r.b)},
          {"snf_diagonal", json_integers(r.k0.smith_diagonal)},
          {"k0_factors", json_integers(r.k0.group.factors())},
          {"k0_label", group_label(r.k0.group)},
          {"vertex_images", std::move(images)},
          {"distinguished", json_integers(r.k0.distinguished.coords)},
          {"det", json_integer(r.det)},
          {"det_sign", to_string(r.sign)},
          {"pis", to_json(r.pis)},
          {"canonical", r.canonical ? json(r.canonical->label()) : json(nullptr)}};
}

void write_text(std::ostream& os, const InvariantReport& r) {
  os << "graph: " << r.vertex_names.size() << " vertices, " << r.edge_count << " edges\n";
  os << "adjacency: " << r.adjacency << '\n';
  os << "B = I - A^t: " << r.b << '\n';
  os << "smith diagonal: " << join(r.k0.smith_diagonal) << '\n';
  os << "K0: " << group_label(r.k0.group) << "  factors " << join(r.k0.group.factors()) << '\n';
  for (std::size_t i = 0; i < r.vertex_names.size(); ++i)
    os << "  [" << r.vertex_names[i] << "] -> " << element_label(r.k0.vertex_images[i]) << '\n';
  os << "distinguished: " << element_label(r.k0.distinguished) << '\n';
  os << "det(I - A^t): " << r.det << " (" << to_string(r.sign) << ")\n";
  os << "pis: sink_free=" << yes_no(r.pis.sink_free) << " condition_L=" << yes_no(r.pis.condition_L)
     << " cofinal=" << yes_no(r.pis.cofinal) << " has_cycle=" << yes_no(r.pis.has_cycle)
     << " -> purely_infinite_simple=" << yes_no(r.pis.purely_infinite_simple) << '\n';
  for (const auto& w : r.pis.witnesses) {
    os << "  witness " << w.condition << ":";
    for (const auto& v : w.vertices) os << ' ' << v;
    os << " (" << w.detail << ")\n";
  }
  os << "canonical: " << (r.canonical ? r.canonical->label() : "none") << '\n';
}

json to_json(const KPVerdict& v) {
  json trace = json::array();
  for (const auto& t : v.trace) trace.push_back({{"check", t.check}, {"result", t.result}});
  return {{"schema", kJsonSchemaVersion}, {"outcome", to_string(v.outcome)}, {"trace", std::move(trace)}};
}

void write_text(std::ostream& os, const KPVerdict& v) {
  os << "outcome: " << to_string(v.outcome) << '\n';
  for (const auto& t : v.trace) os << "  " << t.check << ": " << t.result << '\n';
}

TableRow cayley_table_row(long n) {
  const Graph g = cayley_graph(n);
  TableRow row;
  row.n = n;
  row.group = cokernel_pointed(g).group;
  row.det = det_exact(b_matrix(g));
  row.sign = sign_of(row.det);
  row.class_id = cayley_class(n).class_id;
  row.canonical = canonical_form(g);
  return row;
}

std::vector<TableRow> cayley_table(long max_n) {
  std::vector<TableRow> rows;
  for (long n = 1; n <= max_n; ++n) rows.push_back(cayley_table_row(n));
  return rows;
}

void write_markdown(std::ostream& os, const std::vector<TableRow>& rows) {
  os << "| n | K0 | factors | det | sign | class | canonical |\n";
  os << "|---|---|---|---|---|---|---|\n";
  for (const auto& r : rows) {
    os << "| " << r.n << " | " << group_label(r.group) << " | " << join(r.group.factors()) << " | "
       << r.det << " | " << to_string(r.sign) << " | " << to_string(r.class_id) << " | "
       << (r.canonical ? r.canonical->label() : "-") << " |\n";
  }
}

json to_json(const std::vector<TableRow>& rows) {
  json a = json::array();
  for (const auto& r : rows) {
    a.push_back({{"n", r.n},
                 {"k0_factors", json_integers(r.group.factors())},
                 {"k0_label", group_label(r.group)},
                 {"det", json_integer(r.det)},
                 {"det_sign", to_string(r.sign)},
                 {"class", to_string(r.class_id)},
                 {"canonical", r.canonical ? json(r.canonical->label()) : json(nullptr)}});
  }
  return {{"schema", kJsonSchemaVersion}, {"rows", std::move(a)}};
}

std::string vector_label(const MonoidVector& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (!s.empty()) s += " + ";
    if (v[i] > 1) s += std::to_string(v[i]);
    s += "v" + std::to_string(i + 1);
  }
  return s.empty() ? "z" : s;
}

json monoid_json(const Graph& g, const CongruenceClasses& c) {
  json classes = json::array();
  for (std::size_t k = 0; k < c.class_count(); ++k) {
    const MonoidVector rep = c.representative(k);
    classes.push_back({{"id", k}, {"representative", rep}, {"label", vector_label(rep)}, {"size", c.class_size(k)}});
  }
  json mstar;
  const MStarResult m = mstar_group(c);
  if (const auto* t = std::get_if<FiniteGroupTable>(&m)) {
    json table = json::array();
    for (const auto& row : t->table) {
      json r = json::array();
      for (std::size_t e : row) r.push_back(t->element_class_ids[e]);
      table.push_back(std::move(r));
    }
    mstar = {{"closed", true},
             {"elements", t->element_class_ids},
             {"identity", t->element_class_ids[t->identity]},
             {"table", std::move(table)},
             {"invariant_factors", json_integers(invariant_factors(*t))}};
  } else {
    mstar = {{"closed", false}, {"reason", std::get<NotClosed>(m).reason}};
  }
  const CrosscheckResult x = crosscheck_cokernel(g, c);
  return {{"schema", kJsonSchemaVersion},
          {"bound", c.bound()},
          {"vector_count", c.vector_count()},
          {"class_count", c.class_count()},
          {"nonzero_counts", c.nonzero_counts()},
          {"stabilized", c.stabilized()},
          {"classes", std::move(classes)},
          {"mstar", std::move(mstar)},
          {"crosscheck", {{"verdict", to_string(x.verdict)}, {"detail", x.detail}}}};
}

void write_monoid_text(std::ostream& os, const Graph& g, const CongruenceClasses& c) {
  os << "bound: " << c.bound() << " (" << c.vector_count() << " vectors)\n";
  os << "classes: " << c.class_count() << " (" << c.nonzero_class_count() << " nonzero)\n";
  os << "nonzero class counts up to bound:";
  for (std::size_t k : c.nonzero_counts()) os << ' ' << k;
  os << "  stabilized: " << yes_no(c.stabilized()) << '\n';
  for (std::size_t k = 0; k < c.class_count(); ++k)
    os << "  class " << k << ": " << vector_label(c.representative(k)) << " (" << c.class_size(k)
       << " vectors)\n";
  const MStarResult m = mstar_group(c);
  if (const auto* t = std::get_if<FiniteGroupTable>(&m)) {
    auto name = [t](std::size_t e) { return std::to_string(t->element_class_ids[e]); };
    os << "M*: group of order " << t->size() << ", identity class " << name(t->identity)
       << ", invariant factors " << join(invariant_factors(*t)) << '\n';
    for (std::size_t a = 0; a < t->size(); ++a) {
      os << "  " << name(a) << " |";
      for (std::size_t b = 0; b < t->size(); ++b) os << ' ' << name(t->table[a][b]);
      os << '\n';
    }
  } else {
    os << "M*: NOT_CLOSED (" << std::get<NotClosed>(m).reason << ")\n";
  }
  const CrosscheckResult x = crosscheck_cokernel(g, c);
  os << "crosscheck: " << to_string(x.verdict) << " (" << x.detail << ")\n";
}

}  // namespace lpa
