#include "lpa/cli.hpp"

#include <algorithm>

#include "CLI11.hpp"
#include "lpa/classifier.hpp"
#include "lpa/graph_json.hpp"
#include "lpa/graph_monoid.hpp"
#include "lpa/report.hpp"

namespace lpa::cli {

namespace {

struct Options {
  long n = 0;
  long d = 0;
  long max = 0;
  unsigned bound = 0;
  bool json = false;
  bool allow_large = false;
  std::string format = "md";
  std::string out_path;
  std::string file;
  std::string file_b;
};

void emit_graph(const Graph& g, const Options& o, std::ostream& out) {
  if (o.out_path.empty())
    out << graph_to_json(g).dump(2) << '\n';
  else
    save_graph(g, o.out_path);
}

int exit_code(KPOutcome o) {
  switch (o) {
    case KPOutcome::Isomorphic: return kExitOk;
    case KPOutcome::NotIsomorphic: return kExitNotIsomorphic;
    case KPOutcome::Unknown: return kExitUnknown;
    case KPOutcome::NotApplicable: return kExitNotApplicable;
  }
  return kExitUnknown;
}

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariants and classification of Leavitt path algebras of finite graphs", "lpa"};
  app.require_subcommand(1);
  Options o;

  auto* cayley = app.add_subcommand("cayley", "Write the Cayley graph C_n of Z/nZ as JSON");
  cayley->add_option("--n", o.n, "Group order")->required();
  cayley->add_option("--out", o.out_path, "Output file (default: stdout)");

  auto* rose = app.add_subcommand("rose", "Write the rose with n petals as JSON");
  rose->add_option("--n", o.n, "Number of loops")->required();
  rose->add_option("--out", o.out_path, "Output file (default: stdout)");

  auto* stemmed = app.add_subcommand("stemmed-rose", "Write R_n^d (d-1 stem edges, n loops) as JSON");
  stemmed->add_option("--n", o.n, "Number of loops")->required();
  stemmed->add_option("--d", o.d, "Matrix size d (d-1 stem edges)")->required();
  stemmed->add_option("--out", o.out_path, "Output file (default: stdout)");

  auto* invariants = app.add_subcommand("invariants", "Print K0, determinant and PIS data of a graph");
  invariants->add_option("file", o.file, "Graph JSON")->required();
  invariants->add_flag("--json", o.json, "Machine-readable output");

  auto* classify = app.add_subcommand("classify", "Decide L_K(E) vs L_K(F)");
  classify->add_option("file_a", o.file, "Graph E")->required();
  classify->add_option("file_b", o.file_b, "Graph F")->required();
  classify->add_flag("--json", o.json, "Machine-readable output");

  auto* table = app.add_subcommand("table", "K0 classification table for C_1..C_N");
  table->add_option("--max", o.max, "Largest n")->required()->check(CLI::PositiveNumber);
  table->add_option("--format", o.format, "md or json")->check(CLI::IsMember({"md", "json"}));
  table->add_flag("--allow-large", o.allow_large, "Permit --max above 500");

  auto* monoid = app.add_subcommand("monoid", "Saturate the graph monoid inside a bounded box");
  monoid->add_option("file", o.file, "Graph JSON")->required();
  monoid->add_option("--bound", o.bound, "Coordinate-sum bound (default: max(8, 2 n r))");
  monoid->add_flag("--json", o.json, "Machine-readable output");

  auto* validate = app.add_subcommand("validate", "Check a graph JSON document");
  validate->add_option("file", o.file, "Graph JSON")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  }

  try {
    if (cayley->parsed()) {
      emit_graph(cayley_graph(o.n), o, out);
    } else if (rose->parsed()) {
      emit_graph(rose_graph(o.n), o, out);
    } else if (stemmed->parsed()) {
      emit_graph(stemmed_rose_graph(o.n, o.d), o, out);
    } else if (invariants->parsed()) {
      const InvariantReport r = invariant_report(load_graph(o.file));
      if (o.json)
        out << to_json(r).dump(2) << '\n';
      else
        write_text(out, r);
    } else if (classify->parsed()) {
      const KPVerdict v = kp_decide(load_graph(o.file), load_graph(o.file_b));
      if (o.json)
        out << to_json(v).dump(2) << '\n';
      else
        write_text(out, v);
      return exit_code(v.outcome);
    } else if (table->parsed()) {
      if (o.max > kTableMaxDefaultCap && !o.allow_large)
        throw UsageError("table --max is capped at " + std::to_string(kTableMaxDefaultCap) +
                         "; pass --allow-large to override");
      const auto rows = cayley_table(o.max);
      if (o.format == "json")
        out << to_json(rows).dump(2) << '\n';
      else
        write_markdown(out, rows);
    } else if (monoid->parsed()) {
      const Graph g = load_graph(o.file);
      const MonoidPresentation p = presentation(g);
      const CongruenceClasses c = saturate(p, o.bound == 0 ? default_bound(p) : o.bound);
      if (o.json)
        out << monoid_json(g, c).dump(2) << '\n';
      else
        write_monoid_text(out, g, c);
    } else if (validate->parsed()) {
      const Graph g = load_graph(o.file);
      out << "ok: " << g.vertex_count() << " vertices, " << g.edge_count() << " edges\n";
    }
  } catch (const GraphFormatError& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  }
  return kExitOk;
}

}  // namespace lpa::cli
