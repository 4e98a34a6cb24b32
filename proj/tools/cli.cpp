#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "spx/construct.hpp"
#include "spx/enumerate.hpp"
#include "spx/format.hpp"
#include "spx/invariants.hpp"
#include "spx/structure.hpp"
#include "spx/verification.hpp"

namespace spx::cli {

namespace {

// Input problems detected after parsing; reported like parse errors.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GraphInputs {
  std::vector<std::string> g6;
  std::vector<std::string> files;
  std::vector<std::string> constructs;
};

struct Options {
  int n = 0;
  int girth = 4;
  bool json = false;
  bool list = false;
  std::optional<int> edges;
  bool max_only = false;
  bool no_prune = false;
  bool all_graphs = false;
  bool verify = false;
  int jobs = 1;
  std::string cycle;
  bool prop1 = false;
  std::optional<std::string> only;
  std::string catalog = SPX_CATALOG_PATH;
  std::string dot_dir;
  std::string g6_out;
  std::optional<int> require_girth;
  GraphInputs inputs;
};

std::vector<int> parse_ints(const std::string& text, char sep) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw UsageError("expected an integer, got '" + item + "'");
    }
    if (used != item.size()) throw UsageError("expected an integer, got '" + item + "'");
    out.push_back(value);
  }
  return out;
}

Graph construct(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw UsageError("--construct expects theta:k,s | g5:s | h:i");
  const std::string kind = spec.substr(0, colon);
  const std::vector<int> args = parse_ints(spec.substr(colon + 1), ',');
  try {
    if (kind == "theta" && args.size() == 2) return theta(args[0], args[1]);
    if (kind == "g5" && args.size() == 1) return g5_family(args[0]);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (kind == "h" && args.size() == 1) {
    if (args[0] < 1 || args[0] > kCatalogSize) throw UsageError("h:i needs 1 <= i <= 8");
    return h_catalog()[args[0] - 1];
  }
  throw UsageError("unknown construction '" + spec + "'");
}

std::vector<Graph> collect(const GraphInputs& in) {
  std::vector<Graph> out;
  try {
    for (const std::string& s : in.g6) out.push_back(decode_graph6(s));
    for (const std::string& path : in.files) {
      for (Graph& g : read_graph6_file(path)) out.push_back(std::move(g));
    }
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  for (const std::string& s : in.constructs) out.push_back(construct(s));
  if (out.empty()) throw UsageError("no input graph: use --g6, --file or --construct");
  return out;
}

void add_graph_inputs(CLI::App* sub, GraphInputs& in) {
  sub->add_option("--g6", in.g6, "graph6 string (repeatable)");
  sub->add_option("--file", in.files, "file with one graph6 per line (repeatable)");
  sub->add_option("--construct", in.constructs, "theta:k,s | g5:s | h:i (repeatable)");
}

// SP_EXTREMAL_MAX_N may lower the order guard, never raise it.
int order_guard() {
  int guard = kMaxSearchOrder;
  if (const char* env = std::getenv("SP_EXTREMAL_MAX_N")) {
    try {
      guard = std::min(guard, std::stoi(env));
    } catch (const std::exception&) {
      throw UsageError(std::string("SP_EXTREMAL_MAX_N is not an integer: ") + env);
    }
  }
  return guard;
}

void check_search_size(const Options& o) {
  const int guard = order_guard();
  if (o.n < 3 || o.n > guard) {
    throw UsageError("--n must be in [3, " + std::to_string(guard) + "]");
  }
  if (o.girth < 4) throw UsageError("--girth must be at least 4");
}

int cmd_bound(const Options& o, std::ostream& out) {
  if (o.girth < 4) throw UsageError("--girth must be at least 4");
  if (o.n < 0) throw UsageError("--n must be nonnegative");
  if (o.verify) {
    check_search_size(o);
    const BoundReport r = verify_bound(o.n, o.girth, o.jobs);
    if (o.json) {
      out << to_json(r).dump() << '\n';
    } else {
      out << "max=" << r.max_edges << " bound=" << (r.bound ? std::to_string(*r.bound) : "none")
          << " within=" << (r.within_bound ? "true" : "false")
          << " tight=" << (r.tight ? "true" : "false") << '\n';
    }
    return r.within_bound ? 0 : 1;
  }
  const std::optional<int> b = closed_form_bound(o.n, o.girth);
  if (o.json) {
    out << Json{{"n", o.n}, {"g", o.girth}, {"bound", b ? Json(*b) : Json(nullptr)}}.dump() << '\n';
  } else {
    out << (b ? std::to_string(*b) : "none") << '\n';
  }
  return 0;
}

int cmd_construct(const Options& o, std::ostream& out) {
  if (o.inputs.constructs.empty()) throw UsageError("construct needs --construct");
  for (const Graph& g : collect(o.inputs)) {
    if (o.json) out << to_json(summarize(g)).dump() << '\n';
    else out << encode_graph6(g) << '\n';
  }
  return 0;
}

int cmd_check(const Options& o, std::ostream& out) {
  bool ok = true;
  for (const Graph& g : collect(o.inputs)) {
    const GraphSummary s = summarize(g);
    ok = ok && s.k4_minor_free && (!o.require_girth || s.girth.at_least(*o.require_girth));
    std::optional<Prop1Report> report;
    if (o.prop1) {
      if (g.order() > kMaxProp1Order) throw UsageError("--prop1 supports at most 14 vertices");
      report = check_proposition1(g);
      ok = ok && report->ok();
    }
    if (o.json) {
      Json j = to_json(s);
      if (report) j["bridges"] = to_json(*report);
      out << j.dump() << '\n';
    } else {
      out << format_text(s);
      if (report) out << format_text(*report);
    }
  }
  return ok ? 0 : 1;
}

int cmd_bridges(const Options& o, std::ostream& out) {
  const std::vector<Graph> graphs = collect(o.inputs);
  if (o.cycle.empty() == !o.prop1) throw UsageError("bridges needs exactly one of --cycle or --prop1");
  bool ok = true;
  for (const Graph& g : graphs) {
    if (o.prop1) {
      if (g.order() > kMaxProp1Order) throw UsageError("--prop1 supports at most 14 vertices");
      const Prop1Report r = check_proposition1(g);
      ok = ok && r.ok();
      out << (o.json ? to_json(r).dump() + "\n" : format_text(r));
      continue;
    }
    CycleBridges b;
    try {
      b = bridges(g, parse_ints(o.cycle, ','));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    out << (o.json ? to_json(b).dump() + "\n" : format_text(b));
  }
  return ok ? 0 : 1;
}

int cmd_reduce(const Options& o, std::ostream& out) {
  for (const Graph& g : collect(o.inputs)) {
    Graph h;
    try {
      h = make_two_connected(g);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    if (o.json) out << to_json(summarize(h)).dump() << '\n';
    else out << encode_graph6(h) << '\n';
  }
  return 0;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  check_search_size(o);
  if (o.jobs < 0) throw UsageError("--jobs must be nonnegative");
  if (o.edges && o.max_only) throw UsageError("--edges and --max-only are exclusive");
  SearchConfig cfg;
  cfg.n = o.n;
  cfg.g = o.girth;
  cfg.mode = o.edges ? SearchMode::count_at_edges
             : o.max_only ? SearchMode::max_only
                          : SearchMode::max_and_enumerate;
  cfg.target_edges = o.edges.value_or(0);
  cfg.scope = o.all_graphs ? Scope::any_graph : Scope::two_connected;
  cfg.upper_bound_pruning = !o.no_prune;
  cfg.parallel_width = o.jobs;
  const ExtremalResult r = extremal_search(cfg);
  if (o.json) out << to_json(r).dump() << '\n';
  else out << format_text(r, o.list);
  if (!o.g6_out.empty()) {
    std::ofstream file(o.g6_out);
    if (!file) throw UsageError("cannot write " + o.g6_out);
    for (const CanonicalForm& c : r.extremal) file << c.graph6 << '\n';
  }
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
  VerificationOptions vo;
  vo.only = o.only;
  vo.catalog_path = o.catalog;
  try {
    selected_criteria(vo.only);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  bool all = true;
  Json items = Json::array();
  for (int id : selected_criteria(vo.only)) {
    const CriterionResult r = run_criterion(id, vo);
    all = all && r.passed;
    if (o.json) {
      items.push_back({{"id", r.id}, {"group", r.group}, {"title", r.title}, {"passed", r.passed},
                       {"detail", r.detail}, {"seconds", r.seconds}});
    } else {
      out << format_line(r) << '\n' << std::flush;
    }
  }
  if (o.json) out << Json{{"passed", all}, {"criteria", items}}.dump() << '\n';
  return all ? 0 : 1;
}

int cmd_export(const Options& o, std::ostream& out) {
  if (o.dot_dir.empty()) throw UsageError("export needs --dot DIR");
  const std::vector<Graph> graphs = collect(o.inputs);
  std::error_code ec;
  std::filesystem::create_directories(o.dot_dir, ec);
  if (ec) throw UsageError("cannot create " + o.dot_dir + ": " + ec.message());
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const std::filesystem::path path =
        std::filesystem::path(o.dot_dir) / ("graph-" + std::to_string(i + 1) + ".dot");
    std::ofstream file(path);
    if (!file) throw UsageError("cannot write " + path.string());
    file << to_dot(graphs[i]) << '\n';
    out << path.string() << '\n';
  }
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Extremal K4-minor-free graphs of given girth", "sp-extremal"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);

  auto* bound = app.add_subcommand("bound", "closed-form edge bound for (n, g)");
  bound->add_option("--n", o.n, "number of vertices")->required();
  bound->add_option("--girth", o.girth, "girth lower bound g >= 4")->required();
  bound->add_flag("--verify", o.verify, "also run the exhaustive search and compare");
  bound->add_option("--jobs", o.jobs, "threads for --verify");

  auto* construct_cmd = app.add_subcommand("construct", "print a named construction");
  add_graph_inputs(construct_cmd, o.inputs);

  auto* check = app.add_subcommand("check", "girth, K4-minor-freeness and cutvertices");
  add_graph_inputs(check, o.inputs);
  check->add_option("--girth", o.require_girth, "fail unless girth >= g");
  check->add_flag("--prop1", o.prop1, "also check bridges of every cycle");

  auto* bridges_cmd = app.add_subcommand("bridges", "bridges of a cycle");
  add_graph_inputs(bridges_cmd, o.inputs);
  bridges_cmd->add_option("--cycle", o.cycle, "cycle as comma-separated vertices");
  bridges_cmd->add_flag("--prop1", o.prop1, "check every cycle instead");

  auto* reduce = app.add_subcommand("reduce2conn", "remove cutvertices keeping n, e, girth");
  add_graph_inputs(reduce, o.inputs);

  auto* enumerate = app.add_subcommand("enumerate", "exhaustive extremal search");
  enumerate->add_option("--n", o.n, "number of vertices")->required();
  enumerate->add_option("--girth", o.girth, "girth lower bound g >= 4")->required();
  enumerate->add_flag("--list", o.list, "print the extremal graphs");
  enumerate->add_option("--edges", o.edges, "count classes with exactly M edges");
  enumerate->add_flag("--max-only", o.max_only, "skip the extremal list");
  enumerate->add_flag("--no-prune", o.no_prune, "disable the edge-budget cutoff");
  enumerate->add_flag("--all-graphs", o.all_graphs, "record graphs that are not 2-connected too");
  enumerate->add_option("--jobs", o.jobs, "threads; 0 runs the serial reference");
  enumerate->add_option("--g6-out", o.g6_out, "write the extremal list to a .g6 file");

  auto* verify = app.add_subcommand("verify-paper", "run the acceptance suite");
  verify->add_option("--only", o.only, "group or criterion number");
  verify->add_option("--catalog", o.catalog, "catalog file to compare against");

  auto* export_cmd = app.add_subcommand("export", "write DOT files");
  add_graph_inputs(export_cmd, o.inputs);
  export_cmd->add_option("--dot", o.dot_dir, "output directory");

  for (CLI::App* sub : {bound, construct_cmd, check, bridges_cmd, reduce, enumerate, verify, export_cmd})
    sub->add_flag("--json", o.json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (bound->parsed()) return cmd_bound(o, out);
    if (construct_cmd->parsed()) return cmd_construct(o, out);
    if (check->parsed()) return cmd_check(o, out);
    if (bridges_cmd->parsed()) return cmd_bridges(o, out);
    if (reduce->parsed()) return cmd_reduce(o, out);
    if (enumerate->parsed()) return cmd_enumerate(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    return cmd_export(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }
}

}  // namespace spx::cli
