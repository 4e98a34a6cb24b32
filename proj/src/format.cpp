#include "spx/format.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "spx/invariants.hpp"

namespace spx {

namespace {

std::string join(const std::vector<int>& values, const char* sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < values.size(); ++i) os << (i ? sep : "") << values[i];
  return os.str();
}

Json girth_json(Girth g) { return g.is_acyclic() ? Json(nullptr) : Json(g.value()); }

Scope scope_from_string(const std::string& s) {
  if (s == "two-connected") return Scope::two_connected;
  if (s == "any") return Scope::any_graph;
  throw std::invalid_argument("unknown scope '" + s + "'");
}

}  // namespace

GraphSummary summarize(const Graph& g) {
  return {encode_graph6(g), g.order(), g.edge_count(), girth(g), is_k4_minor_free(g),
          is_connected(g), cutvertices(g), g.degree_sequence()};
}

Json to_json(const ExtremalResult& r) {
  Json graphs = Json::array();
  for (const CanonicalForm& c : r.extremal) graphs.push_back(c.graph6);
  return Json{{"n", r.params.n},
              {"g", r.params.g},
              {"scope", to_string(r.scope)},
              {"max_edges", r.max_edges ? Json(*r.max_edges) : Json(nullptr)},
              {"count", r.extremal.size()},
              {"graphs", graphs},
              {"nodes", r.nodes_explored},
              {"ms", r.elapsed.count()}};
}

ExtremalResult extremal_result_from_json(const Json& j) {
  ExtremalResult r;
  r.params = GirthClassParams::make(j.at("n").get<int>(), j.at("g").get<int>());
  r.scope = scope_from_string(j.at("scope").get<std::string>());
  if (!j.at("max_edges").is_null()) r.max_edges = j.at("max_edges").get<int>();
  for (const auto& s : j.at("graphs")) r.extremal.push_back({s.get<std::string>()});
  if (j.at("count").get<std::size_t>() != r.extremal.size()) {
    throw std::invalid_argument("result JSON: count does not match graphs");
  }
  r.nodes_explored = j.at("nodes").get<std::uint64_t>();
  r.elapsed = std::chrono::duration<double, std::milli>(j.at("ms").get<double>());
  return r;
}

Json to_json(const BoundReport& r) {
  return Json{{"n", r.n},
              {"g", r.g},
              {"max_edges", r.max_edges},
              {"bound", r.bound ? Json(*r.bound) : Json(nullptr)},
              {"within_bound", r.within_bound},
              {"tight", r.tight}};
}

Json to_json(const GraphSummary& s) {
  return Json{{"graph6", s.graph6},
              {"n", s.n},
              {"edges", s.edges},
              {"girth", girth_json(s.girth)},
              {"k4_minor_free", s.k4_minor_free},
              {"connected", s.connected},
              {"cutvertices", s.cutvertices},
              {"degrees", s.degrees}};
}

Json to_json(const CycleBridges& b) {
  Json bridges = Json::array();
  for (const Bridge& br : b.bridges) {
    Json legs = Json::array();
    for (const Leg& l : br.legs) legs.push_back({l.inner, l.on_cycle});
    bridges.push_back(
        {{"interior", br.interior.members()}, {"legs", legs}, {"attachments", br.attachments}});
  }
  Json chords = Json::array();
  for (const Edge& e : b.chords) chords.push_back({e.u, e.v});
  return Json{{"cycle", b.cycle}, {"bridges", bridges}, {"chords", chords}};
}

Json to_json(const Prop1Report& r) {
  Json violations = Json::array();
  for (const Prop1Violation& v : r.violations) {
    Json item{{"cycle", v.cycle}, {"kind", to_string(v.kind)}, {"first", v.first}};
    if (!v.second.empty()) item["second"] = v.second;
    violations.push_back(item);
  }
  return Json{{"cycles", r.cycles},
              {"bridges", r.bridges},
              {"chords", r.chords},
              {"max_attachments", r.max_attachments},
              {"max_leg_edges", r.max_leg_edges},
              {"ok", r.ok()},
              {"violations", violations}};
}

std::string format_text(const ExtremalResult& r, bool list) {
  std::ostringstream os;
  if (r.max_edges) os << *r.max_edges << '\n';
  else os << "none\n";
  if (list) {
    for (const CanonicalForm& c : r.extremal) os << c.graph6 << '\n';
  }
  return os.str();
}

std::string format_text(const GraphSummary& s) {
  std::ostringstream os;
  os << "graph6=" << s.graph6 << " n=" << s.n << " edges=" << s.edges
     << " girth=" << s.girth.to_string() << " k4-minor-free=" << (s.k4_minor_free ? "true" : "false")
     << " connected=" << (s.connected ? "true" : "false") << " cutvertices=["
     << join(s.cutvertices, ",") << "] degrees=[" << join(s.degrees, ",") << "]\n";
  return os.str();
}

std::string format_text(const CycleBridges& b) {
  std::ostringstream os;
  os << "cycle " << join(b.cycle, " ") << '\n';
  for (std::size_t i = 0; i < b.bridges.size(); ++i) {
    const Bridge& br = b.bridges[i];
    os << "bridge " << i << " interior=[" << join(br.interior.members(), ",") << "] legs=[";
    for (std::size_t k = 0; k < br.legs.size(); ++k) {
      os << (k ? "," : "") << br.legs[k].inner << '-' << br.legs[k].on_cycle;
    }
    os << "] attachments=[" << join(br.attachments, ",") << "]\n";
  }
  for (const Edge& e : b.chords) os << "chord " << e.u << '-' << e.v << '\n';
  return os.str();
}

std::string format_text(const Prop1Report& r) {
  std::ostringstream os;
  os << "cycles=" << r.cycles << " bridges=" << r.bridges << " chords=" << r.chords
     << " max_attachments=" << r.max_attachments << " max_leg_edges=" << r.max_leg_edges
     << " violations=" << r.violations.size() << '\n';
  for (const Prop1Violation& v : r.violations) {
    os << to_string(v.kind) << " cycle=[" << join(v.cycle, ",") << "] " << v.first;
    if (!v.second.empty()) os << " x " << v.second;
    os << '\n';
  }
  return os.str();
}

std::vector<Graph> read_graph6_lines(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
    if (line.empty()) continue;
    out.push_back(decode_graph6(line));
  }
  return out;
}

std::vector<Graph> read_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_graph6_lines(in);
}

void write_graph6_lines(std::ostream& out, std::span<const Graph> graphs) {
  for (const Graph& g : graphs) out << encode_graph6(g) << '\n';
}

}  // namespace spx
