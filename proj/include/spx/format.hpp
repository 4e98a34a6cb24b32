#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "spx/enumerate.hpp"
#include "spx/graph.hpp"
#include "spx/structure.hpp"

// Serialization shared by the CLI and tests, so both produce identical bytes.
namespace spx {

using Json = nlohmann::json;

struct GraphSummary {
  std::string graph6;
  int n = 0;
  int edges = 0;
  Girth girth = Girth::acyclic();
  bool k4_minor_free = false;
  bool connected = false;
  std::vector<int> cutvertices;
  std::vector<int> degrees;  // descending
};

GraphSummary summarize(const Graph& g);

// {"n","g","scope","max_edges","count","graphs","nodes","ms"}
Json to_json(const ExtremalResult& r);
ExtremalResult extremal_result_from_json(const Json& j);
Json to_json(const BoundReport& r);
Json to_json(const GraphSummary& s);
Json to_json(const CycleBridges& b);
Json to_json(const Prop1Report& r);

// First line: max edge count (or "none"); then one graph6 per line if `list`.
std::string format_text(const ExtremalResult& r, bool list);
std::string format_text(const GraphSummary& s);
std::string format_text(const CycleBridges& b);
std::string format_text(const Prop1Report& r);

// One graph6 string per line; blank lines are skipped, CR/LF stripped.
std::vector<Graph> read_graph6_lines(std::istream& in);
std::vector<Graph> read_graph6_file(const std::string& path);
void write_graph6_lines(std::ostream& out, std::span<const Graph> graphs);

}  // namespace spx
