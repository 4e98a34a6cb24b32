#include "spx/construct.hpp"

#include <stdexcept>
#include <string>

namespace spx {

GirthClassParams GirthClassParams::make(int n, int g) {
  if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
  if (g < 4) throw std::invalid_argument("minimum girth must be at least 4");
  return {n, g};
}

int bound_even_girth(int n, int k) {
  if (k < 2 || n < 2) {
    throw std::invalid_argument("bound_even_girth requires k >= 2 and n >= 2");
  }
  return k * (n - 2) / (k - 1);
}

int bound_girth5(int n) {
  if (n < 5) throw std::invalid_argument("bound_girth5 requires n >= 5");
  // ceil((3n - 6) / 2) with 3n - 6 >= 9.
  return (3 * n - 6 + 1) / 2;
}

std::optional<int> closed_form_bound(int n, int g) {
  if (g >= 4 && g % 2 == 0 && n >= 2) return bound_even_girth(n, g / 2);
  if (g == 5 && n >= 5) return bound_girth5(n);
  return std::nullopt;
}

namespace {

// Hubs 0 and 1; one path per entry of `lengths`, interiors numbered in order.
Graph hub_paths(const std::vector<int>& lengths) {
  int n = 2;
  for (int len : lengths) n += len - 1;
  if (n > kMaxVertices) throw std::length_error("construction exceeds 62 vertices");
  std::vector<Edge> edges;
  int next = 2;
  for (int len : lengths) {
    int prev = 0;
    for (int i = 1; i < len; ++i) {
      edges.push_back(Edge::of(prev, next));
      prev = next++;
    }
    edges.push_back(Edge::of(prev, 1));
  }
  return Graph(n, edges);
}

}  // namespace

Graph theta(int k, int s) {
  if (k < 2 || s < 2) throw std::invalid_argument("theta requires k >= 2 and s >= 2");
  return hub_paths(std::vector<int>(s, k));
}

Graph g5_family(int s) {
  if (s < 2) throw std::invalid_argument("g5_family requires s >= 2");
  std::vector<int> lengths(s - 1, 3);
  lengths.push_back(2);
  return hub_paths(lengths);
}

Graph subdivide(const Graph& g, Edge e) {
  if (e.u < 0 || e.v < 0 || e.u >= g.order() || e.v >= g.order() || !g.adjacent(e.u, e.v)) {
    throw std::invalid_argument("subdivide: edge " + std::to_string(e.u) + "-" +
                                std::to_string(e.v) + " is not in the graph");
  }
  if (g.order() == kMaxVertices) throw std::length_error("subdivide: graph already has 62 vertices");
  std::vector<Edge> edges = g.edges();
  std::erase(edges, Edge::of(e.u, e.v));
  const int w = g.order();
  edges.push_back({e.u, w});
  edges.push_back({e.v, w});
  return Graph(w + 1, edges);
}

const std::array<std::string_view, kCatalogSize>& h_catalog_graph6() {
  // Frozen from the exhaustive search at n = 10, g = 5, twelve edges; each
  // label was matched by rebuilding the graph as a cycle plus paths.
  static const std::array<std::string_view, kCatalogSize> kGraphs{
      "I??Haacq_",  // H1: C9, chord 0-4, 2-path 0-6
      "I??XQQOx?",  // H2: C8, chord 0-4, 3-path 0-3
      "I?CaJAHc_",  // H3: C8, disjoint 2-paths 0-3 and 4-7
      "I??GbEcu?",  // H4: C8, 2-paths 0-3 and 0-5
      "I??GjAau?",  // H5: C8, 2-paths 0-3 and 0-4
      "I??GbAeu?",  // H6: hubs joined by paths of 2, 3, 3, 4 edges
      "I??HaaSy?",  // H7: C7, 2-path 0-3, 3-path 0-4
      "I??XQQG{?",  // H8: theta(3, 4)
  };
  return kGraphs;
}

std::vector<Graph> h_catalog() {
  std::vector<Graph> out;
  for (std::string_view s : h_catalog_graph6()) out.push_back(decode_graph6(s));
  return out;
}

}  // namespace spx
