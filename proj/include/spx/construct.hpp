#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "spx/graph.hpp"

namespace spx {

// Class of graphs on n vertices with girth at least g.
struct GirthClassParams {
  int n = 0;
  int g = 0;

  // Throws unless g >= 4 and n >= 0.
  static GirthClassParams make(int n, int g);
  bool even() const { return g % 2 == 0; }
  // Half-girth; only meaningful when even().
  int k() const { return g / 2; }
};

// floor(k (n - 2) / (k - 1)). Requires k >= 2, n >= 2.
int bound_even_girth(int n, int k);
// ceil(3n/2 - 3). Requires n >= 5.
int bound_girth5(int n);
// The closed-form edge bound that applies to girth >= g on n vertices, if any:
// the even bound for even g, ceil(3n/2 - 3) for g = 5 and n >= 5.
std::optional<int> closed_form_bound(int n, int g);

// Hubs u = 0 and v = 1 joined by s internally disjoint paths of k edges;
// path interiors follow in order. Requires k >= 2, s >= 2.
Graph theta(int k, int s);

// s - 1 paths of 3 edges and one path of 2 edges between hubs 0 and 1;
// the 2-edge path is laid out last. Requires s >= 2.
Graph g5_family(int s);
// Edge (0, 2) of g5_family(s): first edge of the first 3-edge path.
inline constexpr Edge kG5ThreePathEdge{0, 2};

// Replaces edge u-v by a path through a new vertex with index n.
Graph subdivide(const Graph& g, Edge e);

inline constexpr int kCatalogSize = 8;
// Extremal graphs on 10 vertices of girth >= 5 with 12 edges, H1..H8, as
// canonical graph6 strings.
const std::array<std::string_view, kCatalogSize>& h_catalog_graph6();
std::vector<Graph> h_catalog();

}  // namespace spx
