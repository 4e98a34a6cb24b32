#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "spx/graph.hpp"
#include "spx/random_graphs.hpp"

namespace spx::test {

inline Graph cycle_graph(int n, int offset = 0, int total = 0) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back(Edge::of(offset + i, offset + (i + 1) % n));
  return Graph(std::max(total, offset + n), edges);
}

inline Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, edges);
}

inline Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return Graph(n, edges);
}

// Disjoint union; b's vertices are shifted by a.order().
inline Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  for (const Edge& e : b.edges()) edges.push_back({e.u + a.order(), e.v + a.order()});
  return Graph(a.order() + b.order(), edges);
}

// Two cycles glued at vertex 0.
inline Graph glued_cycles(int a, int b) {
  std::vector<Edge> edges;
  for (int i = 0; i < a; ++i) edges.push_back(Edge::of(i, (i + 1) % a));
  auto id = [&](int i) { return i == 0 ? 0 : a - 1 + i; };
  for (int i = 0; i < b; ++i) edges.push_back(Edge::of(id(i), id((i + 1) % b)));
  return Graph(a + b - 1, edges);
}

inline int component_count(const Graph& g) {
  return static_cast<int>(connected_components(g).size());
}

inline std::vector<int> identity(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

// Every graph on n labeled vertices; n <= 6 keeps this small.
template <class Fn>
void for_each_labeled_graph(int n, Fn&& fn) {
  std::vector<Edge> slots;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) slots.push_back({u, v});
  }
  for (unsigned long mask = 0; mask < (1ul << slots.size()); ++mask) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if (mask >> i & 1) edges.push_back(slots[i]);
    }
    fn(Graph(n, edges));
  }
}

}  // namespace spx::test
