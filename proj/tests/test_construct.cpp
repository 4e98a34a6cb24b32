#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <set>
#include <string>

#include "spx/construct.hpp"
#include "spx/format.hpp"
#include "spx/invariants.hpp"
#include "support.hpp"

using namespace spx;
using namespace spx::test;

namespace {

// Cycle 0..len-1 plus chords and hanging paths between cycle vertices;
// a path of k edges adds k - 1 new vertices.
struct PathSpec {
  int from, to, edges;
};

Graph cycle_with(int len, std::vector<Edge> chords, std::vector<PathSpec> paths) {
  std::vector<Edge> edges = cycle_graph(len).edges();
  for (const Edge& c : chords) edges.push_back(c);
  int next = len;
  for (const PathSpec& p : paths) {
    int prev = p.from;
    for (int i = 1; i < p.edges; ++i) {
      edges.push_back(Edge::of(prev, next));
      prev = next++;
    }
    edges.push_back(Edge::of(prev, p.to));
  }
  return Graph(next, edges);
}

// Two hubs joined by internally disjoint paths of the given lengths.
Graph hub_paths(std::vector<int> lengths) {
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
  return Graph(next, edges);
}

int circumference(const Graph& g) {
  int longest = 0;
  for (const Cycle& c : all_cycles(g, g.order())) longest = std::max<int>(longest, c.size());
  return longest;
}

int vertices_of_degree(const Graph& g, int d) {
  int count = 0;
  for (int v = 0; v < g.order(); ++v) count += g.degree(v) == d;
  return count;
}

}  // namespace

TEST_SUITE("construct") {

TEST_CASE("even-girth bound") {
  CHECK(bound_even_girth(8, 3) == 9);
  CHECK(bound_even_girth(4, 2) == 4);
  CHECK(bound_even_girth(2, 2) == 0);
  CHECK(bound_even_girth(7, 3) == 7);
  CHECK_THROWS_AS(bound_even_girth(5, 1), std::invalid_argument);
}

TEST_CASE("girth-5 bound") {
  CHECK(bound_girth5(5) == 5);
  CHECK(bound_girth5(6) == 6);
  CHECK(bound_girth5(7) == 8);
  CHECK(bound_girth5(9) == 11);
  CHECK(bound_girth5(10) == 12);
  CHECK_THROWS_AS(bound_girth5(4), std::invalid_argument);
}

TEST_CASE("girth-5 bound is the ceiling of 3n/2 - 3") {
  for (int n = 5; n <= 200; ++n) CHECK(2 * bound_girth5(n) == 3 * n - 6 + (n % 2));
}

TEST_CASE("closed-form bound dispatch") {
  CHECK(closed_form_bound(8, 6) == 9);
  CHECK(closed_form_bound(10, 5) == 12);
  CHECK_FALSE(closed_form_bound(4, 5));
  CHECK_FALSE(closed_form_bound(10, 7));
}

TEST_CASE("theta graphs") {
  CHECK(are_isomorphic(theta(2, 2), cycle_graph(4)));
  const Graph k24 = theta(2, 4);
  CHECK(k24.edge_count() == 8);
  CHECK(girth(k24) == Girth::finite(4));
  for (int k = 2; k <= 5; ++k) {
    for (int s = 2; s <= 6; ++s) {
      const Graph t = theta(k, s);
      CHECK(t.order() == s * (k - 1) + 2);
      CHECK(t.edge_count() == k * s);
      CHECK(girth(t) == Girth::finite(2 * k));
      CHECK(is_k4_minor_free(t));
      CHECK(bound_even_girth(t.order(), k) == k * s);
    }
  }
}

TEST_CASE("g5 family") {
  CHECK(are_isomorphic(g5_family(2), cycle_graph(5)));
  CHECK(g5_family(3).order() == 7);
  CHECK(g5_family(3).edge_count() == 8);
  for (int s = 2; s <= 10; ++s) {
    const Graph g = g5_family(s);
    CHECK(g.edge_count() == bound_girth5(2 * s + 1));
    CHECK(girth(g) == Girth::finite(5));
    CHECK(is_k4_minor_free(g));
  }
  CHECK(g5_family(4).adjacent(kG5ThreePathEdge.u, kG5ThreePathEdge.v));
}

TEST_CASE("subdivision") {
  CHECK(are_isomorphic(subdivide(cycle_graph(4), {0, 1}), cycle_graph(5)));
  const Graph g = subdivide(g5_family(3), kG5ThreePathEdge);
  CHECK(g.order() == 8);
  CHECK(g.edge_count() == 9);
  CHECK(g.edge_count() == bound_girth5(8));
  CHECK(girth(g) == Girth::finite(5));
  CHECK(is_k4_minor_free(g));
  // G_2 is C5, so the smallest member of the even family is C6.
  CHECK(girth(subdivide(g5_family(2), kG5ThreePathEdge)) == Girth::finite(6));
  CHECK_THROWS_AS(subdivide(cycle_graph(5), {0, 2}), std::invalid_argument);
}

TEST_CASE("subdivision never lowers girth") {
  Rng rng(21);
  for (int i = 0; i < 100; ++i) {
    const Graph g = random_graph(8, 0.4, rng);
    for (const Edge& e : g.edges()) {
      const Graph h = subdivide(g, e);
      CHECK(h.edge_count() == g.edge_count() + 1);
      CHECK(h.order() == g.order() + 1);
      CHECK((girth(g).is_acyclic() || girth(h).at_least(girth(g).value())));
    }
  }
}

TEST_CASE("catalog members are extremal and distinct") {
  const auto h = h_catalog();
  REQUIRE(h.size() == 8);
  std::set<CanonicalForm> forms;
  for (std::size_t i = 0; i < h.size(); ++i) {
    CHECK(h[i].order() == 10);
    CHECK(h[i].edge_count() == 12);
    CHECK(girth(h[i]).at_least(5));
    CHECK(is_k4_minor_free(h[i]));
    CHECK(canonical_form(h[i]).graph6 == h_catalog_graph6()[i]);
    forms.insert(canonical_form(h[i]));
  }
  CHECK(forms.size() == 8);
}

TEST_CASE("catalog file matches the built-in catalog line by line") {
  std::ifstream in(SPX_CATALOG_PATH);
  REQUIRE(in);
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  REQUIRE(lines.size() == 8);
  for (int i = 0; i < 8; ++i) CHECK(lines[i] == h_catalog_graph6()[i]);
}

TEST_CASE("catalog members match their descriptions") {
  const auto h = h_catalog();
  CHECK(are_isomorphic(h[0], cycle_with(9, {{0, 4}}, {{0, 6, 2}})));
  CHECK(are_isomorphic(h[1], cycle_with(8, {{0, 4}}, {{0, 3, 3}})));
  CHECK(are_isomorphic(h[2], cycle_with(8, {}, {{0, 3, 2}, {4, 7, 2}})));
  CHECK(are_isomorphic(h[3], cycle_with(8, {}, {{0, 3, 2}, {0, 5, 2}})));
  CHECK(are_isomorphic(h[4], cycle_with(8, {}, {{0, 3, 2}, {0, 4, 2}})));
  CHECK(are_isomorphic(h[5], hub_paths({2, 3, 3, 4})));
  CHECK(are_isomorphic(h[6], cycle_with(7, {}, {{0, 3, 2}, {0, 4, 3}})));
  CHECK(are_isomorphic(h[7], theta(3, 4)));
}

TEST_CASE("catalog signatures as computed") {
  const auto h = h_catalog();
  std::vector<int> longest, degree4;
  for (const Graph& g : h) {
    longest.push_back(circumference(g));
    degree4.push_back(vertices_of_degree(g, 4));
  }
  CHECK(longest[0] == 9);
  CHECK(std::count(longest.begin(), longest.end(), 9) == 1);
  // Both the four-path theta-like graph and theta(3, 4) have two hubs of degree 4.
  CHECK(degree4[5] == 2);
  CHECK(degree4[7] == 2);
  CHECK(std::count(degree4.begin(), degree4.end(), 2) == 2);
  // theta(3, 4) has no 5-cycle.
  CHECK(girth(h[7]) == Girth::finite(6));
  for (int i = 0; i < 7; ++i) CHECK(girth(h[i]) == Girth::finite(5));
}

}
