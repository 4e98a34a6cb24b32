#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "spx/construct.hpp"
#include "support.hpp"

using namespace spx;
using namespace spx::test;

namespace {

int components_without(const Graph& g, int v) {
  VertexSet rest{g.vertex_mask()};
  rest.erase(v);
  return static_cast<int>(connected_components(g, rest).size());
}

// Cycles as vertex sets plus edge sets, found by brute force over subsets:
// a subset S with |S| >= 3 carries one cycle per Hamiltonian cycle of G[S].
int naive_cycle_count(const Graph& g, int max_len) {
  int count = 0;
  const int n = g.order();
  for (Bits s = 0; s < (Bits{1} << n); ++s) {
    const int k = std::popcount(s);
    if (k < 3 || k > max_len) continue;
    std::vector<int> vs;
    for_each_bit(s, [&](int v) { vs.push_back(v); });
    // Fix vs[0] first and count each direction once.
    std::vector<int> rest(vs.begin() + 1, vs.end());
    do {
      if (rest.front() > rest.back()) continue;
      bool ok = g.adjacent(vs[0], rest.front()) && g.adjacent(rest.back(), vs[0]);
      for (std::size_t i = 0; ok && i + 1 < rest.size(); ++i) ok = g.adjacent(rest[i], rest[i + 1]);
      count += ok;
    } while (std::next_permutation(rest.begin(), rest.end()));
  }
  return count;
}

}  // namespace

TEST_SUITE("graph") {

TEST_CASE("edge counts") {
  CHECK(Graph(5).edge_count() == 0);
  CHECK(cycle_graph(5).edge_count() == 5);
  CHECK(theta(3, 3).edge_count() == 9);
}

TEST_CASE("adjacency is symmetric and matches the degree sum") {
  Rng rng(1);
  for (int i = 0; i < 50; ++i) {
    const Graph g = random_graph(9, 0.4, rng);
    int degree_sum = 0;
    for (int u = 0; u < g.order(); ++u) {
      CHECK_FALSE(g.adjacent(u, u));
      degree_sum += g.degree(u);
      for (int v = 0; v < g.order(); ++v) CHECK(g.adjacent(u, v) == g.adjacent(v, u));
    }
    CHECK(degree_sum == 2 * g.edge_count());
  }
}

TEST_CASE("invalid edges are rejected") {
  CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::logic_error);
  CHECK_THROWS_AS(Graph(63), std::logic_error);
}

TEST_CASE("distance") {
  const Graph c6 = cycle_graph(6);
  CHECK(distance(c6, 0, 3) == 3);
  CHECK(distance(c6, 2, 2) == 0);
  const Graph two = disjoint_union(cycle_graph(3), cycle_graph(4));
  CHECK(distance(two, 0, 5) == kUnreachable);
}

TEST_CASE("distance is invariant under relabeling") {
  Rng rng(2);
  for (int i = 0; i < 30; ++i) {
    const Graph g = random_graph(8, 0.3, rng);
    std::vector<int> perm = identity(8);
    std::shuffle(perm.begin(), perm.end(), rng);
    const Graph h = g.relabeled(perm);
    for (int u = 0; u < 8; ++u) {
      for (int v = 0; v < 8; ++v) CHECK(distance(g, u, v) == distance(h, perm[u], perm[v]));
    }
  }
}

TEST_CASE("connected components") {
  CHECK(connected_components(cycle_graph(5)).size() == 1);
  CHECK(connected_components(Graph(3)).size() == 3);
  const auto parts = connected_components(disjoint_union(cycle_graph(3), cycle_graph(4)));
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].size() == 3);
  CHECK(parts[1].size() == 4);
}

TEST_CASE("components partition the vertex set") {
  Rng rng(3);
  for (int i = 0; i < 50; ++i) {
    const Graph g = random_graph(10, 0.15, rng);
    Bits seen = 0;
    for (const VertexSet& c : connected_components(g)) {
      CHECK((seen & c.bits()) == 0);
      seen |= c.bits();
    }
    CHECK(seen == g.vertex_mask());
  }
}

TEST_CASE("cutvertices") {
  const Graph bowtie(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 4}});
  CHECK(cutvertices(bowtie) == std::vector<int>{0});
  CHECK(cutvertices(cycle_graph(5)).empty());
  CHECK(cutvertices(path_graph(4)) == std::vector<int>{1, 2});
}

TEST_CASE("cutvertices agree with remove-and-recount") {
  Rng rng(4);
  for (int i = 0; i < 200; ++i) {
    const Graph g = random_graph(1 + i % 10, 0.3, rng);
    const int base = component_count(g);
    std::vector<int> naive;
    for (int v = 0; v < g.order(); ++v) {
      if (components_without(g, v) > base - 1 + (g.degree(v) == 0 ? 0 : 1)) naive.push_back(v);
    }
    CHECK(cutvertices(g) == naive);
  }
}

TEST_CASE("blocks and bridges of a bowtie with a pendant") {
  const Graph g(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 4}, {4, 5}});
  CHECK(blocks(g).size() == 3);
  CHECK(bridge_edges(g) == std::vector<Edge>{{4, 5}});
}

TEST_CASE("two_cuts") {
  CHECK(two_cuts(cycle_graph(5)).size() == 5);
  CHECK(two_cuts(complete_graph(4)).empty());
  const auto cuts = two_cuts(theta(3, 3));
  CHECK(std::find(cuts.begin(), cuts.end(), std::pair{0, 1}) != cuts.end());
  CHECK_THROWS_AS(two_cuts(path_graph(3)), std::invalid_argument);
}

TEST_CASE("two_cuts agree with brute force") {
  Rng rng(5);
  int tested = 0;
  while (tested < 40) {
    const Graph g = random_graph(7, 0.5, rng);
    if (!is_connected(g) || !cutvertices(g).empty()) continue;
    ++tested;
    std::vector<std::pair<int, int>> naive;
    for (int u = 0; u < 7; ++u) {
      for (int v = u + 1; v < 7; ++v) {
        VertexSet rest{g.vertex_mask()};
        rest.erase(u);
        rest.erase(v);
        if (connected_components(g, rest).size() >= 2) naive.push_back({u, v});
      }
    }
    CHECK(two_cuts(g) == naive);
  }
}

TEST_CASE("all_cycles examples") {
  CHECK(all_cycles(cycle_graph(5), 10).size() == 1);
  CHECK(all_cycles(complete_graph(4), 4).size() == 7);
  CHECK(all_cycles(path_graph(6), 6).empty());
}

TEST_CASE("all_cycles agrees with a subset oracle") {
  for (int n = 3; n <= 5; ++n) {
    for_each_labeled_graph(n, [&](const Graph& g) {
      CHECK(static_cast<int>(all_cycles(g, n).size()) == naive_cycle_count(g, n));
    });
  }
  Rng rng(6);
  for (int i = 0; i < 100; ++i) {
    const Graph g = random_graph(7, 0.45, rng);
    for (int len : {4, 7}) CHECK(static_cast<int>(all_cycles(g, len).size()) == naive_cycle_count(g, len));
  }
}

TEST_CASE("cycles are normalized and distinct") {
  const auto cycles = all_cycles(complete_graph(5), 5);
  std::set<Cycle> unique(cycles.begin(), cycles.end());
  CHECK(unique.size() == cycles.size());
  for (const Cycle& c : cycles) CHECK(normalize_cycle(c) == c);
}

TEST_CASE("graph6 examples") {
  CHECK(encode_graph6(Graph(0)) == "?");
  CHECK(encode_graph6(path_graph(3)) == "Bg");
  CHECK(decode_graph6("Bg") == path_graph(3));
  CHECK(encode_graph6(cycle_graph(5)) == "Dhc");
}

TEST_CASE("graph6 round trip") {
  Rng rng(7);
  for (int i = 0; i < 300; ++i) {
    const Graph g = random_graph(i % 13, 0.5, rng);
    CHECK(decode_graph6(encode_graph6(g)) == g);
  }
  const Graph big = random_graph(62, 0.1, rng);
  CHECK(decode_graph6(encode_graph6(big)) == big);
}

TEST_CASE("malformed graph6 is rejected") {
  CHECK_THROWS_AS(decode_graph6(""), std::invalid_argument);
  CHECK_THROWS_AS(decode_graph6("Bgg"), std::invalid_argument);
  CHECK_THROWS_AS(decode_graph6("B"), std::invalid_argument);
  CHECK_THROWS_AS(decode_graph6("Bh"), std::invalid_argument);  // nonzero padding
  CHECK_THROWS_AS(decode_graph6("~"), std::logic_error);
  CHECK_THROWS_AS(decode_graph6("B "), std::invalid_argument);
}

TEST_CASE("dot export") {
  CHECK(to_dot(path_graph(3)) == "graph G { 0 -- 1; 1 -- 2; }");
}

}
