#include <doctest.h>

#include <map>
#include <set>

#include "spx/construct.hpp"
#include "spx/enumerate.hpp"
#include "support.hpp"

using namespace spx;
using namespace spx::test;

namespace {

ExtremalResult search(int n, int g, Scope scope = Scope::two_connected, int width = 1,
                      bool prune = true) {
  return extremal_search({n, g, SearchMode::max_and_enumerate, 0, scope, prune, width});
}

std::vector<CanonicalForm> forms_of(std::initializer_list<Graph> graphs) {
  std::vector<CanonicalForm> out;
  for (const Graph& g : graphs) out.push_back(canonical_form(g));
  std::sort(out.begin(), out.end());
  return out;
}

// All classes in the family on exactly n vertices, built by adding one vertex
// at a time. Deleting a vertex keeps girth >= g and K4-minor-freeness, so
// every class arises from some class one vertex smaller.
class VertexAugmentation {
 public:
  explicit VertexAugmentation(int g) : g_(g) { levels_.push_back({CanonicalForm{"?"}}); }

  const std::set<CanonicalForm>& level(int n) {
    while (static_cast<int>(levels_.size()) <= n) grow();
    return levels_[n];
  }

 private:
  void grow() {
    std::set<CanonicalForm> next;
    for (const CanonicalForm& c : levels_.back()) {
      const Graph base = decode_graph6(c.graph6);
      const int n = base.order();
      for (Bits nbrs = 0; nbrs < (Bits{1} << n); ++nbrs) {
        std::vector<Edge> edges = base.edges();
        for_each_bit(nbrs, [&](int v) { edges.push_back({v, n}); });
        const Graph h(n + 1, edges);
        if (girth(h).at_least(g_) && is_k4_minor_free(h)) next.insert(canonical_form(h));
      }
    }
    levels_.push_back(std::move(next));
  }

  int g_;
  std::vector<std::set<CanonicalForm>> levels_;
};

void expect_matches_oracle(const ExtremalResult& r, const std::set<CanonicalForm>& family,
                           Scope scope) {
  int best = -1;
  std::vector<CanonicalForm> extremal;
  for (const CanonicalForm& c : family) {
    const Graph g = decode_graph6(c.graph6);
    if (!in_scope(g, scope)) continue;
    if (g.edge_count() > best) {
      best = g.edge_count();
      extremal.clear();
    }
    if (g.edge_count() == best) extremal.push_back(c);
  }
  CHECK(r.max_edges == (best < 0 ? std::optional<int>{} : std::optional<int>{best}));
  CHECK(r.extremal == extremal);
}

}  // namespace

TEST_SUITE("enumerate") {

TEST_CASE("small extremal examples") {
  const ExtremalResult c5 = search(5, 5);
  CHECK(c5.max_edges == 5);
  CHECK(c5.extremal == forms_of({cycle_graph(5)}));

  const ExtremalResult t = search(8, 6);
  CHECK(t.max_edges == 9);
  CHECK(t.extremal == forms_of({theta(3, 3)}));

  const ExtremalResult c4 = search(4, 4);
  CHECK(c4.max_edges == 4);
  CHECK(c4.extremal == forms_of({cycle_graph(4)}));

  CHECK(search(6, 4).extremal == forms_of({theta(2, 4)}));
}

TEST_CASE("n = 10, girth 5 has nine 2-connected extremal classes") {
  const ExtremalResult r = search(10, 5);
  CHECK(r.max_edges == 12);
  REQUIRE(r.extremal.size() == 9);
  std::set<CanonicalForm> found(r.extremal.begin(), r.extremal.end());
  for (const Graph& h : h_catalog()) CHECK(found.count(canonical_form(h)) == 1);
  CHECK(found.count(CanonicalForm{"I?CaJAHk?"}) == 1);
  CHECK(search(10, 5, Scope::any_graph).extremal.size() == 17);
}

TEST_CASE("every listed graph passes independent checks") {
  for (auto [n, g] : {std::pair{9, 5}, {10, 5}, {9, 6}, {8, 4}}) {
    for (Scope scope : {Scope::two_connected, Scope::any_graph}) {
      const ExtremalResult r = search(n, g, scope);
      REQUIRE(r.max_edges);
      CHECK(std::is_sorted(r.extremal.begin(), r.extremal.end()));
      CHECK(std::adjacent_find(r.extremal.begin(), r.extremal.end()) == r.extremal.end());
      for (const CanonicalForm& c : r.extremal) {
        const Graph h = decode_graph6(c.graph6);
        CHECK(h.order() == n);
        CHECK(h.edge_count() == *r.max_edges);
        CHECK(girth(h).at_least(g));
        CHECK(is_k4_minor_free(h));
        CHECK(in_scope(h, scope));
        CHECK(canonical_form(h) == c);
      }
    }
  }
}

TEST_CASE("results do not depend on thread count or pruning") {
  for (auto [n, g] : {std::pair{9, 5}, {10, 5}, {10, 6}, {8, 4}}) {
    const ExtremalResult ref = search(n, g, Scope::two_connected, 0);
    for (int width : {1, 2, 4}) {
      const ExtremalResult r = search(n, g, Scope::two_connected, width);
      CHECK(r.max_edges == ref.max_edges);
      CHECK(r.extremal == ref.extremal);
    }
    const ExtremalResult unpruned = search(n, g, Scope::two_connected, 1, false);
    CHECK(unpruned.max_edges == ref.max_edges);
    CHECK(unpruned.extremal == ref.extremal);
    CHECK(unpruned.nodes_explored >= search(n, g).nodes_explored);
  }
}

TEST_CASE("repeated runs give identical node counts") {
  const ExtremalResult a = search(10, 5, Scope::two_connected, 2);
  const ExtremalResult b = search(10, 5, Scope::two_connected, 3);
  CHECK(a.nodes_explored == b.nodes_explored);
}

TEST_CASE("max-only mode") {
  const ExtremalResult r =
      extremal_search({10, 5, SearchMode::max_only, 0, Scope::two_connected, true, 1});
  CHECK(r.max_edges == 12);
  CHECK(r.extremal.empty());
}

TEST_CASE("count at edges") {
  CHECK(count_at_edges(10, 5, 12).count == 9);
  CHECK(count_at_edges(5, 5, 6).count == 0);
  const EdgeClassCount c6 = count_at_edges(6, 5, 6);
  CHECK(c6.count == 1);
  CHECK(c6.graphs == forms_of({cycle_graph(6)}));
  CHECK(count_at_edges(6, 5, 6, Scope::any_graph).count == 2);
  CHECK(count_at_edges(10, 5, 11, Scope::any_graph, 2).count ==
        count_at_edges(10, 5, 11, Scope::any_graph, 0).count);
}

TEST_CASE("verify_bound") {
  const BoundReport seven = verify_bound(7, 5);
  CHECK(seven.max_edges == 8);
  CHECK(seven.bound == 8);
  CHECK(seven.tight);
  const BoundReport six = verify_bound(6, 5);
  CHECK(six.max_edges == 6);
  CHECK(six.tight);
  const BoundReport odd = verify_bound(7, 6);
  CHECK(odd.bound == 7);
  CHECK(odd.max_edges == 7);
  CHECK(odd.within_bound);
  const BoundReport seven_girth = verify_bound(8, 7);
  CHECK_FALSE(seven_girth.bound);
  CHECK(seven_girth.max_edges == 8);
}

TEST_CASE("n = 7 girth 5 counts") {
  CHECK(search(7, 5).extremal.size() == 1);
  CHECK(search(7, 5, Scope::any_graph).extremal.size() == 1);
  CHECK(count_at_edges(7, 5, 7).count == 1);
  CHECK(count_at_edges(7, 5, 7, Scope::any_graph).count == 6);
}

TEST_CASE("count at edges equals vertex augmentation") {
  for (int g : {5, 6}) {
    VertexAugmentation oracle(g);
    for (int n = 5; n <= 9; ++n) {
      for (int m = n - 1; m <= n + 3; ++m) {
        for (Scope scope : {Scope::two_connected, Scope::any_graph}) {
          std::vector<CanonicalForm> expected;
          for (const CanonicalForm& c : oracle.level(n)) {
            const Graph h = decode_graph6(c.graph6);
            if (h.edge_count() == m && in_scope(h, scope)) expected.push_back(c);
          }
          const EdgeClassCount got = count_at_edges(n, g, m, scope);
          CHECK(got.count == static_cast<int>(expected.size()));
          CHECK(got.graphs == expected);
        }
      }
    }
  }
}

TEST_CASE("size guards") {
  CHECK_THROWS_AS(search(13, 5), std::logic_error);
  CHECK_THROWS_AS(search(2, 5), std::logic_error);
  CHECK_THROWS_AS(search(6, 3), std::logic_error);
  CHECK_THROWS_AS(brute_force_search(8, 5), std::logic_error);
}

TEST_CASE("search equals brute force on small orders") {
  for (int n = 3; n <= 6; ++n) {
    for (int g = 4; g <= 6; ++g) {
      for (Scope scope : {Scope::two_connected, Scope::any_graph}) {
        const ExtremalResult a = search(n, g, scope), b = brute_force_search(n, g, scope);
        CHECK(a.max_edges == b.max_edges);
        CHECK(a.extremal == b.extremal);
      }
    }
  }
}

TEST_CASE("search equals vertex augmentation up to ten vertices") {
  for (int g : {4, 5, 6}) {
    VertexAugmentation oracle(g);
    const int top = g == 4 ? 8 : 10;
    for (int n = 3; n <= top; ++n) {
      const auto& family = oracle.level(n);
      for (Scope scope : {Scope::two_connected, Scope::any_graph}) {
        CAPTURE(n);
        CAPTURE(g);
        expect_matches_oracle(search(n, g, scope), family, scope);
      }
    }
  }
}

}
