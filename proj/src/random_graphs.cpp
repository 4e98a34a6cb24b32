#include "spx/random_graphs.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "spx/construct.hpp"

namespace spx {

Graph random_relabel(const Graph& g, Rng& rng) {
  std::vector<int> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return g.relabeled(perm);
}

Graph random_graph(int n, double p, Rng& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.push_back({u, v});
    }
  }
  return Graph(n, edges);
}

Graph random_series_parallel(int n, double keep, Rng& rng) {
  std::vector<Edge> tree;
  if (n >= 2) tree.push_back({0, 1});
  for (int v = 2; v < n; ++v) {
    const Edge base = tree[std::uniform_int_distribution<std::size_t>(0, tree.size() - 1)(rng)];
    tree.push_back({base.u, v});
    tree.push_back({base.v, v});
  }
  std::bernoulli_distribution coin(keep);
  std::vector<Edge> kept;
  std::copy_if(tree.begin(), tree.end(), std::back_inserter(kept), [&](const Edge&) { return coin(rng); });
  return random_relabel(Graph(n, kept), rng);
}

namespace {

// Glues `piece` onto `host` by identifying piece vertex 0 with host vertex at.
Graph glue(const Graph& host, const Graph& piece, int at) {
  const int offset = host.order() - 1;
  std::vector<Edge> edges = host.edges();
  auto map = [&](int v) { return v == 0 ? at : v + offset; };
  for (const Edge& e : piece.edges()) edges.push_back(Edge::of(map(e.u), map(e.v)));
  return Graph(host.order() + piece.order() - 1, edges);
}

Graph cycle_graph(int len) {
  std::vector<Edge> edges;
  for (int i = 0; i < len; ++i) edges.push_back(Edge::of(i, (i + 1) % len));
  return Graph(len, edges);
}

Graph path_graph(int len) {
  std::vector<Edge> edges;
  for (int i = 0; i < len; ++i) edges.push_back({i, i + 1});
  return Graph(len + 1, edges);
}

}  // namespace

Graph random_girth5_with_cutvertex(int max_n, Rng& rng) {
  if (max_n < 7 || max_n > kMaxVertices) {
    throw std::invalid_argument("random_girth5_with_cutvertex: max_n must be in [7, 62]");
  }
  const std::vector<Graph> blocks{cycle_graph(5), cycle_graph(6), cycle_graph(7), g5_family(3),
                                  theta(3, 3), subdivide(g5_family(3), kG5ThreePathEdge)};
  const std::vector<Graph> pendants{path_graph(1), path_graph(2)};

  const auto fits = [](const std::vector<Graph>& from, int room) {
    std::vector<Graph> out;
    std::copy_if(from.begin(), from.end(), std::back_inserter(out),
                 [&](const Graph& p) { return p.order() - 1 <= room; });
    return out;
  };
  auto pick = [&](const std::vector<Graph>& from) {
    return from[std::uniform_int_distribution<std::size_t>(0, from.size() - 1)(rng)];
  };

  std::vector<Graph> first = fits(blocks, max_n - 2);
  Graph g = pick(first);
  const int target = std::uniform_int_distribution<int>(g.order() + 1, max_n)(rng);
  std::bernoulli_distribution prefer_block(0.6);
  while (g.order() < target) {
    const int room = target - g.order();
    std::vector<Graph> options = fits(prefer_block(rng) ? blocks : pendants, room);
    if (options.empty()) options = fits(pendants, room);
    const int at = std::uniform_int_distribution<int>(0, g.order() - 1)(rng);
    g = glue(g, pick(options), at);
  }
  return random_relabel(g, rng);
}

}  // namespace spx
