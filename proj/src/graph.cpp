#include "spx/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace spx {

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  out.reserve(size());
  for_each_bit(bits_, [&](int v) { out.push_back(v); });
  return out;
}

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices) {
    throw std::length_error("graph order must be in [0, 62], got " + std::to_string(n));
  }
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (const Edge& e : edges) {
    check_vertex(e.u);
    check_vertex(e.v);
    if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
    adj_[e.u] |= bit(e.v);
    adj_[e.v] |= bit(e.u);
  }
}

Graph Graph::from_rows(std::span<const Bits> rows) {
  Graph g(static_cast<int>(rows.size()));
  const Bits mask = g.vertex_mask();
  for (int v = 0; v < g.n_; ++v) {
    if ((rows[v] & ~mask) != 0 || ((rows[v] >> v) & 1U)) {
      throw std::invalid_argument("adjacency row out of range or reflexive");
    }
    g.adj_[v] = rows[v];
  }
  for (int v = 0; v < g.n_; ++v) {
    for_each_bit(rows[v], [&](int w) {
      if (!((rows[w] >> v) & 1U)) throw std::invalid_argument("adjacency rows not symmetric");
    });
  }
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range for order " +
                            std::to_string(n_));
  }
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += std::popcount(adj_[v]);
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u) {
    for_each_bit(adj_[u] & ~low_bits(u + 1), [&](int v) { out.push_back({u, v}); });
  }
  return out;
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> out(n_);
  for (int v = 0; v < n_; ++v) out[v] = degree(v);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

Graph Graph::with_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  Graph g = *this;
  g.adj_[u] |= bit(v);
  g.adj_[v] |= bit(u);
  return g;
}

Graph Graph::without_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  Graph g = *this;
  g.adj_[u] &= ~bit(v);
  g.adj_[v] &= ~bit(u);
  return g;
}

Graph Graph::relabeled(std::span<const int> new_label) const {
  if (static_cast<int>(new_label.size()) != n_) {
    throw std::invalid_argument("relabeling has wrong length");
  }
  Bits seen = 0;
  for (int l : new_label) {
    check_vertex(l);
    seen |= bit(l);
  }
  if (seen != vertex_mask()) throw std::invalid_argument("relabeling is not a permutation");
  Graph g(n_);
  for (int v = 0; v < n_; ++v) {
    for_each_bit(adj_[v], [&](int w) { g.adj_[new_label[v]] |= bit(new_label[w]); });
  }
  return g;
}

Graph Graph::without_vertices(VertexSet removed) const {
  Graph g = *this;
  for (int v = 0; v < n_; ++v) {
    g.adj_[v] = removed.contains(v) ? 0 : g.adj_[v] & ~removed.bits();
  }
  return g;
}

bool operator==(const Graph& a, const Graph& b) {
  return a.n_ == b.n_ && std::equal(a.adj_.begin(), a.adj_.begin() + a.n_, b.adj_.begin());
}

Distance distance(const Graph& g, int u, int v) {
  const Bits all = g.vertex_mask();
  if (u < 0 || u >= g.order() || v < 0 || v >= g.order()) {
    throw std::out_of_range("distance: vertex out of range");
  }
  Bits reached = bit(u);
  Bits frontier = reached;
  for (int d = 0; frontier != 0; ++d) {
    if (reached & bit(v)) return d;
    Bits next = 0;
    for_each_bit(frontier, [&](int w) { next |= g.neighbors(w); });
    frontier = next & ~reached & all;
    reached |= frontier;
  }
  return kUnreachable;
}

namespace {

Bits component_of(const Graph& g, int start, Bits within) {
  Bits comp = bit(start);
  Bits frontier = comp;
  while (frontier != 0) {
    Bits next = 0;
    for_each_bit(frontier, [&](int w) { next |= g.neighbors(w); });
    frontier = next & within & ~comp;
    comp |= frontier;
  }
  return comp;
}

}  // namespace

std::vector<VertexSet> connected_components(const Graph& g, VertexSet within) {
  std::vector<VertexSet> out;
  Bits left = within.bits() & g.vertex_mask();
  while (left != 0) {
    const Bits comp = component_of(g, std::countr_zero(left), within.bits());
    out.emplace_back(comp);
    left &= ~comp;
  }
  return out;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  return connected_components(g, VertexSet(g.vertex_mask()));
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

namespace {

// Hopcroft-Tarjan lowpoint DFS; collects articulation points, blocks and
// bridges in one pass.
struct BlockDecomposition {
  std::vector<int> cut;
  std::vector<VertexSet> blocks;
  std::vector<Edge> bridges;
};

BlockDecomposition decompose(const Graph& g) {
  const int n = g.order();
  BlockDecomposition out;
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<bool> is_cut(n, false);
  std::vector<Edge> stack;
  int timer = 0;

  std::function<void(int, int)> dfs = [&](int v, int parent) {
    disc[v] = low[v] = timer++;
    int children = 0;
    for_each_bit(g.neighbors(v), [&](int w) {
      if (w == parent) return;
      if (disc[w] == -1) {
        stack.push_back({v, w});
        ++children;
        dfs(w, v);
        low[v] = std::min(low[v], low[w]);
        if (low[w] >= disc[v]) {
          if (parent != -1) is_cut[v] = true;
          VertexSet block;
          Edge e{};
          int edges_in_block = 0;
          do {
            e = stack.back();
            stack.pop_back();
            block.insert(e.u);
            block.insert(e.v);
            ++edges_in_block;
          } while (!(e.u == v && e.v == w));
          out.blocks.push_back(block);
          if (edges_in_block == 1) out.bridges.push_back(Edge::of(v, w));
        }
      } else if (disc[w] < disc[v]) {
        stack.push_back({v, w});
        low[v] = std::min(low[v], disc[w]);
      }
    });
    if (parent == -1 && children > 1) is_cut[v] = true;
  };

  for (int v = 0; v < n; ++v) {
    if (disc[v] == -1) dfs(v, -1);
  }
  for (int v = 0; v < n; ++v) {
    if (is_cut[v]) out.cut.push_back(v);
  }
  std::sort(out.blocks.begin(), out.blocks.end(),
            [](VertexSet a, VertexSet b) { return a.bits() < b.bits(); });
  std::sort(out.bridges.begin(), out.bridges.end());
  return out;
}

}  // namespace

std::vector<int> cutvertices(const Graph& g) { return decompose(g).cut; }

std::vector<VertexSet> blocks(const Graph& g) { return decompose(g).blocks; }

std::vector<Edge> bridge_edges(const Graph& g) { return decompose(g).bridges; }

std::vector<std::pair<int, int>> two_cuts(const Graph& g) {
  if (!is_connected(g) || !cutvertices(g).empty()) {
    throw std::invalid_argument("two_cuts requires a connected graph without cutvertices");
  }
  std::vector<std::pair<int, int>> out;
  const Bits all = g.vertex_mask();
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      const VertexSet rest(all & ~bit(u) & ~bit(v));
      if (connected_components(g, rest).size() >= 2) out.emplace_back(u, v);
    }
  }
  return out;
}

Cycle normalize_cycle(std::span<const int> cycle) {
  const auto len = cycle.size();
  Cycle out(cycle.begin(), cycle.end());
  if (len < 3) return out;
  const auto start = static_cast<std::size_t>(
      std::min_element(cycle.begin(), cycle.end()) - cycle.begin());
  const int next = cycle[(start + 1) % len];
  const int prev = cycle[(start + len - 1) % len];
  const bool forward = next < prev;
  for (std::size_t i = 0; i < len; ++i) {
    out[i] = forward ? cycle[(start + i) % len] : cycle[(start + len - i) % len];
  }
  return out;
}

std::vector<Cycle> all_cycles(const Graph& g, int max_len) {
  if (g.order() > kMaxCycleListOrder) {
    throw std::length_error("all_cycles: order " + std::to_string(g.order()) +
                            " exceeds limit of 14");
  }
  std::vector<Cycle> out;
  Cycle path;
  // Cycles rooted at their least vertex s, extended only through larger
  // vertices; the reversal is skipped by requiring path[1] < last.
  for (int s = 0; s < g.order(); ++s) {
    const Bits allowed = g.vertex_mask() & ~low_bits(s + 1);
    std::function<void(int, Bits)> extend = [&](int v, Bits used) {
      if (static_cast<int>(path.size()) >= 3 && g.adjacent(v, s) && path[1] < v) {
        out.push_back(path);
      }
      if (static_cast<int>(path.size()) >= max_len) return;
      for_each_bit(g.neighbors(v) & allowed & ~used, [&](int w) {
        path.push_back(w);
        extend(w, used | bit(w));
        path.pop_back();
      });
    };
    path.assign(1, s);
    extend(s, bit(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  std::string out(1, static_cast<char>(n + 63));
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

Graph decode_graph6(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("graph6: empty string");
  for (char c : s) {
    if (c < 63 || c > 126) throw std::invalid_argument("graph6: byte out of printable range");
  }
  if (s[0] == 126) throw std::length_error("graph6: orders above 62 are not supported");
  const int n = s[0] - 63;
  if (n > kMaxVertices) throw std::length_error("graph6: orders above 62 are not supported");
  const int bits = n * (n - 1) / 2;
  const std::size_t expected = 1 + static_cast<std::size_t>((bits + 5) / 6);
  if (s.size() != expected) {
    throw std::invalid_argument("graph6: expected " + std::to_string(expected) +
                                " bytes for order " + std::to_string(n) + ", got " +
                                std::to_string(s.size()));
  }
  std::array<Bits, kMaxVertices> rows{};
  int k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int group = s[1 + k / 6] - 63;
      if ((group >> (5 - k % 6)) & 1) {
        rows[i] |= bit(j);
        rows[j] |= bit(i);
      }
    }
  }
  if (bits % 6 != 0) {
    const int pad = 6 - bits % 6;
    if (((s.back() - 63) & ((1 << pad) - 1)) != 0) {
      throw std::invalid_argument("graph6: nonzero padding bits");
    }
  }
  return Graph::from_rows({rows.data(), static_cast<std::size_t>(n)});
}

std::string to_dot(const Graph& g) {
  std::ostringstream os;
  os << "graph G {";
  for (const Edge& e : g.edges()) os << ' ' << e.u << " -- " << e.v << ';';
  os << " }";
  return os.str();
}

}  // namespace spx
