#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace spx {

// Row of an adjacency matrix, one bit per vertex.
using Bits = std::uint64_t;

inline constexpr int kMaxVertices = 62;

struct Edge {
  int u = 0;
  int v = 0;

  // Normalized so that u < v.
  static constexpr Edge of(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }
  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

inline constexpr Bits bit(int v) { return Bits{1} << v; }
inline constexpr Bits low_bits(int n) { return n >= 64 ? ~Bits{0} : bit(n) - 1; }

// Calls fn(v) for every set bit v of mask, ascending.
template <class Fn>
inline void for_each_bit(Bits mask, Fn&& fn) {
  while (mask != 0) {
    const int v = std::countr_zero(mask);
    mask &= mask - 1;
    fn(v);
  }
}

class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(Bits bits) : bits_(bits) {}

  constexpr Bits bits() const { return bits_; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int least() const { return std::countr_zero(bits_); }
  constexpr void insert(int v) { bits_ |= bit(v); }
  constexpr void erase(int v) { bits_ &= ~bit(v); }

  std::vector<int> members() const;

  friend constexpr bool operator==(VertexSet, VertexSet) = default;

 private:
  Bits bits_ = 0;
};

// Simple undirected graph on vertices 0..n-1, n <= 62, stored as
// per-vertex bit rows. Values are immutable; rewrites return new graphs.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  // Rows must be symmetric and irreflexive; checked.
  static Graph from_rows(std::span<const Bits> rows);

  int order() const { return n_; }
  int edge_count() const;
  bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1U; }
  Bits neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return std::popcount(adj_[v]); }
  Bits vertex_mask() const { return low_bits(n_); }
  std::span<const Bits> rows() const { return {adj_.data(), static_cast<std::size_t>(n_)}; }

  // Sorted ascending by (u, v) with u < v.
  std::vector<Edge> edges() const;
  std::vector<int> degree_sequence() const;  // descending

  Graph with_edge(int u, int v) const;
  Graph without_edge(int u, int v) const;
  // new_label[v] is the label of v in the result; must be a permutation.
  Graph relabeled(std::span<const int> new_label) const;
  // Same vertex range, all edges touching `removed` dropped.
  Graph without_vertices(VertexSet removed) const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::array<Bits, kMaxVertices> adj_{};
};

// Shortest-path length; std::nullopt means unreachable.
using Distance = std::optional<int>;
inline constexpr std::nullopt_t kUnreachable = std::nullopt;

Distance distance(const Graph& g, int u, int v);

// Partition into components, sorted by least vertex.
std::vector<VertexSet> connected_components(const Graph& g);
// Components of g restricted to the vertices in `within`.
std::vector<VertexSet> connected_components(const Graph& g, VertexSet within);
bool is_connected(const Graph& g);

std::vector<int> cutvertices(const Graph& g);

// Biconnected components as edge-disjoint vertex sets; isolated vertices
// are not blocks.
std::vector<VertexSet> blocks(const Graph& g);
// Edges whose removal disconnects their component.
std::vector<Edge> bridge_edges(const Graph& g);

// Requires g connected without a cutvertex; throws std::invalid_argument otherwise.
std::vector<std::pair<int, int>> two_cuts(const Graph& g);

using Cycle = std::vector<int>;
inline constexpr int kMaxCycleListOrder = 14;

// Every simple cycle of length <= max_len once, rotated so the least vertex
// comes first and its smaller cycle-neighbor second.
std::vector<Cycle> all_cycles(const Graph& g, int max_len);
// Same normalization applied to an arbitrary cycle vertex sequence.
Cycle normalize_cycle(std::span<const int> cycle);

std::string encode_graph6(const Graph& g);
Graph decode_graph6(std::string_view s);

// `graph G { u -- v; ... }` with ascending edges.
std::string to_dot(const Graph& g);

}  // namespace spx
