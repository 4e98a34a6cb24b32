#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>

#include "spx/graph.hpp"

namespace spx {

// Shortest cycle length, or acyclic. An acyclic graph satisfies every
// lower girth bound.
class Girth {
 public:
  static constexpr Girth acyclic() { return Girth(0); }
  static Girth finite(int g);

  constexpr bool is_acyclic() const { return value_ == 0; }
  // Requires !is_acyclic().
  int value() const;
  constexpr bool at_least(int g) const { return value_ == 0 || value_ >= g; }
  std::string to_string() const;

  friend constexpr bool operator==(Girth, Girth) = default;

 private:
  constexpr explicit Girth(int v) : value_(v) {}
  int value_;
};

Girth girth(const Graph& g);

// Treewidth-2 reduction on raw adjacency rows.
bool is_k4_minor_free(std::span<const Bits> rows);
bool is_k4_minor_free(const Graph& g);

// Branch sets of a K4 minor. The search looks for a subdivision of K4,
// which exists exactly when a K4 minor does (K4 has maximum degree 3).
using K4Model = std::array<VertexSet, 4>;
inline constexpr int kMaxMinorSearchOrder = 32;
std::optional<K4Model> find_k4_minor(const Graph& g);
// Independent certificate check: disjoint, connected, pairwise adjacent.
bool is_k4_model(const Graph& g, const K4Model& model);

// Lexicographically least graph6 string over all relabelings.
struct CanonicalForm {
  std::string graph6;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

inline constexpr int kMaxCanonicalOrder = 14;
CanonicalForm canonical_form(const Graph& g);
bool are_isomorphic(const Graph& a, const Graph& b);

// Is the identity labeling's column-order adjacency string the maximum over
// all relabelings? Drives orderly generation; any order up to 62.
bool is_max_canonical(std::span<const Bits> rows);

}  // namespace spx
