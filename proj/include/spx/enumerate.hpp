#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spx/construct.hpp"
#include "spx/invariants.hpp"

namespace spx {

enum class SearchMode { max_only, max_and_enumerate, count_at_edges };

// Which graphs count toward the maximum and the extremal list. The whole
// space (including disconnected graphs) is always explored; the scope only
// filters what is recorded.
enum class Scope { two_connected, any_graph };

inline constexpr int kMaxSearchOrder = 12;

struct SearchConfig {
  int n = 0;
  int g = 4;
  SearchMode mode = SearchMode::max_and_enumerate;
  int target_edges = 0;  // count_at_edges only
  Scope scope = Scope::two_connected;
  bool upper_bound_pruning = true;
  // 0 runs the serial reference search; N >= 1 splits the top of the tree
  // into tasks run on N OpenMP threads. Results do not depend on N >= 1.
  int parallel_width = 1;
};

struct ExtremalResult {
  GirthClassParams params;
  Scope scope = Scope::two_connected;
  // Maximum edge count, or the target in count_at_edges mode; empty when no
  // graph on n vertices is in scope.
  std::optional<int> max_edges;
  // Sorted canonical forms; empty in max_only mode.
  std::vector<CanonicalForm> extremal;
  std::uint64_t nodes_explored = 0;
  std::chrono::duration<double, std::milli> elapsed{};
};

// Exhaustive search over graphs on n vertices with girth >= g and no K4
// minor, one labeled representative per isomorphism class. Requires
// 3 <= n <= 12 and g >= 4.
ExtremalResult extremal_search(const SearchConfig& cfg);

// The bound statements quantify over all graphs, so this searches in
// Scope::any_graph.
struct BoundReport {
  int n = 0;
  int g = 0;
  int max_edges = 0;
  std::optional<int> bound;  // absent when no closed form applies
  bool within_bound = true;
  bool tight = false;
};

BoundReport verify_bound(int n, int g, int parallel_width = 1);

struct EdgeClassCount {
  int count = 0;
  std::vector<CanonicalForm> graphs;
};

EdgeClassCount count_at_edges(int n, int g, int m, Scope scope = Scope::two_connected,
                              int parallel_width = 1);

inline constexpr int kMaxBruteForceOrder = 7;
// Filters every labeled graph on n <= 7 vertices; reference for tests.
ExtremalResult brute_force_search(int n, int g, Scope scope = Scope::two_connected);

bool in_scope(const Graph& g, Scope scope);
std::string to_string(Scope scope);

}  // namespace spx
