#include "spx/enumerate.hpp"

#include <omp.h>

#include <algorithm>
#include <stdexcept>
#include <string>

namespace spx {

namespace {

constexpr int kMaxPositions = kMaxSearchOrder * (kMaxSearchOrder - 1) / 2;

// Augmentation tree below this many edges is expanded serially and the
// nodes at this depth become parallel tasks. Fixed so that node counts do
// not depend on the thread count.
constexpr int kSplitDepth = 5;

using Rows = std::array<Bits, kMaxSearchOrder>;

struct Node {
  Rows rows{};
  int edges = 0;
  int last = -1;  // position of the last inserted edge
};

struct Outcome {
  int best = -1;
  std::vector<Rows> graphs;
  std::uint64_t nodes = 0;
};

class OrderlySearch {
 public:
  explicit OrderlySearch(const SearchConfig& cfg)
      : cfg_(cfg), n_(cfg.n), bound_(closed_form_bound(cfg.n, cfg.g)) {
    // Graph6 column order: (0,1), (0,2), (1,2), (0,3), ...
    for (int j = 1; j < n_; ++j) {
      for (int i = 0; i < j; ++i) positions_.push_back({i, j});
    }
  }

  // Serial reference: the whole tree in one pass.
  Outcome run_serial() const {
    Outcome out;
    visit(Node{}, out);
    return out;
  }

  Outcome run_parallel(int width) const {
    Outcome prefix;
    std::vector<Node> tasks;
    expand_prefix(Node{}, prefix, tasks);

    std::vector<Outcome> results(tasks.size());
    const int count = static_cast<int>(tasks.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(width)
    for (int t = 0; t < count; ++t) {
      results[t].best = prefix.best;
      visit(tasks[t], results[t]);
    }

    Outcome merged;
    merged.nodes = prefix.nodes;
    merged.best = prefix.best;
    for (const Outcome& r : results) {
      merged.nodes += r.nodes;
      merged.best = std::max(merged.best, r.best);
    }
    // In count mode every outcome holds graphs at the target; otherwise only
    // outcomes that reached the overall maximum contribute.
    const bool counting = cfg_.mode == SearchMode::count_at_edges;
    if (counting || prefix.best == merged.best) merged.graphs = std::move(prefix.graphs);
    for (Outcome& r : results) {
      if (counting || r.best == merged.best) {
        merged.graphs.insert(merged.graphs.end(), r.graphs.begin(), r.graphs.end());
      }
    }
    return merged;
  }

 private:
  void record(const Node& node, Outcome& out) const {
    ++out.nodes;
    if (cfg_.scope == Scope::two_connected &&
        !in_scope(Graph::from_rows(std::span<const Bits>(node.rows.data(), n_)), cfg_.scope)) {
      return;
    }
    switch (cfg_.mode) {
      case SearchMode::count_at_edges:
        if (node.edges == cfg_.target_edges) out.graphs.push_back(node.rows);
        break;
      case SearchMode::max_only:
        out.best = std::max(out.best, node.edges);
        break;
      case SearchMode::max_and_enumerate:
        if (node.edges > out.best) {
          out.best = node.edges;
          out.graphs.clear();
        }
        if (node.edges == out.best) out.graphs.push_back(node.rows);
        break;
    }
  }

  // Within g - 2 steps of each other means the edge would close a cycle
  // shorter than g.
  bool closes_short_cycle(const Rows& rows, int u, int v) const {
    Bits reached = bit(u);
    Bits frontier = reached;
    for (int d = 0; d < cfg_.g - 2 && frontier != 0; ++d) {
      Bits next = 0;
      for_each_bit(frontier, [&](int w) { next |= rows[w]; });
      frontier = next & ~reached;
      reached |= frontier;
      if (reached & bit(v)) return true;
    }
    return false;
  }

  // Positions after `last` whose edge keeps girth >= g and no K4 minor.
  // Both properties are closed under edge deletion, so a position rejected
  // here stays rejected in every descendant.
  int feasible_positions(const Node& node, std::array<int, kMaxPositions>& out) const {
    int count = 0;
    for (int q = node.last + 1; q < static_cast<int>(positions_.size()); ++q) {
      const auto [u, v] = positions_[q];
      if (closes_short_cycle(node.rows, u, v)) continue;
      Rows trial = node.rows;
      trial[u] |= bit(v);
      trial[v] |= bit(u);
      if (!is_k4_minor_free(std::span<const Bits>(trial.data(), n_))) continue;
      out[count++] = q;
    }
    return count;
  }

  bool can_reach(int reachable, const Outcome& out) const {
    if (bound_) reachable = std::min(reachable, *bound_);
    switch (cfg_.mode) {
      case SearchMode::count_at_edges: return reachable >= cfg_.target_edges;
      case SearchMode::max_only: return reachable > out.best;
      case SearchMode::max_and_enumerate: return reachable >= out.best;
    }
    return true;
  }

  bool finished(const Node& node, const Outcome& out) const {
    if (cfg_.mode == SearchMode::count_at_edges) return node.edges >= cfg_.target_edges;
    return cfg_.mode == SearchMode::max_only && cfg_.upper_bound_pruning && bound_ &&
           out.best >= *bound_;
  }

  template <class OnChild>
  void children(const Node& node, const Outcome& out, OnChild&& on_child) const {
    std::array<int, kMaxPositions> feasible{};
    const int count = feasible_positions(node, feasible);
    for (int idx = 0; idx < count; ++idx) {
      if (cfg_.upper_bound_pruning && !can_reach(node.edges + count - idx, out)) break;
      const int q = feasible[idx];
      const auto [u, v] = positions_[q];
      Node child = node;
      child.rows[u] |= bit(v);
      child.rows[v] |= bit(u);
      child.edges += 1;
      child.last = q;
      if (!is_max_canonical(std::span<const Bits>(child.rows.data(), n_))) continue;
      on_child(child);
      if (finished(child, out)) {
        if (cfg_.mode != SearchMode::count_at_edges) return;
      }
    }
  }

  void visit(const Node& node, Outcome& out) const {
    record(node, out);
    if (finished(node, out)) return;
    children(node, out, [&](const Node& child) { visit(child, out); });
  }

  void expand_prefix(const Node& node, Outcome& out, std::vector<Node>& tasks) const {
    if (node.edges == kSplitDepth) {
      tasks.push_back(node);
      return;
    }
    record(node, out);
    if (finished(node, out)) return;
    children(node, out, [&](const Node& child) { expand_prefix(child, out, tasks); });
  }

  const SearchConfig& cfg_;
  int n_;
  std::optional<int> bound_;
  std::vector<std::pair<int, int>> positions_;
};

void check_config(const SearchConfig& cfg) {
  if (cfg.n < 3 || cfg.n > kMaxSearchOrder) {
    throw std::length_error("search order must be in [3, 12], got " + std::to_string(cfg.n));
  }
  if (cfg.g < 4) throw std::invalid_argument("minimum girth must be at least 4");
  if (cfg.parallel_width < 0) throw std::invalid_argument("parallel width must be nonnegative");
  if (cfg.mode == SearchMode::count_at_edges && cfg.target_edges < 0) {
    throw std::invalid_argument("target edge count must be nonnegative");
  }
}

std::vector<CanonicalForm> canonical_list(int n, const std::vector<Rows>& graphs) {
  std::vector<CanonicalForm> out;
  out.reserve(graphs.size());
  for (const Rows& rows : graphs) {
    out.push_back(canonical_form(Graph::from_rows(std::span<const Bits>(rows.data(), n))));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

ExtremalResult extremal_search(const SearchConfig& cfg) {
  check_config(cfg);
  const auto start = std::chrono::steady_clock::now();
  const OrderlySearch search(cfg);
  Outcome outcome =
      cfg.parallel_width == 0 ? search.run_serial() : search.run_parallel(cfg.parallel_width);

  ExtremalResult result;
  result.params = GirthClassParams::make(cfg.n, cfg.g);
  result.scope = cfg.scope;
  if (cfg.mode == SearchMode::count_at_edges) {
    result.max_edges = cfg.target_edges;
  } else if (outcome.best >= 0) {
    result.max_edges = outcome.best;
  }
  if (cfg.mode != SearchMode::max_only) result.extremal = canonical_list(cfg.n, outcome.graphs);
  result.nodes_explored = outcome.nodes;
  result.elapsed = std::chrono::steady_clock::now() - start;
  return result;
}

BoundReport verify_bound(int n, int g, int parallel_width) {
  const ExtremalResult r =
      extremal_search({n, g, SearchMode::max_only, 0, Scope::any_graph, true, parallel_width});
  // The empty graph is always in scope here.
  BoundReport report{n, g, r.max_edges.value(), closed_form_bound(n, g), true, false};
  if (report.bound) {
    report.within_bound = r.max_edges <= *report.bound;
    report.tight = r.max_edges == *report.bound;
  }
  return report;
}

EdgeClassCount count_at_edges(int n, int g, int m, Scope scope, int parallel_width) {
  const ExtremalResult r =
      extremal_search({n, g, SearchMode::count_at_edges, m, scope, true, parallel_width});
  return {static_cast<int>(r.extremal.size()), r.extremal};
}

bool in_scope(const Graph& g, Scope scope) {
  if (scope == Scope::any_graph) return true;
  return g.order() >= 3 && is_connected(g) && cutvertices(g).empty();
}

std::string to_string(Scope scope) {
  return scope == Scope::two_connected ? "two-connected" : "any";
}

ExtremalResult brute_force_search(int n, int g, Scope scope) {
  if (n < 1 || n > kMaxBruteForceOrder) {
    throw std::length_error("brute_force_search: order must be in [1, 7]");
  }
  const auto start = std::chrono::steady_clock::now();
  std::vector<std::pair<int, int>> pairs;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) pairs.push_back({i, j});
  }
  const std::uint32_t total = std::uint32_t{1} << pairs.size();
  int best = -1;
  std::vector<Graph> at_best;
  std::uint64_t nodes = 0;
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    const int edges = std::popcount(mask);
    if (edges < best) continue;
    std::vector<Edge> list;
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      if ((mask >> p) & 1U) list.push_back({pairs[p].first, pairs[p].second});
    }
    const Graph graph(n, list);
    ++nodes;
    if (!girth(graph).at_least(g) || !is_k4_minor_free(graph) || !in_scope(graph, scope)) {
      continue;
    }
    if (edges > best) {
      best = edges;
      at_best.clear();
    }
    at_best.push_back(graph);
  }
  ExtremalResult result;
  result.params = GirthClassParams::make(n, g);
  result.scope = scope;
  if (best >= 0) result.max_edges = best;
  for (const Graph& graph : at_best) result.extremal.push_back(canonical_form(graph));
  std::sort(result.extremal.begin(), result.extremal.end());
  result.extremal.erase(std::unique(result.extremal.begin(), result.extremal.end()),
                        result.extremal.end());
  result.nodes_explored = nodes;
  result.elapsed = std::chrono::steady_clock::now() - start;
  return result;
}

}  // namespace spx
