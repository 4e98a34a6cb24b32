#include "spx/invariants.hpp"

#include <climits>
#include <functional>
#include <stdexcept>
#include <vector>

namespace spx {

Girth Girth::finite(int g) {
  if (g < 3) throw std::invalid_argument("girth must be at least 3");
  return Girth(g);
}

int Girth::value() const {
  if (is_acyclic()) throw std::logic_error("acyclic graph has no finite girth");
  return value_;
}

std::string Girth::to_string() const {
  return is_acyclic() ? std::string("acyclic") : std::to_string(value_);
}

Girth girth(const Graph& g) {
  const int n = g.order();
  int best = INT_MAX;
  std::vector<int> dist(n), parent(n), queue(n);
  for (int root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[root] = 0;
    parent[root] = -1;
    int head = 0, tail = 0;
    queue[tail++] = root;
    while (head < tail) {
      const int u = queue[head++];
      if (2 * dist[u] + 1 >= best) break;
      for_each_bit(g.neighbors(u), [&](int w) {
        if (dist[w] == -1) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue[tail++] = w;
        } else if (w != parent[u]) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      });
    }
  }
  return best == INT_MAX ? Girth::acyclic() : Girth::finite(best);
}

bool is_k4_minor_free(std::span<const Bits> rows) {
  const int n = static_cast<int>(rows.size());
  std::array<Bits, kMaxVertices> adj{};
  std::copy(rows.begin(), rows.end(), adj.begin());
  Bits alive = low_bits(n);
  std::array<int, 4 * kMaxVertices> work{};
  int top = 0;
  for (int v = n - 1; v >= 0; --v) work[top++] = v;

  auto remove = [&](int v) {
    for_each_bit(adj[v], [&](int w) { adj[w] &= ~bit(v); });
    adj[v] = 0;
    alive &= ~bit(v);
  };

  while (top > 0) {
    const int v = work[--top];
    if (!((alive >> v) & 1U)) continue;
    const Bits nb = adj[v];
    const int deg = std::popcount(nb);
    if (deg <= 1) {
      remove(v);
      if (deg == 1) work[top++] = std::countr_zero(nb);
    } else if (deg == 2) {
      const int a = std::countr_zero(nb);
      const int b = std::countr_zero(nb & (nb - 1));
      const bool joined = (adj[a] >> b) & 1U;
      remove(v);
      if (joined) {
        work[top++] = a;
        work[top++] = b;
      } else {
        adj[a] |= bit(b);
        adj[b] |= bit(a);
      }
    }
    // Each vertex is pushed at most once initially plus once per incident
    // deletion, so the stack never exceeds 4n while n <= 62.
    if (top > static_cast<int>(work.size()) - 2) {
      throw std::logic_error("k4 reduction worklist overflow");
    }
  }
  return alive == 0;
}

bool is_k4_minor_free(const Graph& g) { return is_k4_minor_free(g.rows()); }

namespace {

// Exhaustive search for six internally disjoint paths joining four branch
// vertices pairwise.
class SubdivisionSearch {
 public:
  explicit SubdivisionSearch(const Graph& g) : g_(g) {}

  std::optional<K4Model> run() {
    std::vector<int> hubs;
    for (int v = 0; v < g_.order(); ++v) {
      if (g_.degree(v) >= 3) hubs.push_back(v);
    }
    const int h = static_cast<int>(hubs.size());
    for (int i = 0; i < h; ++i)
      for (int j = i + 1; j < h; ++j)
        for (int k = j + 1; k < h; ++k)
          for (int l = k + 1; l < h; ++l) {
            branch_ = {hubs[i], hubs[j], hubs[k], hubs[l]};
            const Bits blocked = bit(hubs[i]) | bit(hubs[j]) | bit(hubs[k]) | bit(hubs[l]);
            interiors_.fill(0);
            if (link(0, blocked)) return certificate();
          }
    return std::nullopt;
  }

 private:
  static constexpr std::array<std::pair<int, int>, 6> kPairs{
      {{0, 1}, {2, 3}, {0, 2}, {1, 3}, {0, 3}, {1, 2}}};

  bool link(int pair, Bits used) {
    if (pair == 6) return true;
    const int x = branch_[kPairs[pair].first];
    const int y = branch_[kPairs[pair].second];
    if (g_.adjacent(x, y)) {
      interiors_[pair] = 0;
      return link(pair + 1, used);
    }
    return walk(pair, x, y, used, 0);
  }

  bool walk(int pair, int at, int target, Bits used, Bits interior) {
    bool found = false;
    for_each_bit(g_.neighbors(at) & ~used, [&](int w) {
      if (found) return;
      if (g_.adjacent(w, target)) {
        interiors_[pair] = interior | bit(w);
        if (link(pair + 1, used | bit(w))) {
          found = true;
          return;
        }
      }
      if (walk(pair, w, target, used | bit(w), interior | bit(w))) found = true;
    });
    return found;
  }

  // Path interiors go to the first endpoint of their pair.
  K4Model certificate() const {
    K4Model model;
    for (int b = 0; b < 4; ++b) model[b] = VertexSet(bit(branch_[b]));
    for (int p = 0; p < 6; ++p) {
      const int owner = kPairs[p].first;
      model[owner] = VertexSet(model[owner].bits() | interiors_[p]);
    }
    return model;
  }

  const Graph& g_;
  std::array<int, 4> branch_{};
  std::array<Bits, 6> interiors_{};
};

}  // namespace

std::optional<K4Model> find_k4_minor(const Graph& g) {
  if (g.order() > kMaxMinorSearchOrder) {
    throw std::length_error("find_k4_minor: order " + std::to_string(g.order()) +
                            " exceeds limit of 32");
  }
  return SubdivisionSearch(g).run();
}

bool is_k4_model(const Graph& g, const K4Model& model) {
  Bits seen = 0;
  for (const VertexSet& s : model) {
    if (s.empty() || (s.bits() & seen) != 0 || (s.bits() & ~g.vertex_mask()) != 0) return false;
    seen |= s.bits();
    if (connected_components(g, s).size() != 1) return false;
  }
  for (int a = 0; a < 4; ++a) {
    for (int b = a + 1; b < 4; ++b) {
      bool touching = false;
      for_each_bit(model[a].bits(), [&](int v) {
        if (g.neighbors(v) & model[b].bits()) touching = true;
      });
      if (!touching) return false;
    }
  }
  return true;
}

}  // namespace spx
