#include "spx/structure.hpp"

#include <algorithm>
#include <stdexcept>

#include "spx/invariants.hpp"

namespace spx {

namespace {

void require_cycle(const Graph& g, std::span<const int> cycle) {
  const auto len = cycle.size();
  if (len < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  Bits seen = 0;
  for (std::size_t i = 0; i < len; ++i) {
    const int v = cycle[i];
    if (v < 0 || v >= g.order()) throw std::invalid_argument("cycle vertex out of range");
    if (seen & bit(v)) throw std::invalid_argument("cycle repeats a vertex");
    seen |= bit(v);
    if (!g.adjacent(v, cycle[(i + 1) % len])) {
      throw std::invalid_argument("consecutive cycle vertices are not adjacent");
    }
  }
}

std::vector<int> positions_on(const Cycle& cycle, std::span<const int> vertices) {
  std::vector<int> out;
  out.reserve(vertices.size());
  for (int v : vertices) {
    const auto it = std::find(cycle.begin(), cycle.end(), v);
    if (it == cycle.end()) throw std::invalid_argument("attachment is not on the cycle");
    out.push_back(static_cast<int>(it - cycle.begin()));
  }
  return out;
}

std::string label(const char* kind, std::size_t i) { return std::string(kind) + " " + std::to_string(i); }

}  // namespace

CycleBridges bridges(const Graph& g, std::span<const int> cycle) {
  require_cycle(g, cycle);
  CycleBridges out;
  out.cycle = normalize_cycle(cycle);
  Bits on_cycle = 0;
  for (int v : out.cycle) on_cycle |= bit(v);

  const std::size_t len = out.cycle.size();
  for (std::size_t i = 0; i < len; ++i) {
    const int u = out.cycle[i];
    for (std::size_t j = i + 2; j < len; ++j) {
      if (i == 0 && j == len - 1) continue;
      if (g.adjacent(u, out.cycle[j])) out.chords.push_back(Edge::of(u, out.cycle[j]));
    }
  }
  std::sort(out.chords.begin(), out.chords.end());

  for (VertexSet comp : connected_components(g, VertexSet(g.vertex_mask() & ~on_cycle))) {
    Bridge b;
    b.cycle = out.cycle;
    b.interior = comp;
    Bits attached = 0;
    for_each_bit(comp.bits(), [&](int inner) {
      for_each_bit(g.neighbors(inner) & on_cycle, [&](int c) {
        b.legs.push_back({inner, c});
        attached |= bit(c);
      });
    });
    std::sort(b.legs.begin(), b.legs.end());
    for (int v : out.cycle) {
      if (attached & bit(v)) b.attachments.push_back(v);
    }
    out.bridges.push_back(std::move(b));
  }
  return out;
}

bool crossing(const Cycle& cycle, std::span<const int> first, std::span<const int> second) {
  const std::vector<int> a = positions_on(cycle, first);
  const std::vector<int> b = positions_on(cycle, second);
  // b1 strictly inside the arc (a1, a2) and b2 strictly outside it.
  for (int a1 : a) {
    for (int a2 : a) {
      if (a1 >= a2) continue;
      bool inside = false;
      bool outside = false;
      for (int p : b) {
        if (p == a1 || p == a2) continue;
        (p > a1 && p < a2 ? inside : outside) = true;
      }
      if (inside && outside) return true;
    }
  }
  return false;
}

bool crossing(const Bridge& b1, const Bridge& b2, const Cycle& cycle) {
  const Cycle c = normalize_cycle(cycle);
  if (b1.cycle != c || b2.cycle != c) {
    throw std::invalid_argument("bridges were computed against a different cycle");
  }
  if (b1.interior.bits() == b2.interior.bits()) return false;
  return crossing(c, b1.attachments, b2.attachments);
}

std::string to_string(Prop1ViolationKind kind) {
  switch (kind) {
    case Prop1ViolationKind::too_many_attachments: return "too-many-attachments";
    case Prop1ViolationKind::too_few_attachments: return "too-few-attachments";
    case Prop1ViolationKind::crossing: return "crossing";
  }
  return "unknown";
}

Prop1Report check_proposition1(const Graph& g, const Prop1Options& options) {
  if (g.order() > kMaxProp1Order) {
    throw std::length_error("check_proposition1: order exceeds limit of 14");
  }
  if (options.require_k4_minor_free && !is_k4_minor_free(g)) {
    throw std::invalid_argument("check_proposition1: graph has a K4 minor");
  }
  Prop1Report report;
  for (const Cycle& c : all_cycles(g, g.order())) {
    const CycleBridges cb = bridges(g, c);
    ++report.cycles;
    report.bridges += static_cast<int>(cb.bridges.size());
    report.chords += static_cast<int>(cb.chords.size());

    struct Participant {
      std::string name;
      std::vector<int> attachments;
    };
    std::vector<Participant> all;
    for (std::size_t i = 0; i < cb.bridges.size(); ++i) {
      const Bridge& b = cb.bridges[i];
      const int att = static_cast<int>(b.attachments.size());
      report.max_attachments = std::max(report.max_attachments, att);
      report.max_leg_edges = std::max(report.max_leg_edges, static_cast<int>(b.legs.size()));
      if (att > 2) {
        report.violations.push_back(
            {cb.cycle, Prop1ViolationKind::too_many_attachments, label("bridge", i), {}});
      } else if (options.require_two_attachments && att < 2) {
        report.violations.push_back(
            {cb.cycle, Prop1ViolationKind::too_few_attachments, label("bridge", i), {}});
      }
      all.push_back({label("bridge", i), b.attachments});
    }
    for (std::size_t i = 0; i < cb.chords.size(); ++i) {
      all.push_back({label("chord", i), {cb.chords[i].u, cb.chords[i].v}});
    }
    for (std::size_t i = 0; i < all.size(); ++i) {
      for (std::size_t j = i + 1; j < all.size(); ++j) {
        if (crossing(cb.cycle, all[i].attachments, all[j].attachments)) {
          report.violations.push_back(
              {cb.cycle, Prop1ViolationKind::crossing, all[i].name, all[j].name});
        }
      }
    }
  }
  return report;
}

namespace {

void require_girth5_k4_free(const Graph& g, const char* op) {
  if (!girth(g).at_least(5)) throw std::invalid_argument(std::string(op) + ": girth below 5");
  if (!is_k4_minor_free(g)) throw std::invalid_argument(std::string(op) + ": graph has a K4 minor");
}

}  // namespace

Graph cut_reduction(const Graph& g, int x, int v1, int v2) {
  const std::vector<int> cuts = cutvertices(g);
  if (std::find(cuts.begin(), cuts.end(), x) == cuts.end()) {
    throw std::invalid_argument("cut_reduction: vertex " + std::to_string(x) + " is not a cutvertex");
  }
  if (v1 < 0 || v1 >= g.order() || v2 < 0 || v2 >= g.order() || !g.adjacent(x, v1) ||
      !g.adjacent(x, v2)) {
    throw std::invalid_argument("cut_reduction: v1 and v2 must be neighbors of x");
  }
  for (VertexSet comp : connected_components(g, VertexSet(g.vertex_mask() & ~bit(x)))) {
    if (comp.contains(v1) && comp.contains(v2)) {
      throw std::invalid_argument("cut_reduction: v1 and v2 lie in the same component of G - x");
    }
  }
  require_girth5_k4_free(g, "cut_reduction");
  return g.without_edge(v2, x).with_edge(v1, v2);
}

CutChoice default_cut_choice(const Graph& g) {
  const std::vector<Edge> bridge_list = bridge_edges(g);
  auto is_bridge = [&](int a, int b) {
    return std::binary_search(bridge_list.begin(), bridge_list.end(), Edge::of(a, b));
  };
  for (int x : cutvertices(g)) {
    const std::vector<VertexSet> comps =
        connected_components(g, VertexSet(g.vertex_mask() & ~bit(x)));
    for (std::size_t c = 0; c < comps.size(); ++c) {
      int v2 = -1;
      for_each_bit(g.neighbors(x) & comps[c].bits(), [&](int w) {
        if (v2 < 0 && !is_bridge(x, w)) v2 = w;
      });
      if (v2 < 0) continue;
      const std::size_t other = c == 0 ? 1 : 0;
      const int v1 = std::countr_zero(g.neighbors(x) & comps[other].bits());
      return {x, v1, v2};
    }
  }
  throw std::invalid_argument("no cutvertex lies on a cycle");
}

Graph cut_reduction(const Graph& g) {
  const CutChoice c = default_cut_choice(g);
  return cut_reduction(g, c.x, c.v1, c.v2);
}

Graph make_two_connected(const Graph& g) {
  if (g.order() < 3) throw std::invalid_argument("make_two_connected: needs at least 3 vertices");
  if (!is_connected(g)) throw std::invalid_argument("make_two_connected: graph is disconnected");
  if (girth(g).is_acyclic()) throw std::invalid_argument("make_two_connected: graph is a tree");
  require_girth5_k4_free(g, "make_two_connected");

  Graph current = g;
  auto block_count = blocks(current).size();
  while (!cutvertices(current).empty()) {
    current = cut_reduction(current);
    const auto next = blocks(current).size();
    if (next >= block_count) throw std::logic_error("make_two_connected: block count did not drop");
    block_count = next;
  }
  return current;
}

}  // namespace spx
