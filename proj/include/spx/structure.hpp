#pragma once

#include <span>
#include <string>
#include <vector>

#include "spx/graph.hpp"

namespace spx {

struct Leg {
  int inner = 0;     // endpoint in the bridge interior
  int on_cycle = 0;  // endpoint on the cycle
  friend auto operator<=>(const Leg&, const Leg&) = default;
};

// A connected component of G - C together with its legs. Attachments are
// listed once each, in the order of the normalized cycle.
struct Bridge {
  Cycle cycle;
  VertexSet interior;
  std::vector<Leg> legs;
  std::vector<int> attachments;
};

struct CycleBridges {
  Cycle cycle;  // normalized: least vertex first, smaller neighbor second
  std::vector<Bridge> bridges;  // ordered by least interior vertex
  std::vector<Edge> chords;     // edges of G joining two non-consecutive cycle vertices
};

// Throws std::invalid_argument if `cycle` is not a cycle of g.
CycleBridges bridges(const Graph& g, std::span<const int> cycle);

// Attachment lists interleave around the cycle: there are four distinct
// vertices a1, b1, a2, b2 in this cyclic order with a's from the first list.
bool crossing(const Cycle& cycle, std::span<const int> first, std::span<const int> second);
// Both bridges must have been computed against `cycle`. A bridge never
// crosses itself, whatever its attachments.
bool crossing(const Bridge& b1, const Bridge& b2, const Cycle& cycle);

struct Prop1Options {
  // Off only for diagnostics on graphs that do have a K4 minor.
  bool require_k4_minor_free = true;
  // Also flag bridges with fewer than two attachments (extremal even-girth graphs).
  bool require_two_attachments = false;
};

enum class Prop1ViolationKind { too_many_attachments, too_few_attachments, crossing };

struct Prop1Violation {
  Cycle cycle;
  Prop1ViolationKind kind;
  std::string first;   // "bridge i" or "chord i"
  std::string second;  // empty unless kind == crossing
};

struct Prop1Report {
  int cycles = 0;
  int bridges = 0;
  int chords = 0;
  int max_attachments = 0;
  int max_leg_edges = 0;
  std::vector<Prop1Violation> violations;
  bool ok() const { return violations.empty(); }
};

std::string to_string(Prop1ViolationKind kind);

inline constexpr int kMaxProp1Order = 14;
// Every cycle, every bridge: at most two attachment vertices and no crossing
// pair (chords take part in the crossing test).
Prop1Report check_proposition1(const Graph& g, const Prop1Options& options = {});

struct CutChoice {
  int x = 0;
  int v1 = 0;
  int v2 = 0;
};

// Replaces edge v2-x by v1-v2. Requires x a cutvertex, v1 and v2 neighbors
// of x in different components of G - x, girth >= 5 and no K4 minor.
Graph cut_reduction(const Graph& g, int x, int v1, int v2);

// Least cutvertex x that has an incident edge lying on a cycle; v2 is the
// least such neighbor, v1 the least neighbor of x in the first other
// component of G - x. Throws if no cutvertex qualifies.
CutChoice default_cut_choice(const Graph& g);
Graph cut_reduction(const Graph& g);

// Applies cut_reduction until no cutvertex remains. The number of blocks
// drops by one per step. Requires a connected graph with at least one
// cycle, girth >= 5 and no K4 minor.
Graph make_two_connected(const Graph& g);

}  // namespace spx
