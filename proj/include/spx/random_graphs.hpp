#pragma once

#include <random>

#include "spx/graph.hpp"

namespace spx {

using Rng = std::mt19937_64;

Graph random_relabel(const Graph& g, Rng& rng);

// Erdos-Renyi G(n, p).
Graph random_graph(int n, double p, Rng& rng);

// Random subgraph of a random 2-tree (so no K4 minor), randomly relabeled.
// Each 2-tree edge is kept with probability keep.
Graph random_series_parallel(int n, double keep, Rng& rng);

// Connected, girth >= 5, no K4 minor, at least one cycle and at least one
// cutvertex: blocks of girth >= 5 and pendant paths glued at random
// vertices. 7 <= max_n <= 62.
Graph random_girth5_with_cutvertex(int max_n, Rng& rng);

}  // namespace spx
