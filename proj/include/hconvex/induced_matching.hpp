#pragma once

#include <span>
#include <vector>

#include "hconvex/graph.hpp"

namespace hconvex {

/// mim: induced in the bipartite cut graph G[X, V∖X] (only cross edges count).
/// sim: induced in G itself, every edge with exactly one end in X.
enum class CutMode { mim, sim };

struct InducedMatching {
  int size = 0;
  std::vector<Edge> edges;  // (x, y) with x in X and y outside, sorted
};

/// Exact maximum induced matching across the cut (X, V∖X).
/// Throws std::out_of_range for vertices outside the graph.
InducedMatching max_induced_matching(const Graph& g, std::span<const int> side, CutMode mode);

inline InducedMatching max_induced_matching_cut(const Graph& g, std::span<const int> side) {
  return max_induced_matching(g, side, CutMode::mim);
}
inline InducedMatching max_induced_matching_sim(const Graph& g, std::span<const int> side) {
  return max_induced_matching(g, side, CutMode::sim);
}

/// Maximum induced matching of the bipartite graph G[X, Y] for disjoint X, Y
/// (edges inside X or Y and vertices outside X ∪ Y are ignored).
InducedMatching max_induced_matching_between(const Graph& g, std::span<const int> x, std::span<const int> y);

}  // namespace hconvex
