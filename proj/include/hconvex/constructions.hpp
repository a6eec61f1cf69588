#pragma once

#include <vector>

#include "hconvex/decomposition.hpp"
#include "hconvex/supports.hpp"

namespace hconvex {

/// f(Δ) = max{2⌊(Δ/2)²⌋, 2Δ - 1}.
int spider_bound(int delta);
/// f(t, Δ) = f(Δ) + t²Δ.
int tdelta_bound(int t, int delta);

/// Vertex order (flattened indices) behind decompose_convex: A along the
/// path from its smaller endpoint, each b right after its last A-neighbour
/// (ties by B index), vertices of B without neighbours at the end.
std::vector<int> convex_order(const BipartiteGraph& g, const SupportWitness& path);
/// Vertex order behind decompose_circular: A around the cycle starting at a1
/// towards its smaller neighbour, each b right after its last A-neighbour in
/// that order (so N(a_n) follows a_n), isolated B-vertices at the end.
std::vector<int> circular_order(const BipartiteGraph& g, const SupportWitness& cycle);

/// Linear decomposition of a convex graph; mim-width <= 1.
/// Throws std::invalid_argument unless the witness is a verified path host.
BranchDecomposition decompose_convex(const BipartiteGraph& g, const SupportWitness& path);
/// Linear decomposition of a circular convex graph; mim-width <= 2.
/// A path witness is accepted and closed into a cycle.
BranchDecomposition decompose_circular(const BipartiteGraph& g, const SupportWitness& cycle);
/// Multijoin of convex parts around the unique branching vertex; width <= f(Δ).
/// Throws std::invalid_argument if the host has two or more branching vertices.
BranchDecomposition decompose_spider(const BipartiteGraph& g, const SupportWitness& tree);

/// One recursion step of decompose_tdelta.
struct SplitCheck {
  int depth = 0;
  Edge host_edge;   // split edge in the original A labels
  int t = 0;        // branching vertices of the host being split
  int delta = 0;
  int cut = 0;      // cutmim(A1 ∪ B1, A2 ∪ B2)
  int bound = 0;    // Δ(t - 1)
};

struct TDeltaDecomposition {
  BranchDecomposition decomposition;
  std::vector<SplitCheck> splits;
};

/// Recursive split of a (t, Δ)-tree host along an edge whose sides have
/// fewer branching vertices, down to spider hosts; width <= f(t, Δ).
TDeltaDecomposition decompose_tdelta(const BipartiteGraph& g, const SupportWitness& tree);

}  // namespace hconvex
