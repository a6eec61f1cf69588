#pragma once

#include <optional>
#include <span>
#include <vector>

#include "hconvex/graph.hpp"
#include "hconvex/induced_matching.hpp"

namespace hconvex {

/// Branch decomposition (T, δ): a tree whose leaves are in bijection with V(G).
///
/// Node layout is canonical: internal nodes first, then leaves. Internal nodes
/// may have degree 2 (subdivisions) or 3; leaves have degree <= 1.
struct BranchDecomposition {
  Graph tree;
  std::vector<int> leaf_vertex;  // per tree node: G-vertex or -1 for internal nodes
  bool linear = false;
  std::vector<int> spine;  // spine nodes in order (linear decompositions only)

  int leaf_count() const;
  int internal_count() const { return tree.order() - leaf_count(); }
  /// Tree node holding each G-vertex.
  std::vector<int> node_of_vertex() const;
};

/// Throws std::invalid_argument unless `d` is a subcubic tree whose leaves
/// are exactly the vertices 0..n-1, each once.
void validate(const BranchDecomposition& d, int n);

/// ℓ-caterpillar s1..sℓ with pendant leaves t_i -> order[i]. Length 1 gives a
/// single node, length 2 a single edge. Throws std::invalid_argument unless
/// `order` is a permutation of 0..ℓ-1.
BranchDecomposition caterpillar_from_ordering(std::span<const int> order);

/// Builds a decomposition with the canonical node layout from an arbitrary
/// tree; node order among internals and among leaves is preserved.
BranchDecomposition make_decomposition(int nodes, std::span<const Edge> edges, std::vector<int> leaf_vertex,
                                       bool linear = false, std::vector<int> spine = {});

struct CutReport {
  Edge edge;               // tree edge (u, v), u < v
  std::vector<int> side;   // G-vertices on u's side, increasing
  int value = 0;
};

struct WidthResult {
  int width = 0;
  std::optional<CutReport> worst;  // first tree edge (canonical order) attaining the width
};

/// G-vertices on u's side of tree edge uv.
std::vector<int> cut_side(const BranchDecomposition& d, Edge tree_edge);

/// Maximum cut value over all tree edges. Cuts are evaluated in parallel; the
/// result does not depend on the schedule. Throws std::invalid_argument when
/// `d` is not a decomposition of `g`.
WidthResult width_of(const Graph& g, const BranchDecomposition& d, CutMode mode);
/// Single-threaded reference with identical results.
WidthResult width_of_serial(const Graph& g, const BranchDecomposition& d, CutMode mode);

/// Gluing of decompositions of the parts of a partition: each part
/// tree is attached (through a subdivided edge, or directly if it is a single
/// leaf) to consecutive nodes of a new spine path. part_decomps[i] decomposes
/// G[parts[i]] with the parts' vertices relabelled in increasing order.
BranchDecomposition glue_multijoin(const Graph& g, std::span<const std::vector<int>> parts,
                                   std::span<const BranchDecomposition> part_decomps);

/// Maximum over pairs of parts of cutmim between them (the constant c).
int multijoin_constant(const Graph& g, std::span<const std::vector<int>> parts);
/// h = max{c⌊p²/4⌋, max_i w_i + c(p-1)}.
int multijoin_bound(int c, int p, std::span<const int> part_widths);

}  // namespace hconvex
