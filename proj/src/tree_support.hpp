#pragma once

#include <optional>
#include <span>
#include <vector>

#include "hconvex/graph.hpp"

namespace hconvex::detail {

/// Exact degree-capped tree-support search for one hypergraph, reused across
/// queries with different caps and forced edges.
///
/// A spanning tree T is a support iff its weight under w(uv) = #hyperedges
/// containing u and v equals Σ(|S| - 1), the maximum possible. Such a tree
/// restricts to a spanning tree of every component of the positive-weight
/// graph, and any way of joining those components with zero-weight edges is
/// again a support. Components are therefore solved independently by
/// branch-and-bound, and the joining step only needs residual degree totals.
class TreeSupportSolver {
 public:
  explicit TreeSupportSolver(const Hypergraph& h);

  /// Throws std::invalid_argument on malformed caps or forced edges.
  std::optional<std::vector<Edge>> solve(std::span<const int> caps, std::span<const Edge> forced = {}) const;

  int ground_size() const { return n_; }

 private:
  int n_;
  std::vector<std::vector<int>> weight_;
  std::vector<int> comp_of_;
  std::vector<std::vector<int>> comps_;
  std::vector<long long> comp_target_;
};

}  // namespace hconvex::detail
