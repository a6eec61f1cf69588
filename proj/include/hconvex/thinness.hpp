#pragma once

#include <string>
#include <vector>

#include "hconvex/decomposition.hpp"
#include "hconvex/supports.hpp"

namespace hconvex {

/// Vertex ordering plus a partition into classes. `strong` records the claimed
/// strength (strongly consistent or merely consistent).
struct ThinRepresentation {
  std::vector<int> order;
  std::vector<std::vector<int>> classes;
  bool strong = false;

  int class_count() const { return static_cast<int>(classes.size()); }
};

/// Throws std::invalid_argument unless `order` is a permutation of 0..n-1 and
/// the (non-empty) classes partition the same set.
void validate(const ThinRepresentation& r, int n);

/// For r < s < t: v_r, v_s co-classed and v_r v_t ∈ E imply v_s v_t ∈ E.
bool verify_consistent(const Graph& g, const ThinRepresentation& r);
/// Consistency plus: v_s, v_t co-classed and v_r v_t ∈ E imply v_r v_s ∈ E.
bool strongly_consistent_by_triples(const Graph& g, const ThinRepresentation& r);
/// For every v and class V^j, N[v] ∩ (V^j ∪ {v}) is consecutive in V^j ∪ {v}.
bool strongly_consistent_by_intervals(const Graph& g, const ThinRepresentation& r);
/// Runs both characterizations; throws std::logic_error if they disagree.
bool verify_strongly_consistent(const Graph& g, const ThinRepresentation& r);

/// 2 + t(Δ - 2).
int thin_bound(int t, int delta);
/// 2^q (q + 1).
int pthin_bound(int q);

/// Consistent representation from a tree support: class 1 is B; the host is
/// rooted at its least leaf, the least child of each node stays in the
/// parent's class and every other child opens a new class; A follows the
/// postorder (children in increasing order) and each b comes right after its
/// last A-neighbour (ties by B index), B-vertices without neighbours last.
/// At most thin_bound(t, Δ) classes. Throws std::invalid_argument on an
/// invalid witness.
ThinRepresentation thin_from_tree_support(const BipartiteGraph& g, const SupportWitness& tree);

/// caterpillar_from_ordering(r.order); throws std::invalid_argument when the
/// representation is not consistent for g.
BranchDecomposition linear_bd_from_thin(const Graph& g, const ThinRepresentation& r);

struct PathDecomposition {
  std::vector<std::vector<int>> bags;
};

struct PathDecompositionCheck {
  bool valid = false;
  int width = -1;
  std::string reason;  // empty when valid
};

/// Checks vertex coverage, edge coverage and consecutiveness of bags.
PathDecompositionCheck verify_pathdecomp(const Graph& g, const PathDecomposition& p);

/// Strongly consistent representation with at most pthin_bound(q) classes
/// from a width-q path decomposition: order by first bag (ties by index),
/// colour greedily so co-coloured vertices never share a bag, split each
/// colour by the set of other colours holding a smaller neighbour, then merge
/// classes greedily while strong consistency survives.
/// Throws std::invalid_argument on an invalid path decomposition.
ThinRepresentation pathdecomp_to_pthin(const Graph& g, const PathDecomposition& p);

struct ThinOracleResult {
  int value = 0;
  ThinRepresentation witness;
};

inline constexpr int kDefaultThinGuard = 13;

/// Exact thinness / proper thinness by depth-first search over ordered
/// prefixes with memoised dead states and iterative deepening on k.
/// Throws GuardExceeded above `guard` vertices.
ThinOracleResult thin_oracle(const Graph& g, int guard = kDefaultThinGuard);
ThinOracleResult pthin_oracle(const Graph& g, int guard = kDefaultThinGuard);

}  // namespace hconvex
