#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "hconvex/graph.hpp"

namespace hconvex {

enum class SupportKind { path, cycle, tree, star, comb };

std::string_view to_string(SupportKind kind);
/// Throws std::invalid_argument for unknown names.
SupportKind support_kind_from_string(std::string_view name);

/// Host graph on A certifying H-convexity of a bipartite graph.
///
/// `t` and `delta` are the claimed (t, Δ) parameters of a tree host; the
/// actual branching set and maximum degree are derived from `host_edges`.
struct SupportWitness {
  SupportKind kind = SupportKind::path;
  int a_size = 0;
  std::vector<Edge> host_edges;  // (u, v) with u < v, sorted
  int t = 0;
  int delta = 2;

  /// Vertices of host degree >= 3, increasing.
  std::vector<int> branching() const;
  int max_degree() const;
  Graph host() const;

  friend bool operator==(const SupportWitness&, const SupportWitness&) = default;
};

SupportWitness path_witness(std::span<const int> order);
SupportWitness cycle_witness(std::span<const int> order);
SupportWitness star_witness(int a_size, int centre);
/// Tree witness with claimed parameters; edges are normalised and sorted.
SupportWitness tree_witness(int a_size, std::vector<Edge> edges, int t, int delta);

/// A-vertices in path order, starting from the smaller endpoint.
/// Requires a tree host of maximum degree <= 2.
std::vector<int> path_order(const SupportWitness& w);
/// A-vertices in cyclic order starting at a1 and continuing to its smaller
/// host neighbour. Requires a cycle host.
std::vector<int> cycle_order(const SupportWitness& w);

/// Kind-specific shape check of the host alone (Hamiltonian path/cycle,
/// tree with ≤ t branching vertices and degree ≤ Δ, star, comb).
bool host_shape_ok(const SupportWitness& w);

/// True iff the host has the declared shape and every N(b) induces a
/// connected subgraph of it. Throws std::invalid_argument when the witness
/// is for a different |A|.
bool verify_support(const BipartiteGraph& g, const SupportWitness& w);
bool verify_support(const Hypergraph& h, const SupportWitness& w);

/// Spanning tree on the ground set in which every hyperedge induces a subtree
/// and deg(i) <= caps[i]; std::nullopt iff none exists.
std::optional<std::vector<Edge>> tree_support_degree_bounded(const Hypergraph& h,
                                                             std::span<const int> caps);

/// Lexicographically least path order in which every N(b) is an interval.
std::optional<SupportWitness> recognize_convex(const BipartiteGraph& g);
/// Lexicographically least circular order (starting at a1) in which every
/// N(b) is an arc.
std::optional<SupportWitness> recognize_circular(const BipartiteGraph& g);
/// Star centred at the least A-vertex common to every N(b) with |N(b)| >= 2.
std::optional<SupportWitness> recognize_star(const BipartiteGraph& g);
/// (t, Δ)-tree support: tries every set of at most t vertices (by size, then
/// lexicographically) as the vertices allowed degree Δ, everyone else degree 2.
std::optional<SupportWitness> recognize_tdelta(const BipartiteGraph& g, int t, int delta);

/// Host restricted to `subset` (which must induce a connected subgraph),
/// relabelled in increasing order. Throws std::invalid_argument otherwise.
SupportWitness restrict_support(const SupportWitness& w, std::span<const int> subset);

}  // namespace hconvex
