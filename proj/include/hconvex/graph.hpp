#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace hconvex {

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1. Immutable after construction.
///
/// Adjacency is kept twice: sorted neighbour lists for iteration and a packed
/// bit row per vertex for O(1) adjacency tests in the cut solvers.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  /// Throws std::invalid_argument on loops, duplicate edges or endpoints out of range.
  Graph(int n, std::span<const Edge> edges);

  int order() const { return static_cast<int>(adj_.size()); }
  std::size_t size() const { return edge_count_; }

  const std::vector<int>& neighbours(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool adjacent(int u, int v) const {
    return (rows_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
  }
  /// Packed adjacency row of v; bit w set iff vw is an edge.
  std::span<const std::uint64_t> row(int v) const {
    return {rows_.data() + static_cast<std::size_t>(v) * words_, words_};
  }
  std::size_t words() const { return words_; }

  /// Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  std::vector<std::vector<int>> adj_;
  std::vector<std::uint64_t> rows_;
  std::size_t words_ = 0;
  std::size_t edge_count_ = 0;
};

/// Bipartite graph G = (A, B, E) stored as the neighbourhood N(b) ⊆ A of each b.
///
/// When flattened to a Graph, A-vertices come first: a_i -> i, b_j -> |A| + j.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;
  /// Neighbour lists are sorted; throws std::invalid_argument on out-of-range
  /// or repeated A-indices.
  BipartiteGraph(int a_size, std::vector<std::vector<int>> b_neighbours);

  int a_size() const { return a_size_; }
  int b_size() const { return static_cast<int>(b_nbrs_.size()); }
  int order() const { return a_size_ + b_size(); }
  std::size_t edge_count() const;

  const std::vector<int>& b_neighbours(int b) const { return b_nbrs_[b]; }
  const std::vector<std::vector<int>>& all_b_neighbours() const { return b_nbrs_; }
  /// N(a) as B-indices, sorted.
  std::vector<int> a_neighbours(int a) const;

  int a_vertex(int i) const { return i; }
  int b_vertex(int j) const { return a_size_ + j; }
  bool is_a_vertex(int v) const { return v < a_size_; }

  Graph to_graph() const;

  friend bool operator==(const BipartiteGraph&, const BipartiteGraph&) = default;

 private:
  int a_size_ = 0;
  std::vector<std::vector<int>> b_nbrs_;
};

/// The hypergraph (A, {N(b) : b ∈ B}); hyperedge i is N(b_i).
struct Hypergraph {
  int ground_size = 0;
  std::vector<std::vector<int>> hyperedges;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;
};

Hypergraph neighbourhood_hypergraph(const BipartiteGraph& g);

struct InducedGraph {
  Graph graph;
  std::vector<int> mapping;  // new index -> old index
};

struct InducedBipartite {
  BipartiteGraph graph;
  std::vector<int> mapping;  // new flattened index -> old flattened index
};

/// Vertices of `subset` are relabelled in increasing order. Throws
/// std::out_of_range for vertices outside the graph.
InducedGraph induced_subgraph(const Graph& g, std::span<const int> subset);
/// `subset` is given in flattened indexing (A first). The result keeps the
/// A/B sides; the relabelling is increasing, so A-vertices stay before B.
InducedBipartite induced_subgraph(const BipartiteGraph& g, std::span<const int> subset);

/// Proper 2-colouring if one exists (colour 0 for the first vertex of every
/// component), empty otherwise.
std::vector<int> two_colouring(const Graph& g);

/// True iff G is bipartite and every induced cycle has length 4.
bool is_chordal_bipartite(const BipartiteGraph& g);
bool is_chordal_bipartite(const Graph& g);

/// Connected components as sorted vertex lists, ordered by smallest vertex.
std::vector<std::vector<int>> components(const Graph& g);

}  // namespace hconvex
