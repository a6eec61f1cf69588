#include "hconvex/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace hconvex {

Graph::Graph(int n) : Graph(n, std::span<const Edge>{}) {}

Graph::Graph(int n, std::span<const Edge> edges) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  adj_.assign(static_cast<std::size_t>(n), {});
  words_ = (static_cast<std::size_t>(n) + 63) / 64;
  if (words_ == 0) words_ = 1;
  rows_.assign(static_cast<std::size_t>(n) * words_, 0);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) + "-" +
                                  std::to_string(v));
    if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
    if (adjacent(u, v))
      throw std::invalid_argument("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    rows_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
    rows_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    ++edge_count_;
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (int u = 0; u < order(); ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

BipartiteGraph::BipartiteGraph(int a_size, std::vector<std::vector<int>> b_neighbours)
    : a_size_(a_size), b_nbrs_(std::move(b_neighbours)) {
  if (a_size < 0) throw std::invalid_argument("negative |A|");
  for (auto& nb : b_nbrs_) {
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
      throw std::invalid_argument("repeated neighbour in N(b)");
    if (!nb.empty() && (nb.front() < 0 || nb.back() >= a_size))
      throw std::invalid_argument("neighbour out of range in N(b)");
  }
}

std::size_t BipartiteGraph::edge_count() const {
  std::size_t m = 0;
  for (const auto& nb : b_nbrs_) m += nb.size();
  return m;
}

std::vector<int> BipartiteGraph::a_neighbours(int a) const {
  std::vector<int> out;
  for (int j = 0; j < b_size(); ++j)
    if (std::binary_search(b_nbrs_[j].begin(), b_nbrs_[j].end(), a)) out.push_back(j);
  return out;
}

Graph BipartiteGraph::to_graph() const {
  std::vector<Edge> edges;
  edges.reserve(edge_count());
  for (int j = 0; j < b_size(); ++j)
    for (int a : b_nbrs_[j]) edges.emplace_back(a, b_vertex(j));
  return Graph(order(), edges);
}

Hypergraph neighbourhood_hypergraph(const BipartiteGraph& g) {
  return Hypergraph{g.a_size(), g.all_b_neighbours()};
}

namespace {

std::vector<int> checked_sorted(std::span<const int> subset, int n) {
  std::vector<int> s(subset.begin(), subset.end());
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  if (!s.empty() && (s.front() < 0 || s.back() >= n))
    throw std::out_of_range("induced_subgraph: vertex out of range");
  return s;
}

}  // namespace

InducedGraph induced_subgraph(const Graph& g, std::span<const int> subset) {
  std::vector<int> verts = checked_sorted(subset, g.order());
  std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < verts.size(); ++i) index[verts[i]] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (int u : verts)
    for (int v : g.neighbours(u))
      if (u < v && index[v] >= 0) edges.emplace_back(index[u], index[v]);
  return {Graph(static_cast<int>(verts.size()), edges), std::move(verts)};
}

InducedBipartite induced_subgraph(const BipartiteGraph& g, std::span<const int> subset) {
  std::vector<int> verts = checked_sorted(subset, g.order());
  std::vector<int> a_index(static_cast<std::size_t>(g.a_size()), -1);
  int new_a = 0;
  for (int v : verts)
    if (g.is_a_vertex(v)) a_index[v] = new_a++;
  std::vector<std::vector<int>> nbrs;
  for (int v : verts) {
    if (g.is_a_vertex(v)) continue;
    std::vector<int> nb;
    for (int a : g.b_neighbours(v - g.a_size()))
      if (a_index[a] >= 0) nb.push_back(a_index[a]);
    nbrs.push_back(std::move(nb));
  }
  return {BipartiteGraph(new_a, std::move(nbrs)), std::move(verts)};
}

std::vector<int> two_colouring(const Graph& g) {
  std::vector<int> colour(static_cast<std::size_t>(g.order()), -1);
  for (int s = 0; s < g.order(); ++s) {
    if (colour[s] >= 0) continue;
    colour[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : g.neighbours(u)) {
        if (colour[v] < 0) {
          colour[v] = 1 - colour[u];
          q.push(v);
        } else if (colour[v] == colour[u]) {
          return {};
        }
      }
    }
  }
  return colour;
}

std::vector<std::vector<int>> components(const Graph& g) {
  std::vector<int> comp(static_cast<std::size_t>(g.order()), -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < g.order(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> members{s};
    comp[s] = static_cast<int>(out.size());
    for (std::size_t i = 0; i < members.size(); ++i)
      for (int v : g.neighbours(members[i]))
        if (comp[v] < 0) {
          comp[v] = comp[s];
          members.push_back(v);
        }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

namespace {

// A bipartite graph has an induced cycle of length >= 6 iff some induced
// path w-x-y-z can be closed by a w-z path avoiding N[x] ∪ N[y] (apart from
// w and z). A shortest such path is chordless, and w, z lie on opposite
// sides, so the closing path has odd length >= 3.
bool has_long_hole_bipartite(const Graph& g) {
  const int n = g.order();
  std::vector<char> blocked(static_cast<std::size_t>(n));
  std::vector<char> seen(static_cast<std::size_t>(n));
  std::vector<int> queue;
  for (auto [x, y] : g.edges()) {
    for (int dir = 0; dir < 2; ++dir) {
      const int px = dir == 0 ? x : y;
      const int py = dir == 0 ? y : x;
      std::fill(blocked.begin(), blocked.end(), 0);
      blocked[px] = blocked[py] = 1;
      for (int v : g.neighbours(px)) blocked[v] = 1;
      for (int v : g.neighbours(py)) blocked[v] = 1;
      for (int w : g.neighbours(px)) {
        if (w == py) continue;
        // Every w-z pair with z ∈ N(py) non-adjacent to w: one BFS from w
        // through unblocked vertices, then look for a suitable z.
        std::fill(seen.begin(), seen.end(), 0);
        queue.assign(1, w);
        seen[w] = 1;
        for (std::size_t i = 0; i < queue.size(); ++i) {
          int u = queue[i];
          for (int v : g.neighbours(u)) {
            if (seen[v] || blocked[v]) continue;
            seen[v] = 1;
            queue.push_back(v);
          }
        }
        for (int z : g.neighbours(py)) {
          if (z == px || g.adjacent(w, z)) continue;
          for (int v : g.neighbours(z))
            if (v != w && seen[v] && !blocked[v]) return true;
        }
      }
    }
  }
  return false;
}

}  // namespace

bool is_chordal_bipartite(const Graph& g) {
  if (g.order() > 0 && two_colouring(g).empty()) return false;
  return !has_long_hole_bipartite(g);
}

bool is_chordal_bipartite(const BipartiteGraph& g) { return !has_long_hole_bipartite(g.to_graph()); }

}  // namespace hconvex
