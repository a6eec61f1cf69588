#pragma once

// Exhaustive reference implementations used as test oracles. Everything here
// is deliberately naive and shares no code with the library beyond the graph
// value types.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "hconvex/families.hpp"
#include "hconvex/graph.hpp"

namespace brute {

using hconvex::BipartiteGraph;
using hconvex::Edge;
using hconvex::Graph;

inline bool adjacent(const Graph& g, int u, int v) {
  const auto& n = g.neighbours(u);
  return std::find(n.begin(), n.end(), v) != n.end();
}

/// Maximum induced matching across (side, rest) by trying every subset of
/// cross edges. `sim` also forbids edges inside either side.
inline int induced_matching(const Graph& g, const std::vector<int>& side, bool sim) {
  std::vector<bool> in(static_cast<std::size_t>(g.order()), false);
  for (int v : side) in[v] = true;
  std::vector<Edge> cross;
  for (auto [u, v] : g.edges())
    if (in[u] != in[v]) cross.emplace_back(in[u] ? u : v, in[u] ? v : u);
  const int m = static_cast<int>(cross.size());
  int best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    const int size = std::popcount(mask);
    if (size <= best) continue;
    bool ok = true;
    for (int i = 0; i < m && ok; ++i) {
      if (!(mask >> i & 1)) continue;
      for (int j = i + 1; j < m && ok; ++j) {
        if (!(mask >> j & 1)) continue;
        auto [x1, y1] = cross[i];
        auto [x2, y2] = cross[j];
        if (x1 == x2 || y1 == y2) ok = false;
        else if (adjacent(g, x1, y2) || adjacent(g, x2, y1)) ok = false;
        else if (sim && (adjacent(g, x1, x2) || adjacent(g, y1, y2))) ok = false;
      }
    }
    if (ok) best = size;
  }
  return best;
}

inline int cross_edge_count(const Graph& g, const std::vector<int>& side) {
  std::vector<bool> in(static_cast<std::size_t>(g.order()), false);
  for (int v : side) in[v] = true;
  int c = 0;
  for (auto [u, v] : g.edges()) c += in[u] != in[v];
  return c;
}

inline std::vector<int> members(std::uint32_t mask) {
  std::vector<int> out;
  for (int v = 0; mask; ++v, mask >>= 1)
    if (mask & 1) out.push_back(v);
  return out;
}

/// Exact mim-/sim-width by merging: the best rooted binary tree over leaf set
/// S is the best split of S into two non-empty halves. n <= 10.
inline int width(const Graph& g, bool sim) {
  const int n = g.order();
  if (n <= 1) return 0;
  const std::uint32_t full = (1u << n) - 1;
  std::vector<int> cut(full + 1, 0), best(full + 1, 0);
  for (std::uint32_t s = 1; s < full; ++s) cut[s] = induced_matching(g, members(s), sim);
  for (std::uint32_t s = 1; s <= full; ++s) {
    if (std::popcount(s) == 1) continue;
    const std::uint32_t low = s & -s;
    int b = 1 << 30;
    // Enumerate unordered splits: the half containing the lowest element.
    for (std::uint32_t x = (s - 1) & s; x; x = (x - 1) & s) {
      if (!(x & low)) continue;
      const std::uint32_t y = s ^ x;
      int v = std::max({best[x], best[y], s == full ? 0 : cut[s], cut[x], cut[y]});
      b = std::min(b, v);
    }
    best[s] = b;
  }
  return best[full];
}

/// True iff every induced cycle has length 4, by testing every vertex subset
/// of size >= 5 for being an induced cycle. n <= 14.
inline bool chordal_bipartite(const Graph& g) {
  const int n = g.order();
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    if (std::popcount(s) < 5) continue;
    auto vs = members(s);
    bool cycle = true;
    for (int v : vs) {
      int d = 0;
      for (int w : vs) d += adjacent(g, v, w);
      if (d != 2) cycle = false;
    }
    if (!cycle) continue;
    // Connected 2-regular.
    std::set<int> seen{vs[0]};
    std::vector<int> stack{vs[0]};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : vs)
        if (adjacent(g, v, w) && seen.insert(w).second) stack.push_back(w);
    }
    if (seen.size() == vs.size()) return false;
  }
  return true;
}

inline bool has_odd_cycle(const Graph& g) {
  std::vector<int> colour(static_cast<std::size_t>(g.order()), -1);
  for (int s = 0; s < g.order(); ++s) {
    if (colour[s] >= 0) continue;
    colour[s] = 0;
    std::vector<int> q{s};
    while (!q.empty()) {
      int v = q.back();
      q.pop_back();
      for (int w : g.neighbours(v)) {
        if (colour[w] < 0) {
          colour[w] = 1 - colour[v];
          q.push_back(w);
        } else if (colour[w] == colour[v]) {
          return true;
        }
      }
    }
  }
  return false;
}

/// Induced-subgraph containment by trying every injective map.
inline bool contains_induced(const Graph& g, const Graph& p) {
  const int n = g.order(), k = p.order();
  if (k > n) return false;
  std::function<bool(std::vector<int>&)> extend = [&](std::vector<int>& image) {
    const int i = static_cast<int>(image.size());
    if (i == k) return true;
    for (int v = 0; v < n; ++v) {
      if (std::find(image.begin(), image.end(), v) != image.end()) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) ok = adjacent(p, i, j) == adjacent(g, v, image[j]);
      if (!ok) continue;
      image.push_back(v);
      if (extend(image)) return true;
      image.pop_back();
    }
    return false;
  };
  std::vector<int> image;
  return extend(image);
}

/// Connectivity of `set` inside the host given by an edge list.
inline bool connected_in(int a_size, const std::vector<Edge>& host, const std::vector<int>& set) {
  if (set.size() <= 1) return true;
  std::vector<bool> in(static_cast<std::size_t>(a_size), false);
  for (int v : set) in[v] = true;
  std::set<int> seen{set[0]};
  std::vector<int> stack{set[0]};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (auto [x, y] : host) {
      int w = x == v ? y : y == v ? x : -1;
      if (w >= 0 && in[w] && seen.insert(w).second) stack.push_back(w);
    }
  }
  return seen.size() == set.size();
}

inline bool all_connected(const BipartiteGraph& g, const std::vector<Edge>& host) {
  for (const auto& nb : g.all_b_neighbours())
    if (!connected_in(g.a_size(), host, nb)) return false;
  return true;
}

/// Some permutation of A makes every N(b) consecutive.
inline bool convex(const BipartiteGraph& g) {
  std::vector<int> order(static_cast<std::size_t>(g.a_size()));
  std::iota(order.begin(), order.end(), 0);
  do {
    std::vector<Edge> host;
    for (std::size_t i = 0; i + 1 < order.size(); ++i) host.emplace_back(order[i], order[i + 1]);
    if (all_connected(g, host)) return true;
  } while (std::next_permutation(order.begin(), order.end()));
  return false;
}

/// Some circular order of A makes every N(b) an arc.
inline bool circular(const BipartiteGraph& g) {
  const int n = g.a_size();
  if (n <= 3) return true;
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  do {
    std::vector<Edge> host;
    for (int i = 0; i < n; ++i) host.emplace_back(order[i], order[(i + 1) % n]);
    if (all_connected(g, host)) return true;
  } while (std::next_permutation(order.begin() + 1, order.end()));
  return false;
}

/// Every labelled tree on n vertices, decoded from Prüfer sequences.
inline std::vector<std::vector<Edge>> labelled_trees(int n) {
  std::vector<std::vector<Edge>> out;
  if (n == 1) return {{}};
  if (n == 2) return {{{0, 1}}};
  std::vector<int> seq(static_cast<std::size_t>(n - 2), 0);
  for (;;) {
    std::vector<int> degree(static_cast<std::size_t>(n), 1);
    for (int x : seq) ++degree[x];
    std::vector<Edge> tree;
    for (int x : seq) {
      int leaf = 0;
      while (degree[leaf] != 1) ++leaf;
      tree.emplace_back(std::min(leaf, x), std::max(leaf, x));
      --degree[leaf];
      --degree[x];
    }
    int u = -1, v = -1;
    for (int i = 0; i < n; ++i)
      if (degree[i] == 1) (u < 0 ? u : v) = i;
    tree.emplace_back(u, v);
    out.push_back(std::move(tree));
    int i = 0;
    while (i < n - 2 && ++seq[i] == n) seq[i++] = 0;
    if (i == n - 2) break;
  }
  return out;
}

/// Some labelled tree with at most t vertices of degree >= 3 and maximum
/// degree <= delta supports every N(b).
inline bool tdelta(const BipartiteGraph& g, int t, int delta) {
  const int n = g.a_size();
  for (const auto& tree : labelled_trees(n)) {
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    for (auto [u, v] : tree) ++deg[u], ++deg[v];
    if (*std::max_element(deg.begin(), deg.end()) > delta) continue;
    if (std::count_if(deg.begin(), deg.end(), [](int d) { return d >= 3; }) > t) continue;
    if (all_connected(g, tree)) return true;
  }
  return false;
}

/// Same search with per-vertex caps and no branching budget.
inline bool capped_tree(const hconvex::Hypergraph& h, const std::vector<int>& caps) {
  const int n = h.ground_size;
  BipartiteGraph g(n, h.hyperedges);
  for (const auto& tree : labelled_trees(n)) {
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    for (auto [u, v] : tree) ++deg[u], ++deg[v];
    bool ok = true;
    for (int i = 0; i < n; ++i) ok = ok && deg[i] <= caps[i];
    if (ok && all_connected(g, tree)) return true;
  }
  return false;
}

/// Literal triple conditions of (strong) consistency.
inline bool consistent(const Graph& g, const std::vector<int>& order, const std::vector<int>& cls, bool strong) {
  const int n = static_cast<int>(order.size());
  for (int r = 0; r < n; ++r)
    for (int s = r + 1; s < n; ++s)
      for (int t = s + 1; t < n; ++t) {
        const int vr = order[r], vs = order[s], vt = order[t];
        if (cls[vr] == cls[vs] && adjacent(g, vr, vt) && !adjacent(g, vs, vt)) return false;
        if (strong && cls[vs] == cls[vt] && adjacent(g, vr, vt) && !adjacent(g, vr, vs)) return false;
      }
  return true;
}

/// Minimum class count over all orders and set partitions. n <= 6.
inline int thinness(const Graph& g, bool strong) {
  const int n = g.order();
  if (n == 0) return 0;
  int best = n;
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> cls(static_cast<std::size_t>(n), 0);
  // Restricted growth strings enumerate set partitions.
  std::function<void(int, int)> partitions = [&](int v, int used) {
    if (used >= best) return;
    if (v == n) {
      std::vector<int> perm = order;
      do {
        if (consistent(g, perm, cls, strong)) {
          best = used;
          return;
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
      return;
    }
    for (int c = 0; c <= used && c < n; ++c) {
      cls[v] = c;
      partitions(v + 1, std::max(used, c + 1));
    }
  };
  partitions(0, 0);
  return best;
}

struct PathInstance {
  Graph graph;
  std::vector<std::vector<int>> bags;
};

/// Random graph together with a path decomposition of width at most q:
/// vertices enter a sliding window of at most q + 1 live vertices, and every
/// edge joins two vertices live at the same time.
inline PathInstance random_path_instance(int n, int q, std::uint64_t seed) {
  hconvex::Rng rng(seed);
  std::vector<std::vector<int>> bags;
  std::vector<int> live;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  int next = 0;
  while (next < n) {
    if (static_cast<int>(live.size()) == q + 1 || (live.size() > 1 && rng.below(4) == 0)) {
      live.erase(live.begin() + static_cast<long>(rng.below(live.size())));
    }
    live.push_back(next++);
    std::vector<int> bag = live;
    std::sort(bag.begin(), bag.end());
    bags.push_back(bag);
    for (std::size_t i = 0; i < bag.size(); ++i)
      for (std::size_t j = i + 1; j < bag.size(); ++j)
        if (rng.below(3) != 0 && seen.insert({bag[i], bag[j]}).second) edges.emplace_back(bag[i], bag[j]);
  }
  return PathInstance{Graph(n, edges), std::move(bags)};
}

/// Uniformly random simple graph.
inline Graph random_graph(int n, int percent, hconvex::Rng& rng) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (static_cast<int>(rng.below(100)) < percent) edges.emplace_back(u, v);
  return Graph(n, edges);
}

inline BipartiteGraph random_bipartite(int a, int b, int percent, hconvex::Rng& rng) {
  std::vector<std::vector<int>> nb(static_cast<std::size_t>(b));
  for (int j = 0; j < b; ++j)
    for (int i = 0; i < a; ++i)
      if (static_cast<int>(rng.below(100)) < percent) nb[j].push_back(i);
  return BipartiteGraph(a, std::move(nb));
}

}  // namespace brute
