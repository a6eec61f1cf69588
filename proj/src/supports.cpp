#include "hconvex/supports.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "tree_support.hpp"

namespace hconvex {

namespace {

std::vector<std::vector<int>> host_adjacency(int n, std::span<const Edge> edges) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  return adj;
}

// Edges in range, no loops, no repeats.
bool edges_well_formed(int n, std::span<const Edge> edges) {
  std::vector<Edge> e(edges.begin(), edges.end());
  for (auto& [u, v] : e) {
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) return false;
    if (u > v) std::swap(u, v);
  }
  std::sort(e.begin(), e.end());
  return std::adjacent_find(e.begin(), e.end()) == e.end();
}

bool connected_within(const std::vector<std::vector<int>>& adj, std::span<const int> set) {
  if (set.size() <= 1) return true;
  std::vector<char> in(adj.size(), 0), seen(adj.size(), 0);
  for (int v : set) in[v] = 1;
  std::vector<int> stack{set.front()};
  seen[set.front()] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : adj[x])
      if (in[y] && !seen[y]) {
        seen[y] = 1;
        ++reached;
        stack.push_back(y);
      }
  }
  return reached == set.size();
}

bool is_spanning_tree(int n, std::span<const Edge> edges) {
  if (n == 0) return edges.empty();
  if (static_cast<int>(edges.size()) != n - 1) return false;
  std::vector<int> all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), 0);
  return connected_within(host_adjacency(n, edges), all);
}

std::vector<Edge> normalised(std::vector<Edge> edges) {
  for (auto& [u, v] : edges)
    if (u > v) std::swap(u, v);
  std::sort(edges.begin(), edges.end());
  return edges;
}

bool comb_shape(int n, const std::vector<std::vector<int>>& adj) {
  if (n % 2 != 0) return false;
  if (n == 2) return true;
  int backbone = 0;
  for (int v = 0; v < n; ++v) {
    if (adj[v].size() < 2) continue;
    ++backbone;
    int leaves = 0, spine = 0;
    for (int w : adj[v]) (adj[w].size() == 1 ? leaves : spine)++;
    if (leaves != 1 || spine > 2) return false;
  }
  return backbone * 2 == n;
}

// Lexicographically least linear order of the ground set in which every
// hyperedge is consecutive: extend a prefix greedily, asking the exact
// engine whether some Hamiltonian path starting with the prefix survives.
std::optional<std::vector<int>> lex_least_path(const Hypergraph& h) {
  const int n = h.ground_size;
  std::vector<int> order;
  if (n == 0) return order;
  if (n == 1) return std::vector<int>{0};
  detail::TreeSupportSolver solver(h);
  std::vector<int> caps(static_cast<std::size_t>(n), 2);
  if (!solver.solve(caps)) return std::nullopt;
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  std::vector<Edge> forced;
  for (int pos = 0; pos < n; ++pos) {
    bool placed = false;
    for (int v = 0; v < n && !placed; ++v) {
      if (used[v]) continue;
      std::vector<int> c = caps;
      c[pos == 0 ? v : order.front()] = 1;
      std::vector<Edge> f = forced;
      if (pos > 0) f.emplace_back(order.back(), v);
      if (pos + 1 == n || solver.solve(c, f)) {
        if (pos > 0) forced.emplace_back(order.back(), v);
        order.push_back(v);
        used[v] = 1;
        placed = true;
      }
    }
    if (!placed) throw std::logic_error("convex recognition lost a feasible prefix");
  }
  return order;
}

SupportWitness with_params(SupportWitness w) {
  w.t = static_cast<int>(w.branching().size());
  w.delta = std::max(2, w.max_degree());
  return w;
}

}  // namespace

std::string_view to_string(SupportKind kind) {
  switch (kind) {
    case SupportKind::path: return "path";
    case SupportKind::cycle: return "cycle";
    case SupportKind::tree: return "tree";
    case SupportKind::star: return "star";
    case SupportKind::comb: return "comb";
  }
  return "?";
}

SupportKind support_kind_from_string(std::string_view name) {
  for (auto k : {SupportKind::path, SupportKind::cycle, SupportKind::tree, SupportKind::star, SupportKind::comb})
    if (to_string(k) == name) return k;
  throw std::invalid_argument("unknown support kind '" + std::string(name) + "'");
}

std::vector<int> SupportWitness::branching() const {
  std::vector<int> deg(static_cast<std::size_t>(a_size), 0), out;
  for (auto [u, v] : host_edges) {
    ++deg[u];
    ++deg[v];
  }
  for (int v = 0; v < a_size; ++v)
    if (deg[v] >= 3) out.push_back(v);
  return out;
}

int SupportWitness::max_degree() const {
  std::vector<int> deg(static_cast<std::size_t>(a_size), 0);
  for (auto [u, v] : host_edges) {
    ++deg[u];
    ++deg[v];
  }
  return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

Graph SupportWitness::host() const { return Graph(a_size, host_edges); }

SupportWitness path_witness(std::span<const int> order) {
  SupportWitness w;
  w.kind = SupportKind::path;
  w.a_size = static_cast<int>(order.size());
  for (std::size_t i = 0; i + 1 < order.size(); ++i) w.host_edges.emplace_back(order[i], order[i + 1]);
  w.host_edges = normalised(std::move(w.host_edges));
  return w;
}

SupportWitness cycle_witness(std::span<const int> order) {
  SupportWitness w = path_witness(order);
  w.kind = SupportKind::cycle;
  if (order.size() >= 3) {
    w.host_edges.emplace_back(order.back(), order.front());
    w.host_edges = normalised(std::move(w.host_edges));
  }
  return w;
}

SupportWitness star_witness(int a_size, int centre) {
  if (a_size < 1 || centre < 0 || centre >= a_size) throw std::invalid_argument("star_witness: bad centre");
  SupportWitness w;
  w.kind = SupportKind::star;
  w.a_size = a_size;
  for (int v = 0; v < a_size; ++v)
    if (v != centre) w.host_edges.emplace_back(std::min(v, centre), std::max(v, centre));
  w.host_edges = normalised(std::move(w.host_edges));
  w.t = a_size - 1 >= 3 ? 1 : 0;
  w.delta = std::max(2, a_size - 1);
  return w;
}

SupportWitness tree_witness(int a_size, std::vector<Edge> edges, int t, int delta) {
  SupportWitness w;
  w.kind = SupportKind::tree;
  w.a_size = a_size;
  w.host_edges = normalised(std::move(edges));
  w.t = t;
  w.delta = delta;
  return w;
}

std::vector<int> path_order(const SupportWitness& w) {
  const int n = w.a_size;
  std::vector<int> order;
  if (n == 0) return order;
  auto adj = host_adjacency(n, w.host_edges);
  int start = -1;
  for (int v = 0; v < n && start < 0; ++v)
    if (adj[v].size() <= 1) start = v;
  if (start < 0) throw std::invalid_argument("path_order: host is not a path");
  int prev = -1, cur = start;
  while (cur >= 0) {
    order.push_back(cur);
    int next = -1;
    for (int x : adj[cur])
      if (x != prev) next = x;
    if (adj[cur].size() > 2) throw std::invalid_argument("path_order: host is not a path");
    prev = cur;
    cur = next;
  }
  if (static_cast<int>(order.size()) != n) throw std::invalid_argument("path_order: host is not a Hamiltonian path");
  return order;
}

std::vector<int> cycle_order(const SupportWitness& w) {
  const int n = w.a_size;
  if (n <= 2) return path_order(w);
  auto adj = host_adjacency(n, w.host_edges);
  for (const auto& a : adj)
    if (a.size() != 2) throw std::invalid_argument("cycle_order: host is not a cycle");
  std::vector<int> order{0};
  int prev = 0, cur = adj[0][0];
  while (cur != 0) {
    order.push_back(cur);
    int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
    prev = cur;
    cur = next;
  }
  if (static_cast<int>(order.size()) != n) throw std::invalid_argument("cycle_order: host is not a Hamiltonian cycle");
  return order;
}

bool host_shape_ok(const SupportWitness& w) {
  const int n = w.a_size;
  if (n < 0 || !edges_well_formed(n, w.host_edges)) return false;
  auto adj = host_adjacency(n, w.host_edges);
  std::size_t max_deg = 0;
  for (const auto& a : adj) max_deg = std::max(max_deg, a.size());

  if (w.kind == SupportKind::cycle && n >= 3) {
    if (static_cast<int>(w.host_edges.size()) != n) return false;
    for (const auto& a : adj)
      if (a.size() != 2) return false;
    std::vector<int> all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 0);
    return connected_within(adj, all);
  }
  if (!is_spanning_tree(n, w.host_edges)) return false;
  switch (w.kind) {
    case SupportKind::path:
    case SupportKind::cycle:
      return max_deg <= 2;
    case SupportKind::star:
      return n <= 2 || static_cast<int>(max_deg) == n - 1;
    case SupportKind::tree:
      return w.t >= 0 && w.delta >= 2 && static_cast<int>(w.branching().size()) <= w.t &&
             static_cast<int>(max_deg) <= w.delta;
    case SupportKind::comb:
      return comb_shape(n, adj);
  }
  return false;
}

bool verify_support(const Hypergraph& h, const SupportWitness& w) {
  if (h.ground_size != w.a_size) throw std::invalid_argument("verify_support: witness is for a different |A|");
  if (!host_shape_ok(w)) return false;
  auto adj = host_adjacency(w.a_size, w.host_edges);
  for (const auto& s : h.hyperedges) {
    for (int v : s)
      if (v < 0 || v >= h.ground_size) throw std::invalid_argument("verify_support: hyperedge out of range");
    if (!connected_within(adj, s)) return false;
  }
  return true;
}

bool verify_support(const BipartiteGraph& g, const SupportWitness& w) {
  return verify_support(neighbourhood_hypergraph(g), w);
}

std::optional<std::vector<Edge>> tree_support_degree_bounded(const Hypergraph& h, std::span<const int> caps) {
  return detail::TreeSupportSolver(h).solve(caps);
}

std::optional<SupportWitness> recognize_convex(const BipartiteGraph& g) {
  auto order = lex_least_path(neighbourhood_hypergraph(g));
  if (!order) return std::nullopt;
  return path_witness(*order);
}

std::optional<SupportWitness> recognize_circular(const BipartiteGraph& g) {
  const int n = g.a_size();
  if (n <= 2) {
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    return cycle_witness(order);
  }
  // Fix a1 at the start of the cycle. A set is an arc avoiding a1 iff it is an
  // interval of the remaining linear order, and a set through a1 is an arc iff
  // its complement is; so replace every set through a1 by its complement.
  Hypergraph reduced{n - 1, {}};
  for (const auto& s : g.all_b_neighbours()) {
    std::vector<int> set;
    if (std::binary_search(s.begin(), s.end(), 0)) {
      for (int v = 1; v < n; ++v)
        if (!std::binary_search(s.begin(), s.end(), v)) set.push_back(v - 1);
    } else {
      for (int v : s) set.push_back(v - 1);
    }
    reduced.hyperedges.push_back(std::move(set));
  }
  auto rest = lex_least_path(reduced);
  if (!rest) return std::nullopt;
  std::vector<int> order{0};
  for (int v : *rest) order.push_back(v + 1);
  return cycle_witness(order);
}

std::optional<SupportWitness> recognize_star(const BipartiteGraph& g) {
  const int n = g.a_size();
  if (n == 0) return std::nullopt;
  for (int c = 0; c < n; ++c) {
    bool ok = true;
    for (const auto& s : g.all_b_neighbours())
      if (s.size() >= 2 && !std::binary_search(s.begin(), s.end(), c)) {
        ok = false;
        break;
      }
    if (ok) return star_witness(n, c);
  }
  return std::nullopt;
}

std::optional<SupportWitness> recognize_tdelta(const BipartiteGraph& g, int t, int delta) {
  if (t < 0 || delta < 2) throw std::invalid_argument("recognize_tdelta: need t >= 0 and delta >= 2");
  const int n = g.a_size();
  if (n == 0) return tree_witness(0, {}, t, delta);
  detail::TreeSupportSolver solver(neighbourhood_hypergraph(g));
  const int top = std::min(t, n);
  if (top > 0) {
    // Cheap negative filter: every vertex allowed degree delta.
    std::vector<int> loose(static_cast<std::size_t>(n), delta);
    if (!solver.solve(loose)) return std::nullopt;
  }
  for (int size = 0; size <= top; ++size) {
    std::vector<int> pick(static_cast<std::size_t>(size));
    std::iota(pick.begin(), pick.end(), 0);
    for (;;) {
      std::vector<int> caps(static_cast<std::size_t>(n), 2);
      for (int v : pick) caps[v] = delta;
      if (auto tree = solver.solve(caps)) return tree_witness(n, std::move(*tree), t, delta);
      int i = size - 1;
      while (i >= 0 && pick[i] == n - size + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return std::nullopt;
}

SupportWitness restrict_support(const SupportWitness& w, std::span<const int> subset) {
  std::vector<int> keep(subset.begin(), subset.end());
  std::sort(keep.begin(), keep.end());
  if (std::adjacent_find(keep.begin(), keep.end()) != keep.end())
    throw std::invalid_argument("restrict_support: repeated vertex");
  for (int v : keep)
    if (v < 0 || v >= w.a_size) throw std::invalid_argument("restrict_support: vertex out of range");
  auto adj = host_adjacency(w.a_size, w.host_edges);
  if (!connected_within(adj, keep)) throw std::invalid_argument("restrict_support: subset not connected in host");

  std::vector<int> relabel(static_cast<std::size_t>(w.a_size), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) relabel[keep[i]] = static_cast<int>(i);
  SupportWitness out;
  out.a_size = static_cast<int>(keep.size());
  for (auto [u, v] : w.host_edges)
    if (relabel[u] >= 0 && relabel[v] >= 0) out.host_edges.emplace_back(relabel[u], relabel[v]);
  out.host_edges = normalised(std::move(out.host_edges));

  const bool full = out.a_size == w.a_size;
  if (w.kind == SupportKind::cycle && full && out.a_size >= 3) {
    out.kind = SupportKind::cycle;
    return out;
  }
  if (out.max_degree() <= 2) {
    out.kind = SupportKind::path;
    return out;
  }
  switch (w.kind) {
    case SupportKind::star:
      out.kind = SupportKind::star;
      return with_params(out);
    case SupportKind::tree:
      out.kind = SupportKind::tree;
      out.t = w.t;
      out.delta = w.delta;
      return out;
    default:
      out.kind = SupportKind::tree;
      return with_params(out);
  }
}

}  // namespace hconvex
