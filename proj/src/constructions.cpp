#include "hconvex/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hconvex {

namespace {

std::vector<std::vector<int>> adjacency(const SupportWitness& w) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(w.a_size));
  for (auto [u, v] : w.host_edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  return adj;
}

// A in the given order, each b after its last neighbour, isolated b last.
std::vector<int> anchored_order(const BipartiteGraph& g, const std::vector<int>& a_order) {
  std::vector<int> pos(static_cast<std::size_t>(g.a_size()), -1);
  for (int i = 0; i < static_cast<int>(a_order.size()); ++i) pos[a_order[i]] = i;
  std::vector<std::vector<int>> after(a_order.size());
  std::vector<int> isolated;
  for (int b = 0; b < g.b_size(); ++b) {
    const auto& nb = g.b_neighbours(b);
    if (nb.empty()) {
      isolated.push_back(g.b_vertex(b));
      continue;
    }
    int anchor = 0;
    for (int a : nb) anchor = std::max(anchor, pos[a]);
    after[anchor].push_back(g.b_vertex(b));
  }
  std::vector<int> order;
  for (std::size_t i = 0; i < a_order.size(); ++i) {
    order.push_back(a_order[i]);
    order.insert(order.end(), after[i].begin(), after[i].end());
  }
  order.insert(order.end(), isolated.begin(), isolated.end());
  return order;
}

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

SupportWitness as_kind(SupportWitness w, SupportKind kind) {
  w.kind = kind;
  return w;
}

// Vertices on the side of host edge {from, blocked} that contains `from`.
std::vector<int> side_of(const std::vector<std::vector<int>>& adj, int from, int blocked) {
  std::vector<char> seen(adj.size(), 0);
  seen[from] = seen[blocked] = 1;
  std::vector<int> side{from}, stack{from};
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : adj[x])
      if (!seen[y]) {
        seen[y] = 1;
        side.push_back(y);
        stack.push_back(y);
      }
  }
  std::sort(side.begin(), side.end());
  return side;
}

int branching_in(const std::vector<std::vector<int>>& adj, const std::vector<int>& side, int cut_end) {
  int count = 0;
  for (int x : side) {
    int deg = static_cast<int>(adj[x].size()) - (x == cut_end ? 1 : 0);
    if (deg >= 3) ++count;
  }
  return count;
}

void tdelta_rec(const BipartiteGraph& g, const SupportWitness& w, const std::vector<int>& a_label, int depth,
                int delta, std::vector<SplitCheck>& splits, BranchDecomposition& out) {
  const int t_here = static_cast<int>(w.branching().size());
  if (t_here <= 1) {
    out = decompose_spider(g, w);
    return;
  }
  const auto adj = adjacency(w);
  Edge split{-1, -1};
  int best = t_here;
  std::vector<int> a1, a2;
  for (auto [u, v] : w.host_edges) {
    auto s1 = side_of(adj, u, v);
    auto s2 = side_of(adj, v, u);
    int key = std::max(branching_in(adj, s1, u), branching_in(adj, s2, v));
    if (key < best) {
      best = key;
      split = {u, v};
      a1 = std::move(s1);
      a2 = std::move(s2);
    }
  }
  if (split.first < 0) throw std::logic_error("decompose_tdelta: no splitting edge");

  std::vector<char> in_a1(static_cast<std::size_t>(g.a_size()), 0);
  for (int a : a1) in_a1[a] = 1;
  std::vector<int> x1(a1.begin(), a1.end()), x2(a2.begin(), a2.end());
  for (int b = 0; b < g.b_size(); ++b) {
    const auto& nb = g.b_neighbours(b);
    bool touches = std::any_of(nb.begin(), nb.end(), [&](int a) { return in_a1[a] != 0; });
    (touches ? x1 : x2).push_back(g.b_vertex(b));
  }
  const Graph flat = g.to_graph();
  SplitCheck check;
  check.depth = depth;
  check.host_edge = {std::min(a_label[split.first], a_label[split.second]),
                     std::max(a_label[split.first], a_label[split.second])};
  check.t = t_here;
  check.delta = delta;
  check.cut = max_induced_matching_cut(flat, x1).size;
  check.bound = delta * (t_here - 1);
  splits.push_back(check);

  std::vector<std::vector<int>> parts{x1, x2};
  std::vector<BranchDecomposition> decomps(2);
  const std::vector<int>* sides[2] = {&a1, &a2};
  for (int i = 0; i < 2; ++i) {
    auto part = induced_subgraph(g, parts[i]);
    SupportWitness sub = restrict_support(w, *sides[i]);
    std::vector<int> labels;
    for (int a : *sides[i]) labels.push_back(a_label[a]);
    tdelta_rec(part.graph, sub, labels, depth + 1, delta, splits, decomps[i]);
  }
  out = glue_multijoin(flat, parts, decomps);
}

}  // namespace

int spider_bound(int delta) { return std::max(2 * ((delta / 2) * ((delta + 1) / 2)), 2 * delta - 1); }

int tdelta_bound(int t, int delta) { return spider_bound(delta) + t * t * delta; }

std::vector<int> convex_order(const BipartiteGraph& g, const SupportWitness& path) {
  const SupportWitness p = as_kind(path, SupportKind::path);
  require(path.a_size == g.a_size() && verify_support(g, p), "decompose_convex: witness is not a valid path support");
  return anchored_order(g, path_order(p));
}

std::vector<int> circular_order(const BipartiteGraph& g, const SupportWitness& cycle) {
  require(cycle.a_size == g.a_size(), "decompose_circular: witness is for a different |A|");
  SupportWitness c = cycle;
  if (cycle.kind != SupportKind::cycle) {
    require(host_shape_ok(as_kind(cycle, SupportKind::path)), "decompose_circular: witness is not a cycle or path");
    c = cycle_witness(path_order(as_kind(cycle, SupportKind::path)));
  }
  require(verify_support(g, c), "decompose_circular: witness is not a valid cycle support");
  return anchored_order(g, cycle_order(c));
}

BranchDecomposition decompose_convex(const BipartiteGraph& g, const SupportWitness& path) {
  if (g.order() == 0) return {};
  return caterpillar_from_ordering(convex_order(g, path));
}

BranchDecomposition decompose_circular(const BipartiteGraph& g, const SupportWitness& cycle) {
  if (g.order() == 0) return {};
  return caterpillar_from_ordering(circular_order(g, cycle));
}

BranchDecomposition decompose_spider(const BipartiteGraph& g, const SupportWitness& tree) {
  require(tree.a_size == g.a_size() && verify_support(g, tree), "decompose_spider: witness is not a valid support");
  require(tree.kind != SupportKind::cycle || tree.a_size <= 2, "decompose_spider: witness must be a tree");
  const auto centres = tree.branching();
  require(centres.size() <= 1, "decompose_spider: more than one branching vertex");
  if (centres.empty()) return decompose_convex(g, path_witness(path_order(as_kind(tree, SupportKind::path))));

  const int u = centres.front();
  const auto adj = adjacency(tree);
  // Components of T - u as paths walked outward from u.
  std::vector<std::vector<int>> arms;
  std::vector<int> arm_of(static_cast<std::size_t>(g.a_size()), -1);
  for (int start : adj[u]) {
    std::vector<int> arm;
    int prev = u, cur = start;
    while (cur >= 0) {
      arm.push_back(cur);
      arm_of[cur] = static_cast<int>(arms.size());
      int next = -1;
      for (int y : adj[cur])
        if (y != prev) next = y;
      prev = cur;
      cur = next;
    }
    arms.push_back(std::move(arm));
  }
  // Arms are numbered by their least vertex.
  std::vector<int> rank(arms.size());
  std::iota(rank.begin(), rank.end(), 0);
  std::sort(rank.begin(), rank.end(), [&](int x, int y) {
    return *std::min_element(arms[x].begin(), arms[x].end()) < *std::min_element(arms[y].begin(), arms[y].end());
  });
  std::vector<int> position(arms.size());
  for (std::size_t i = 0; i < rank.size(); ++i) position[rank[i]] = static_cast<int>(i);

  const int p = static_cast<int>(arms.size());
  std::vector<std::vector<int>> parts(static_cast<std::size_t>(p));
  std::vector<std::vector<int>> a_orders(static_cast<std::size_t>(p));
  for (int i = 0; i < p; ++i) {
    const auto& arm = arms[rank[i]];
    if (i == 0) a_orders[0].push_back(u);
    a_orders[i].insert(a_orders[i].end(), arm.begin(), arm.end());
    parts[i] = a_orders[i];
  }
  for (int b = 0; b < g.b_size(); ++b) {
    int home = -1;
    bool spread = false;
    for (int a : g.b_neighbours(b)) {
      if (a == u) continue;
      int k = position[arm_of[a]];
      if (home >= 0 && home != k) spread = true;
      home = k;
    }
    // N(b) ⊆ {u} or spanning several arms: first part; otherwise its arm.
    parts[(home < 0 || spread) ? 0 : home].push_back(g.b_vertex(b));
  }

  std::vector<BranchDecomposition> decomps;
  for (int i = 0; i < p; ++i) {
    std::sort(parts[i].begin(), parts[i].end());
    auto part = induced_subgraph(g, parts[i]);
    // A-vertices of the part are relabelled in increasing order.
    std::vector<int> local_a(parts[i].begin(), parts[i].begin() + static_cast<long>(a_orders[i].size()));
    std::vector<int> order;
    for (int a : a_orders[i])
      order.push_back(static_cast<int>(std::lower_bound(local_a.begin(), local_a.end(), a) - local_a.begin()));
    decomps.push_back(decompose_convex(part.graph, path_witness(order)));
  }
  return glue_multijoin(g.to_graph(), parts, decomps);
}

TDeltaDecomposition decompose_tdelta(const BipartiteGraph& g, const SupportWitness& tree) {
  require(tree.a_size == g.a_size() && verify_support(g, tree), "decompose_tdelta: witness is not a valid support");
  require(tree.kind != SupportKind::cycle || tree.a_size <= 2, "decompose_tdelta: witness must be a tree");
  TDeltaDecomposition result;
  std::vector<int> labels(static_cast<std::size_t>(g.a_size()));
  std::iota(labels.begin(), labels.end(), 0);
  const int delta = std::max(tree.delta, tree.max_degree());
  if (g.order() == 0) return result;
  tdelta_rec(g, tree, labels, 0, delta, result.splits, result.decomposition);
  return result;
}

}  // namespace hconvex
