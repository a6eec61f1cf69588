#include "hconvex/width_oracle.hpp"

#include <array>
#include <atomic>
#include <cstdint>
#include <numeric>

namespace hconvex {

namespace {

constexpr int kHardLimit = 16;

// cut[k][S]: cut value of (S, {0..k} \ S) in G[{0..k}].
using CutTables = std::vector<std::vector<std::uint8_t>>;

CutTables build_tables(const Graph& g, CutMode mode, bool parallel) {
  const int n = g.order();
  CutTables cut(static_cast<std::size_t>(n));
  for (int k = 1; k < n; ++k) {
    std::vector<int> prefix(static_cast<std::size_t>(k + 1));
    std::iota(prefix.begin(), prefix.end(), 0);
    const Graph gk = induced_subgraph(g, prefix).graph;
    const std::uint32_t full = (std::uint32_t{1} << (k + 1)) - 1;
    auto& table = cut[k];
    table.assign(static_cast<std::size_t>(full) + 1, 0);
    const long long count = static_cast<long long>(full) + 1;
    auto fill = [&](long long s) {
      const auto mask = static_cast<std::uint32_t>(s);
      if (mask > (full ^ mask)) return;
      std::vector<int> side;
      for (int v = 0; v <= k; ++v)
        if (mask >> v & 1u) side.push_back(v);
      const auto value = static_cast<std::uint8_t>(max_induced_matching(gk, side, mode).size);
      table[mask] = value;
      table[full ^ mask] = value;
    };
    if (parallel) {
#pragma omp parallel for schedule(dynamic, 64)
      for (long long s = 0; s < count; ++s) fill(s);
    } else {
      for (long long s = 0; s < count; ++s) fill(s);
    }
  }
  return cut;
}

// Rooted at leaf 0; below[e] holds the leaves under edge e.
struct Partial {
  int nodes = 0;
  int edge_count = 0;
  std::array<int, 2 * kHardLimit> parent{};
  std::array<int, 2 * kHardLimit> child{};
  std::array<std::uint32_t, 2 * kHardLimit> below{};
  int width = 0;
};

Partial insert(const Partial& p, int e, int leaf) {
  Partial q = p;
  const std::uint32_t under = p.below[e];
  const std::uint32_t bit = std::uint32_t{1} << leaf;
  for (int f = 0; f < p.edge_count; ++f)
    if (f != e && (p.below[f] & under) == under) q.below[f] |= bit;
  const int mid = q.nodes++;
  const int old_child = p.child[e];
  q.child[e] = mid;
  q.below[e] = under | bit;
  q.parent[q.edge_count] = mid;
  q.child[q.edge_count] = old_child;
  q.below[q.edge_count++] = under;
  q.parent[q.edge_count] = mid;
  q.child[q.edge_count] = leaf;
  q.below[q.edge_count++] = bit;
  return q;
}

int partial_width(const Partial& p, const CutTables& cut, int k) {
  int w = 0;
  for (int f = 0; f < p.edge_count; ++f) w = std::max<int>(w, cut[k][p.below[f]]);
  return w;
}

Partial start(int n, const CutTables& cut) {
  Partial p;
  p.nodes = n;  // internal nodes are numbered from n
  p.edge_count = 1;
  p.parent[0] = 0;
  p.child[0] = 1;
  p.below[0] = 2;
  p.width = cut[1][2];
  return p;
}

// Minimum completion width below `bound` (exclusive), shared through `best`.
void minimise(const Partial& p, int next, int n, const CutTables& cut, std::atomic<int>& best) {
  if (next == n) {
    int cur = best.load();
    while (p.width < cur && !best.compare_exchange_weak(cur, p.width)) {
    }
    return;
  }
  for (int e = 0; e < p.edge_count; ++e) {
    Partial q = insert(p, e, next);
    q.width = std::max(p.width, partial_width(q, cut, next));
    if (q.width >= best.load()) continue;
    minimise(q, next + 1, n, cut, best);
  }
}

bool first_within(const Partial& p, int next, int n, const CutTables& cut, int target, Partial& out) {
  if (next == n) {
    out = p;
    return true;
  }
  for (int e = 0; e < p.edge_count; ++e) {
    Partial q = insert(p, e, next);
    q.width = std::max(p.width, partial_width(q, cut, next));
    if (q.width > target) continue;
    if (first_within(q, next + 1, n, cut, target, out)) return true;
  }
  return false;
}

void expand_level(const Partial& p, int next, int stop, const CutTables& cut, std::vector<Partial>& out) {
  if (next == stop) {
    out.push_back(p);
    return;
  }
  for (int e = 0; e < p.edge_count; ++e) {
    Partial q = insert(p, e, next);
    q.width = std::max(p.width, partial_width(q, cut, next));
    expand_level(q, next + 1, stop, cut, out);
  }
}

WidthOracleResult run(const Graph& g, CutMode mode, int guard, bool parallel) {
  const int n = g.order();
  if (n > guard || n > kHardLimit) throw GuardExceeded(n, std::min(guard, kHardLimit));
  WidthOracleResult result;
  if (n <= 2) {
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    if (n > 0) result.witness = caterpillar_from_ordering(order);
    result.witness.linear = false;
    result.value = n == 2 && g.adjacent(0, 1) ? 1 : 0;
    return result;
  }
  const CutTables cut = build_tables(g, mode, parallel);
  const Partial root = start(n, cut);
  std::atomic<int> best{n};
  if (parallel) {
    std::vector<Partial> frontier;
    expand_level(root, 2, std::min(n, 6), cut, frontier);
    const long long count = static_cast<long long>(frontier.size());
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < count; ++i)
      if (frontier[i].width < best.load()) minimise(frontier[i], std::min(n, 6), n, cut, best);
  } else {
    minimise(root, 2, n, cut, best);
  }
  result.value = best.load();

  Partial tree;
  if (!first_within(root, 2, n, cut, result.value, tree)) throw std::logic_error("width oracle lost its optimum");
  std::vector<Edge> edges;
  for (int f = 0; f < tree.edge_count; ++f) edges.emplace_back(tree.parent[f], tree.child[f]);
  std::vector<int> leaf(static_cast<std::size_t>(tree.nodes), -1);
  for (int v = 0; v < n; ++v) leaf[v] = v;
  result.witness = make_decomposition(tree.nodes, edges, std::move(leaf));
  return result;
}

}  // namespace

WidthOracleResult width_oracle(const Graph& g, CutMode mode, int guard) { return run(g, mode, guard, true); }

WidthOracleResult width_oracle_serial(const Graph& g, CutMode mode, int guard) {
  return run(g, mode, guard, false);
}

}  // namespace hconvex
