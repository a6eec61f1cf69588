#include "hconvex/decomposition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hconvex {

int BranchDecomposition::leaf_count() const {
  return static_cast<int>(std::count_if(leaf_vertex.begin(), leaf_vertex.end(), [](int v) { return v >= 0; }));
}

std::vector<int> BranchDecomposition::node_of_vertex() const {
  std::vector<int> out(static_cast<std::size_t>(leaf_count()), -1);
  for (int x = 0; x < static_cast<int>(leaf_vertex.size()); ++x)
    if (leaf_vertex[x] >= 0) out.at(leaf_vertex[x]) = x;
  return out;
}

void validate(const BranchDecomposition& d, int n) {
  const int nodes = d.tree.order();
  if (static_cast<int>(d.leaf_vertex.size()) != nodes)
    throw std::invalid_argument("decomposition: leaf map does not match tree");
  if (nodes == 0) {
    if (n != 0) throw std::invalid_argument("decomposition: empty tree for non-empty graph");
    return;
  }
  if (static_cast<int>(d.tree.size()) != nodes - 1 || components(d.tree).size() != 1)
    throw std::invalid_argument("decomposition: not a tree");
  std::vector<char> hit(static_cast<std::size_t>(std::max(n, 0)), 0);
  int leaves = 0;
  for (int x = 0; x < nodes; ++x) {
    const int v = d.leaf_vertex[x];
    const int deg = d.tree.degree(x);
    if (v >= 0) {
      if (v >= n || hit[v]) throw std::invalid_argument("decomposition: leaf map is not a bijection");
      if (deg > 1) throw std::invalid_argument("decomposition: vertex mapped to an inner node");
      hit[v] = 1;
      ++leaves;
    } else if (deg < 2 || deg > 3) {
      throw std::invalid_argument("decomposition: internal node of degree " + std::to_string(deg));
    }
  }
  if (leaves != n) throw std::invalid_argument("decomposition: leaf map does not cover the graph");
  for (int s : d.spine)
    if (s < 0 || s >= nodes) throw std::invalid_argument("decomposition: bad spine node");
}

BranchDecomposition make_decomposition(int nodes, std::span<const Edge> edges, std::vector<int> leaf_vertex,
                                       bool linear, std::vector<int> spine) {
  if (static_cast<int>(leaf_vertex.size()) != nodes) throw std::invalid_argument("make_decomposition: size mismatch");
  std::vector<int> id(static_cast<std::size_t>(nodes), -1);
  int next = 0;
  for (int x = 0; x < nodes; ++x)
    if (leaf_vertex[x] < 0) id[x] = next++;
  for (int x = 0; x < nodes; ++x)
    if (leaf_vertex[x] >= 0) id[x] = next++;
  std::vector<Edge> relabelled;
  for (auto [u, v] : edges) relabelled.emplace_back(std::min(id[u], id[v]), std::max(id[u], id[v]));
  BranchDecomposition d;
  d.tree = Graph(nodes, relabelled);
  d.leaf_vertex.assign(static_cast<std::size_t>(nodes), -1);
  for (int x = 0; x < nodes; ++x) d.leaf_vertex[id[x]] = leaf_vertex[x];
  d.linear = linear;
  for (int s : spine) d.spine.push_back(id.at(s));
  return d;
}

BranchDecomposition caterpillar_from_ordering(std::span<const int> order) {
  const int l = static_cast<int>(order.size());
  if (l < 1) throw std::invalid_argument("caterpillar_from_ordering: empty order");
  std::vector<char> seen(static_cast<std::size_t>(l), 0);
  for (int v : order) {
    if (v < 0 || v >= l || seen[v]) throw std::invalid_argument("caterpillar_from_ordering: not a permutation");
    seen[v] = 1;
  }
  if (l <= 2) {
    std::vector<Edge> edges;
    if (l == 2) edges.emplace_back(0, 1);
    return make_decomposition(l, edges, {order.begin(), order.end()}, true);
  }
  // Spine s_i = i, leaf t_i = l + i.
  std::vector<Edge> edges;
  std::vector<int> leaf(static_cast<std::size_t>(2 * l), -1), spine(static_cast<std::size_t>(l));
  for (int i = 0; i < l; ++i) {
    edges.emplace_back(i, l + i);
    if (i + 1 < l) edges.emplace_back(i, i + 1);
    leaf[l + i] = order[i];
    spine[i] = i;
  }
  return make_decomposition(2 * l, edges, std::move(leaf), true, std::move(spine));
}

std::vector<int> cut_side(const BranchDecomposition& d, Edge tree_edge) {
  auto [u, v] = tree_edge;
  if (!d.tree.adjacent(u, v)) throw std::invalid_argument("cut_side: not a tree edge");
  std::vector<int> side;
  std::vector<char> seen(static_cast<std::size_t>(d.tree.order()), 0);
  seen[u] = seen[v] = 1;
  std::vector<int> stack{u};
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    if (d.leaf_vertex[x] >= 0) side.push_back(d.leaf_vertex[x]);
    for (int y : d.tree.neighbours(x))
      if (!seen[y]) {
        seen[y] = 1;
        stack.push_back(y);
      }
  }
  std::sort(side.begin(), side.end());
  return side;
}

namespace {

WidthResult collect(const std::vector<Edge>& edges, const std::vector<int>& values, const BranchDecomposition& d) {
  WidthResult r;
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (!r.worst || values[i] > r.width) {
      r.width = values[i];
      r.worst = CutReport{edges[i], cut_side(d, edges[i]), values[i]};
    }
  return r;
}

}  // namespace

WidthResult width_of(const Graph& g, const BranchDecomposition& d, CutMode mode) {
  validate(d, g.order());
  const std::vector<Edge> edges = d.tree.edges();
  std::vector<int> values(edges.size(), 0);
  const long long count = static_cast<long long>(edges.size());
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < count; ++i)
    values[i] = max_induced_matching(g, cut_side(d, edges[i]), mode).size;
  return collect(edges, values, d);
}

WidthResult width_of_serial(const Graph& g, const BranchDecomposition& d, CutMode mode) {
  validate(d, g.order());
  const std::vector<Edge> edges = d.tree.edges();
  std::vector<int> values(edges.size(), 0);
  for (std::size_t i = 0; i < edges.size(); ++i) values[i] = max_induced_matching(g, cut_side(d, edges[i]), mode).size;
  return collect(edges, values, d);
}

BranchDecomposition glue_multijoin(const Graph& g, std::span<const std::vector<int>> parts,
                                   std::span<const BranchDecomposition> part_decomps) {
  const int n = g.order();
  const int p = static_cast<int>(parts.size());
  if (p < 1 || static_cast<int>(part_decomps.size()) != p)
    throw std::invalid_argument("glue_multijoin: need one decomposition per part");
  std::vector<std::vector<int>> sorted(parts.begin(), parts.end());
  std::vector<char> hit(static_cast<std::size_t>(n), 0);
  for (auto& part : sorted) {
    if (part.empty()) throw std::invalid_argument("glue_multijoin: empty part");
    std::sort(part.begin(), part.end());
    for (int v : part) {
      if (v < 0 || v >= n || hit[v]) throw std::invalid_argument("glue_multijoin: parts do not partition V(G)");
      hit[v] = 1;
    }
  }
  if (std::count(hit.begin(), hit.end(), 1) != n) throw std::invalid_argument("glue_multijoin: parts do not cover V(G)");
  for (int i = 0; i < p; ++i) validate(part_decomps[i], static_cast<int>(sorted[i].size()));

  std::vector<Edge> edges;
  std::vector<int> leaf;
  std::vector<int> attach(static_cast<std::size_t>(p));
  for (int i = 0; i < p; ++i) {
    const auto& d = part_decomps[i];
    const int offset = static_cast<int>(leaf.size());
    for (int x = 0; x < d.tree.order(); ++x)
      leaf.push_back(d.leaf_vertex[x] >= 0 ? sorted[i][d.leaf_vertex[x]] : -1);
    auto part_edges = d.tree.edges();
    if (part_edges.empty()) {
      attach[i] = offset;
      continue;
    }
    if (p == 1) {
      for (auto [u, v] : part_edges) edges.emplace_back(u + offset, v + offset);
      continue;
    }
    // Subdivide the first tree edge and hang the part from the new node.
    const int mid = static_cast<int>(leaf.size());
    leaf.push_back(-1);
    for (std::size_t k = 0; k < part_edges.size(); ++k) {
      auto [u, v] = part_edges[k];
      if (k == 0) {
        edges.emplace_back(u + offset, mid);
        edges.emplace_back(mid, v + offset);
      } else {
        edges.emplace_back(u + offset, v + offset);
      }
    }
    attach[i] = mid;
  }
  if (p == 2) {
    edges.emplace_back(attach[0], attach[1]);
  } else if (p >= 3) {
    const int first = static_cast<int>(leaf.size());
    for (int i = 0; i < p; ++i) {
      leaf.push_back(-1);
      edges.emplace_back(attach[i], first + i);
      if (i + 1 < p) edges.emplace_back(first + i, first + i + 1);
    }
  }
  const bool linear = p == 1 && part_decomps[0].linear;
  std::vector<int> spine;
  if (linear) {
    // Internal nodes keep their relative order, so the spine ids carry over.
    spine = part_decomps[0].spine;
  }
  const int nodes = static_cast<int>(leaf.size());
  return make_decomposition(nodes, edges, std::move(leaf), linear, std::move(spine));
}

int multijoin_constant(const Graph& g, std::span<const std::vector<int>> parts) {
  int c = 0;
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = i + 1; j < parts.size(); ++j)
      c = std::max(c, max_induced_matching_between(g, parts[i], parts[j]).size);
  return c;
}

int multijoin_bound(int c, int p, std::span<const int> part_widths) {
  const int widest = part_widths.empty() ? 0 : *std::max_element(part_widths.begin(), part_widths.end());
  if (p <= 1) return widest;
  return std::max(c * ((p / 2) * ((p + 1) / 2)), widest + c * (p - 1));
}

}  // namespace hconvex
