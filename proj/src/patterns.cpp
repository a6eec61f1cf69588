#include "hconvex/patterns.hpp"

#include <algorithm>
#include <functional>
#include <vector>

namespace hconvex {

namespace {

// Pattern vertices in BFS order from the highest-degree vertex of each
// component, so that most placements are constrained by an earlier neighbour.
std::vector<int> matching_order(const Graph& p) {
  std::vector<int> order;
  std::vector<char> placed(static_cast<std::size_t>(p.order()), 0);
  while (static_cast<int>(order.size()) < p.order()) {
    int start = -1;
    for (int v = 0; v < p.order(); ++v)
      if (!placed[v] && (start < 0 || p.degree(v) > p.degree(start))) start = v;
    placed[start] = 1;
    std::size_t head = order.size();
    order.push_back(start);
    for (; head < order.size(); ++head)
      for (int w : p.neighbours(order[head]))
        if (!placed[w]) {
          placed[w] = 1;
          order.push_back(w);
        }
  }
  return order;
}

}  // namespace

bool has_induced_pattern(const Graph& g, const Graph& pattern) {
  const int k = pattern.order();
  if (k == 0) return true;
  if (k > g.order()) return false;
  const std::vector<int> order = matching_order(pattern);
  std::vector<int> image(static_cast<std::size_t>(k), -1);
  std::vector<char> used(static_cast<std::size_t>(g.order()), 0);

  std::function<bool(int)> extend = [&](int depth) -> bool {
    if (depth == k) return true;
    const int pv = order[depth];
    // Candidates: neighbours of an already-mapped pattern neighbour if any.
    int anchor = -1;
    for (int i = 0; i < depth && anchor < 0; ++i)
      if (pattern.adjacent(pv, order[i])) anchor = image[order[i]];
    auto try_vertex = [&](int gv) -> bool {
      if (used[gv] || g.degree(gv) < pattern.degree(pv)) return false;
      for (int i = 0; i < depth; ++i)
        if (pattern.adjacent(pv, order[i]) != g.adjacent(gv, image[order[i]])) return false;
      image[pv] = gv;
      used[gv] = 1;
      bool ok = extend(depth + 1);
      used[gv] = 0;
      image[pv] = -1;
      return ok;
    };
    if (anchor >= 0) {
      for (int gv : g.neighbours(anchor))
        if (try_vertex(gv)) return true;
    } else {
      for (int gv = 0; gv < g.order(); ++gv)
        if (try_vertex(gv)) return true;
    }
    return false;
  };
  return extend(0);
}

Graph k3_box_s3() {
  // x, y, z = 0, 1, 2; x', y', z' = 3, 4, 5
  const Edge edges[] = {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}};
  return Graph(6, edges);
}

Graph k3_box_k3() {
  // a1, b1, c1 = 0, 1, 2; a2, b2, c2 = 3, 4, 5
  const Edge edges[] = {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}};
  return Graph(6, edges);
}

}  // namespace hconvex
