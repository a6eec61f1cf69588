#include "hconvex/induced_matching.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>

namespace hconvex {

namespace {

using Bits = std::vector<std::uint64_t>;

// Maximum clique by colour-bounded branch and bound (Tomita-style MCQ).
class MaxClique {
 public:
  MaxClique(int m, Bits rows) : m_(m), words_((static_cast<std::size_t>(m) + 63) / 64), rows_(std::move(rows)) {}

  std::vector<int> run() {
    Bits all(words_, 0);
    for (int v = 0; v < m_; ++v) all[v >> 6] |= std::uint64_t{1} << (v & 63);
    if (m_ > 0) expand(all);
    return best_;
  }

 private:
  static bool empty(const Bits& b) {
    return std::all_of(b.begin(), b.end(), [](std::uint64_t w) { return w == 0; });
  }
  static int lowest(const Bits& b) {
    for (std::size_t i = 0; i < b.size(); ++i)
      if (b[i]) return static_cast<int>(i * 64 + std::countr_zero(b[i]));
    return -1;
  }
  const std::uint64_t* row(int v) const { return rows_.data() + static_cast<std::size_t>(v) * words_; }

  void colour_sort(const Bits& p, std::vector<int>& order, std::vector<int>& bound) const {
    Bits rest = p;
    int colour = 0;
    while (!empty(rest)) {
      ++colour;
      Bits q = rest;
      while (!empty(q)) {
        int v = lowest(q);
        const std::uint64_t* r = row(v);
        for (std::size_t i = 0; i < words_; ++i) q[i] &= ~r[i];
        q[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
        rest[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
        order.push_back(v);
        bound.push_back(colour);
      }
    }
  }

  void expand(Bits p) {
    std::vector<int> order, bound;
    colour_sort(p, order, bound);
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      if (cur_.size() + static_cast<std::size_t>(bound[i]) <= best_.size()) return;
      const int v = order[i];
      cur_.push_back(v);
      Bits next(words_);
      const std::uint64_t* r = row(v);
      for (std::size_t w = 0; w < words_; ++w) next[w] = p[w] & r[w];
      if (empty(next)) {
        if (cur_.size() > best_.size()) best_ = cur_;
      } else {
        expand(std::move(next));
      }
      cur_.pop_back();
      p[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }
  }

  int m_;
  std::size_t words_;
  Bits rows_;
  std::vector<int> cur_, best_;
};

// label[v]: 1 for X, 2 for Y, 0 for ignored.
InducedMatching solve(const Graph& g, const std::vector<char>& label, CutMode mode) {
  const int n = g.order();
  // Vertices of one side with equal cross-neighbourhoods are interchangeable
  // in the cut graph and at most one of them can be matched.
  std::vector<char> active(static_cast<std::size_t>(n), 0);
  std::map<std::vector<int>, int> seen;
  for (int v = 0; v < n; ++v) {
    if (!label[v]) continue;
    std::vector<int> key{label[v]};
    for (int w : g.neighbours(v))
      if (label[w] && label[w] != label[v]) key.push_back(w);
    if (key.size() == 1) continue;
    if (mode == CutMode::mim) {
      if (!seen.emplace(std::move(key), v).second) continue;
    }
    active[v] = 1;
  }

  std::vector<Edge> cross;
  for (int x = 0; x < n; ++x) {
    if (label[x] != 1 || !active[x]) continue;
    for (int y : g.neighbours(x))
      if (label[y] == 2 && active[y]) cross.emplace_back(x, y);
  }
  const int m = static_cast<int>(cross.size());
  InducedMatching out;
  if (m == 0) return out;

  auto compatible = [&](const Edge& e, const Edge& f) {
    auto [x1, y1] = e;
    auto [x2, y2] = f;
    if (x1 == x2 || y1 == y2 || g.adjacent(x1, y2) || g.adjacent(x2, y1)) return false;
    if (mode == CutMode::sim && (g.adjacent(x1, x2) || g.adjacent(y1, y2))) return false;
    return true;
  };
  // Higher-degree edges first gives MCQ a better initial colouring.
  std::vector<int> deg(static_cast<std::size_t>(m), 0);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (compatible(cross[i], cross[j])) {
        ++deg[i];
        ++deg[j];
      }
  std::vector<int> perm(static_cast<std::size_t>(m));
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) { return deg[a] > deg[b]; });

  const std::size_t words = (static_cast<std::size_t>(m) + 63) / 64;
  Bits rows(words * static_cast<std::size_t>(m), 0);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (compatible(cross[perm[i]], cross[perm[j]])) {
        rows[static_cast<std::size_t>(i) * words + (j >> 6)] |= std::uint64_t{1} << (j & 63);
        rows[static_cast<std::size_t>(j) * words + (i >> 6)] |= std::uint64_t{1} << (i & 63);
      }
  for (int v : MaxClique(m, std::move(rows)).run()) out.edges.push_back(cross[perm[v]]);
  std::sort(out.edges.begin(), out.edges.end());
  out.size = static_cast<int>(out.edges.size());
  return out;
}

}  // namespace

InducedMatching max_induced_matching(const Graph& g, std::span<const int> side, CutMode mode) {
  std::vector<char> label(static_cast<std::size_t>(g.order()), 2);
  for (int v : side) {
    if (v < 0 || v >= g.order()) throw std::out_of_range("max_induced_matching: vertex out of range");
    label[v] = 1;
  }
  return solve(g, label, mode);
}

InducedMatching max_induced_matching_between(const Graph& g, std::span<const int> x, std::span<const int> y) {
  std::vector<char> label(static_cast<std::size_t>(g.order()), 0);
  for (int v : x) {
    if (v < 0 || v >= g.order()) throw std::out_of_range("max_induced_matching_between: vertex out of range");
    label[v] = 1;
  }
  for (int v : y) {
    if (v < 0 || v >= g.order()) throw std::out_of_range("max_induced_matching_between: vertex out of range");
    if (label[v] == 1) throw std::invalid_argument("max_induced_matching_between: sets overlap");
    label[v] = 2;
  }
  return solve(g, label, CutMode::mim);
}

}  // namespace hconvex
