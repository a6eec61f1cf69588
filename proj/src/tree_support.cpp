#include "tree_support.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hconvex::detail {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

struct WeightedEdge {
  int u, v, w;
};

// Branch-and-bound for a cap-respecting maximum-weight spanning tree of one
// connected component whose weight must reach `target`.
class ComponentSearch {
 public:
  ComponentSearch(int m, std::vector<WeightedEdge> edges, std::vector<int> caps, long long target)
      : m_(m), edges_(std::move(edges)), caps_(std::move(caps)), target_(target) {
    std::stable_sort(edges_.begin(), edges_.end(), [](const WeightedEdge& x, const WeightedEdge& y) {
      return x.w > y.w;
    });
    incident_.assign(static_cast<std::size_t>(m_), {});
    for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
      incident_[edges_[e].u].push_back(e);
      incident_[edges_[e].v].push_back(e);
    }
    root_.status.assign(edges_.size(), kUndecided);
    root_.deg.assign(static_cast<std::size_t>(m_), 0);
  }

  // Marks local edge uv as mandatory; false if it cannot be part of any tree.
  bool force(int u, int v) {
    for (int e : incident_[u]) {
      if ((edges_[e].u == u && edges_[e].v == v) || (edges_[e].u == v && edges_[e].v == u)) {
        if (root_.status[e] == kChosen) return true;
        root_.status[e] = kChosen;
        ++root_.deg[u];
        ++root_.deg[v];
        ++root_.chosen;
        return true;
      }
    }
    return false;
  }

  std::optional<std::vector<Edge>> run() {
    UnionFind uf(m_);
    for (std::size_t e = 0; e < edges_.size(); ++e)
      if (root_.status[e] == kChosen && !uf.unite(edges_[e].u, edges_[e].v)) return std::nullopt;
    State s = root_;
    if (!search(s)) return std::nullopt;
    return result_;
  }

 private:
  enum : char { kUndecided = 0, kChosen = 1, kExcluded = 2 };
  struct State {
    std::vector<char> status;
    std::vector<int> deg;
    int chosen = 0;
  };

  // Kruskal maximum-weight spanning tree through all chosen edges, avoiding
  // excluded edges and `skip`. False if it is disconnected or too light.
  bool best_tree(const State& s, int skip, std::vector<int>* tree) const {
    UnionFind uf(m_);
    long long weight = 0;
    int joined = 0;
    if (tree) tree->clear();
    for (int pass = 0; pass < 2; ++pass) {
      for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
        const char want = pass == 0 ? kChosen : kUndecided;
        if (s.status[e] != want || e == skip) continue;
        if (!uf.unite(edges_[e].u, edges_[e].v)) continue;
        weight += edges_[e].w;
        ++joined;
        if (tree) tree->push_back(e);
      }
    }
    return joined == m_ - 1 && weight == target_;
  }

  bool propagate(State& s, std::vector<int>& tree) const {
    for (;;) {
      for (int v = 0; v < m_; ++v) {
        if (s.deg[v] > caps_[v]) return false;
        if (s.deg[v] == caps_[v])
          for (int e : incident_[v])
            if (s.status[e] == kUndecided) s.status[e] = kExcluded;
      }
      UnionFind uf(m_);
      for (std::size_t e = 0; e < edges_.size(); ++e)
        if (s.status[e] == kChosen) uf.unite(edges_[e].u, edges_[e].v);
      for (std::size_t e = 0; e < edges_.size(); ++e)
        if (s.status[e] == kUndecided && uf.find(edges_[e].u) == uf.find(edges_[e].v)) s.status[e] = kExcluded;

      if (!best_tree(s, -1, &tree)) return false;
      if (s.chosen == m_ - 1) return true;
      // Edges of the current optimum without which no optimum survives are
      // in every admissible tree.
      bool forced_any = false;
      for (int e : tree) {
        if (s.status[e] != kUndecided || best_tree(s, e, nullptr)) continue;
        s.status[e] = kChosen;
        ++s.deg[edges_[e].u];
        ++s.deg[edges_[e].v];
        ++s.chosen;
        forced_any = true;
      }
      if (!forced_any) return true;
    }
  }

  bool search(State& s) {
    std::vector<int> tree;
    if (!propagate(s, tree)) return false;
    std::vector<int> d(static_cast<std::size_t>(m_), 0);
    for (int e : tree) {
      ++d[edges_[e].u];
      ++d[edges_[e].v];
    }
    int bad = -1;
    for (int v = 0; v < m_ && bad < 0; ++v)
      if (d[v] > caps_[v]) bad = v;
    if (bad < 0) {
      std::vector<Edge> out;
      for (int e : tree) out.emplace_back(edges_[e].u, edges_[e].v);
      result_ = std::move(out);
      return true;
    }
    int pick = -1;
    for (int e : tree)
      if (s.status[e] == kUndecided && (edges_[e].u == bad || edges_[e].v == bad) &&
          (pick < 0 || edges_[e].w < edges_[pick].w))
        pick = e;
    if (pick < 0) return false;

    State without = s;
    without.status[pick] = kExcluded;
    if (search(without)) return true;
    s.status[pick] = kChosen;
    ++s.deg[edges_[pick].u];
    ++s.deg[edges_[pick].v];
    ++s.chosen;
    return search(s);
  }

  int m_;
  std::vector<WeightedEdge> edges_;
  std::vector<int> caps_;
  long long target_;
  std::vector<std::vector<int>> incident_;
  State root_;
  std::vector<Edge> result_;
};

}  // namespace

TreeSupportSolver::TreeSupportSolver(const Hypergraph& h) : n_(h.ground_size) {
  if (n_ < 1) throw std::invalid_argument("tree support: ground set must be non-empty");
  weight_.assign(static_cast<std::size_t>(n_), std::vector<int>(static_cast<std::size_t>(n_), 0));
  UnionFind uf(n_);
  std::vector<long long> excess(static_cast<std::size_t>(n_), 0);
  for (const auto& s : h.hyperedges) {
    std::vector<int> set = s;
    std::sort(set.begin(), set.end());
    if (std::adjacent_find(set.begin(), set.end()) != set.end())
      throw std::invalid_argument("tree support: repeated vertex in hyperedge");
    for (int v : set)
      if (v < 0 || v >= n_) throw std::invalid_argument("tree support: hyperedge vertex out of range");
    for (std::size_t i = 0; i < set.size(); ++i)
      for (std::size_t j = i + 1; j < set.size(); ++j) {
        ++weight_[set[i]][set[j]];
        ++weight_[set[j]][set[i]];
        uf.unite(set[i], set[j]);
      }
    if (!set.empty()) excess[set.front()] += static_cast<long long>(set.size()) - 1;
  }
  comp_of_.assign(static_cast<std::size_t>(n_), -1);
  for (int v = 0; v < n_; ++v) {
    int r = uf.find(v);
    if (comp_of_[r] < 0) {
      comp_of_[r] = static_cast<int>(comps_.size());
      comps_.emplace_back();
      comp_target_.push_back(0);
    }
    comp_of_[v] = comp_of_[r];
    comps_[comp_of_[v]].push_back(v);
    comp_target_[comp_of_[v]] += excess[v];
  }
}

std::optional<std::vector<Edge>> TreeSupportSolver::solve(std::span<const int> caps,
                                                          std::span<const Edge> forced) const {
  if (static_cast<int>(caps.size()) != n_) throw std::invalid_argument("tree support: one cap per vertex required");
  std::vector<Edge> fixed;
  for (auto [u, v] : forced) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v)
      throw std::invalid_argument("tree support: bad forced edge");
    fixed.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(fixed.begin(), fixed.end());
  if (std::adjacent_find(fixed.begin(), fixed.end()) != fixed.end())
    throw std::invalid_argument("tree support: repeated forced edge");

  const int comp_count = static_cast<int>(comps_.size());
  std::vector<int> residual(caps.begin(), caps.end());
  std::vector<std::vector<Edge>> comp_forced(static_cast<std::size_t>(comp_count));
  std::vector<Edge> result;
  UnionFind joins(comp_count);
  for (auto [u, v] : fixed) {
    if (weight_[u][v] > 0) {
      comp_forced[comp_of_[u]].emplace_back(u, v);
      continue;
    }
    if (!joins.unite(comp_of_[u], comp_of_[v])) return std::nullopt;
    --residual[u];
    --residual[v];
    result.emplace_back(u, v);
  }
  for (int v = 0; v < n_; ++v)
    if (residual[v] < 0) return std::nullopt;

  for (int c = 0; c < comp_count; ++c) {
    const auto& verts = comps_[c];
    const int m = static_cast<int>(verts.size());
    if (m < 2) continue;
    std::vector<int> local(static_cast<std::size_t>(n_), -1);
    for (int i = 0; i < m; ++i) local[verts[i]] = i;
    std::vector<WeightedEdge> edges;
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        if (int w = weight_[verts[i]][verts[j]]; w > 0) edges.push_back({i, j, w});
    std::vector<int> local_caps(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) local_caps[i] = residual[verts[i]];
    ComponentSearch search(m, std::move(edges), std::move(local_caps), comp_target_[c]);
    for (auto [u, v] : comp_forced[c])
      if (!search.force(local[u], local[v])) return std::nullopt;
    auto tree = search.run();
    if (!tree) return std::nullopt;
    for (auto [i, j] : *tree) {
      int u = verts[i], v = verts[j];
      --residual[u];
      --residual[v];
      result.emplace_back(std::min(u, v), std::max(u, v));
    }
  }

  // Join the groups of components with zero-weight edges: a tree on the
  // groups with degree sequence D exists iff 1 <= D_g <= residual(g).
  std::vector<int> group_of_comp(static_cast<std::size_t>(comp_count), -1);
  std::vector<std::vector<int>> groups;
  for (int c = 0; c < comp_count; ++c) {
    int r = joins.find(c);
    if (group_of_comp[r] < 0) {
      group_of_comp[r] = static_cast<int>(groups.size());
      groups.emplace_back();
    }
    group_of_comp[c] = group_of_comp[r];
    for (int v : comps_[c]) groups[group_of_comp[c]].push_back(v);
  }
  const int r = static_cast<int>(groups.size());
  if (r >= 2) {
    std::vector<long long> room(static_cast<std::size_t>(r), 0);
    long long usable = 0;
    for (int g = 0; g < r; ++g) {
      std::sort(groups[g].begin(), groups[g].end());
      for (int v : groups[g]) room[g] += residual[v];
      if (room[g] < 1) return std::nullopt;
      usable += std::min<long long>(room[g], r - 1);
    }
    if (usable < 2LL * (r - 1)) return std::nullopt;

    std::vector<int> degree(static_cast<std::size_t>(r), 1);
    long long extra = r - 2;
    for (int g = 0; g < r && extra > 0; ++g) {
      long long add = std::min<long long>(extra, std::min<long long>(room[g], r - 1) - 1);
      degree[g] += static_cast<int>(add);
      extra -= add;
    }
    auto endpoint = [&](int g) {
      for (int v : groups[g])
        if (residual[v] > 0) {
          --residual[v];
          return v;
        }
      throw std::logic_error("tree support: group joining ran out of capacity");
    };
    auto connect = [&](int g1, int g2) {
      int u = endpoint(g1), v = endpoint(g2);
      result.emplace_back(std::min(u, v), std::max(u, v));
    };
    std::vector<char> alive(static_cast<std::size_t>(r), 1);
    for (int left = r; left > 2; --left) {
      int leaf = -1, hub = -1;
      for (int g = 0; g < r && leaf < 0; ++g)
        if (alive[g] && degree[g] == 1) leaf = g;
      for (int g = 0; g < r && hub < 0; ++g)
        if (alive[g] && g != leaf && degree[g] >= 2) hub = g;
      connect(leaf, hub);
      alive[leaf] = 0;
      --degree[hub];
    }
    int last[2], k = 0;
    for (int g = 0; g < r; ++g)
      if (alive[g]) last[k++] = g;
    connect(last[0], last[1]);
  }
  std::sort(result.begin(), result.end());
  return result;
}

}  // namespace hconvex::detail
