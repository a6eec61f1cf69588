#include "hconvex/thinness.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>

namespace hconvex {

namespace {

struct Layout {
  std::vector<int> pos;       // vertex -> position in the order
  std::vector<int> class_of;  // vertex -> class index
};

Layout layout(const ThinRepresentation& r, int n) {
  validate(r, n);
  Layout l{std::vector<int>(static_cast<std::size_t>(n)), std::vector<int>(static_cast<std::size_t>(n))};
  for (int i = 0; i < n; ++i) l.pos[r.order[i]] = i;
  for (int c = 0; c < r.class_count(); ++c)
    for (int v : r.classes[c]) l.class_of[v] = c;
  return l;
}

ThinRepresentation sorted_classes(std::vector<int> order, std::vector<std::vector<int>> classes, bool strong) {
  std::erase_if(classes, [](const std::vector<int>& c) { return c.empty(); });
  for (auto& c : classes) std::sort(c.begin(), c.end());
  return ThinRepresentation{std::move(order), std::move(classes), strong};
}

}  // namespace

void validate(const ThinRepresentation& r, int n) {
  if (static_cast<int>(r.order.size()) != n) throw std::invalid_argument("thin representation: order has wrong length");
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int v : r.order) {
    if (v < 0 || v >= n || seen[v]) throw std::invalid_argument("thin representation: order is not a permutation");
    seen[v] = 1;
  }
  std::vector<char> placed(static_cast<std::size_t>(n), 0);
  int covered = 0;
  for (const auto& c : r.classes) {
    if (c.empty()) throw std::invalid_argument("thin representation: empty class");
    for (int v : c) {
      if (v < 0 || v >= n || placed[v]) throw std::invalid_argument("thin representation: classes overlap");
      placed[v] = 1;
      ++covered;
    }
  }
  if (covered != n) throw std::invalid_argument("thin representation: classes do not cover the graph");
  if (n > 0 && r.classes.empty()) throw std::invalid_argument("thin representation: no classes");
}

bool verify_consistent(const Graph& g, const ThinRepresentation& r) {
  const int n = g.order();
  const Layout l = layout(r, n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      const int vr = r.order[a], vs = r.order[b];
      if (l.class_of[vr] != l.class_of[vs]) continue;
      for (int c = b + 1; c < n; ++c) {
        const int vt = r.order[c];
        if (g.adjacent(vr, vt) && !g.adjacent(vs, vt)) return false;
      }
    }
  return true;
}

bool strongly_consistent_by_triples(const Graph& g, const ThinRepresentation& r) {
  if (!verify_consistent(g, r)) return false;
  const int n = g.order();
  const Layout l = layout(r, n);
  for (int b = 0; b < n; ++b)
    for (int c = b + 1; c < n; ++c) {
      const int vs = r.order[b], vt = r.order[c];
      if (l.class_of[vs] != l.class_of[vt]) continue;
      for (int a = 0; a < b; ++a) {
        const int vr = r.order[a];
        if (g.adjacent(vr, vt) && !g.adjacent(vr, vs)) return false;
      }
    }
  return true;
}

bool strongly_consistent_by_intervals(const Graph& g, const ThinRepresentation& r) {
  const int n = g.order();
  const Layout l = layout(r, n);
  std::vector<std::vector<int>> members(r.classes.size());
  for (int v : r.order) members[l.class_of[v]].push_back(v);  // each class in order
  for (int v = 0; v < n; ++v) {
    for (const auto& cls : members) {
      // Walk V^j ∪ {v} in order; N[v] must occupy one contiguous run.
      int runs = 0;
      bool inside = false;
      bool v_done = false;
      auto visit = [&](int x) {
        const bool in = x == v || g.adjacent(v, x);
        if (in && !inside) ++runs;
        inside = in;
      };
      for (int x : cls) {
        if (!v_done && l.pos[v] < l.pos[x]) {
          visit(v);
          v_done = true;
        }
        if (x == v) v_done = true;
        visit(x);
      }
      if (!v_done) visit(v);
      if (runs > 1) return false;
    }
  }
  return true;
}

bool verify_strongly_consistent(const Graph& g, const ThinRepresentation& r) {
  const bool by_triples = strongly_consistent_by_triples(g, r);
  const bool by_intervals = strongly_consistent_by_intervals(g, r);
  if (by_triples != by_intervals) throw std::logic_error("strong consistency characterizations disagree");
  return by_triples;
}

int thin_bound(int t, int delta) { return 2 + t * (delta - 2); }

int pthin_bound(int q) { return (1 << q) * (q + 1); }

ThinRepresentation thin_from_tree_support(const BipartiteGraph& g, const SupportWitness& tree) {
  const int n = g.a_size();
  if (tree.a_size != n || !verify_support(g, tree) || (tree.kind == SupportKind::cycle && n >= 3))
    throw std::invalid_argument("thin_from_tree_support: witness is not a valid tree support");

  std::vector<std::vector<int>> classes;
  if (g.b_size() > 0) {
    classes.emplace_back();
    for (int b = 0; b < g.b_size(); ++b) classes[0].push_back(g.b_vertex(b));
  }
  std::vector<int> a_order;
  if (n > 0) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (auto [u, v] : tree.host_edges) {
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());
    int root = 0;
    while (adj[root].size() > 1) ++root;

    std::function<void(int, int, int)> visit = [&](int x, int parent, int cls) {
      classes[cls].push_back(x);
      bool first = true;
      for (int y : adj[x]) {
        if (y == parent) continue;
        int child_cls = cls;
        if (!first) {
          child_cls = static_cast<int>(classes.size());
          classes.emplace_back();
        }
        first = false;
        visit(y, x, child_cls);
      }
      a_order.push_back(x);
    };
    classes.emplace_back();
    visit(root, -1, static_cast<int>(classes.size()) - 1);
  }

  std::vector<int> pos(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) pos[a_order[i]] = i;
  std::vector<std::vector<int>> after(static_cast<std::size_t>(n));
  std::vector<int> order, isolated;
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
  for (int i = 0; i < n; ++i) {
    order.push_back(a_order[i]);
    order.insert(order.end(), after[i].begin(), after[i].end());
  }
  order.insert(order.end(), isolated.begin(), isolated.end());
  return sorted_classes(std::move(order), std::move(classes), false);
}

BranchDecomposition linear_bd_from_thin(const Graph& g, const ThinRepresentation& r) {
  if (!verify_consistent(g, r)) throw std::invalid_argument("linear_bd_from_thin: representation is not consistent");
  if (g.order() == 0) return {};
  return caterpillar_from_ordering(r.order);
}

PathDecompositionCheck verify_pathdecomp(const Graph& g, const PathDecomposition& p) {
  const int n = g.order();
  PathDecompositionCheck out;
  std::vector<int> first(static_cast<std::size_t>(n), -1), last(static_cast<std::size_t>(n), -1);
  int widest = 0;
  for (int i = 0; i < static_cast<int>(p.bags.size()); ++i) {
    std::vector<int> bag = p.bags[i];
    std::sort(bag.begin(), bag.end());
    if (std::adjacent_find(bag.begin(), bag.end()) != bag.end()) {
      out.reason = "bag " + std::to_string(i + 1) + " repeats a vertex";
      return out;
    }
    for (int v : bag) {
      if (v < 0 || v >= n) {
        out.reason = "bag " + std::to_string(i + 1) + " has a vertex out of range";
        return out;
      }
      if (first[v] < 0) first[v] = i;
      if (last[v] >= 0 && last[v] != i - 1) {
        out.reason = "bags containing vertex " + std::to_string(v + 1) + " are not consecutive";
        return out;
      }
      last[v] = i;
    }
    widest = std::max(widest, static_cast<int>(bag.size()));
  }
  for (int v = 0; v < n; ++v)
    if (first[v] < 0) {
      out.reason = "vertex " + std::to_string(v + 1) + " is in no bag";
      return out;
    }
  for (auto [u, v] : g.edges())
    if (std::max(first[u], first[v]) > std::min(last[u], last[v])) {
      out.reason = "edge " + std::to_string(u + 1) + "-" + std::to_string(v + 1) + " is in no bag";
      return out;
    }
  out.valid = true;
  out.width = widest - 1;
  return out;
}

ThinRepresentation pathdecomp_to_pthin(const Graph& g, const PathDecomposition& p) {
  const auto check = verify_pathdecomp(g, p);
  if (!check.valid) throw std::invalid_argument("pathdecomp_to_pthin: " + check.reason);
  if (check.width > 30) throw std::invalid_argument("pathdecomp_to_pthin: width above 30 is not supported");
  const int n = g.order();
  if (n == 0) return ThinRepresentation{{}, {}, true};
  std::vector<int> first(static_cast<std::size_t>(n), -1), last(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < static_cast<int>(p.bags.size()); ++i)
    for (int v : p.bags[i]) {
      if (first[v] < 0) first[v] = i;
      last[v] = i;
    }
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return first[x] < first[y]; });

  // Earlier vertices whose bag interval meets v's all contain bag first[v],
  // so at most q of them are coloured when v is reached.
  std::vector<int> colour(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    const int v = order[i];
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    for (int j = 0; j < i; ++j)
      if (last[order[j]] >= first[v]) used[colour[order[j]]] = 1;
    int c = 0;
    while (used[c]) ++c;
    colour[v] = c;
  }
  const int colours = *std::max_element(colour.begin(), colour.end()) + 1;

  std::vector<int> pos(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  std::map<std::pair<int, std::uint64_t>, std::vector<int>> refined;
  for (int v = 0; v < n; ++v) {
    std::vector<int> smaller(static_cast<std::size_t>(colours), 0);
    std::uint64_t mask = 0;
    for (int w : g.neighbours(v))
      if (pos[w] < pos[v]) {
        if (++smaller[colour[w]] > 1) throw std::logic_error("pathdecomp_to_pthin: two smaller neighbours of one colour");
        mask |= std::uint64_t{1} << colour[w];
      }
    refined[{colour[v], mask}].push_back(v);
  }
  std::vector<std::vector<int>> classes;
  for (auto& [key, members] : refined) classes.push_back(std::move(members));

  // Merge classes while strong consistency survives.
  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (std::size_t j = i + 1; j < classes.size();) {
      std::vector<std::vector<int>> trial = classes;
      trial[i].insert(trial[i].end(), trial[j].begin(), trial[j].end());
      trial.erase(trial.begin() + static_cast<long>(j));
      if (strongly_consistent_by_triples(g, ThinRepresentation{order, trial, true})) {
        classes = std::move(trial);
      } else {
        ++j;
      }
    }
  }
  ThinRepresentation out = sorted_classes(order, std::move(classes), true);
  if (out.class_count() > pthin_bound(check.width) || !verify_strongly_consistent(g, out))
    throw std::logic_error("pathdecomp_to_pthin: construction failed its guarantee");
  return out;
}

}  // namespace hconvex
