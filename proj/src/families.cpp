#include "hconvex/families.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>
#include <stdexcept>

namespace hconvex {

Rng::Rng(std::uint64_t seed) : engine_(seed) {}

std::uint64_t Rng::next() { return engine_(); }

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Rng::below: empty range");
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound + 1) % bound;
  for (;;) {
    std::uint64_t x = next();
    if (x <= limit) return x % bound;
  }
}

int Rng::uniform(int lo, int hi) {
  if (hi < lo) throw std::invalid_argument("Rng::uniform: empty range");
  return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

bool Rng::coin() { return (next() >> 63) != 0; }

BipartiteGraph gen_gk(int k) {
  if (k < 1 || k > 5) throw std::invalid_argument("gen_gk: k must be in 1..5");
  int a_size = 1;
  std::vector<std::vector<int>> b_nbrs;
  for (int level = 2; level <= k; ++level) {
    std::vector<std::vector<int>> next;
    for (int copy = 0; copy < 3; ++copy)
      for (const auto& nb : b_nbrs) {
        std::vector<int> shifted;
        for (int a : nb) shifted.push_back(a + copy * a_size);
        next.push_back(std::move(shifted));
      }
    std::vector<int> apex(static_cast<std::size_t>(3 * a_size));
    std::iota(apex.begin(), apex.end(), 0);
    next.push_back(std::move(apex));
    a_size *= 3;
    b_nbrs = std::move(next);
  }
  return BipartiteGraph(a_size, std::move(b_nbrs));
}

Generated gen_crown(int n) {
  if (n < 2) throw std::invalid_argument("gen_crown: n must be at least 2");
  std::vector<std::vector<int>> b_nbrs(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < n; ++a)
      if (a != i) b_nbrs[i].push_back(a);
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  return Generated{BipartiteGraph(n, std::move(b_nbrs)), cycle_witness(order)};
}

GridInstance gen_grid(int rows, int cols) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("gen_grid: dimensions must be positive");
  GridInstance out;
  std::vector<int> index(static_cast<std::size_t>(rows * cols));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      auto& side = (i + j) % 2 == 0 ? out.a_cells : out.b_cells;
      index[i * cols + j] = static_cast<int>(side.size());
      side.emplace_back(i, j);
    }
  std::vector<std::vector<int>> b_nbrs(out.b_cells.size());
  for (std::size_t b = 0; b < out.b_cells.size(); ++b) {
    auto [i, j] = out.b_cells[b];
    const int di[] = {-1, 0, 0, 1}, dj[] = {0, -1, 1, 0};
    for (int k = 0; k < 4; ++k) {
      int x = i + di[k], y = j + dj[k];
      if (x >= 0 && y >= 0 && x < rows && y < cols) b_nbrs[b].push_back(index[x * cols + y]);
    }
  }
  out.graph = BipartiteGraph(static_cast<int>(out.a_cells.size()), std::move(b_nbrs));
  return out;
}

BipartiteGraph augment_star(const BipartiteGraph& g) {
  auto b_nbrs = g.all_b_neighbours();
  for (auto& nb : b_nbrs) nb.push_back(g.a_size());
  return BipartiteGraph(g.a_size() + 1, std::move(b_nbrs));
}

BipartiteGraph augment_comb(const BipartiteGraph& g) {
  auto b_nbrs = g.all_b_neighbours();
  for (auto& nb : b_nbrs)
    for (int i = 0; i < g.a_size(); ++i) nb.push_back(g.a_size() + i);
  return BipartiteGraph(2 * g.a_size(), std::move(b_nbrs));
}

SupportWitness star_augment_witness(int original_a_size) {
  return star_witness(original_a_size + 1, original_a_size);
}

SupportWitness comb_augment_witness(int original_a_size) {
  const int n = original_a_size;
  SupportWitness w;
  w.kind = SupportKind::comb;
  w.a_size = 2 * n;
  for (int i = 0; i < n; ++i) {
    w.host_edges.emplace_back(i, n + i);
    if (i + 1 < n) w.host_edges.emplace_back(n + i, n + i + 1);
  }
  std::sort(w.host_edges.begin(), w.host_edges.end());
  w.t = std::max(0, n - 2);
  w.delta = n >= 3 ? 3 : 2;
  return w;
}

namespace {

std::vector<Edge> random_tree_host(int a_size, int t, int delta, Rng& rng) {
  if (a_size < 2 * t + 2) throw std::invalid_argument("gen_random_hconvex: need |A| >= 2t + 2 for t branching vertices");
  if (delta < 3) throw std::invalid_argument("gen_random_hconvex: tree hosts need delta >= 3");
  // Degrees of the branching vertices; leaves = 2 + Σ(d - 2) must fit.
  int room = a_size - (2 * t + 2);
  std::vector<int> deg(static_cast<std::size_t>(t), 3);
  for (int i = 0; i < t; ++i) {
    const int top = std::min(delta - 3, room);
    deg[i] = 3 + (i == 0 ? top : rng.uniform(0, top));
    room -= deg[i] - 3;
  }
  std::vector<Edge> edges;
  std::vector<int> used(static_cast<std::size_t>(t), 0);
  for (int i = 1; i < t; ++i) {
    std::vector<int> open;
    for (int j = 0; j < i; ++j)
      if (used[j] < deg[j]) open.push_back(j);
    int j = open[rng.below(open.size())];
    edges.emplace_back(j, i);
    ++used[j];
    ++used[i];
  }
  int next = t;
  for (int i = 0; i < t; ++i)
    for (; used[i] < deg[i]; ++used[i]) edges.emplace_back(i, next++);
  // Remaining vertices subdivide random edges.
  while (next < a_size) {
    std::size_t e = rng.below(edges.size());
    auto [u, v] = edges[e];
    edges[e] = {u, next};
    edges.emplace_back(next, v);
    ++next;
  }
  return edges;
}

std::vector<int> grow_connected(const std::vector<std::vector<int>>& adj, Rng& rng) {
  const int n = static_cast<int>(adj.size());
  std::set<int> chosen{static_cast<int>(rng.below(static_cast<std::uint64_t>(n)))};
  while (rng.coin()) {
    std::set<int> boundary;
    for (int x : chosen)
      for (int y : adj[x])
        if (!chosen.count(y)) boundary.insert(y);
    if (boundary.empty()) break;
    auto it = boundary.begin();
    std::advance(it, static_cast<long>(rng.below(boundary.size())));
    chosen.insert(*it);
  }
  return {chosen.begin(), chosen.end()};
}

}  // namespace

Generated gen_random_hconvex(HostKind kind, int a_size, int b_size, std::uint64_t seed, int t, int delta) {
  if (a_size < 1 || b_size < 0) throw std::invalid_argument("gen_random_hconvex: need |A| >= 1 and |B| >= 0");
  if (t < 0) throw std::invalid_argument("gen_random_hconvex: t must be non-negative");
  Rng rng(seed);
  std::vector<Edge> host;
  if (kind == HostKind::tree && t > 0) {
    host = random_tree_host(a_size, t, delta, rng);
  } else {
    for (int i = 0; i + 1 < a_size; ++i) host.emplace_back(i, i + 1);
    if (kind == HostKind::cycle && a_size >= 3) host.emplace_back(a_size - 1, 0);
  }
  std::vector<int> label(static_cast<std::size_t>(a_size));
  std::iota(label.begin(), label.end(), 0);
  rng.shuffle(label);

  std::vector<std::vector<int>> adj(static_cast<std::size_t>(a_size));
  for (auto [u, v] : host) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<std::vector<int>> b_nbrs;
  for (int b = 0; b < b_size; ++b) {
    std::vector<int> nb;
    for (int x : grow_connected(adj, rng)) nb.push_back(label[x]);
    b_nbrs.push_back(std::move(nb));
  }
  std::vector<Edge> relabelled;
  for (auto [u, v] : host) relabelled.emplace_back(label[u], label[v]);

  Generated out{BipartiteGraph(a_size, std::move(b_nbrs)), std::nullopt};
  switch (kind) {
    case HostKind::path: {
      std::vector<int> order(label.begin(), label.end());
      out.witness = path_witness(order);
      break;
    }
    case HostKind::cycle:
      out.witness = cycle_witness(label);
      break;
    case HostKind::tree:
      out.witness = tree_witness(a_size, std::move(relabelled), t, std::max(delta, 2));
      break;
  }
  return out;
}

BipartiteGraph gen_random_chordal_bipartite(int a_size, int b_size, int pendants, std::uint64_t seed) {
  if (a_size < 1 || b_size < 0 || pendants < 0) throw std::invalid_argument("gen_random_chordal_bipartite: bad sizes");
  Rng rng(seed);
  std::vector<std::vector<int>> b_nbrs;
  for (int b = 0; b < b_size; ++b) {
    int lo = rng.uniform(0, a_size - 1), hi = lo;
    while (hi + 1 < a_size && rng.coin()) ++hi;
    std::vector<int> nb(static_cast<std::size_t>(hi - lo + 1));
    std::iota(nb.begin(), nb.end(), lo);
    b_nbrs.push_back(std::move(nb));
  }
  int a_total = a_size;
  for (int i = 0; i < pendants; ++i) {
    if (!b_nbrs.empty() && rng.coin()) {
      b_nbrs[rng.below(b_nbrs.size())].push_back(a_total++);
    } else {
      b_nbrs.push_back({rng.uniform(0, a_total - 1)});
    }
  }
  std::vector<int> a_label(static_cast<std::size_t>(a_total));
  std::iota(a_label.begin(), a_label.end(), 0);
  rng.shuffle(a_label);
  rng.shuffle(b_nbrs);
  for (auto& nb : b_nbrs)
    for (int& a : nb) a = a_label[a];
  return BipartiteGraph(a_total, std::move(b_nbrs));
}

namespace {

std::string normalise_family(std::string_view name) {
  std::string out(name);
  std::replace(out.begin(), out.end(), '-', '_');
  return out;
}

std::uint64_t parse_u64(std::string_view s, const char* what) {
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || p != s.data() + s.size())
    throw std::invalid_argument(std::string("gen spec: bad ") + what + " '" + std::string(s) + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t at = s.find(sep, start);
    out.push_back(s.substr(start, at == std::string_view::npos ? std::string_view::npos : at - start));
    if (at == std::string_view::npos) return out;
    start = at + 1;
  }
}

class Params {
 public:
  Params(const GenSpec& spec, std::set<std::string> allowed) : spec_(spec) {
    for (const auto& [k, v] : spec.params)
      if (!allowed.count(k)) throw std::invalid_argument("gen spec: unknown parameter '" + k + "' for " + spec.family);
  }
  bool has(const std::string& key) const { return spec_.params.count(key) != 0; }
  int integer(const std::string& key, int lo, int hi, std::optional<int> fallback = std::nullopt) const {
    auto it = spec_.params.find(key);
    if (it == spec_.params.end()) {
      if (fallback) return *fallback;
      throw std::invalid_argument("gen spec: missing parameter '" + key + "'");
    }
    std::uint64_t v = parse_u64(it->second, key.c_str());
    if (v < static_cast<std::uint64_t>(lo) || v > static_cast<std::uint64_t>(hi))
      throw std::invalid_argument("gen spec: '" + key + "' must be in " + std::to_string(lo) + ".." + std::to_string(hi));
    return static_cast<int>(v);
  }
  std::string text(const std::string& key) const {
    auto it = spec_.params.find(key);
    if (it == spec_.params.end()) throw std::invalid_argument("gen spec: missing parameter '" + key + "'");
    return it->second;
  }

 private:
  const GenSpec& spec_;
};

}  // namespace

GenSpec parse_gen_spec(std::string_view text) {
  auto sections = split(text, ':');
  GenSpec spec;
  spec.family = normalise_family(sections[0]);
  if (spec.family.empty()) throw std::invalid_argument("gen spec: missing family");
  if (sections.size() > 3) throw std::invalid_argument("gen spec: too many ':' sections");
  for (std::size_t s = 1; s < sections.size(); ++s) {
    if (sections[s].empty()) continue;
    for (std::string_view item : split(sections[s], ',')) {
      if (item.empty()) throw std::invalid_argument("gen spec: empty parameter");
      std::size_t eq = item.find('=');
      std::string key = eq == std::string_view::npos ? "kind" : std::string(item.substr(0, eq));
      std::string value(eq == std::string_view::npos ? item : item.substr(eq + 1));
      if (key.empty() || value.empty()) throw std::invalid_argument("gen spec: malformed parameter '" + std::string(item) + "'");
      if (key == "seed") {
        spec.seed = parse_u64(value, "seed");
        continue;
      }
      if (!spec.params.emplace(key, value).second) throw std::invalid_argument("gen spec: repeated parameter '" + key + "'");
    }
  }
  return spec;
}

std::string to_string(const GenSpec& spec) {
  std::string out = spec.family;
  char sep = ':';
  for (const auto& [k, v] : spec.params) {
    out += sep + k + "=" + v;
    sep = ',';
  }
  return out + ":seed=" + std::to_string(spec.seed);
}

Generated generate(const GenSpec& spec, const BipartiteGraph* input) {
  const std::string& f = spec.family;
  if (f == "gk") {
    Params p(spec, {"k"});
    return Generated{gen_gk(p.integer("k", 1, 5)), std::nullopt};
  }
  if (f == "crown") {
    Params p(spec, {"n"});
    return gen_crown(p.integer("n", 2, 500));
  }
  if (f == "grid") {
    Params p(spec, {"r", "c"});
    return Generated{gen_grid(p.integer("r", 1, 200), p.integer("c", 1, 200)).graph, std::nullopt};
  }
  if (f == "star_augment" || f == "comb_augment") {
    Params p(spec, {"r", "c"});
    BipartiteGraph base;
    if (input) {
      if (p.has("r") || p.has("c")) throw std::invalid_argument("gen spec: give either an input graph or r,c");
      base = *input;
    } else {
      base = gen_grid(p.integer("r", 1, 200), p.integer("c", 1, 200)).graph;
    }
    if (f == "star_augment") return Generated{augment_star(base), star_augment_witness(base.a_size())};
    return Generated{augment_comb(base), comb_augment_witness(base.a_size())};
  }
  if (f == "random_hconvex") {
    Params p(spec, {"kind", "a", "b", "t", "delta"});
    const std::string kind = p.text("kind");
    const int a = p.integer("a", 1, 5000), b = p.integer("b", 0, 5000);
    if (kind == "path") return gen_random_hconvex(HostKind::path, a, b, spec.seed);
    if (kind == "cycle") return gen_random_hconvex(HostKind::cycle, a, b, spec.seed);
    if (kind == "tree")
      return gen_random_hconvex(HostKind::tree, a, b, spec.seed, p.integer("t", 0, 1000), p.integer("delta", 3, 1000, 3));
    throw std::invalid_argument("gen spec: kind must be path, cycle or tree");
  }
  throw std::invalid_argument("gen spec: unknown family '" + f + "'");
}

}  // namespace hconvex
