// Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "brute.hpp"
#include "hconvex/constructions.hpp"
#include "hconvex/families.hpp"
#include "hconvex/patterns.hpp"
#include "hconvex/thinness.hpp"
#include "hconvex/width_oracle.hpp"

using namespace hconvex;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

int failures = 0;

void criterion(int id, const char* name, double limit_s, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.ok = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_s > 0 && secs >= limit_s) o.expect(false, "time limit " + std::to_string(limit_s) + " s exceeded");
  std::printf("%s %2d %-34s %8.2f s  %s\n", o.ok ? "PASS" : "FAIL", id, name, secs, o.detail.c_str());
  std::fflush(stdout);
  failures += !o.ok;
}

int mimw_of(const BipartiteGraph& g, const BranchDecomposition& d) { return width_of(g.to_graph(), d, CutMode::mim).width; }

// Instance sizes for the seeded sweeps: |A| in [lo, 30], |A| + |B| <= 60.
std::pair<int, int> sizes(std::uint64_t seed, int lo) {
  const int a = lo + static_cast<int>(seed % static_cast<std::uint64_t>(31 - lo));
  return {a, 60 - a - static_cast<int>(seed % 5)};
}

struct TDeltaCase {
  int t, delta, width_bound, class_bound;
};
constexpr TDeltaCase kTDeltaCases[] = {{1, 3, 8, 3}, {2, 3, 17, 4}, {2, 4, 24, 6}};

Generated tree_instance(int t, int delta, std::uint64_t seed) {
  auto [a, b] = sizes(seed, 2 * t + 2 + 4);
  return gen_random_hconvex(HostKind::tree, a, b, 1000 * static_cast<std::uint64_t>(t * 10 + delta) + seed, t, delta);
}

// Graphs with at most 8 vertices used for cross-validation.
std::vector<Graph> small_corpus() {
  std::vector<Graph> corpus;
  for (int n = 2; n <= 4; ++n) corpus.push_back(gen_crown(n).graph.to_graph());
  for (int k = 1; k <= 2; ++k) corpus.push_back(gen_gk(k).to_graph());
  for (auto [r, c] : {std::pair{1, 2}, {2, 2}, {2, 3}, {2, 4}}) corpus.push_back(gen_grid(r, c).graph.to_graph());
  corpus.push_back(k3_box_s3());
  corpus.push_back(k3_box_k3());
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    corpus.push_back(gen_random_hconvex(HostKind::cycle, 4, 4, seed).graph.to_graph());
    corpus.push_back(gen_random_hconvex(HostKind::tree, 4, 4, seed, 1, 3).graph.to_graph());
    corpus.push_back(gen_random_chordal_bipartite(3, 3, 2, seed).to_graph());
  }
  Rng rng(8);
  for (int i = 0; i < 60; ++i) corpus.push_back(brute::random_graph(3 + static_cast<int>(rng.below(6)), 20 + static_cast<int>(rng.below(60)), rng));
  return corpus;
}

}  // namespace

int main() {
  criterion(1, "circular convex: mimw <= 2", 60, [] {
    Outcome o;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      auto [a, b] = sizes(seed, 5);
      auto g = gen_random_hconvex(HostKind::cycle, a, b, seed);
      const int w = mimw_of(g.graph, decompose_circular(g.graph, *g.witness));
      o.expect(g.graph.order() <= 60 && w <= 2, "seed " + std::to_string(seed) + " width " + std::to_string(w));
    }
    return o;
  });

  criterion(2, "convex: mimw <= 1", 30, [] {
    Outcome o;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      auto [a, b] = sizes(seed, 3);
      auto g = gen_random_hconvex(HostKind::path, a, b, seed);
      const int w = mimw_of(g.graph, decompose_convex(g.graph, *g.witness));
      o.expect(w <= 1, "seed " + std::to_string(seed) + " width " + std::to_string(w));
    }
    return o;
  });

  criterion(3, "spider: mimw <= f(delta)", 120, [] {
    Outcome o;
    const int expected[] = {5, 8, 12};
    for (int delta = 3; delta <= 5; ++delta) {
      o.expect(spider_bound(delta) == expected[delta - 3], "f(" + std::to_string(delta) + ") mismatch");
      for (std::uint64_t seed = 0; seed < 50; ++seed) {
        auto g = tree_instance(1, delta, seed);
        const int w = mimw_of(g.graph, decompose_spider(g.graph, *g.witness));
        o.expect(w <= spider_bound(delta), "delta " + std::to_string(delta) + " seed " + std::to_string(seed) + " width " + std::to_string(w));
      }
    }
    return o;
  });

  criterion(4, "(t,delta)-tree: mimw <= f(t,delta)", 300, [] {
    Outcome o;
    for (auto c : kTDeltaCases) {
      o.expect(tdelta_bound(c.t, c.delta) == c.width_bound, "f(t,delta) mismatch");
      for (std::uint64_t seed = 0; seed < 50; ++seed) {
        auto g = tree_instance(c.t, c.delta, seed);
        auto r = decompose_tdelta(g.graph, *g.witness);
        const int w = mimw_of(g.graph, r.decomposition);
        const std::string tag = "(" + std::to_string(c.t) + "," + std::to_string(c.delta) + ") seed " + std::to_string(seed);
        o.expect(w <= c.width_bound, tag + " width " + std::to_string(w));
        for (const auto& s : r.splits) o.expect(s.cut <= s.delta * (s.t - 1) && s.t <= c.t, tag + " split cut " + std::to_string(s.cut));
      }
    }
    return o;
  });

  criterion(5, "thinness <= 2 + t(delta - 2)", 0, [] {
    Outcome o;
    for (auto c : kTDeltaCases) {
      o.expect(thin_bound(c.t, c.delta) == c.class_bound, "thin bound mismatch");
      for (std::uint64_t seed = 0; seed < 50; ++seed) {
        auto g = tree_instance(c.t, c.delta, seed);
        auto r = thin_from_tree_support(g.graph, *g.witness);
        const Graph flat = g.graph.to_graph();
        const std::string tag = "(" + std::to_string(c.t) + "," + std::to_string(c.delta) + ") seed " + std::to_string(seed);
        o.expect(r.class_count() <= c.class_bound, tag + " classes " + std::to_string(r.class_count()));
        o.expect(verify_consistent(flat, r), tag + " not consistent");
        o.expect(width_of(flat, linear_bd_from_thin(flat, r), CutMode::mim).width <= r.class_count(), tag + " linear width");
      }
    }
    return o;
  });

  criterion(6, "pthin(G_k) = k for k = 1..3", 600, [] {
    Outcome o;
    for (int k = 1; k <= 3; ++k) {
      const int v = pthin_oracle(gen_gk(k).to_graph()).value;
      o.expect(v == k, "k=" + std::to_string(k) + " got " + std::to_string(v));
    }
    return o;
  });

  criterion(7, "crown thinness grows", 0, [] {
    Outcome o;
    int prev = 0;
    bool grew = false;
    std::string values;
    for (int n = 2; n <= 7; ++n) {
      auto crown = gen_crown(n);
      const int v = thin_oracle(crown.graph.to_graph(), 2 * n).value;
      values += std::to_string(v) + (n < 7 ? "," : "");
      o.expect(v >= prev, "decrease at n=" + std::to_string(n));
      grew = grew || (n > 2 && v > prev);
      prev = v;
      auto w = recognize_circular(crown.graph);
      o.expect(w.has_value(), "crown(" + std::to_string(n) + ") not circular");
      if (w) o.expect(mimw_of(crown.graph, decompose_circular(crown.graph, *w)) <= 2, "crown width");
    }
    o.expect(grew, "no strict increase");
    if (o.ok) o.detail = "thin(crown 2..7) = " + values;
    return o;
  });

  criterion(8, "star/comb augmentation", 0, [] {
    Outcome o;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      Rng rng(seed);
      const int a = 1 + static_cast<int>(rng.below(3)), b = 1 + static_cast<int>(rng.below(2));
      BipartiteGraph g = brute::random_bipartite(a, b, 50, rng);
      const auto tag = "seed " + std::to_string(seed);
      auto star = augment_star(g), comb = augment_comb(g);
      o.expect(recognize_star(star).has_value(), tag + " star not recognized");
      o.expect(verify_support(comb, comb_augment_witness(a)), tag + " comb witness rejected");
      const Graph base = g.to_graph();
      const int m = mimw_oracle(base).value, s = simw_oracle(base).value;
      for (const auto& aug : {star.to_graph(), comb.to_graph()}) {
        o.expect(mimw_oracle(aug).value >= m, tag + " mimw decreased");
        o.expect(simw_oracle(aug).value >= s, tag + " simw decreased");
      }
    }
    return o;
  });

  criterion(9, "path-width converter", 60, [] {
    Outcome o;
    for (int q = 1; q <= 3; ++q)
      for (std::uint64_t seed = 0; seed < 50; ++seed) {
        auto inst = brute::random_path_instance(40, q, 100 * static_cast<std::uint64_t>(q) + seed);
        PathDecomposition p{inst.bags};
        auto check = verify_pathdecomp(inst.graph, p);
        const auto tag = "q=" + std::to_string(q) + " seed " + std::to_string(seed);
        o.expect(check.valid && check.width == q, tag + " bad instance");
        auto r = pathdecomp_to_pthin(inst.graph, p);
        o.expect(verify_strongly_consistent(inst.graph, r), tag + " not strongly consistent");
        o.expect(r.class_count() <= pthin_bound(q), tag + " classes " + std::to_string(r.class_count()));
      }
    return o;
  });

  criterion(10, "oracle cross-validation", 0, [] {
    Outcome o;
    Rng rng(10);
    int cuts = 0;
    for (const Graph& g : small_corpus()) {
      const int n = g.order();
      const int m = mimw_oracle(g).value, s = simw_oracle(g).value;
      o.expect(s <= m, "simw > mimw");
      for (int i = 0; i < 5; ++i) {
        std::vector<int> order(static_cast<std::size_t>(n));
        std::iota(order.begin(), order.end(), 0);
        rng.shuffle(order);
        o.expect(m <= width_of(g, caterpillar_from_ordering(order), CutMode::mim).width, "caterpillar beats oracle");
      }
      for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        auto side = brute::members(mask);
        if (brute::cross_edge_count(g, side) > 14) continue;
        ++cuts;
        o.expect(max_induced_matching_cut(g, side).size == brute::induced_matching(g, side, false), "cutmim mismatch");
      }
    }
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      auto c = gen_random_hconvex(HostKind::cycle, 4, 4, seed);
      auto t = gen_random_hconvex(HostKind::tree, 4, 4, seed, 1, 3);
      o.expect(mimw_oracle(c.graph.to_graph()).value <= mimw_of(c.graph, decompose_circular(c.graph, *c.witness)), "circular construction beats oracle");
      o.expect(mimw_oracle(t.graph.to_graph()).value <= mimw_of(t.graph, decompose_tdelta(t.graph, *t.witness).decomposition), "tree construction beats oracle");
    }
    for (int i = 0; i < 1000; ++i) {
      const int n = 1 + static_cast<int>(rng.below(8));
      Graph g = brute::random_graph(n, static_cast<int>(rng.below(90)), rng);
      ThinRepresentation r;
      r.order.resize(static_cast<std::size_t>(n));
      std::iota(r.order.begin(), r.order.end(), 0);
      rng.shuffle(r.order);
      const int k = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
      r.classes.resize(static_cast<std::size_t>(k));
      for (int v = 0; v < n; ++v) r.classes[v < k ? v : rng.below(static_cast<std::uint64_t>(k))].push_back(v);
      o.expect(strongly_consistent_by_triples(g, r) == strongly_consistent_by_intervals(g, r), "characterizations disagree");
    }
    if (o.ok) o.detail = std::to_string(cuts) + " cuts checked";
    return o;
  });

  criterion(11, "chordal bipartite pattern check", 0, [] {
    Outcome o;
    const Graph net = k3_box_s3(), prism = k3_box_k3();
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      auto g = gen_random_chordal_bipartite(4 + static_cast<int>(seed % 8), 4 + static_cast<int>(seed % 9), static_cast<int>(seed % 6), seed).to_graph();
      o.expect(is_chordal_bipartite(g), "generator output not chordal bipartite");
      o.expect(!has_induced_pattern(g, net) && !has_induced_pattern(g, prism), "pattern in chordal bipartite graph");
    }
    Rng rng(11);
    int with_pattern = 0;
    for (int i = 0; i < 300; ++i) {
      Graph g = brute::random_graph(6 + static_cast<int>(rng.below(4)), 30 + static_cast<int>(rng.below(40)), rng);
      if (has_induced_pattern(g, net) || has_induced_pattern(g, prism)) {
        ++with_pattern;
        o.expect(!is_chordal_bipartite(g), "pattern graph accepted as chordal bipartite");
      }
    }
    o.expect(with_pattern > 0, "no pattern-containing graphs generated");
    return o;
  });

  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
