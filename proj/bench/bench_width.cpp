// Serial vs OpenMP timings for width_of and the exact width oracle.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <vector>

#include "hconvex/constructions.hpp"
#include "hconvex/families.hpp"
#include "hconvex/width_oracle.hpp"

using namespace hconvex;

namespace {

template <class F>
double seconds(F&& f, int reps) {
  const auto start = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() / reps;
}

void row(const char* name, double serial, double parallel, bool same) {
  std::printf("%-28s %10.4f %10.4f %7.2fx  %s\n", name, serial, parallel, serial / parallel, same ? "ok" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  const int reps = argc > 1 ? std::atoi(argv[1]) : 3;
  std::printf("threads %d, reps %d\n", omp_get_max_threads(), reps);
  std::printf("%-28s %10s %10s %8s\n", "kernel", "serial s", "omp s", "speedup");
  bool all_same = true;

  for (int size : {200, 400, 800}) {
    auto gen = gen_random_hconvex(HostKind::tree, size / 2, size / 2, 7, 2, 4);
    const Graph g = gen.graph.to_graph();
    const auto d = decompose_tdelta(gen.graph, *gen.witness).decomposition;
    WidthResult s, p;
    const double ts = seconds([&] { s = width_of_serial(g, d, CutMode::mim); }, reps);
    const double tp = seconds([&] { p = width_of(g, d, CutMode::mim); }, reps);
    const bool same = s.width == p.width && s.worst.has_value() == p.worst.has_value() && (!s.worst || s.worst->edge == p.worst->edge);
    all_same = all_same && same;
    char name[64];
    std::snprintf(name, sizeof name, "width_of n=%d", g.order());
    row(name, ts, tp, same);
  }

  for (int n : {7, 8}) {
    Rng rng(static_cast<std::uint64_t>(n));
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng.below(100) < 40) edges.emplace_back(u, v);
    const Graph g(n, edges);
    WidthOracleResult s, p;
    const double ts = seconds([&] { s = width_oracle_serial(g, CutMode::mim); }, reps);
    const double tp = seconds([&] { p = width_oracle(g, CutMode::mim); }, reps);
    const bool same = s.value == p.value;
    all_same = all_same && same;
    char name[64];
    std::snprintf(name, sizeof name, "mimw oracle n=%d", n);
    row(name, ts, tp, same);
  }
  return all_same ? 0 : 1;
}
