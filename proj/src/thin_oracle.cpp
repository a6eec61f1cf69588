#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstring>
#include <string>
#include <unordered_set>

#include "hconvex/thinness.hpp"
#include "hconvex/width_oracle.hpp"

namespace hconvex {

namespace {

// Per-class state of a partial ordering, restricted to unplaced vertices F:
//   sigma = N(last member) ∩ F: an unplaced vertex adjacent to the last member
//           must be adjacent to every later member, so a vertex x may join
//           only if sigma \ {x} ⊆ N(x).
//   phi   = N(placed-before-last \ N(last)) ∩ F (proper case only): vertices
//           that may never join the class.
// A class with both sets empty constrains nothing and is as good as a new one.
struct ClassState {
  std::uint64_t sigma = 0;
  std::uint64_t phi = 0;
  int label = 0;
};

class ThinSearch {
 public:
  ThinSearch(const Graph& g, bool strong) : n_(g.order()), strong_(strong), nb_(static_cast<std::size_t>(n_), 0) {
    for (int v = 0; v < n_; ++v)
      for (int w : g.neighbours(v)) nb_[v] |= std::uint64_t{1} << w;
    all_ = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
  }

  bool feasible(int k) {
    k_ = k;
    dead_.clear();
    order_.clear();
    label_.assign(static_cast<std::size_t>(n_), -1);
    std::vector<ClassState> busy;
    return dfs(0, busy);
  }

  ThinRepresentation witness() const {
    std::vector<std::vector<int>> classes(static_cast<std::size_t>(k_));
    for (int v = 0; v < n_; ++v) classes[label_[v]].push_back(v);
    std::erase_if(classes, [](const std::vector<int>& c) { return c.empty(); });
    return ThinRepresentation{order_, std::move(classes), strong_};
  }

 private:
  std::string key(std::uint64_t placed, const std::vector<ClassState>& busy) const {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> sets;
    for (const auto& c : busy) sets.emplace_back(c.sigma, c.phi);
    std::sort(sets.begin(), sets.end());
    std::string out(sizeof(placed) * (1 + 2 * sets.size()), '\0');
    std::memcpy(out.data(), &placed, sizeof(placed));
    std::size_t at = sizeof(placed);
    for (auto [s, p] : sets) {
      std::memcpy(out.data() + at, &s, sizeof(s));
      std::memcpy(out.data() + at + sizeof(s), &p, sizeof(p));
      at += 2 * sizeof(s);
    }
    return out;
  }

  bool dfs(std::uint64_t placed, std::vector<ClassState>& busy) {
    if (placed == all_) return true;
    std::string k = key(placed, busy);
    if (dead_.count(k)) return false;
    const std::uint64_t free_vertices = all_ & ~placed;
    for (std::uint64_t rest = free_vertices; rest; rest &= rest - 1) {
      const int x = std::countr_zero(rest);
      const std::uint64_t bit = std::uint64_t{1} << x;
      const std::uint64_t after = free_vertices & ~bit;
      ClassState joined;
      joined.sigma = nb_[x] & after;
      if (strong_) {
        for (std::uint64_t r = placed & ~nb_[x]; r; r &= r - 1) joined.phi |= nb_[std::countr_zero(r)];
        joined.phi &= after;
      }
      order_.push_back(x);
      // Join an existing class (one representative per distinct state).
      for (std::size_t i = 0; i < busy.size(); ++i) {
        const auto& c = busy[i];
        if ((c.sigma & ~bit & ~nb_[x]) != 0) continue;
        if (strong_ && (c.phi & bit)) continue;
        bool repeat = false;
        for (std::size_t j = 0; j < i && !repeat; ++j) repeat = busy[j].sigma == c.sigma && busy[j].phi == c.phi;
        if (repeat) continue;
        joined.label = c.label;
        if (descend(placed | bit, after, busy, i, joined, x)) return true;
      }
      // Open a class, or reuse one whose constraints have run out.
      if (static_cast<int>(busy.size()) < k_) {
        int label = 0;
        while (std::any_of(busy.begin(), busy.end(), [&](const ClassState& c) { return c.label == label; })) ++label;
        joined.label = label;
        if (descend(placed | bit, after, busy, busy.size(), joined, x)) return true;
      }
      order_.pop_back();
    }
    dead_.insert(std::move(k));
    return false;
  }

  bool descend(std::uint64_t placed, std::uint64_t after, const std::vector<ClassState>& busy, std::size_t replaced,
               const ClassState& joined, int x) {
    std::vector<ClassState> next;
    for (std::size_t i = 0; i < busy.size(); ++i) {
      if (i == replaced) continue;
      ClassState c{busy[i].sigma & after, busy[i].phi & after, busy[i].label};
      if (c.sigma || c.phi) next.push_back(c);
    }
    if (joined.sigma || joined.phi) next.push_back(joined);
    label_[x] = joined.label;
    return dfs(placed, next);
  }

  int n_;
  bool strong_;
  std::vector<std::uint64_t> nb_;
  std::uint64_t all_ = 0;
  int k_ = 0;
  std::unordered_set<std::string> dead_;
  std::vector<int> order_;
  std::vector<int> label_;
};

ThinOracleResult run(const Graph& g, int guard, bool strong) {
  const int n = g.order();
  if (n > guard || n > 64) throw GuardExceeded(n, std::min(guard, 64));
  ThinOracleResult result;
  result.witness.strong = strong;
  if (n == 0) return result;
  ThinSearch search(g, strong);
  for (int k = 1; k <= n; ++k)
    if (search.feasible(k)) {
      result.value = k;
      result.witness = search.witness();
      return result;
    }
  throw std::logic_error("thinness oracle found no representation");
}

}  // namespace

ThinOracleResult thin_oracle(const Graph& g, int guard) { return run(g, guard, false); }

ThinOracleResult pthin_oracle(const Graph& g, int guard) { return run(g, guard, true); }

}  // namespace hconvex
