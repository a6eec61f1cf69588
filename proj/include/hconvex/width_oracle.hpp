#pragma once

#include <stdexcept>
#include <string>

#include "hconvex/decomposition.hpp"

namespace hconvex {

/// Thrown by exact oracles when the input exceeds the configured size guard.
class GuardExceeded : public std::runtime_error {
 public:
  GuardExceeded(int size, int guard)
      : std::runtime_error("instance has " + std::to_string(size) + " vertices, guard is " + std::to_string(guard)),
        size_(size),
        guard_(guard) {}
  int size() const { return size_; }
  int guard() const { return guard_; }

 private:
  int size_;
  int guard_;
};

struct WidthOracleResult {
  int value = 0;
  BranchDecomposition witness;  // an optimal decomposition
};

inline constexpr int kDefaultWidthGuard = 8;

/// Exact mim-width (mode mim) or sim-width (mode sim).
///
/// Every cubic tree with leaves 0..n-1 arises exactly once by inserting leaf
/// k into an edge of a tree on leaves 0..k-1, and the cut values of a partial
/// tree restricted to G[0..k] never exceed the final ones, so a depth-first
/// insertion search with prefix cut tables is exact. Top-level branches run in
/// parallel; the witness is the first optimal tree in insertion order.
WidthOracleResult width_oracle(const Graph& g, CutMode mode, int guard = kDefaultWidthGuard);
/// Single-threaded reference with identical results.
WidthOracleResult width_oracle_serial(const Graph& g, CutMode mode, int guard = kDefaultWidthGuard);

inline WidthOracleResult mimw_oracle(const Graph& g, int guard = kDefaultWidthGuard) {
  return width_oracle(g, CutMode::mim, guard);
}
inline WidthOracleResult simw_oracle(const Graph& g, int guard = kDefaultWidthGuard) {
  return width_oracle(g, CutMode::sim, guard);
}

}  // namespace hconvex
