#pragma once

#include "hconvex/graph.hpp"

namespace hconvex {

/// True iff `g` contains an induced subgraph isomorphic to `pattern`.
/// Backtracking over injective maps; meant for patterns of at most ~8 vertices.
bool has_induced_pattern(const Graph& g, const Graph& pattern);

/// Triangle xyz with a pendant vertex on each corner (K3⊟S3, the "net").
Graph k3_box_s3();
/// Two triangles joined by a perfect matching (K3⊟K3, the prism).
Graph k3_box_k3();

}  // namespace hconvex
