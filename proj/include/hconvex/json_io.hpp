#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <json.hpp>

#include "hconvex/decomposition.hpp"
#include "hconvex/graph_io.hpp"
#include "hconvex/supports.hpp"
#include "hconvex/thinness.hpp"

namespace hconvex {

using Json = nlohmann::ordered_json;

/// {"kind", "host_edges": [["a1","a2"],...], "t", "delta"}.
Json witness_to_json(const SupportWitness& w);
/// Reads host edges as A-tokens of a graph with |A| = a_size. Throws
/// std::invalid_argument on malformed documents.
SupportWitness witness_from_json(const Json& j, int a_size);

/// {"linear", "spine", "leaves": {"t1": "a3", ...}, "tree_edges"}. Internal
/// nodes are named s1, s2, ... and leaves t1, t2, ... in node order.
Json decomposition_to_json(const BranchDecomposition& d, const AnyGraph& g);
BranchDecomposition decomposition_from_json(const Json& j, const AnyGraph& g);

/// {"order": [...], "classes": [[...],...], "strong"} with vertex tokens.
Json thin_to_json(const ThinRepresentation& r, const AnyGraph& g);
ThinRepresentation thin_from_json(const Json& j, const AnyGraph& g);

/// {"edge": [u, v], "side": [...], "value"}; tree nodes by name, side by token.
Json cut_report_to_json(const CutReport& c, const BranchDecomposition& d, const AnyGraph& g);

/// One `bag v1 v2 ...` line per bag; `#` comments and blank lines skipped.
/// Throws ParseError on malformed lines or unknown tokens.
PathDecomposition parse_pathdecomp(std::string_view text, const AnyGraph& g);
std::string serialize(const PathDecomposition& p, const AnyGraph& g);

/// 64-bit FNV-1a as 16 lowercase hex digits.
std::string fnv1a_hex(std::string_view data);

/// Name of tree node `node` (s<k> or t<k>).
std::string tree_node_name(const BranchDecomposition& d, int node);

}  // namespace hconvex
