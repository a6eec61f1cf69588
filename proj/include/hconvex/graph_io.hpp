#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "hconvex/graph.hpp"

namespace hconvex {

enum class ParseErrorKind {
  malformed_header,
  malformed_line,
  out_of_range,
  duplicate_edge,
  non_crossing_edge,
};

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), kind_(kind), line_(line) {}
  ParseErrorKind kind() const { return kind_; }
  int line() const { return line_; }

 private:
  ParseErrorKind kind_;
  int line_;
};

using AnyGraph = std::variant<BipartiteGraph, Graph>;

/// Reads the text graph format:
///
///   # comment
///   bipartite <|A|> <|B|>      or      graph <n>
///   e <u> <v>
///
/// Bipartite tokens are a<i> / b<j> (1-based, either order on a line);
/// general tokens are 1..n.
AnyGraph parse_graph(std::string_view text);

/// Canonical text: header, then edges sorted lexicographically
/// (bipartite: by (a, b) index; general: by (u, v) with u < v).
std::string serialize(const BipartiteGraph& g);
std::string serialize(const Graph& g);
std::string serialize(const AnyGraph& g);

/// Token naming shared by every file format.
std::string a_token(int i);
std::string b_token(int j);
/// Token of flattened vertex v of a bipartite graph.
std::string vertex_token(const BipartiteGraph& g, int v);
std::string vertex_token(const Graph& g, int v);
std::string vertex_token(const AnyGraph& g, int v);
/// Inverse of vertex_token; throws std::invalid_argument.
int parse_vertex_token(const AnyGraph& g, std::string_view token);

/// Flattened view used by the width machinery.
Graph as_graph(const AnyGraph& g);

}  // namespace hconvex
