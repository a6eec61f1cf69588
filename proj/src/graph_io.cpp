#include "hconvex/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>
#include <vector>

namespace hconvex {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

bool parse_int(std::string_view s, long long& out) {
  if (s.empty()) return false;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && p == s.data() + s.size();
}

struct Token {
  char side;  // 'a', 'b' or 'n'
  long long index;
};

bool parse_token(std::string_view s, bool bipartite, Token& tok) {
  if (bipartite) {
    if (s.size() < 2 || (s[0] != 'a' && s[0] != 'b')) return false;
    tok.side = s[0];
    return parse_int(s.substr(1), tok.index);
  }
  tok.side = 'n';
  return parse_int(s, tok.index);
}

}  // namespace

AnyGraph parse_graph(std::string_view text) {
  bool have_header = false;
  bool bipartite = false;
  long long a_size = 0, b_size = 0, n = 0;
  std::vector<std::vector<int>> b_nbrs;
  std::vector<Edge> edges;
  std::set<Edge> seen;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    auto fields = split_ws(line);
    if (fields.empty() || fields[0].front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    if (!have_header) {
      if (fields[0] == "bipartite" && fields.size() == 3 && parse_int(fields[1], a_size) &&
          parse_int(fields[2], b_size) && a_size >= 0 && b_size >= 0) {
        bipartite = true;
        b_nbrs.assign(static_cast<std::size_t>(b_size), {});
      } else if (fields[0] == "graph" && fields.size() == 2 && parse_int(fields[1], n) && n >= 0) {
        bipartite = false;
      } else {
        throw ParseError(ParseErrorKind::malformed_header, line_no, "expected 'bipartite <A> <B>' or 'graph <n>'");
      }
      have_header = true;
    } else {
      if (fields[0] != "e" || fields.size() != 3)
        throw ParseError(ParseErrorKind::malformed_line, line_no, "expected 'e <u> <v>'");
      Token u{}, v{};
      if (!parse_token(fields[1], bipartite, u) || !parse_token(fields[2], bipartite, v))
        throw ParseError(ParseErrorKind::malformed_line, line_no, "bad vertex token");
      if (bipartite) {
        if (u.side == v.side)
          throw ParseError(ParseErrorKind::non_crossing_edge, line_no, "edge inside one side of the bipartition");
        if (u.side == 'b') std::swap(u, v);
        if (u.index < 1 || u.index > a_size || v.index < 1 || v.index > b_size)
          throw ParseError(ParseErrorKind::out_of_range, line_no, "vertex out of range");
        Edge e{static_cast<int>(u.index - 1), static_cast<int>(v.index - 1)};
        if (!seen.insert(e).second) throw ParseError(ParseErrorKind::duplicate_edge, line_no, "duplicate edge");
        b_nbrs[e.second].push_back(e.first);
      } else {
        if (u.index < 1 || u.index > n || v.index < 1 || v.index > n)
          throw ParseError(ParseErrorKind::out_of_range, line_no, "vertex out of range");
        if (u.index == v.index) throw ParseError(ParseErrorKind::malformed_line, line_no, "loop");
        Edge e{static_cast<int>(std::min(u.index, v.index) - 1), static_cast<int>(std::max(u.index, v.index) - 1)};
        if (!seen.insert(e).second) throw ParseError(ParseErrorKind::duplicate_edge, line_no, "duplicate edge");
        edges.push_back(e);
      }
    }
    if (end == text.size()) break;
  }
  if (!have_header) throw ParseError(ParseErrorKind::malformed_header, line_no, "missing header");
  if (bipartite) return BipartiteGraph(static_cast<int>(a_size), std::move(b_nbrs));
  return Graph(static_cast<int>(n), edges);
}

std::string a_token(int i) { return "a" + std::to_string(i + 1); }
std::string b_token(int j) { return "b" + std::to_string(j + 1); }

std::string vertex_token(const BipartiteGraph& g, int v) {
  return g.is_a_vertex(v) ? a_token(v) : b_token(v - g.a_size());
}
std::string vertex_token(const Graph&, int v) { return std::to_string(v + 1); }
std::string vertex_token(const AnyGraph& g, int v) {
  return std::visit([v](const auto& x) { return vertex_token(x, v); }, g);
}

int parse_vertex_token(const AnyGraph& g, std::string_view token) {
  Token tok{};
  if (const auto* bg = std::get_if<BipartiteGraph>(&g)) {
    if (!parse_token(token, true, tok)) throw std::invalid_argument("bad vertex token '" + std::string(token) + "'");
    if (tok.side == 'a' && tok.index >= 1 && tok.index <= bg->a_size()) return static_cast<int>(tok.index - 1);
    if (tok.side == 'b' && tok.index >= 1 && tok.index <= bg->b_size())
      return bg->a_size() + static_cast<int>(tok.index - 1);
  } else {
    const auto& gg = std::get<Graph>(g);
    if (parse_token(token, false, tok) && tok.index >= 1 && tok.index <= gg.order())
      return static_cast<int>(tok.index - 1);
  }
  throw std::invalid_argument("vertex token out of range '" + std::string(token) + "'");
}

std::string serialize(const BipartiteGraph& g) {
  std::ostringstream out;
  out << "bipartite " << g.a_size() << ' ' << g.b_size() << '\n';
  std::vector<Edge> edges;
  for (int j = 0; j < g.b_size(); ++j)
    for (int a : g.b_neighbours(j)) edges.emplace_back(a, j);
  std::sort(edges.begin(), edges.end());
  for (auto [a, b] : edges) out << "e " << a_token(a) << ' ' << b_token(b) << '\n';
  return out.str();
}

std::string serialize(const Graph& g) {
  std::ostringstream out;
  out << "graph " << g.order() << '\n';
  for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

std::string serialize(const AnyGraph& g) {
  return std::visit([](const auto& x) { return serialize(x); }, g);
}

Graph as_graph(const AnyGraph& g) {
  if (const auto* bg = std::get_if<BipartiteGraph>(&g)) return bg->to_graph();
  return std::get<Graph>(g);
}

}  // namespace hconvex
