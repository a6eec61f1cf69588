#include "hconvex/json_io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace hconvex {

namespace {

int parse_index(std::string_view s, char prefix, const char* what) {
  int v = 0;
  if (s.size() < 2 || s[0] != prefix) throw std::invalid_argument(std::string("bad ") + what + " '" + std::string(s) + "'");
  auto [p, ec] = std::from_chars(s.data() + 1, s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size() || v < 1)
    throw std::invalid_argument(std::string("bad ") + what + " '" + std::string(s) + "'");
  return v - 1;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("missing field '") + key + "'");
  return j.at(key);
}

int a_index(const Json& token, int a_size) {
  if (!token.is_string()) throw std::invalid_argument("host vertex must be a token like \"a1\"");
  int i = parse_index(token.get<std::string>(), 'a', "A-vertex token");
  if (i >= a_size) throw std::invalid_argument("A-vertex token out of range: " + token.get<std::string>());
  return i;
}

int vertex_of(const Json& token, const AnyGraph& g) {
  if (!token.is_string()) throw std::invalid_argument("vertex must be a string token");
  return parse_vertex_token(g, token.get<std::string>());
}

}  // namespace

Json witness_to_json(const SupportWitness& w) {
  Json edges = Json::array();
  for (auto [u, v] : w.host_edges) edges.push_back({a_token(u), a_token(v)});
  return Json{{"kind", to_string(w.kind)}, {"host_edges", edges}, {"t", w.t}, {"delta", w.delta}};
}

SupportWitness witness_from_json(const Json& j, int a_size) {
  try {
    SupportWitness w;
    w.a_size = a_size;
    w.kind = support_kind_from_string(field(j, "kind").get<std::string>());
    for (const auto& e : field(j, "host_edges")) {
      if (!e.is_array() || e.size() != 2) throw std::invalid_argument("host edge must be a pair");
      int u = a_index(e[0], a_size), v = a_index(e[1], a_size);
      w.host_edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(w.host_edges.begin(), w.host_edges.end());
    w.t = j.contains("t") ? j.at("t").get<int>() : 0;
    w.delta = j.contains("delta") ? j.at("delta").get<int>() : 2;
    return w;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("witness: ") + e.what());
  }
}

std::string tree_node_name(const BranchDecomposition& d, int node) {
  const int internal = d.internal_count();
  return node < internal ? "s" + std::to_string(node + 1) : "t" + std::to_string(node - internal + 1);
}

Json decomposition_to_json(const BranchDecomposition& d, const AnyGraph& g) {
  Json spine = Json::array();
  for (int s : d.spine) spine.push_back(tree_node_name(d, s));
  Json leaves = Json::object();
  for (int x = d.internal_count(); x < d.tree.order(); ++x) leaves[tree_node_name(d, x)] = vertex_token(g, d.leaf_vertex[x]);
  Json edges = Json::array();
  for (auto [u, v] : d.tree.edges()) edges.push_back({tree_node_name(d, u), tree_node_name(d, v)});
  return Json{{"linear", d.linear}, {"spine", spine}, {"leaves", leaves}, {"tree_edges", edges}};
}

BranchDecomposition decomposition_from_json(const Json& j, const AnyGraph& g) {
  try {
    const Json& leaves = field(j, "leaves");
    const Json& tree_edges = field(j, "tree_edges");
    if (!leaves.is_object() || !tree_edges.is_array()) throw std::invalid_argument("decomposition: bad field types");
    const int leaf_total = static_cast<int>(leaves.size());
    int internal = 0;
    auto scan = [&](const Json& name) {
      if (!name.is_string()) throw std::invalid_argument("tree node must be a name like \"s1\"");
      const auto s = name.get<std::string>();
      if (!s.empty() && s[0] == 's') internal = std::max(internal, parse_index(s, 's', "tree node") + 1);
    };
    for (const auto& e : tree_edges) {
      if (!e.is_array() || e.size() != 2) throw std::invalid_argument("tree edge must be a pair");
      scan(e[0]);
      scan(e[1]);
    }
    if (j.contains("spine"))
      for (const auto& s : j.at("spine")) scan(s);
    auto node = [&](const Json& name) {
      const auto s = name.get<std::string>();
      if (!s.empty() && s[0] == 's') return parse_index(s, 's', "tree node");
      int k = parse_index(s, 't', "tree node");
      if (k >= leaf_total) throw std::invalid_argument("leaf " + s + " has no vertex");
      return internal + k;
    };
    std::vector<int> leaf_vertex(static_cast<std::size_t>(internal + leaf_total), -1);
    for (const auto& [name, token] : leaves.items()) leaf_vertex[node(Json(name))] = vertex_of(token, g);
    std::vector<Edge> edges;
    for (const auto& e : tree_edges) edges.emplace_back(node(e[0]), node(e[1]));
    std::vector<int> spine;
    if (j.contains("spine"))
      for (const auto& s : j.at("spine")) spine.push_back(node(s));
    const bool linear = j.contains("linear") && j.at("linear").get<bool>();
    auto d = make_decomposition(internal + leaf_total, edges, std::move(leaf_vertex), linear, std::move(spine));
    validate(d, std::visit([](const auto& x) { return x.order(); }, g));
    return d;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("decomposition: ") + e.what());
  }
}

Json thin_to_json(const ThinRepresentation& r, const AnyGraph& g) {
  Json order = Json::array();
  for (int v : r.order) order.push_back(vertex_token(g, v));
  Json classes = Json::array();
  for (const auto& c : r.classes) {
    Json cls = Json::array();
    for (int v : c) cls.push_back(vertex_token(g, v));
    classes.push_back(cls);
  }
  return Json{{"order", order}, {"classes", classes}, {"strong", r.strong}};
}

ThinRepresentation thin_from_json(const Json& j, const AnyGraph& g) {
  try {
    ThinRepresentation r;
    for (const auto& t : field(j, "order")) r.order.push_back(vertex_of(t, g));
    for (const auto& c : field(j, "classes")) {
      std::vector<int> cls;
      for (const auto& t : c) cls.push_back(vertex_of(t, g));
      r.classes.push_back(std::move(cls));
    }
    r.strong = j.contains("strong") && j.at("strong").get<bool>();
    validate(r, std::visit([](const auto& x) { return x.order(); }, g));
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("representation: ") + e.what());
  }
}

Json cut_report_to_json(const CutReport& c, const BranchDecomposition& d, const AnyGraph& g) {
  Json side = Json::array();
  for (int v : c.side) side.push_back(vertex_token(g, v));
  return Json{{"edge", {tree_node_name(d, c.edge.first), tree_node_name(d, c.edge.second)}}, {"side", side}, {"value", c.value}};
}

PathDecomposition parse_pathdecomp(std::string_view text, const AnyGraph& g) {
  PathDecomposition p;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream words(line);
    std::string head;
    if (!(words >> head) || head[0] == '#') continue;
    if (head != "bag") throw ParseError(ParseErrorKind::malformed_line, line_no, "expected 'bag', got '" + head + "'");
    std::vector<int> bag;
    for (std::string token; words >> token;) {
      try {
        bag.push_back(parse_vertex_token(g, token));
      } catch (const std::invalid_argument& e) {
        throw ParseError(ParseErrorKind::out_of_range, line_no, e.what());
      }
    }
    std::sort(bag.begin(), bag.end());
    if (std::adjacent_find(bag.begin(), bag.end()) != bag.end())
      throw ParseError(ParseErrorKind::malformed_line, line_no, "repeated vertex in bag");
    p.bags.push_back(std::move(bag));
  }
  return p;
}

std::string serialize(const PathDecomposition& p, const AnyGraph& g) {
  std::string out;
  for (const auto& bag : p.bags) {
    out += "bag";
    for (int v : bag) out += " " + vertex_token(g, v);
    out += "\n";
  }
  return out;
}

std::string fnv1a_hex(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace hconvex
