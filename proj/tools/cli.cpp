#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "hconvex/constructions.hpp"
#include "hconvex/families.hpp"
#include "hconvex/json_io.hpp"
#include "hconvex/thinness.hpp"
#include "hconvex/width_oracle.hpp"

namespace hconvex::cli {

namespace {

namespace fs = std::filesystem;

constexpr int kYes = 0, kNo = 1, kError = 2;

struct Globals {
  std::uint64_t seed = 0;
  std::optional<int> guard;
  std::string out_dir;
  std::string format = "json";
  std::string log;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << content)) throw std::runtime_error("cannot write '" + path.string() + "'");
}

// Collects inputs, artifacts and measurements of one command into a report.
class Session {
 public:
  Session(const Globals& g, const std::vector<std::string>& args) : globals_(g), start_(std::chrono::steady_clock::now()) {
    std::string echo;
    for (const auto& a : args) echo += (echo.empty() ? "" : " ") + a;
    report_["command"] = echo;
    report_["inputs"] = Json::array();
    report_["outputs"] = Json::array();
    report_["measured"] = Json::object();
    report_["bounds"] = Json::object();
    report_["checks"] = Json::object();
  }

  std::string input(const std::string& path) {
    std::string text = read_file(path);
    report_["inputs"].push_back({{"path", path}, {"digest", fnv1a_hex(text)}});
    if (stem_.empty()) stem_ = fs::path(path).stem().string();
    return text;
  }
  AnyGraph graph(const std::string& path) { return parse_graph(input(path)); }
  BipartiteGraph bipartite(const std::string& path) {
    AnyGraph g = graph(path);
    if (!std::holds_alternative<BipartiteGraph>(g)) throw std::invalid_argument("'" + path + "' is not a bipartite graph file");
    return std::get<BipartiteGraph>(g);
  }
  Json json_input(const std::string& path) {
    try {
      return Json::parse(input(path));
    } catch (const nlohmann::json::exception& e) {
      throw std::invalid_argument("'" + path + "': " + e.what());
    }
  }

  void set_stem(std::string s) { stem_ = std::move(s); }
  void measured(const std::string& key, Json v) { report_["measured"][key] = std::move(v); }
  void bound(const std::string& key, Json v) { report_["bounds"][key] = std::move(v); }
  void check(const std::string& key, bool ok) {
    report_["checks"][key] = ok;
    pass_ = pass_ && ok;
  }
  bool passed() const { return pass_; }

  // Stores an artifact in the report; with --out it also goes to a file.
  void artifact(const std::string& name, const std::string& suffix, const Json& body) {
    report_["result"][name] = body;
    if (!globals_.out_dir.empty()) save(suffix, body.dump(2) + "\n");
  }
  void save(const std::string& suffix, const std::string& content) {
    fs::path path = fs::path(globals_.out_dir.empty() ? "." : globals_.out_dir) / (stem_ + suffix);
    write_file(path, content);
    report_["outputs"].push_back(path.string());
  }

  int finish(int code, const std::string& status, std::ostream& out) {
    report_["status"] = status;
    report_["exit_code"] = code;
    report_["pass"] = pass_;
    report_["wall_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    if (globals_.format == "text") {
      out << status << "\n";
      for (const char* section : {"measured", "bounds", "checks"})
        for (const auto& [k, v] : report_[section].items()) out << section << "." << k << " = " << v.dump() << "\n";
      for (const auto& p : report_["outputs"]) out << "wrote " << p.get<std::string>() << "\n";
      if (report_.contains("result") && globals_.out_dir.empty())
        for (const auto& [k, v] : report_["result"].items()) out << k << " " << v.dump() << "\n";
    } else {
      out << report_.dump(2) << "\n";
    }
    if (!globals_.log.empty()) {
      std::ofstream log(globals_.log, std::ios::app);
      if (!log || !(log << report_.dump() << "\n")) throw std::runtime_error("cannot append to '" + globals_.log + "'");
    }
    return code;
  }

 private:
  const Globals& globals_;
  std::chrono::steady_clock::time_point start_;
  Json report_;
  std::string stem_;
  bool pass_ = true;
};

struct ClassSpec {
  std::string name;
  std::optional<int> t, delta;
};

// "tdelta(1,3)" is shorthand for "tdelta --t 1 --delta 3".
ClassSpec parse_class(const std::string& text, std::optional<int> t, std::optional<int> delta) {
  ClassSpec c{text, t, delta};
  int a = 0, b = 0;
  char tail = 0;
  if (std::sscanf(text.c_str(), "tdelta(%d,%d%c", &a, &b, &tail) == 3 && tail == ')') {
    c = ClassSpec{"tdelta", a, b};
  } else if (text.rfind("tdelta(", 0) == 0) {
    throw std::invalid_argument("class must look like tdelta(t,delta)");
  }
  return c;
}

int require(const std::optional<int>& v, const char* flag) {
  if (!v) throw std::invalid_argument(std::string("missing ") + flag);
  return *v;
}

std::optional<SupportWitness> recognize(const BipartiteGraph& g, const ClassSpec& c) {
  if (c.name == "convex") return recognize_convex(g);
  if (c.name == "circular") return recognize_circular(g);
  if (c.name == "star") return recognize_star(g);
  if (c.name == "spider") return recognize_tdelta(g, 1, require(c.delta, "--delta"));
  if (c.name == "tdelta") return recognize_tdelta(g, require(c.t, "--t"), require(c.delta, "--delta"));
  throw std::invalid_argument("unknown class '" + c.name + "'");
}

std::vector<int> parse_side(const AnyGraph& g, const std::string& text) {
  std::vector<int> side;
  std::stringstream s(text);
  for (std::string token; std::getline(s, token, ',');)
    if (!token.empty()) side.push_back(parse_vertex_token(g, token));
  return side;
}

std::string sanitise(std::string s) {
  for (char& c : s)
    if (c == ':' || c == ',' || c == '=' || c == '/') c = '_';
  return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Globals globals;
  CLI::App app{"H-convex graph recognition, decomposition and width tools", "hconvex"};
  app.require_subcommand(1);
  app.fallthrough();
  app.option_defaults()->always_capture_default();
  app.add_option("--seed", globals.seed, "Seed for every random choice");
  app.add_option("--guard", globals.guard, "Vertex limit for exact oracles");
  app.add_option("--out", globals.out_dir, "Directory for emitted artifacts");
  app.add_option("--format", globals.format, "Report format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--log", globals.log, "Append the JSON report to this JSON-lines file");

  std::string cls, file, second, mode = "mim", side, witness_path, stem, input_path;
  std::string decomp_path, thin_path, pd_path;
  std::optional<int> t, delta;

  auto* recognize_cmd = app.add_subcommand("recognize", "Find a support host: convex, circular, star, spider or tdelta");
  recognize_cmd->add_option("class", cls)->required();
  recognize_cmd->add_option("file", file)->required();
  recognize_cmd->add_option("--t", t, "Branching vertex budget");
  recognize_cmd->add_option("--delta", delta, "Host degree cap");

  auto* decompose_cmd = app.add_subcommand("decompose", "Build a branch decomposition and measure it against its bound");
  decompose_cmd->add_option("class", cls, "convex, circular, spider or tdelta")->required();
  decompose_cmd->add_option("file", file)->required();
  decompose_cmd->add_option("--witness", witness_path, "Support witness JSON");
  decompose_cmd->add_option("--t", t);
  decompose_cmd->add_option("--delta", delta);

  auto* width_cmd = app.add_subcommand("width", "Width of a decomposition");
  width_cmd->add_option("file", file)->required();
  width_cmd->add_option("decomposition", second)->required();
  width_cmd->add_option("--mode", mode)->check(CLI::IsMember({"mim", "sim"}));

  auto* oracle_cmd = app.add_subcommand("oracle", "Exact value on small graphs");
  oracle_cmd->add_option("param", cls)->required()->check(CLI::IsMember({"mimw", "simw", "thin", "pthin", "mim-cut", "sim-cut"}));
  oracle_cmd->add_option("file", file)->required();
  oracle_cmd->add_option("--side", side, "Comma-separated vertex tokens of one side (cut parameters)");

  auto* thin_cmd = app.add_subcommand("thin", "Consistent representation from a tree support");
  thin_cmd->add_option("file", file)->required();
  thin_cmd->add_option("--witness", witness_path);
  thin_cmd->add_option("--t", t);
  thin_cmd->add_option("--delta", delta);

  auto* convert_cmd = app.add_subcommand("convert", "Strongly consistent representation from a path decomposition");
  convert_cmd->add_option("file", file)->required();
  convert_cmd->add_option("pathdecomp", second)->required();

  auto* gen_cmd = app.add_subcommand("gen", "Generate an instance: family:key=val,...[:seed=s]");
  gen_cmd->add_option("spec", cls)->required();
  gen_cmd->add_option("--input", input_path, "Base graph for the augmentations");
  gen_cmd->add_option("--stem", stem, "Output file stem");

  auto* verify_cmd = app.add_subcommand("verify", "Check an artifact against a graph");
  verify_cmd->add_option("file", file)->required();
  auto* vw = verify_cmd->add_option("--witness", witness_path);
  auto* vd = verify_cmd->add_option("--decomposition", decomp_path);
  auto* vt = verify_cmd->add_option("--thin", thin_path);
  auto* vp = verify_cmd->add_option("--pathdecomp", pd_path);
  vw->excludes(vd, vt, vp);
  vd->excludes(vt, vp);
  vt->excludes(vp);

  std::vector<std::string> argv_store{"hconvex"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kYes;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }

  try {
    Session s(globals, args);
    if (recognize_cmd->parsed()) {
      const BipartiteGraph g = s.bipartite(file);
      const ClassSpec c = parse_class(cls, t, delta);
      auto w = recognize(g, c);
      if (!w) return s.finish(kNo, "no", out);
      if (!verify_support(g, *w)) throw std::logic_error("recognizer produced a witness that does not verify");
      s.artifact("witness", ".witness.json", witness_to_json(*w));
      return s.finish(kYes, "yes", out);
    }

    if (decompose_cmd->parsed()) {
      const BipartiteGraph g = s.bipartite(file);
      const ClassSpec c = parse_class(cls, t, delta);
      if (c.name != "convex" && c.name != "circular" && c.name != "spider" && c.name != "tdelta")
        throw std::invalid_argument("unknown class '" + c.name + "'");
      std::optional<SupportWitness> w;
      if (!witness_path.empty()) {
        w = witness_from_json(s.json_input(witness_path), g.a_size());
        if (!verify_support(g, *w)) throw std::invalid_argument("witness does not verify");
      } else {
        w = recognize(g, c);
        if (!w) return s.finish(kNo, "not recognized", out);
      }
      const Graph flat = g.to_graph();
      BranchDecomposition d;
      int bound = 0;
      if (c.name == "convex") {
        d = decompose_convex(g, *w);
        bound = 1;
      } else if (c.name == "circular") {
        d = decompose_circular(g, *w);
        bound = 2;
      } else if (c.name == "spider") {
        d = decompose_spider(g, *w);
        bound = spider_bound(w->delta);
        s.bound("delta", w->delta);
      } else {
        auto r = decompose_tdelta(g, *w);
        d = std::move(r.decomposition);
        bound = tdelta_bound(w->t, w->delta);
        s.bound("t", w->t);
        s.bound("delta", w->delta);
        Json splits = Json::array();
        bool cuts_ok = true;
        for (const auto& sc : r.splits) {
          splits.push_back({{"depth", sc.depth},
                            {"host_edge", {a_token(sc.host_edge.first), a_token(sc.host_edge.second)}},
                            {"t", sc.t},
                            {"cut", sc.cut},
                            {"bound", sc.bound}});
          cuts_ok = cuts_ok && sc.cut <= sc.bound;
        }
        s.measured("splits", splits);
        s.check("split_cuts", cuts_ok);
      }
      const WidthResult width = width_of(flat, d, CutMode::mim);
      s.measured("mimw", width.width);
      s.bound("width", bound);
      s.check("width<=bound", width.width <= bound);
      s.artifact("decomposition", ".decomposition.json", decomposition_to_json(d, AnyGraph(g)));
      return s.finish(s.passed() ? kYes : kNo, s.passed() ? "within bound" : "bound violated", out);
    }

    if (width_cmd->parsed()) {
      const AnyGraph g = s.graph(file);
      const BranchDecomposition d = decomposition_from_json(s.json_input(second), g);
      const WidthResult r = width_of(as_graph(g), d, mode == "sim" ? CutMode::sim : CutMode::mim);
      s.measured(mode + "w", r.width);
      if (r.worst) s.measured("worst_cut", cut_report_to_json(*r.worst, d, g));
      return s.finish(kYes, std::to_string(r.width), out);
    }

    if (oracle_cmd->parsed()) {
      const AnyGraph g = s.graph(file);
      const Graph flat = as_graph(g);
      int value = 0;
      if (cls == "mimw" || cls == "simw") {
        auto r = width_oracle(flat, cls == "mimw" ? CutMode::mim : CutMode::sim, globals.guard.value_or(kDefaultWidthGuard));
        value = r.value;
        s.artifact("decomposition", ".optimal.json", decomposition_to_json(r.witness, g));
      } else if (cls == "thin" || cls == "pthin") {
        const int guard = globals.guard.value_or(kDefaultThinGuard);
        auto r = cls == "thin" ? thin_oracle(flat, guard) : pthin_oracle(flat, guard);
        value = r.value;
        s.artifact("representation", ".optimal.json", thin_to_json(r.witness, g));
      } else {
        if (side.empty()) throw std::invalid_argument("--side is required for cut parameters");
        const auto part = parse_side(g, side);
        auto m = max_induced_matching(flat, part, cls == "mim-cut" ? CutMode::mim : CutMode::sim);
        value = m.size;
        Json edges = Json::array();
        for (auto [x, y] : m.edges) edges.push_back({vertex_token(g, x), vertex_token(g, y)});
        s.artifact("matching", ".matching.json", edges);
      }
      s.measured(cls, value);
      return s.finish(kYes, std::to_string(value), out);
    }

    if (thin_cmd->parsed()) {
      const BipartiteGraph g = s.bipartite(file);
      SupportWitness w;
      if (!witness_path.empty()) {
        w = witness_from_json(s.json_input(witness_path), g.a_size());
      } else {
        auto found = recognize_tdelta(g, require(t, "--t"), require(delta, "--delta"));
        if (!found) return s.finish(kNo, "not recognized", out);
        w = *found;
      }
      const ThinRepresentation r = thin_from_tree_support(g, w);
      const Graph flat = g.to_graph();
      const int bound = thin_bound(w.t, w.delta);
      const int lin = width_of(flat, linear_bd_from_thin(flat, r), CutMode::mim).width;
      s.measured("classes", r.class_count());
      s.measured("linear_mimw", lin);
      s.bound("classes", bound);
      s.check("consistent", verify_consistent(flat, r));
      s.check("classes<=bound", r.class_count() <= bound);
      s.check("linear_mimw<=classes", lin <= r.class_count());
      s.artifact("representation", ".thin.json", thin_to_json(r, AnyGraph(g)));
      return s.finish(s.passed() ? kYes : kNo, s.passed() ? "within bound" : "bound violated", out);
    }

    if (convert_cmd->parsed()) {
      const AnyGraph g = s.graph(file);
      const Graph flat = as_graph(g);
      const PathDecomposition p = parse_pathdecomp(s.input(second), g);
      const PathDecompositionCheck pc = verify_pathdecomp(flat, p);
      if (!pc.valid) throw std::invalid_argument("invalid path decomposition: " + pc.reason);
      const ThinRepresentation r = pathdecomp_to_pthin(flat, p);
      const int bound = pthin_bound(pc.width);
      s.measured("pathwidth_given", pc.width);
      s.measured("classes", r.class_count());
      s.bound("classes", bound);
      s.check("strongly_consistent", verify_strongly_consistent(flat, r));
      s.check("classes<=bound", r.class_count() <= bound);
      s.artifact("representation", ".pthin.json", thin_to_json(r, g));
      return s.finish(s.passed() ? kYes : kNo, s.passed() ? "within bound" : "bound violated", out);
    }

    if (gen_cmd->parsed()) {
      GenSpec spec = parse_gen_spec(cls);
      if (cls.find("seed=") == std::string::npos) spec.seed = globals.seed;
      std::optional<BipartiteGraph> base;
      if (!input_path.empty()) base = s.bipartite(input_path);
      const Generated gen = generate(spec, base ? &*base : nullptr);
      s.set_stem(stem.empty() ? sanitise(to_string(spec)) : stem);
      s.measured("spec", to_string(spec));
      s.measured("vertices", gen.graph.order());
      s.measured("edges", gen.graph.edge_count());
      const std::string text = serialize(gen.graph);
      s.measured("digest", fnv1a_hex(text));
      s.save(".graph", text);
      if (gen.witness) {
        if (!verify_support(gen.graph, *gen.witness)) throw std::logic_error("planted witness does not verify");
        s.save(".witness.json", witness_to_json(*gen.witness).dump(2) + "\n");
      }
      return s.finish(kYes, "generated", out);
    }

    if (verify_cmd->parsed()) {
      const AnyGraph g = s.graph(file);
      const Graph flat = as_graph(g);
      bool ok = false;
      if (!witness_path.empty()) {
        if (!std::holds_alternative<BipartiteGraph>(g)) throw std::invalid_argument("witnesses need a bipartite graph");
        const auto& bg = std::get<BipartiteGraph>(g);
        ok = verify_support(bg, witness_from_json(s.json_input(witness_path), bg.a_size()));
        s.check("support", ok);
      } else if (!decomp_path.empty()) {
        const BranchDecomposition d = decomposition_from_json(s.json_input(decomp_path), g);
        ok = true;
        s.measured("mimw", width_of(flat, d, CutMode::mim).width);
        s.measured("simw", width_of(flat, d, CutMode::sim).width);
        s.check("decomposition", ok);
      } else if (!thin_path.empty()) {
        const ThinRepresentation r = thin_from_json(s.json_input(thin_path), g);
        ok = r.strong ? verify_strongly_consistent(flat, r) : verify_consistent(flat, r);
        s.measured("classes", r.class_count());
        s.check(r.strong ? "strongly_consistent" : "consistent", ok);
      } else if (!pd_path.empty()) {
        const PathDecompositionCheck pc = verify_pathdecomp(flat, parse_pathdecomp(s.input(pd_path), g));
        ok = pc.valid;
        if (pc.valid) s.measured("width", pc.width);
        else s.measured("reason", pc.reason);
        s.check("pathdecomp", ok);
      } else {
        throw std::invalid_argument("verify needs one of --witness, --decomposition, --thin, --pathdecomp");
      }
      return s.finish(ok ? kYes : kNo, ok ? "valid" : "invalid", out);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}

}  // namespace hconvex::cli
