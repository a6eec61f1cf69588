#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "hconvex/json_io.hpp"

namespace fs = std::filesystem;
using hconvex::Json;

namespace {

struct Run {
  int code;
  std::string out, err;
  Json report() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = hconvex::cli::run(args, out, err);
  return Run{code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

void spit(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

// Fresh scratch directory per test case.
struct Scratch {
  fs::path dir;
  explicit Scratch(const std::string& name) : dir(fs::temp_directory_path() / ("hconvex_cli_" + name)) {
    fs::remove_all(dir);
    fs::create_directories(dir);
  }
  ~Scratch() { fs::remove_all(dir); }
  std::string operator/(const std::string& f) const { return (dir / f).string(); }
};

}  // namespace

TEST_CASE("gen writes deterministic graph and witness files") {
  Scratch s("gen");
  auto r = run({"gen", "gk:k=3", "--out", s.dir.string(), "--stem", "g3"});
  REQUIRE(r.code == 0);
  CHECK(slurp(s / "g3.graph").rfind("bipartite 9 4\n", 0) == 0);
  CHECK(r.report()["measured"]["vertices"] == 13);
  CHECK_FALSE(fs::exists(s / "g3.witness.json"));

  r = run({"gen", "crown:n=4", "--out", s.dir.string()});
  REQUIRE(r.code == 0);
  CHECK(fs::exists(s / "crown_n_4_seed_0.graph"));
  Json w = Json::parse(slurp(s / "crown_n_4_seed_0.witness.json"));
  CHECK(w["kind"] == "cycle");

  auto a = run({"gen", "random_hconvex:tree,a=14,b=10,t=2,delta=3", "--seed", "9", "--out", s.dir.string(), "--stem", "x"});
  const std::string first = slurp(s / "x.graph");
  auto b = run({"--seed", "9", "gen", "random_hconvex:tree,a=14,b=10,t=2,delta=3", "--out", s.dir.string(), "--stem", "x"});
  CHECK(first == slurp(s / "x.graph"));
  CHECK(a.report()["measured"] == b.report()["measured"]);

  CHECK(run({"gen", "gk:k=11", "--out", s.dir.string()}).code == 2);
  CHECK(run({"gen", "nonsense:q=1", "--out", s.dir.string()}).code == 2);
}

TEST_CASE("gen pipeline: grid then comb augmentation") {
  Scratch s("pipeline");
  REQUIRE(run({"gen", "grid:r=3,c=3", "--out", s.dir.string(), "--stem", "grid"}).code == 0);
  REQUIRE(run({"gen", "comb-augment", "--input", s / "grid.graph", "--out", s.dir.string(), "--stem", "comb"}).code == 0);
  auto v = run({"verify", s / "comb.graph", "--witness", s / "comb.witness.json"});
  CHECK(v.code == 0);
  CHECK(v.report()["checks"]["support"] == true);
}

TEST_CASE("recognize exit codes") {
  Scratch s("recognize");
  REQUIRE(run({"gen", "crown:n=5", "--out", s.dir.string(), "--stem", "crown"}).code == 0);
  auto yes = run({"recognize", "circular", s / "crown.graph"});
  CHECK(yes.code == 0);
  CHECK(yes.report()["result"]["witness"]["kind"] == "cycle");
  // The claw hypergraph {a1a2, a1a3, a1a4} has no path support.
  spit(s / "claw.graph", "bipartite 4 3\ne a1 b1\ne a2 b1\ne a1 b2\ne a3 b2\ne a1 b3\ne a4 b3\n");
  CHECK(run({"recognize", "tdelta(0,2)", s / "claw.graph"}).code == 1);
  CHECK(run({"recognize", "tdelta", s / "claw.graph", "--t", "1", "--delta", "3"}).code == 0);
  CHECK(run({"recognize", "star", s / "claw.graph"}).code == 0);
  CHECK(run({"recognize", "convex", s / "missing.graph"}).code == 2);
  CHECK(run({"recognize", "hexagonal", s / "claw.graph"}).code == 2);
  spit(s / "bad.graph", "bipartite 2 1\ne a1 a2\n");
  CHECK(run({"recognize", "convex", s / "bad.graph"}).code == 2);
}

TEST_CASE("decompose reports width against the bound") {
  Scratch s("decompose");
  const auto out = s.dir.string();
  REQUIRE(run({"gen", "random_hconvex:cycle,a=12,b=14:seed=2", "--out", out, "--stem", "cyc"}).code == 0);
  auto c = run({"decompose", "circular", s / "cyc.graph", "--witness", s / "cyc.witness.json"});
  REQUIRE(c.code == 0);
  CHECK(c.report()["bounds"]["width"] == 2);
  CHECK(c.report()["measured"]["mimw"].get<int>() <= 2);

  REQUIRE(run({"gen", "random_hconvex:tree,a=14,b=14,t=1,delta=3:seed=4", "--out", out, "--stem", "sp"}).code == 0);
  auto t = run({"decompose", "tdelta", s / "sp.graph", "--witness", s / "sp.witness.json"});
  REQUIRE(t.code == 0);
  CHECK(t.report()["bounds"]["width"] == 8);

  REQUIRE(run({"gen", "random_hconvex:path,a=10,b=10:seed=1", "--out", out, "--stem", "cx"}).code == 0);
  auto x = run({"decompose", "convex", s / "cx.graph"});
  REQUIRE(x.code == 0);
  CHECK(x.report()["bounds"]["width"] == 1);

  // The decomposition can be re-measured through `width`.
  REQUIRE(run({"decompose", "convex", s / "cx.graph", "--out", out}).code == 0);
  auto w = run({"width", s / "cx.graph", s / "cx.decomposition.json"});
  CHECK(w.code == 0);
  CHECK(w.report()["measured"]["mimw"] == x.report()["measured"]["mimw"]);
  CHECK(w.report()["measured"].contains("worst_cut"));

  spit(s / "wrong.json", R"({"kind":"path","host_edges":[["a1","a3"]],"t":0,"delta":2})");
  CHECK(run({"decompose", "convex", s / "cx.graph", "--witness", s / "wrong.json"}).code == 2);
}

TEST_CASE("oracle values") {
  Scratch s("oracle");
  const auto out = s.dir.string();
  REQUIRE(run({"gen", "gk:k=2", "--out", out, "--stem", "g2"}).code == 0);
  auto p = run({"oracle", "pthin", s / "g2.graph"});
  REQUIRE(p.code == 0);
  CHECK(p.report()["measured"]["pthin"] == 2);
  spit(s / "tree.graph", "graph 6\ne 1 2\ne 2 3\ne 2 4\ne 4 5\ne 4 6\n");
  CHECK(run({"oracle", "mimw", s / "tree.graph"}).report()["measured"]["mimw"] == 1);
  REQUIRE(run({"gen", "crown:n=4", "--out", out, "--stem", "cr"}).code == 0);
  const int mim = run({"oracle", "mimw", s / "cr.graph"}).report()["measured"]["mimw"];
  const int sim = run({"oracle", "simw", s / "cr.graph"}).report()["measured"]["simw"];
  CHECK(sim <= mim);
  auto cut = run({"oracle", "mim-cut", s / "tree.graph", "--side", "1,2,3"});
  CHECK(cut.report()["measured"]["mim-cut"] == 1);
  CHECK(run({"oracle", "mimw", s / "g2.graph", "--guard", "3"}).code == 2);
  REQUIRE(run({"gen", "gk:k=3", "--out", out, "--stem", "g3"}).code == 0);
  CHECK(run({"oracle", "mimw", s / "g3.graph"}).code == 2);
}

TEST_CASE("thin and convert") {
  Scratch s("thin");
  const auto out = s.dir.string();
  REQUIRE(run({"gen", "random_hconvex:tree,a=12,b=12,t=1,delta=3:seed=3", "--out", out, "--stem", "sp"}).code == 0);
  auto t = run({"thin", s / "sp.graph", "--witness", s / "sp.witness.json", "--out", out});
  REQUIRE(t.code == 0);
  CHECK(t.report()["measured"]["classes"].get<int>() <= 3);
  CHECK(t.report()["checks"]["consistent"] == true);
  CHECK(run({"verify", s / "sp.graph", "--thin", s / "sp.thin.json"}).code == 0);

  spit(s / "p4.graph", "graph 4\ne 1 2\ne 2 3\ne 3 4\n");
  spit(s / "p4.bags", "bag 1 2\nbag 2 3\nbag 3 4\n");
  auto c = run({"convert", s / "p4.graph", s / "p4.bags"});
  REQUIRE(c.code == 0);
  CHECK(c.report()["measured"]["classes"].get<int>() <= 4);
  CHECK(c.report()["checks"]["strongly_consistent"] == true);
  spit(s / "bad.bags", "bag 1 2\nbag 3 4\n");
  CHECK(run({"convert", s / "p4.graph", s / "bad.bags"}).code == 2);
  CHECK(run({"verify", s / "p4.graph", "--pathdecomp", s / "bad.bags"}).code == 1);
  CHECK(run({"verify", s / "p4.graph", "--pathdecomp", s / "p4.bags"}).code == 0);
}

TEST_CASE("reports go to the run log and text format") {
  Scratch s("log");
  const auto log = s / "runs.jsonl";
  REQUIRE(run({"gen", "crown:n=3", "--out", s.dir.string(), "--stem", "c", "--log", log}).code == 0);
  REQUIRE(run({"--log", log, "recognize", "circular", s / "c.graph"}).code == 0);
  std::ifstream in(log);
  std::vector<Json> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(Json::parse(line));
  REQUIRE(lines.size() == 2);
  CHECK(lines[1]["inputs"][0]["digest"] == hconvex::fnv1a_hex(slurp(s / "c.graph")));
  CHECK(lines[1].contains("wall_ms"));
  auto text = run({"--format", "text", "recognize", "circular", s / "c.graph"});
  CHECK(text.out.rfind("yes\n", 0) == 0);
  CHECK(run({"--format", "yaml", "recognize", "circular", s / "c.graph"}).code == 2);
  CHECK(run({}).code == 2);
}

TEST_CASE("fnv1a digest") {
  CHECK(hconvex::fnv1a_hex("") == "cbf29ce484222325");
  CHECK(hconvex::fnv1a_hex("a") == "af63dc4c8601ec8c");
}
