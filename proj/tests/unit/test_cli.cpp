#include <filesystem>
#include <fstream>
#include <sstream>

#include "catcolim/cli.hpp"
#include "doctest.h"
#include "json.hpp"

namespace {

namespace fs = std::filesystem;

std::string data(const std::string& rel) { return std::string(CATCOLIM_TEST_DATA) + "/" + rel; }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = catcolim::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string scratch(const std::string& name, const std::string& text) {
  fs::path p = fs::temp_directory_path() / ("catcolim_cli_" + name);
  std::ofstream(p, std::ios::binary) << text;
  return p.string();
}

}  // namespace

TEST_CASE("construct reproduces the stored outputs") {
  auto r = run({"construct", "--kind", "coproduct", "--in", data("pair.cat")});
  CHECK(r.code == 0);
  CHECK(r.out == slurp(data("golden/coproduct_pair.cat")));
  r = run({"construct", "--kind", "coinserter", "--in", data("two_points.cat")});
  CHECK(r.code == 0);
  CHECK(r.out == slurp(data("golden/coinserter_two_points.cat")));
  r = run({"construct", "--kind", "coequalizer", "--category", "tensor", "--route", "direct", "--in", data("z2.cat")});
  CHECK(r.code == 0);
  CHECK(r.out == slurp(data("golden/coequalizer_z2.cat")));
  r = run({"construct", "--kind", "coinserter", "--category", "tensor", "--in", data("z2.cat"), "--left", "Id", "--right", "Id"});
  CHECK(r.code == 0);
  CHECK(r.out == slurp(data("golden/coinserter_z2.cat")));
  // global options may follow the subcommand
  r = run({"construct", "--kind", "coproduct", "--in", data("pair.cat"), "--export", "records"});
  CHECK(r.code == 0);
  CHECK(r.out == slurp(data("golden/coproduct_pair.json")));
}

TEST_CASE("check-universal on stored constructions") {
  auto r = run({"check-universal", "--construction", data("golden/coinserter_two_points.cat"), "--test", data("test_cats.cat")});
  CHECK(r.code == 0);
  CHECK(r.out.find("C against TArr: equivalence") != std::string::npos);
  r = run({"check-universal", "--construction", data("golden/coinserter_z2.cat"), "--test", data("tensor_tests.cat"),
           "--export", "records"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.size() == 3);
  for (const auto& rec : j) CHECK(rec["verdict"] == "Equal");
}

TEST_CASE("a dropped relation exits with a violation") {
  std::string text = slurp(data("golden/coinserter_z2.cat"));
  const std::string line = "    'd<e>' = 'x*d<x>';'x*d<x>'\n";
  auto at = text.find(line);
  REQUIRE(at != std::string::npos);
  text.erase(at, line.size());
  auto r = run({"check-universal", "--construction", scratch("dropped.cat", text), "--test", data("tensor_tests.cat")});
  CHECK(r.code == 1);
  CHECK(r.out.find("C against TRot: not an equivalence") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 3);
  CHECK(run({"bogus"}).code == 3);
  CHECK(run({"pi0"}).code == 3);
  CHECK(run({"pi0", "--in", data("missing.cat")}).code == 3);
  CHECK(run({"pi0", "--in", scratch("bad.cat", "category A {\n  objects X\n}\n")}).code == 3);
  auto r = run({"pi0", "--in", scratch("nonpar.cat", "category A {\n  objects: X, Y\n  arrows:\n    f: X -> Y\n  relations:\n    f = id(Y)\n}\n")});
  CHECK(r.code == 3);
  CHECK(r.err.find("NonParallelRelation") != std::string::npos);
  // the free loop never closes
  std::string loop = scratch("loop.cat", "category L {\n  objects: X\n  arrows:\n    l: X -> X\n}\n");
  CHECK(run({"hom", "--in", loop, "--src", "X", "--dst", "X"}).code == 2);
  r = run({"hom", "--in", data("test_cats.cat"), "--name", "TIso", "--src", "U", "--dst", "V"});
  CHECK(r.code == 0);
  CHECK(r.out == "Hom(U, V): 1 morphisms\n  u\n");
  r = run({"normalize", "--in", data("pair.cat"), "--name", "B", "--term", "e;e;e"});
  CHECK(r.code == 0);
  CHECK(r.out == "e\n");
  r = run({"pi0", "--in", data("golden/coproduct_pair.cat"), "--name", "A+B"});
  CHECK(r.code == 0);
  CHECK(r.out == "'A+B': 2 components {'A:X', 'A:Y'} {'B:Z'}\n");
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("format writes the canonical form") {
  std::string out = (fs::temp_directory_path() / "catcolim_cli_format.cat").string();
  CHECK(run({"format", "--in", data("golden/coequalizer_z2.cat"), "--out", out}).code == 0);
  CHECK(slurp(out) == slurp(data("golden/coequalizer_z2.cat")));
}

TEST_CASE("directed colimits and tensoring with a category") {
  auto r = run({"construct", "--kind", "directed", "--in", data("directed.cat")});
  REQUIRE(r.code == 0);
  // the colimit is the top category itself
  CHECK(r.out.find("  target: A1\n") != std::string::npos);
  CHECK(r.out.find("functor 'u<i>': A0 -> A1 {") != std::string::npos);
  r = run({"construct", "--kind", "tensor-with", "--in", data("pair.cat")});
  REQUIRE(r.code == 0);
  std::string out = scratch("tensor_with.cat", r.out);
  r = run({"check-universal", "--construction", out, "--test", data("test_cats.cat")});
  CHECK(r.code == 0);
}
