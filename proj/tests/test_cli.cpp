#include "nimforge/catalog.hpp"
#include "nimforge/cli.hpp"
#include "nimforge/io.hpp"

#include <doctest.h>

#include <filesystem>
#include <sstream>

using namespace nimforge;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::string tmp(const std::string& name) {
  std::filesystem::create_directories(NIMFORGE_TEST_TMP);
  return std::string(NIMFORGE_TEST_TMP) + "/" + name;
}

}  // namespace

TEST_CASE("ring") {
  const Run ok = cli({"ring", "jl", "--group", "Z2xZ2", "--p", "3"});
  CHECK(ok.code == kExitOk);
  CHECK(ok.err == "axioms: pass\n");
  CHECK(Json::parse(ok.out).at("family") == "jl");

  const Run square = cli({"ring", "jl", "--group", "Z2", "--p", "3"});
  CHECK(square.code == kExitBadInput);
  CHECK(square.err.find("OrderNotSquare") != std::string::npos);

  const Run odd = cli({"ring", "glm", "--group", "Z3", "--delta", "0"});
  CHECK(odd.code == kExitBadInput);
  CHECK(odd.err.find("OddOrder") != std::string::npos);

  CHECK(cli({"ring", "glm", "--group", "Z2xZ2", "--delta", "(1,0)"}).code == kExitOk);
  CHECK(cli({"ring", "ty", "--group", "Z2"}).code == kExitBadInput);
  CHECK(cli({"ring", "jl", "--p", "3"}).code == kExitBadInput);
  CHECK(cli({}).code == kExitBadInput);
  CHECK(cli({"--help"}).code == kExitOk);
}

TEST_CASE("ring from a table file") {
  const std::string path = tmp("z2.json");
  write_file(path, R"({"order": 2, "table": [[0, 1], [1, 0]]})");
  const Run r = cli({"ring", "jl", "--table", path, "--p", "2"});
  CHECK(r.code == kExitOk);
  CHECK(cli({"ring", "jl", "--table", path, "--group", "Z2", "--p", "2"}).code == kExitBadInput);
}

TEST_CASE("classify summaries") {
  const Run jl = cli({"classify", "jl", "--group", "Z2xZ2", "--p", "3", "--orbits", "1", "--summary"});
  CHECK(jl.code == kExitOk);
  CHECK(jl.out == "orbits 1, dim 1: 1 class\norbits 1, dim 2: 3 classes\ntotal: 4 classes\n");
  const Run glm = cli({"classify", "glm", "--group", "Z2xZ2", "--delta", "0", "--orbits", "1", "--summary"});
  CHECK(glm.out.find("total: 11 classes") != std::string::npos);
  const Run two = cli({"classify", "glm", "--group", "Z2xZ2", "--delta", "0", "--orbits", "2", "--summary"});
  CHECK(two.out.find("total: 5 classes") != std::string::npos);
}

TEST_CASE("classify output is deterministic with --reproducible") {
  const std::vector<std::string> args{"classify", "jl", "--group", "Z2xZ2", "--p", "3", "--reproducible"};
  const Run a = cli(args);
  const Run b = cli(args);
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
  CHECK(parse_catalog(a.out).entries.size() == 17);
}

TEST_CASE("classify writes DOT files and graph exports entries") {
  const std::string cat = tmp("jl4.json");
  const std::string dots = tmp("dots");
  const Run c = cli({"classify", "jl", "--group", "Z2xZ2", "--p", "4", "--out", cat, "--dot-dir", dots});
  CHECK(c.code == kExitOk);
  CHECK(c.out.empty());
  const Catalog catalog = parse_catalog(read_file(cat));
  REQUIRE_FALSE(catalog.entries.empty());
  CHECK(catalog.entries[0].dot_paths.size() == 2);
  CHECK(std::filesystem::exists(catalog.entries[0].dot_paths[1]));

  const Run g = cli({"graph", "--catalog", cat, "--entry", "0", "--orbit-graph"});
  CHECK(g.code == kExitOk);
  CHECK(g.out == read_file(catalog.entries[0].dot_paths[1]));
  const Run missing = cli({"graph", "--catalog", cat, "--entry", "999"});
  CHECK(missing.code == kExitBadInput);
  CHECK(missing.err.find("UnknownEntry") != std::string::npos);
}

TEST_CASE("algebras") {
  const std::string cat = tmp("glm.json");
  REQUIRE(cli({"classify", "glm", "--group", "Z2xZ2", "--delta", "0", "--out", cat}).code == kExitOk);
  const Run all = cli({"algebras", "--catalog", cat});
  CHECK(all.code == kExitOk);
  CHECK(all.out.find("DIFFER") == std::string::npos);
  const Run one = cli({"algebras", "--catalog", cat, "--entry", "1"});
  CHECK(one.out.rfind("class 1 ", 0) == 0);
  CHECK(cli({"algebras", "--catalog", cat, "--entry", "77"}).code == kExitBadInput);
}

TEST_CASE("verify agreement, disagreement and budget") {
  const std::string cat = tmp("ty.json");
  REQUIRE(cli({"classify", "jl", "--group", "Z2", "--p", "2", "--out", cat}).code == kExitOk);
  const std::string report = tmp("ty_report.json");
  const Run ok = cli({"verify", "--catalog", cat, "--max-dim", "3", "--no-hints", "--out", report});
  CHECK(ok.code == kExitOk);
  const Json j = Json::parse(read_file(report));
  CHECK(j.at("cross_check").at("complete_agreement") == true);
  CHECK(j.at("hints") == false);

  Json broken = Json::parse(read_file(cat));
  broken["entries"].push_back(broken["entries"][0]);
  broken["entries"][1]["class_id"] = 1;
  const std::string bad = tmp("ty_bad.json");
  write_file(bad, broken.dump(2));
  const Run dis = cli({"verify", "--catalog", bad, "--max-dim", "3"});
  CHECK(dis.code == kExitDisagreement);
  CHECK(Json::parse(dis.out).at("cross_check").at("duplicate_classifier").size() == 1);

  const std::string glm = tmp("glm_budget.json");
  REQUIRE(cli({"classify", "glm", "--group", "Z2xZ2", "--delta", "0", "--out", glm}).code == kExitOk);
  const Run slow = cli({"verify", "--catalog", glm, "--max-dim", "8", "--time-budget", "0.000001"});
  CHECK(slow.code == kExitResourceLimit);
  CHECK(Json::parse(slow.out).at("complete") == false);
}

TEST_CASE("verify --update stores the report") {
  const std::string cat = tmp("ty_update.json");
  REQUIRE(cli({"classify", "jl", "--group", "Z2", "--p", "2", "--out", cat}).code == kExitOk);
  REQUIRE(cli({"verify", "--catalog", cat, "--max-dim", "3", "--update"}).code == kExitOk);
  CHECK_FALSE(parse_catalog(read_file(cat)).cross_check.is_null());
}

TEST_CASE("enumerate") {
  const Run r = cli({"enumerate", "jl", "--group", "Z4", "--p", "2", "--max-dim", "4"});
  CHECK(r.code == kExitOk);
  const Json j = Json::parse(r.out);
  CHECK(j.at("reps").size() == 4);
  CHECK(j.at("complete") == true);

  const std::string ring = tmp("ty_ring.json");
  REQUIRE(cli({"ring", "jl", "--group", "Z2", "--p", "2", "--out", ring}).code == kExitOk);
  Json custom = Json::parse(read_file(ring));
  custom["family"] = "custom";
  write_file(ring, custom.dump());
  const Run c = cli({"enumerate", "--ring", ring, "--max-dim", "6", "--reducible"});
  CHECK(c.code == kExitOk);
  CHECK(Json::parse(c.out).at("reps").size() == 2);
}
