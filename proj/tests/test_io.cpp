#include "nimforge/catalog.hpp"
#include "nimforge/error.hpp"
#include "nimforge/io.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace nimforge;
using test::klein;

TEST_CASE("group JSON") {
  const FiniteGroup g = abelian_group({2, 4});
  CHECK(group_from_json(group_to_json(g)) == g);
  CHECK(group_from_json(Json("Z2xZ2")).order() == 4);
  const Json t{{"order", 2}, {"table", {{0, 1}, {1, 0}}}, {"name", "C2"}};
  CHECK(group_from_json(t).name() == "C2");
  CHECK_THROWS_AS(group_from_json(Json{{"table", "no"}}), Error);
}

TEST_CASE("ring JSON round trip") {
  for (const RingPtr& r : {jl_ring(klein(), 3), glm_ring(klein(), 1), glm_ring(test::group({3}), 0, true)}) {
    const Json j = ring_to_json(*r);
    const RingPtr back = ring_from_json(j);
    CHECK(*back == *r);
    CHECK(back->descriptor().family == r->descriptor().family);
    CHECK(ring_to_json(*back) == j);
  }
}

TEST_CASE("custom rings and tampering") {
  const RingPtr r = jl_ring(klein(), 3);
  Json j = ring_to_json(*r);
  j["family"] = "custom";
  j.erase("invertible");
  const RingPtr custom = ring_from_json(j);
  CHECK(custom->invertibles() == r->invertibles());
  CHECK(custom->descriptor().family == RingFamily::Custom);

  Json bad = ring_to_json(*r);
  bad["N"][0][3] = 2;
  CHECK_THROWS_AS(ring_from_json(bad), Error);
  Json unknown = ring_to_json(*r);
  unknown["family"] = "ty";
  CHECK_THROWS_AS(ring_from_json(unknown), Error);
}

TEST_CASE("matrices and NIM-reps") {
  IntMatrix m(2, 3);
  m << 1, 2, 3, 4, 5, 6;
  CHECK(matrix_to_json(m) == Json::parse("[[1,2,3],[4,5,6]]"));
  CHECK(matrix_from_json(matrix_to_json(m)) == m);
  CHECK_THROWS_AS(matrix_from_json(Json::parse("[[1,2],[3]]")), Error);

  const GroupPtr g = klein();
  const RingPtr r = jl_ring(g, 3);
  const NimRep rep = jl_build(r, {g, 3, 1, {test::gen(*g, {1})}});
  const NimRep back = nimrep_from_json(r, nimrep_to_json(rep));
  CHECK(back.matrices() == rep.matrices());
  CHECK(back.labels() == rep.labels());
  Json broken = nimrep_to_json(rep);
  broken["matrices"]["X_1"][0][0] = 5;
  CHECK_THROWS_AS(nimrep_from_json(r, broken), Error);
}

TEST_CASE("DOT output") {
  const GroupPtr g = klein();
  const RingPtr r = jl_ring(g, 3);
  const NimRep rep = jl_build(r, {g, 3, 1, {test::whole(*g)}});
  const std::string dot = to_dot(*r, nim_graph(rep), "one");
  CHECK(dot.find("digraph \"one\"") == 0);
  CHECK(dot.find("label=\"X_1 (×2)\"") != std::string::npos);
  CHECK(dot.find("label=\"(1,0)\"") != std::string::npos);
  CHECK(dot.find("label=\"(0,0)\"") == std::string::npos);
  const std::string orbit = to_dot(*r, nim_orbit_graph(rep), "orbits");
  CHECK(orbit.find("multiplicity=2") != std::string::npos);
  CHECK(to_dot(*r, nim_graph(rep), "one") == dot);
}

TEST_CASE("catalog round trip is byte for byte") {
  for (const Catalog& c : {make_catalog(jl_enumerate(jl_ring(klein(), 3)), true),
                           make_catalog(glm_enumerate(glm_ring(klein(), 0)), true)}) {
    const std::string text = dump_catalog(c);
    CHECK(dump_catalog(parse_catalog(text)) == text);
    CHECK(c.generated == "1970-01-01T00:00:00Z");
    for (std::size_t i = 0; i < c.entries.size(); ++i) CHECK(c.entries[i].class_id == static_cast<int>(i));
  }
}

TEST_CASE("catalog contents") {
  const Catalog c = make_catalog(jl_enumerate(jl_ring(klein(), 3)), true);
  CHECK(c.entries.size() == 17);
  CHECK(c.relations.at("matrix_classes") == 17);
  CHECK(c.relations.at("tuple_classes") == 16);
  CHECK(c.relations.at("mismatches").size() == 1);
  const auto counts = class_counts(c);
  CHECK(counts.front() == std::make_pair(std::make_pair(1, 1), 1));
  CHECK(find_entry(c, 3).class_id == 3);
  try {
    find_entry(c, 99);
    FAIL("expected UnknownEntry");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownEntry);
  }
  for (const auto& e : c.entries) {
    CHECK(e.admissible_witness);
    for (const auto& a : e.algebras) CHECK(a.agree());
  }
  const Json j = catalog_to_json(c);
  CHECK(j.at("tool") == "nimforge");
  CHECK(j.at("cross_check").is_null());
  CHECK(j.at("entries").at(0).at("classes").at("tuple").is_array());
}

TEST_CASE("bad catalog text") {
  CHECK_THROWS_AS(parse_catalog("{"), Error);
  CHECK_THROWS_AS(parse_catalog("{}"), Error);
  Json j = catalog_to_json(make_catalog(jl_enumerate(jl_ring(klein(), 3), 1), true));
  j["entries"][0]["dim"] = 7;
  CHECK_THROWS_AS(catalog_from_json(j), Error);
}

TEST_CASE("reference counts") {
  CHECK(reference_counts(*jl_ring(klein(), 3)).size() == 5);
  CHECK(reference_counts(*glm_ring(klein(), 0)).size() == 8);
  CHECK(reference_counts(*jl_ring(test::group({4}), 2)).empty());
}

TEST_CASE("files") {
  CHECK_THROWS_AS(read_file("/nonexistent/file.json"), Error);
  CHECK_THROWS_AS(write_file("/nonexistent/dir/file.json", "x"), Error);
}
