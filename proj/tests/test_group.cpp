#include "nimforge/error.hpp"
#include "nimforge/group.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace nimforge;

namespace {

FiniteGroup s3() {
  // permutations of {0,1,2}: e, (01), (02), (12), (012), (021)
  const std::vector<std::array<int, 3>> perms{{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
  FiniteGroup::Table t(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      std::array<int, 3> c{};
      for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
      t[a][b] = static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return group_from_table(t, "S3");
}

}  // namespace

TEST_CASE("abelian groups use mixed radix with the first factor least significant") {
  const FiniteGroup g = abelian_group({2, 2});
  CHECK(g.order() == 4);
  CHECK(g.is_abelian());
  CHECK(g.element_label(1) == "(1,0)");
  CHECK(g.element_label(2) == "(0,1)");
  CHECK(g.mul(1, 2) == 3);
  CHECK(g.mul(3, 3) == 0);
  CHECK(g.parse_element("(0,1)") == 2);
  CHECK(g.parse_element("[(1,1)]") == 3);
  CHECK(g.parse_element("0") == 0);
  CHECK_THROWS_AS(g.parse_element("x"), Error);
}

TEST_CASE("cyclic labels are plain integers") {
  const FiniteGroup g = abelian_group({4});
  CHECK(g.element_label(3) == "3");
  CHECK(g.parse_element("3") == 3);
  CHECK(g.element_order(2) == 2);
  CHECK(g.element_order(1) == 4);
  CHECK(g.inverse(1) == 3);
}

TEST_CASE("shorthand parser") {
  CHECK(parse_group_shorthand("Z2xZ4").order() == 8);
  CHECK(parse_group_shorthand("Z1").order() == 1);
  CHECK(parse_group_shorthand("trivial").order() == 1);
  CHECK_THROWS_AS(parse_group_shorthand("Q8"), Error);
  CHECK_THROWS_AS(parse_group_shorthand("Zx"), Error);
}

TEST_CASE("table validation") {
  CHECK_THROWS_AS(group_from_table({{0, 1}, {1, 1}}), Error);
  CHECK_THROWS_AS(group_from_table({{1, 0}, {0, 1}}), Error);
  try {
    group_from_table({{0, 1}, {1, 1}});
  } catch (const Error& e) {
    CHECK(e.kind() != ErrorKind::BadInput);
  }
  const FiniteGroup g = s3();
  CHECK_FALSE(g.is_abelian());
  CHECK(g.element_label(0) == "e");
  CHECK(g.element_label(4) == "g4");
}

TEST_CASE("order limit") {
  CHECK_THROWS_AS(abelian_group(std::vector<int>{8, 16}, 64), Error);
  CHECK(abelian_group(std::vector<int>{8, 16}, 128).order() == 128);
}

TEST_CASE("subgroups of small groups") {
  CHECK(enumerate_subgroups(abelian_group({2, 2})).size() == 5);
  CHECK(enumerate_subgroups(abelian_group({4})).size() == 3);
  CHECK(enumerate_subgroups(abelian_group({2, 2, 2})).size() == 16);
  CHECK(enumerate_subgroups(abelian_group({2, 4})).size() == 8);
  CHECK(enumerate_subgroups(abelian_group({6})).size() == 4);
  const auto subs = enumerate_subgroups(s3());
  CHECK(subs.size() == 6);
  CHECK(std::is_sorted(subs.begin(), subs.end()));
  const auto classes = conjugacy_classes_of_subgroups(s3(), subs);
  CHECK(classes.size() == 4);
}

TEST_CASE("make_subgroup rejects non-subgroups") {
  const FiniteGroup g = abelian_group({4});
  CHECK_THROWS_AS(make_subgroup(g, {0, 1}), Error);
  CHECK_THROWS_AS(make_subgroup(g, {1, 3}), Error);
  CHECK(make_subgroup(g, {2, 0}).members == std::vector<int>{0, 2});
}

TEST_CASE("coset spaces") {
  const FiniteGroup g = abelian_group({2, 2});
  const Subgroup h = test::gen(g, {1});
  const CosetSpace cs = coset_space(g, h);
  CHECK(cs.size() == 2);
  CHECK(cs.cosets[0] == std::vector<int>{0, 1});
  CHECK(cs.cosets[1] == std::vector<int>{2, 3});
  CHECK(cs.action[2][0] == 1);
  CHECK(cs.action[1][0] == 0);
  CHECK(cs.coset_of[3] == 1);

  const FiniteGroup s = s3();
  const Subgroup t = make_subgroup(s, {0, 1});
  CHECK(coset_space(s, t).size() == 3);
}

TEST_CASE("conjugacy in S3 and abelian groups") {
  const FiniteGroup s = s3();
  CHECK(are_conjugate(s, make_subgroup(s, {0, 1}), make_subgroup(s, {0, 2})));
  CHECK_FALSE(are_conjugate(s, make_subgroup(s, {0, 1}), make_subgroup(s, {0, 4, 5})));
  const FiniteGroup k = abelian_group({2, 2});
  CHECK_FALSE(are_conjugate(k, test::gen(k, {1}), test::gen(k, {2})));
}

TEST_CASE("doubling, quotients and two-torsion") {
  const FiniteGroup z4 = abelian_group({4});
  CHECK(doubled_subgroup(z4).members == std::vector<int>{0, 2});
  const Quotient q = quotient(z4, doubled_subgroup(z4));
  CHECK(q.group.order() == 2);
  CHECK(q.lift == std::vector<int>{0, 1});
  CHECK(q.projection[3] == 1);
  CHECK(two_torsion_count(z4) == 2);
  CHECK(two_torsion_count(abelian_group({2, 4})) == 4);
  CHECK(doubled_subgroup(abelian_group({2, 2})).size() == 1);
  CHECK_THROWS_AS(doubled_subgroup(s3()), Error);
}

TEST_CASE("join and intersect") {
  const FiniteGroup g = abelian_group({2, 2});
  const Subgroup a = test::gen(g, {1});
  const Subgroup b = test::gen(g, {2});
  CHECK(join(g, a, b).size() == 4);
  CHECK(intersect(a, b).size() == 1);
}

TEST_CASE("integer square roots") {
  CHECK(is_perfect_square(0));
  CHECK(is_perfect_square(16));
  CHECK_FALSE(is_perfect_square(2));
  CHECK_FALSE(is_perfect_square(-4));
  CHECK(exact_sqrt(49) == 7);
  CHECK_THROWS_AS(exact_sqrt(8), Error);
  CHECK(isqrt(8) == 2);
  CHECK(isqrt(9) == 3);
  CHECK(isqrt(std::int64_t{1} << 62) == std::int64_t{1} << 31);
}
