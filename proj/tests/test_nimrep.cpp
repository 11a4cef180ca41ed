#include "nimforge/error.hpp"
#include "nimforge/isomorphism.hpp"
#include "nimforge/jl.hpp"
#include "nimforge/nimrep.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace nimforge;
using test::group;
using test::klein;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::BadInput;
}

IntMatrix m1(Integer v) { return IntMatrix::Constant(1, 1, v); }

NimRep six_dim() {
  const GroupPtr g = klein();
  return jl_build(jl_ring(g, 3), {g, 3, 3, {test::trivial(*g), test::whole(*g), test::whole(*g)}});
}

}  // namespace

TEST_CASE("Ising ring has no one-dimensional NIM-rep") {
  const RingPtr r = jl_ring(group({2}), 2);
  CHECK(kind_of([&] { NimRep(r, {m1(1), m1(1), m1(1)}); }) == ErrorKind::NotHomomorphism);
  CHECK(kind_of([&] { NimRep(r, {m1(1), m1(1), m1(2)}); }) == ErrorKind::NotHomomorphism);
}

TEST_CASE("validation error kinds") {
  const RingPtr r = jl_ring(group({2}), 2);
  const IntMatrix i2 = IntMatrix::Identity(2, 2);
  IntMatrix swap(2, 2);
  swap << 0, 1, 1, 0;
  IntMatrix ones = IntMatrix::Ones(2, 2);
  CHECK(kind_of([&] { NimRep(r, {i2, i2}); }) == ErrorKind::DimensionMismatch);
  CHECK(kind_of([&] { NimRep(r, {i2, i2, IntMatrix::Identity(3, 3)}); }) == ErrorKind::DimensionMismatch);
  CHECK(kind_of([&] { NimRep(r, {swap, swap, ones}); }) == ErrorKind::UnitNotIdentity);
  CHECK(kind_of([&] { NimRep(r, {i2, ones, ones}); }) == ErrorKind::InvertibleNotPermutation);
  IntMatrix neg = ones;
  neg(0, 0) = -1;
  CHECK(kind_of([&] { NimRep(r, {i2, swap, neg}); }) == ErrorKind::NegativeEntry);
  IntMatrix skew(2, 2);
  skew << 1, 2, 0, 1;
  CHECK(kind_of([&] { NimRep(r, {i2, i2, skew}); }) == ErrorKind::NotRigid);
  const RingPtr k = jl_ring(klein(), 3);
  std::vector<IntMatrix> one(4, m1(1));
  one.push_back(m1(2));
  one.push_back(m1(2));
  CHECK_NOTHROW(NimRep(k, one));
  CHECK(kind_of([&] { NimRep(k, one, {"a", "b"}); }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("the TY(Z2) NIM-rep") {
  const RingPtr r = jl_ring(group({2}), 2);
  IntMatrix swap(2, 2);
  swap << 0, 1, 1, 0;
  CHECK(kind_of([&] { NimRep(r, {IntMatrix::Identity(2, 2), IntMatrix::Identity(2, 2), IntMatrix::Ones(2, 2)}); }) ==
        ErrorKind::NotHomomorphism);
  IntMatrix x(3, 3);
  x << 0, 0, 1, 0, 0, 1, 1, 1, 0;
  IntMatrix g(3, 3);
  g << 0, 1, 0, 1, 0, 0, 0, 0, 1;
  const NimRep free(r, {IntMatrix::Identity(3, 3), g, x});
  CHECK(is_irreducible(free));
  CHECK(free.labels() == std::vector<std::string>{"m0", "m1", "m2"});
  CHECK(free.permutation_of(1) == std::vector<int>{1, 0, 2});
  CHECK(decompose_orbits(free).size() == 2);
}

TEST_CASE("regular rep, direct sums and relabeling") {
  const RingPtr r = jl_ring(klein(), 3);
  const NimRep reg = regular_nimrep(r);
  CHECK(reg.dim() == r->size());
  CHECK(is_irreducible(reg));
  const NimRep sum = direct_sum(reg, reg);
  CHECK(sum.dim() == 2 * r->size());
  CHECK_FALSE(is_irreducible(sum));
  CHECK(components(sum).size() == 2);
  CHECK_FALSE(is_admissible(sum));
  CHECK(sum.label(r->size()) == reg.label(0) + "'");

  std::vector<int> perm(static_cast<std::size_t>(reg.dim()));
  for (int i = 0; i < reg.dim(); ++i) perm[static_cast<std::size_t>(i)] = (i + 2) % reg.dim();
  const NimRep moved = relabel(reg, perm);
  const auto iso = are_isomorphic(reg, moved);
  REQUIRE(iso);
  for (int b = 0; b < r->size(); ++b)
    for (int t = 0; t < reg.dim(); ++t)
      for (int u = 0; u < reg.dim(); ++u) CHECK(moved.matrix(b)((*iso)[t], (*iso)[u]) == reg.matrix(b)(t, u));
}

TEST_CASE("isomorphism basics") {
  const NimRep a = six_dim();
  CHECK(are_isomorphic(a, a));
  CHECK(invariant_key(a) == invariant_key(a));
  const RingPtr r = a.ring_ptr();
  const GroupPtr g = klein();
  const NimRep b = jl_build(r, {g, 3, 1, {test::gen(*g, {1})}});
  CHECK_FALSE(are_isomorphic(a, b));
  const NimRep c = jl_build(r, {g, 3, 1, {test::gen(*g, {2})}});
  CHECK_FALSE(are_isomorphic(b, c));
}

TEST_CASE("orbits of the invertibles") {
  const NimRep a = six_dim();
  CHECK(is_irreducible(a));
  const OrbitDecomposition d = decompose_orbits(a);
  CHECK(d.size() == 3);
  CHECK(d.orbits[0] == std::vector<int>{0, 1, 2, 3});
  CHECK(d.stabilizers[0] == std::vector<int>{0});
  CHECK(d.stabilizers[1].size() == 4);
  CHECK(d.orbit_of[5] == 2);
  const OrbitDecomposition none = decompose_orbits(a, {0});
  CHECK(none.size() == 6);
  CHECK(nest_orbits(d, none).size() == 3);
  CHECK_THROWS_AS(decompose_orbits(a, {0, 1, 2}), Error);
}

TEST_CASE("graphs") {
  const NimRep a = six_dim();
  const NimGraph g = nim_graph(a);
  CHECK(g.nodes.size() == 6);
  const NimOrbitGraph og = nim_orbit_graph(a);
  CHECK(og.nodes.size() == 3);
  CHECK(og.nodes[1] == "{" + a.label(4) + "}");
  for (const auto& e : og.edges) CHECK_FALSE(a.ring().is_invertible(e.label));
  // X_1 cycles the orbits one way and X_2 the other way
  const int x1 = jl_x_index(a.ring(), 1);
  int loops = 0;
  for (const auto& e : og.edges) {
    if (e.source == e.target) ++loops;
    if (e.label == x1) CHECK(e.target == (e.source + 1) % 3);
  }
  CHECK(loops == 0);
}

TEST_CASE("admissibility and algebra objects") {
  const NimRep a = six_dim();
  const auto w = is_admissible(a);
  REQUIRE(w);
  const AlgebraObject alg = algebra_object_at(a, 4);
  CHECK(alg.multiplicity[0] == 1);
  CHECK(alg.multiplicity[1] == 1);
  CHECK(alg.multiplicity[jl_x_index(a.ring(), 1)] == 0);
  CHECK(to_string(a.ring(), alg) == "(0,0) + (1,0) + (0,1) + (1,1)");
  CHECK_THROWS_AS(algebra_object_at(a, 6), Error);
}

TEST_CASE("block coefficients") {
  const NimRep a = six_dim();
  const std::vector<std::vector<int>> blocks{{0, 1, 2, 3}, {4}, {5}};
  const IntMatrix c = block_coefficients(a, jl_x_index(a.ring(), 1), blocks);
  CHECK(c(1, 0) == 1);
  CHECK(c(2, 1) == 2);
  CHECK(c(0, 2) == 1);
  CHECK_THROWS_AS(block_coefficients(a, jl_x_index(a.ring(), 1), {{0, 4}, {1, 2, 3}, {5}}), Error);
}
