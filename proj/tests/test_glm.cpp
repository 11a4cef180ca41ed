#include "nimforge/error.hpp"
#include "nimforge/glm.hpp"
#include "nimforge/isomorphism.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace nimforge;
using test::gen;
using test::klein;
using test::trivial;
using test::whole;

namespace {

std::vector<std::string> cycles(const std::vector<Permutation>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_cycles());
  return out;
}

std::vector<int> dims(const GlmCatalog& c) {
  std::vector<int> out;
  for (const auto& e : c.entries) out.push_back(e.rep.dim());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("sigma action and tau0 choices over Z2xZ2") {
  const GroupPtr g = klein();
  const SigmaAction half = sigma_action(*g, 0, {gen(*g, {1})});
  CHECK(half.size() == 2);
  CHECK(cycles(enumerate_tau0(half)) == std::vector<std::string>{"e", "(12)"});

  const SigmaAction free = sigma_action(*g, 0, {trivial(*g)});
  CHECK(free.size() == 4);
  CHECK(cycles(enumerate_tau0(free)) == std::vector<std::string>{"e", "(12)(34)", "(13)(24)", "(14)(23)"});

  const SigmaAction two = sigma_action(*g, 0, {trivial(*g), trivial(*g)});
  const auto taus = enumerate_tau0(two);
  CHECK(taus.size() == 4);
  CHECK(std::find_if(taus.begin(), taus.end(), [](const Permutation& p) {
          return p.to_cycles() == "(15)(26)(37)(48)";
        }) != taus.end());
  for (const auto& t : taus)
    for (int i = 0; i < 4; ++i) CHECK(t(i) >= 4);
}

TEST_CASE("parameter conditions") {
  const GroupPtr g = klein();
  const Permutation e1 = Permutation::identity(1);
  CHECK_FALSE(glm_violation({g, 0, 1, {whole(*g)}, e1}));
  const auto v = glm_violation({g, 0, 2, {whole(*g), whole(*g)}, Permutation::identity(2)});
  REQUIRE(v);
  CHECK(v->find("tau0") != std::string::npos);
  CHECK_THROWS_AS(glm_check({g, 0, 2, {whole(*g), whole(*g)}, Permutation::identity(2)}), Error);
  CHECK_FALSE(glm_violation({g, 0, 2, {whole(*g), whole(*g)}, Permutation::from_cycles("(12)", 2)}));
  CHECK(glm_coefficient({g, 0, 1, {whole(*g)}, e1}) == 1);
}

TEST_CASE("built reps") {
  const GroupPtr g = klein();
  const RingPtr r = glm_ring(g, 0);
  const NimRep one = glm_build(r, {g, 0, 1, {whole(*g)}, Permutation::identity(1)});
  CHECK(one.dim() == 1);
  for (int q = 0; q < 4; ++q) CHECK(one.matrix(glm_x_index(*r, q))(0, 0) == 1);

  const NimRep two = glm_build(r, {g, 0, 2, {whole(*g), whole(*g)}, Permutation::from_cycles("(12)", 2)});
  IntMatrix swap(2, 2);
  swap << 0, 1, 1, 0;
  for (int q = 0; q < 4; ++q) CHECK(two.matrix(glm_x_index(*r, q)) == swap);

  const SigmaAction sa = sigma_action(*g, 0, {trivial(*g), trivial(*g)});
  const Permutation tau = enumerate_tau0(sa).front();
  const GlmParams eight{g, 0, 2, {trivial(*g), trivial(*g)}, tau};
  const NimRep big = glm_build(r, eight);
  CHECK(big.dim() == 8);
  CHECK(glm_coefficient(eight) == 1);
  CHECK(big.matrix(glm_x_index(*r, 0)) == permutation_matrix(tau.images()));
  CHECK_FALSE(glm_equation_violation(big, eight));
}

TEST_CASE("readings of the classification relation") {
  const GroupPtr g = klein();
  const Permutation a = Permutation::from_cycles("(12)(34)", 4);
  const Permutation b = Permutation::from_cycles("(13)(24)", 4);
  const GlmParams pa{g, 0, 1, {trivial(*g)}, a};
  const GlmParams pb{g, 0, 1, {trivial(*g)}, b};
  CHECK_FALSE(glm_same_class(pa, pb, Reading::Equivariant));
  CHECK_FALSE(glm_same_class(pa, pb, Reading::OrbitReorder));
  CHECK(glm_same_class(pa, pa));
  CHECK(std::string(to_string(Reading::OrbitReorder)) == "reorder");
}

TEST_CASE("one-orbit catalog over Z2xZ2") {
  const RingPtr r = glm_ring(klein(), 0);
  const GlmCatalog c = glm_enumerate(r, 1);
  CHECK(dims(c) == std::vector<int>{1, 2, 2, 2, 2, 2, 2, 4, 4, 4, 4});
  CHECK(c.equivariant_class_count == 11);
  CHECK(c.reorder_class_count == 11);
  CHECK(c.mismatches.empty());
}

TEST_CASE("two-orbit catalog over Z2xZ2") {
  const RingPtr r = glm_ring(klein(), 0);
  const GlmCatalog c = glm_enumerate(r, 2);
  CHECK(dims(c) == std::vector<int>{2, 4, 4, 4, 8});
  CHECK(c.equivariant_class_count == 5);
  CHECK(c.reorder_class_count == 11);
  for (const auto& m : c.mismatches) {
    CHECK(m.reading == Reading::OrbitReorder);
    CHECK(m.matrix_same);
  }
}

TEST_CASE("nonzero delta over Z2xZ2") {
  const GroupPtr g = klein();
  for (int d = 1; d < 4; ++d) {
    const RingPtr r = glm_ring(g, d);
    const GlmCatalog c = glm_enumerate(r, 1);
    int order_two = 0;
    for (const auto& e : c.entries) {
      CHECK(e.params.subgroups[0].size() != 1);
      if (e.params.subgroups[0].size() == 2) {
        ++order_two;
        CHECK(e.params.subgroups[0].contains(d));
      }
    }
    CHECK(order_two == 2);
  }
}

TEST_CASE("algebra objects") {
  const GroupPtr g = klein();
  const RingPtr r = glm_ring(g, 0);
  const GlmParams params{g, 0, 1, {whole(*g)}, Permutation::identity(1)};
  const GlmAlgebra alg = glm_algebra_objects(*r, params);
  REQUIRE(alg.closed_form.size() == 1);
  CHECK(alg.closed_form[0] == algebra_object_at(glm_build(r, params), 0));
  for (int q = 0; q < 4; ++q) CHECK(alg.closed_form[0].multiplicity[glm_x_index(*r, q)] == 1);

  const GlmParams two{g, 0, 2, {whole(*g), whole(*g)}, Permutation::from_cycles("(12)", 2)};
  for (const auto& a : glm_algebra_objects(*r, two).closed_form)
    for (int q = 0; q < 4; ++q) CHECK(a.multiplicity[glm_x_index(*r, q)] == 0);
}

TEST_CASE("Z4 with delta = 1") {
  const RingPtr r = glm_ring(test::group({4}), 1);
  const GlmCatalog c = glm_enumerate(r);
  CHECK_FALSE(c.entries.empty());
  for (const auto& e : c.entries) CHECK(is_irreducible(e.rep));
}
