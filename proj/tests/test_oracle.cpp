#include "nimforge/error.hpp"
#include "nimforge/glm.hpp"
#include "nimforge/isomorphism.hpp"
#include "nimforge/jl.hpp"
#include "nimforge/oracle.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cstdlib>

using namespace nimforge;
using test::group;
using test::klein;

namespace {

std::vector<NimRep> reps_of(const JlCatalog& c, int max_dim) {
  std::vector<NimRep> out;
  for (const auto& e : c.entries)
    if (e.rep.dim() <= max_dim) out.push_back(e.rep);
  return out;
}

std::vector<NimRep> reps_of(const GlmCatalog& c, int max_dim) {
  std::vector<NimRep> out;
  for (const auto& e : c.entries)
    if (e.rep.dim() <= max_dim) out.push_back(e.rep);
  return out;
}

}  // namespace

TEST_CASE("G-sets") {
  const RingPtr r = jl_ring(klein(), 3);
  CHECK(enumerate_gsets(*r, 1).size() == 1);
  // {G,G} and G/H for the three subgroups of order 2
  CHECK(enumerate_gsets(*r, 2).size() == 4);
  for (const auto& gs : enumerate_gsets(*r, 4)) {
    int total = 0;
    for (const auto& h : gs) total += 4 / h.size();
    CHECK(total == 4);
  }
}

TEST_CASE("TY(Z2) up to dim 3") {
  const RingPtr r = jl_ring(group({2}), 2);
  SearchConfig cfg;
  cfg.max_dim = 3;
  const OracleResult res = enumerate_all(r, cfg);
  CHECK(res.complete);
  REQUIRE(res.reps.size() == 1);
  CHECK(res.reps[0].dim() == 3);
  const CrossCheckReport cc = cross_check(reps_of(jl_enumerate(r), 3), res.reps);
  CHECK(cc.complete_agreement());
  CHECK(cc.matched.size() == 1);
}

TEST_CASE("JL(Z4, 2) up to dim 4") {
  const RingPtr r = jl_ring(group({4}), 2);
  SearchConfig cfg;
  cfg.max_dim = 4;
  const OracleResult res = enumerate_all(r, cfg);
  CHECK(res.reps.size() == 4);
  CHECK(cross_check(reps_of(jl_enumerate(r), 4), res.reps).complete_agreement());
}

TEST_CASE("GLM(Z2xZ2, 0) up to dim 4") {
  const RingPtr r = glm_ring(klein(), 0);
  SearchConfig cfg;
  cfg.max_dim = 4;
  const OracleResult res = enumerate_all(r, cfg);
  CHECK(res.reps.size() == 15);
  CHECK(cross_check(reps_of(glm_enumerate(r), 4), res.reps).complete_agreement());
}

TEST_CASE("outputs are validated, irreducible and pairwise non-isomorphic") {
  const RingPtr r = jl_ring(klein(), 3);
  SearchConfig cfg;
  cfg.max_dim = 6;
  const OracleResult res = enumerate_all(r, cfg);
  CHECK(res.reps.size() == 17);
  for (std::size_t i = 0; i < res.reps.size(); ++i) {
    CHECK_NOTHROW(nimrep_from_matrices(r, res.reps[i].matrices()));
    CHECK(is_irreducible(res.reps[i]));
    for (std::size_t j = 0; j < i; ++j) CHECK_FALSE(are_isomorphic(res.reps[i], res.reps[j]));
  }
}

TEST_CASE("search order and hints do not change the answer") {
  const RingPtr r = jl_ring(klein(), 3);
  SearchConfig cfg;
  cfg.max_dim = 6;
  const OracleResult forward = enumerate_all(r, cfg);
  cfg.reverse_order = true;
  const OracleResult backward = enumerate_all(r, cfg);
  cfg.reverse_order = false;
  cfg.use_hints = true;
  const OracleResult hinted = enumerate_all(r, cfg);
  CHECK(hinted.hinted);
  REQUIRE(forward.reps.size() == backward.reps.size());
  REQUIRE(forward.reps.size() == hinted.reps.size());
  for (std::size_t i = 0; i < forward.reps.size(); ++i) {
    CHECK(forward.reps[i].matrices() == backward.reps[i].matrices());
    CHECK(forward.reps[i].matrices() == hinted.reps[i].matrices());
  }
}

TEST_CASE("reducible reps are kept on request") {
  const RingPtr r = jl_ring(group({2}), 2);
  SearchConfig cfg;
  cfg.max_dim = 6;
  cfg.require_irreducible = false;
  const OracleResult res = enumerate_all(r, cfg);
  REQUIRE(res.reps.size() == 2);
  CHECK(res.reps[1].dim() == 6);
  CHECK_FALSE(is_irreducible(res.reps[1]));
}

TEST_CASE("a custom ring is accepted") {
  const RingPtr ty = jl_ring(group({2}), 2);
  const RingPtr custom = std::make_shared<const FusionRing>(ty->labels(), ty->unit(), ty->duals(),
                                                            ty->coefficients(), ty->invertibles());
  SearchConfig cfg;
  cfg.max_dim = 3;
  cfg.use_hints = true;
  const OracleResult res = enumerate_all(custom, cfg);
  CHECK_FALSE(res.hinted);
  CHECK(res.reps.size() == 1);
}

TEST_CASE("a user entry cap that bites is reported") {
  const RingPtr r = jl_ring(klein(), 3);
  SearchConfig cfg;
  cfg.max_dim = 1;
  cfg.entry_bound = 1;
  try {
    enumerate_all(r, cfg);
    FAIL("expected EntryBoundTooSmall");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::EntryBoundTooSmall);
  }
  cfg.entry_bound = 2;
  CHECK(enumerate_all(r, cfg).reps.size() == 1);
}

TEST_CASE("time budget") {
  const RingPtr r = glm_ring(klein(), 0);
  SearchConfig cfg;
  cfg.max_dim = 8;
  cfg.time_budget_seconds = 0.0;
  const OracleResult res = enumerate_all(r, cfg);
  CHECK_FALSE(res.complete);
}

TEST_CASE("cross-check reports both sides") {
  const RingPtr r = jl_ring(klein(), 3);
  const JlCatalog c = jl_enumerate(r, 1);
  std::vector<NimRep> classifier{c.entries[0].rep, c.entries[1].rep, c.entries[1].rep};
  std::vector<NimRep> oracle{c.entries[1].rep, c.entries[2].rep};
  const CrossCheckReport cc = cross_check(classifier, oracle);
  CHECK(cc.matched == std::vector<std::pair<int, int>>{{1, 0}});
  CHECK(cc.only_classifier == std::vector<int>{0});
  CHECK(cc.only_oracle == std::vector<int>{1});
  CHECK(cc.duplicate_classifier == std::vector<std::pair<int, int>>{{2, 1}});
  CHECK_FALSE(cc.complete_agreement());
}

TEST_CASE("thread count") {
  CHECK(default_threads() >= 1);
  setenv("NIMFORGE_THREADS", "3", 1);
  CHECK(default_threads() == 3);
  unsetenv("NIMFORGE_THREADS");
}
